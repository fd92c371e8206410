//! Resonant Jaynes-Cummings evolution on the truncated space.
//!
//! The interaction couples `|e,n>` to `|g,n+1>` with matrix element
//! `sqrt(n+1)` in units of the coupling constant, so the propagator is block
//! diagonal over those pairs. [`evolve_closed_form`] applies the analytic
//! cosine/sine rotation per block; [`evolve_oracle`] reproduces the same map
//! by numerically diagonalizing each block of the assembled Hamiltonian and
//! never touches the analytic formulas, which makes it an independent check.
//!
//! Time enters only as the dimensionless product `tau` of coupling constant
//! and physical time.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fock::{coherent_state, FieldVector};
use crate::scalar::Scalar;

/// Entangled atom-field pure state `|c>|e> + |s>|g>`.
///
/// The branches are unnormalized; their squared norms are the probabilities
/// of finding the atom excited or ground. `tau` records the accumulated
/// evolution time.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomFieldState<T> {
    excited: FieldVector<T>,
    ground: FieldVector<T>,
    tau: T,
}

impl<T: Scalar> AtomFieldState<T> {
    pub fn new(excited: FieldVector<T>, ground: FieldVector<T>, tau: T) -> Result<Self> {
        if excited.dim() != ground.dim() {
            return Err(Error::DimensionMismatch {
                left: excited.dim(),
                right: ground.dim(),
            });
        }
        Ok(Self {
            excited,
            ground,
            tau,
        })
    }

    /// Product state: given field, atom excited, no time elapsed.
    pub fn from_excited_field(field: FieldVector<T>) -> Self {
        let ground = FieldVector::zeros(field.n_max());
        Self {
            excited: field,
            ground,
            tau: T::zero(),
        }
    }

    /// Field branch attached to the excited atom, `|c>`.
    pub fn excited_branch(&self) -> &FieldVector<T> {
        &self.excited
    }

    /// Field branch attached to the ground atom, `|s>`.
    pub fn ground_branch(&self) -> &FieldVector<T> {
        &self.ground
    }

    pub fn tau(&self) -> T {
        self.tau
    }

    pub fn n_max(&self) -> usize {
        self.excited.n_max()
    }

    /// `<c|c> + <s|s>`; equals 1 for states evolved from normalized inputs.
    pub fn total_norm_sqr(&self) -> T {
        self.excited.norm_sqr() + self.ground.norm_sqr()
    }
}

/// Analytic propagator over an interval `tau`.
///
/// Within each `{|e,n>, |g,n+1>}` pair the evolution is the rotation
/// `[[cos(tau sqrt(n+1)), -i sin(tau sqrt(n+1))], [-i sin(tau sqrt(n+1)), cos(tau sqrt(n+1))]]`.
/// `|g,0>` is stationary. The top excited level `|e,n_max>` couples only to
/// the truncated `|g,n_max+1>` and is frozen, which keeps both evolution
/// routes unitary on the same finite space; callers should choose `n_max`
/// with negligible occupation near the top.
pub fn evolve_closed_form<T: Scalar>(state: &AtomFieldState<T>, tau: T) -> AtomFieldState<T> {
    let n_max = state.n_max();
    let e_in = state.excited.amps();
    let g_in = state.ground.amps();
    let mut e_out = vec![Complex::new(T::zero(), T::zero()); n_max + 1];
    let mut g_out = vec![Complex::new(T::zero(), T::zero()); n_max + 1];

    g_out[0] = g_in[0];
    e_out[n_max] = e_in[n_max];
    for n in 0..n_max {
        let phase = tau * T::from_usize(n + 1).unwrap().sqrt();
        let (c, s) = (phase.cos(), phase.sin());
        let mis = Complex::new(T::zero(), -s);
        e_out[n] = e_in[n] * c + g_in[n + 1] * mis;
        g_out[n + 1] = e_in[n] * mis + g_in[n + 1] * c;
    }

    AtomFieldState {
        excited: FieldVector::from_amplitudes(e_out),
        ground: FieldVector::from_amplitudes(g_out),
        tau: state.tau + tau,
    }
}

/// Evolves an excited atom and coherent field `|alpha>` for a time `tau`.
pub fn evolve_excited_coherent<T: Scalar>(
    alpha: Complex<T>,
    tau: T,
    n_max: usize,
) -> Result<AtomFieldState<T>> {
    let field = coherent_state(alpha, n_max)?;
    Ok(evolve_closed_form(
        &AtomFieldState::from_excited_field(field),
        tau,
    ))
}

/// Dense Hermitian matrix on the product basis `{|e,n>} u {|g,n>}`.
///
/// Index convention: `|e,n> -> n`, `|g,n> -> n_max + 1 + n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> HermitianMatrix<T> {
    fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Complex<T>) {
        self.data[row * self.dim + col] = value;
    }

    /// Largest deviation from `A = A^dagger`.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Index of `|e,n>` in the product basis.
pub fn excited_index(n: usize) -> usize {
    n
}

/// Index of `|g,n>` in the product basis.
pub fn ground_index(n: usize, n_max: usize) -> usize {
    n_max + 1 + n
}

/// Interaction Hamiltonian on the truncated product basis, in units of the
/// coupling constant: `<e,n|H|g,n+1> = sqrt(n+1)`, all else zero.
pub fn hamiltonian_matrix<T: Scalar>(n_max: usize) -> HermitianMatrix<T> {
    let dim = 2 * (n_max + 1);
    let mut h = HermitianMatrix::zeros(dim);
    for n in 0..n_max {
        let coupling = Complex::new(T::from_usize(n + 1).unwrap().sqrt(), T::zero());
        h.set(excited_index(n), ground_index(n + 1, n_max), coupling);
        h.set(ground_index(n + 1, n_max), excited_index(n), coupling);
    }
    h
}

/// Eigendecomposition of a real symmetric 2x2 matrix `[[a, h], [h, b]]` by a
/// Jacobi rotation. Returns `(cos, sin, l1, l2)` with eigenvectors
/// `(cos, sin)` and `(-sin, cos)`.
fn sym_eig_2x2<T: Scalar>(a: T, h: T, b: T) -> (T, T, T, T) {
    let two = T::one() + T::one();
    let angle = (two * h).atan2(a - b) / two;
    let (c, s) = (angle.cos(), angle.sin());
    let l1 = a * c * c + two * h * c * s + b * s * s;
    let l2 = a * s * s - two * h * c * s + b * c * c;
    (c, s, l1, l2)
}

/// Brute-force propagator: numerically diagonalizes every 2x2 block of the
/// assembled [`hamiltonian_matrix`] and applies `exp(-i H tau)` through the
/// computed eigenpairs. Shares no code with [`evolve_closed_form`].
pub fn evolve_oracle<T: Scalar>(state: &AtomFieldState<T>, tau: T) -> AtomFieldState<T> {
    let n_max = state.n_max();
    let h = hamiltonian_matrix::<T>(n_max);
    let e_in = state.excited.amps();
    let g_in = state.ground.amps();
    let mut e_out = e_in.to_vec();
    let mut g_out = g_in.to_vec();

    let phase = |energy: T| Complex::from_polar(T::one(), -energy * tau);

    // singleton blocks: |g,0> and |e,n_max>
    let ig0 = ground_index(0, n_max);
    g_out[0] = g_in[0] * phase(h.get(ig0, ig0).re);
    let itop = excited_index(n_max);
    e_out[n_max] = e_in[n_max] * phase(h.get(itop, itop).re);

    for n in 0..n_max {
        let ie = excited_index(n);
        let ig = ground_index(n + 1, n_max);
        let (c, s, l1, l2) = sym_eig_2x2(h.get(ie, ie).re, h.get(ie, ig).re, h.get(ig, ig).re);
        let (u, w) = (e_in[n], g_in[n + 1]);
        let p1 = u * c + w * s;
        let p2 = -u * s + w * c;
        let q1 = p1 * phase(l1);
        let q2 = p2 * phase(l2);
        e_out[n] = q1 * c - q2 * s;
        g_out[n + 1] = q1 * s + q2 * c;
    }

    AtomFieldState {
        excited: FieldVector::from_amplitudes(e_out),
        ground: FieldVector::from_amplitudes(g_out),
        tau: state.tau + tau,
    }
}
