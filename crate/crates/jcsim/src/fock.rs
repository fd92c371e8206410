//! Truncated Fock-space field states.
//!
//! A [`FieldVector`] stores complex amplitudes over the number states
//! `|0>..|n_max>`. Constructors produce unit-norm states; the unnormalized
//! branch states arising from atom-field entanglement are built elsewhere by
//! scaling these.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// Cavity field state: amplitudes indexed by photon number `0..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> FieldVector<T> {
    /// Wraps an amplitude vector. The list must be nonempty.
    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Self {
        assert!(!amps.is_empty(), "field vector needs at least one amplitude");
        Self { amps }
    }

    /// All-zero field vector on `|0>..|n_max>`.
    pub fn zeros(n_max: usize) -> Self {
        Self {
            amps: vec![Complex::new(T::zero(), T::zero()); n_max + 1],
        }
    }

    pub fn n_max(&self) -> usize {
        self.amps.len() - 1
    }

    /// Number of amplitudes, `n_max + 1`.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amp(&self, n: usize) -> Complex<T> {
        self.amps[n]
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Scales every amplitude by `k`.
    pub fn scaled(&self, k: Complex<T>) -> Self {
        Self {
            amps: self.amps.iter().map(|a| a * k).collect(),
        }
    }

    /// Returns the unit-norm version of this vector.
    pub fn normalized(&self) -> Result<Self> {
        let ns = self.norm_sqr();
        if ns <= T::zero() {
            return Err(Error::ZeroNorm);
        }
        let inv = ns.sqrt().recip();
        Ok(self.scaled(Complex::new(inv, T::zero())))
    }

    /// Amplitude-wise `self + k * other`.
    pub fn add_scaled(&self, k: Complex<T>, other: &Self) -> Result<Self> {
        check_same_dim(self, other)?;
        Ok(Self {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b * k)
                .collect(),
        })
    }
}

fn check_same_dim<T: Scalar>(u: &FieldVector<T>, v: &FieldVector<T>) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

/// Truncation cutoff adequate for a coherent state of amplitude `alpha`:
/// `max(32, ceil(|alpha|^2 + 12 sqrt(|alpha|^2 + 1)))`. Leaves Poisson tail
/// mass below 1e-12 for |alpha| up to 8.
pub fn default_cutoff<T: Scalar>(alpha: Complex<T>) -> usize {
    let a2 = alpha.norm_sqr().to_f64().expect("finite amplitude");
    let bound = (a2 + 12.0 * (a2 + 1.0).sqrt()).ceil() as usize;
    bound.max(32)
}

/// Coherent state `|alpha>` truncated at `n_max` and renormalized.
///
/// Amplitudes follow the stable recurrence `a_n = a_{n-1} * alpha / sqrt(n)`
/// seeded with `a_0 = exp(-|alpha|^2 / 2)`. Renormalizing keeps downstream
/// probability identities exact on the truncated space. Rejects cutoffs with
/// truncated tail mass above 1e-9.
pub fn coherent_state<T: Scalar>(alpha: Complex<T>, n_max: usize) -> Result<FieldVector<T>> {
    let mut amps = Vec::with_capacity(n_max + 1);
    let a0 = (-alpha.norm_sqr() / lit::<T>(2.0)).exp();
    amps.push(Complex::new(a0, T::zero()));
    for n in 1..=n_max {
        let prev = amps[n - 1];
        amps.push(prev * alpha / T::from_usize(n).unwrap().sqrt());
    }
    let v = FieldVector::from_amplitudes(amps);
    let captured = v.norm_sqr();
    let tail = (T::one() - captured).max(T::zero());
    if tail > lit(1e-9) {
        return Err(Error::CutoffTooSmall {
            n_max,
            tail: tail.to_f64().unwrap_or(f64::NAN),
        });
    }
    v.normalized()
}

/// Number state `|n>` on the space truncated at `n_max`.
pub fn fock_state<T: Scalar>(n: usize, n_max: usize) -> Result<FieldVector<T>> {
    if n > n_max {
        return Err(Error::FockIndexOutOfRange { n, n_max });
    }
    let mut v = FieldVector::zeros(n_max);
    v.amps[n] = Complex::new(T::one(), T::zero());
    Ok(v)
}

/// Hermitian inner product `<u|v> = sum_n conj(u_n) v_n`.
pub fn inner_product<T: Scalar>(u: &FieldVector<T>, v: &FieldVector<T>) -> Result<Complex<T>> {
    check_same_dim(u, v)?;
    Ok(u.amps
        .iter()
        .zip(&v.amps)
        .map(|(a, b)| a.conj() * b)
        .fold(Complex::new(T::zero(), T::zero()), |acc, x| acc + x))
}

/// Photon-number distribution `P_n = |amplitude_n|^2`.
pub fn photon_distribution<T: Scalar>(v: &FieldVector<T>) -> Vec<T> {
    v.amps.iter().map(|a| a.norm_sqr()).collect()
}
