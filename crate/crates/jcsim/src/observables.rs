//! Scalar diagnostics of field states: mean photon number, Mandel-Q, and
//! the most probable photon number.

use crate::error::{Error, Result};
use crate::fock::FieldVector;
use crate::scalar::{lit, Scalar};

/// Tolerance on the squared norm of states fed to the moment routines.
const NORM_TOL: f64 = 1e-8;

/// Mean photon number below which Mandel-Q is reported as undefined.
const MEAN_FLOOR: f64 = 1e-12;

/// Photon-statistics summary of a single field state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableRecord<T> {
    /// Average photon number.
    pub mean_n: T,
    /// Mandel-Q parameter, `>= -1`.
    pub q: T,
    /// Most probable photon number (ties resolved toward larger n).
    pub mode_n: usize,
}

fn check_unit_norm<T: Scalar>(v: &FieldVector<T>) -> Result<()> {
    let ns = v.norm_sqr();
    if (ns - T::one()).abs() > lit(NORM_TOL) {
        return Err(Error::NotNormalized {
            norm_sqr: ns.to_f64().unwrap_or(f64::NAN),
            tol: NORM_TOL,
        });
    }
    Ok(())
}

fn moments<T: Scalar>(v: &FieldVector<T>) -> (T, T) {
    let mut m1 = T::zero();
    let mut m2 = T::zero();
    for (n, a) in v.amps().iter().enumerate() {
        let p = a.norm_sqr();
        let nf = T::from_usize(n).unwrap();
        m1 += nf * p;
        m2 += nf * nf * p;
    }
    (m1, m2)
}

/// Average photon number `sum_n n |v_n|^2` of a unit-norm state.
pub fn mean_photon<T: Scalar>(v: &FieldVector<T>) -> Result<T> {
    check_unit_norm(v)?;
    Ok(moments(v).0)
}

/// Mandel-Q parameter `(<n^2> - <n>^2)/<n> - 1` of a unit-norm state.
///
/// Undefined (error) when the mean photon number is below 1e-12; callers
/// that tabulate Q leave the entry empty instead of writing a non-finite
/// number.
pub fn mandel_q<T: Scalar>(v: &FieldVector<T>) -> Result<T> {
    check_unit_norm(v)?;
    let (m1, m2) = moments(v);
    if m1 <= lit(MEAN_FLOOR) {
        return Err(Error::UndefinedMandelQ {
            mean: m1.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((m2 - m1 * m1) / m1 - T::one())
}

/// Index of the largest `P_n`; ties go to the larger photon number.
///
/// The tie rule matters: a coherent state with integer `|alpha|^2 = m`
/// satisfies `P_{m-1} = P_m` exactly, and the conventional Poisson mode
/// is `m`.
pub fn mode_index<T: Scalar>(v: &FieldVector<T>) -> usize {
    let mut best = 0usize;
    let mut best_p = v.amp(0).norm_sqr();
    for (n, a) in v.amps().iter().enumerate().skip(1) {
        let p = a.norm_sqr();
        if p >= best_p {
            best = n;
            best_p = p;
        }
    }
    best
}

/// Bundles all three diagnostics; fails where Mandel-Q is undefined.
pub fn record<T: Scalar>(v: &FieldVector<T>) -> Result<ObservableRecord<T>> {
    Ok(ObservableRecord {
        mean_n: mean_photon(v)?,
        q: mandel_q(v)?,
        mode_n: mode_index(v),
    })
}
