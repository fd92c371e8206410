//! Schmidt decomposition of the atom-field state and conditional projection.
//!
//! Writing the pure state as `|c>|e> + |s>|g>`, the reduced atomic density
//! matrix has eigenvalues `lambda_+- = 1/2 +- sqrt(W^2 + r^2)` where
//! `r e^{-i phi} = <c|s>` and `2W = <c|c> - <s|s>`. The matching field
//! states are
//!
//! `psi_+ = (cos(theta) |c> + e^{i phi} sin(theta) |s>) / sqrt(lambda_+)`
//! `psi_- = (e^{-i phi} sin(theta) |c> - cos(theta) |s>) / sqrt(lambda_-)`
//!
//! with `2 theta = atan2(r, W)`. That branch keeps `theta` in `[0, pi/2]`
//! and makes `psi_+` the major Schmidt vector:
//! `||cos(theta)|c> + e^{i phi} sin(theta)|s>||^2 = 1/2 + W cos(2 theta)
//! + r sin(2 theta)`, which the `atan2` branch maximizes to `lambda_+`.
//! A single-argument arctangent would flip the identity of `psi_+` wherever
//! `W < 0`.

use num_complex::Complex;

use crate::dynamics::AtomFieldState;
use crate::error::{Error, Result};
use crate::fock::{inner_product, FieldVector};
use crate::scalar::{lit, Scalar};

/// Probability below which a measurement outcome is treated as impossible
/// and the minor Schmidt vector as absent.
const PROBABILITY_FLOOR: f64 = 1e-12;

/// Overlap magnitude below which the phase `phi` is conventionally zero.
const PHASE_FLOOR: f64 = 1e-14;

/// Tolerance on the squared total norm of a decomposed state.
const NORM_TOL: f64 = 1e-8;

/// Scalars and field states of the Schmidt decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData<T> {
    /// Magnitude of the branch overlap `<c|s>`.
    pub r: T,
    /// Overlap phase, `<c|s> = r e^{-i phi}`, in `(-pi, pi]`.
    pub phi: T,
    /// Half population imbalance, `(<c|c> - <s|s>) / 2`.
    pub w: T,
    /// Mixing angle in `[0, pi/2]`.
    pub theta: T,
    /// Major Schmidt weight.
    pub lambda_plus: T,
    /// Minor Schmidt weight.
    pub lambda_minus: T,
    /// Major Schmidt field state, unit norm.
    pub psi_plus: FieldVector<T>,
    /// Minor Schmidt field state; absent when `lambda_minus < 1e-12`.
    pub psi_minus: Option<FieldVector<T>>,
}

/// Atomic measurement basis choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    SchmidtPlus,
    SchmidtMinus,
    Excited,
    Ground,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::SchmidtPlus => "schmidt-plus",
            Outcome::SchmidtMinus => "schmidt-minus",
            Outcome::Excited => "excited",
            Outcome::Ground => "ground",
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of projecting the atom onto a measurement outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementResult<T> {
    pub outcome: Outcome,
    pub probability: T,
    pub post_state: FieldVector<T>,
}

fn check_total_norm<T: Scalar>(state: &AtomFieldState<T>) -> Result<()> {
    let ns = state.total_norm_sqr();
    if (ns - T::one()).abs() > lit(NORM_TOL) {
        return Err(Error::NotNormalized {
            norm_sqr: ns.to_f64().unwrap_or(f64::NAN),
            tol: NORM_TOL,
        });
    }
    Ok(())
}

/// Extracts `(r, phi, W)` from the branch overlap and populations.
///
/// `phi` is reduced to `(-pi, pi]` and set to zero when `r < 1e-14`, where
/// the phase is immaterial.
pub fn overlap_params<T: Scalar>(state: &AtomFieldState<T>) -> Result<(T, T, T)> {
    check_total_norm(state)?;
    let overlap = inner_product(state.excited_branch(), state.ground_branch())?;
    let r = overlap.norm();
    let phi = if r < lit(PHASE_FLOOR) {
        T::zero()
    } else {
        // arg in (-pi, pi] makes -arg land in [-pi, pi); fold -pi up to pi
        let p = -overlap.arg();
        if p <= -T::PI() {
            p + T::PI() + T::PI()
        } else {
            p
        }
    };
    let w = (state.excited_branch().norm_sqr() - state.ground_branch().norm_sqr())
        / (T::one() + T::one());
    Ok((r, phi, w))
}

/// Mixing angle `theta = atan2(r, W) / 2`, in `[0, pi/2]` for `r >= 0`.
///
/// Returns 0 when both arguments vanish.
pub fn mixing_angle<T: Scalar>(r: T, w: T) -> T {
    r.atan2(w) / (T::one() + T::one())
}

/// Full Schmidt decomposition of the entangled state.
pub fn schmidt_decompose<T: Scalar>(state: &AtomFieldState<T>) -> Result<SchmidtData<T>> {
    let (r, phi, w) = overlap_params(state)?;
    let theta = mixing_angle(r, w);
    let half = lit::<T>(0.5);
    let root = (w * w + r * r).sqrt();
    let lambda_plus = (half + root).min(T::one());
    let lambda_minus = (half - root).max(T::zero());

    let (cos_t, sin_t) = (theta.cos(), theta.sin());
    let phase_plus = Complex::from_polar(T::one(), phi);
    let phase_minus = Complex::from_polar(T::one(), -phi);

    let plus_raw = state
        .excited_branch()
        .scaled(Complex::new(cos_t, T::zero()))
        .add_scaled(phase_plus * sin_t, state.ground_branch())?;
    let psi_plus = plus_raw.normalized()?;

    let psi_minus = if lambda_minus < lit(PROBABILITY_FLOOR) {
        None
    } else {
        let minus_raw = state
            .excited_branch()
            .scaled(phase_minus * sin_t)
            .add_scaled(Complex::new(-cos_t, T::zero()), state.ground_branch())?;
        Some(minus_raw.normalized()?)
    };

    Ok(SchmidtData {
        r,
        phi,
        w,
        theta,
        lambda_plus,
        lambda_minus,
        psi_plus,
        psi_minus,
    })
}

/// Projects the atom onto the requested outcome, collapsing the field.
///
/// Outcomes with probability below 1e-12 are rejected as impossible.
pub fn conditional_project<T: Scalar>(
    state: &AtomFieldState<T>,
    outcome: Outcome,
) -> Result<MeasurementResult<T>> {
    let floor = lit::<T>(PROBABILITY_FLOOR);
    let reject = |probability: T| Error::ZeroProbability {
        outcome: outcome.label(),
        probability: probability.to_f64().unwrap_or(f64::NAN),
    };

    let (probability, post_state) = match outcome {
        Outcome::Excited => {
            check_total_norm(state)?;
            let p = state.excited_branch().norm_sqr();
            if p < floor {
                return Err(reject(p));
            }
            (p, state.excited_branch().normalized()?)
        }
        Outcome::Ground => {
            check_total_norm(state)?;
            let p = state.ground_branch().norm_sqr();
            if p < floor {
                return Err(reject(p));
            }
            (p, state.ground_branch().normalized()?)
        }
        Outcome::SchmidtPlus => {
            let data = schmidt_decompose(state)?;
            (data.lambda_plus, data.psi_plus)
        }
        Outcome::SchmidtMinus => {
            let data = schmidt_decompose(state)?;
            match data.psi_minus {
                Some(psi) if data.lambda_minus >= floor => (data.lambda_minus, psi),
                _ => return Err(reject(data.lambda_minus)),
            }
        }
    };

    Ok(MeasurementResult {
        outcome,
        probability,
        post_state,
    })
}
