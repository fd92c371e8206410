//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two field vectors with different truncation cutoffs were combined.
    #[error("dimension mismatch: {left} vs {right} amplitudes")]
    DimensionMismatch { left: usize, right: usize },

    /// Requested number state lies outside the truncated space.
    #[error("fock index {n} exceeds cutoff n_max = {n_max}")]
    FockIndexOutOfRange { n: usize, n_max: usize },

    /// Coherent-state cutoff leaves too much probability outside the space.
    #[error("cutoff n_max = {n_max} leaves truncated tail mass {tail:e} (limit 1e-9)")]
    CutoffTooSmall { n_max: usize, tail: f64 },

    /// An operation required a unit-norm state.
    #[error("state not normalized: squared norm {norm_sqr} differs from 1 beyond {tol:e}")]
    NotNormalized { norm_sqr: f64, tol: f64 },

    /// A vector with vanishing norm cannot be normalized.
    #[error("cannot normalize a zero vector")]
    ZeroNorm,

    /// Conditional measurement outcome has no probability mass.
    #[error("outcome {outcome} has probability {probability:e}, below 1e-12")]
    ZeroProbability {
        outcome: &'static str,
        probability: f64,
    },

    /// Mandel Q is undefined when the mean photon number vanishes.
    #[error("Mandel Q undefined: mean photon number {mean:e} is effectively zero")]
    UndefinedMandelQ { mean: f64 },

    /// Peak detection needs at least three samples.
    #[error("peak detection needs at least 3 points, got {len}")]
    TooFewPoints { len: usize },

    /// Sweep grid parameters are inconsistent.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },

    /// Amplitude scans require positive coherent amplitudes.
    #[error("alpha must be positive, got {alpha}")]
    NonPositiveAlpha { alpha: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
