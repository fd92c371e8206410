//! Fixed-precision CSV and text rendering of sweep results.
//!
//! All numbers are written in fixed decimal (never scientific notation)
//! with a caller-chosen digit count, rows end with a bare LF, and absent
//! values become empty cells, so identical inputs always serialize to
//! identical bytes.

use crate::error::{Error, Result};
use crate::fock::{photon_distribution, FieldVector};
use crate::scalar::Scalar;
use crate::sweep::{Peak, SweepRow};

/// Column order of [`sweep_csv`].
pub const SWEEP_CSV_HEADER: &str =
    "tau,p_excited,p_ground,lambda_plus,lambda_minus,r,w,theta,phi,n_plus,n_minus,q_plus,q_minus";

fn fixed<T: Scalar>(x: T, precision: usize) -> String {
    format!("{x:.precision$}")
}

fn fixed_opt<T: Scalar>(x: Option<T>, precision: usize) -> String {
    x.map_or_else(String::new, |v| fixed(v, precision))
}

/// Renders sweep rows as CSV, one line per grid point.
pub fn sweep_csv<T: Scalar>(rows: &[SweepRow<T>], precision: usize) -> String {
    let mut out = String::with_capacity((rows.len() + 1) * 16 * (precision + 4));
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let cells = [
            fixed(row.tau, precision),
            fixed(row.p_excited, precision),
            fixed(row.p_ground, precision),
            fixed(row.lambda_plus, precision),
            fixed(row.lambda_minus, precision),
            fixed(row.r, precision),
            fixed(row.w, precision),
            fixed(row.theta, precision),
            fixed(row.phi, precision),
            fixed(row.n_plus, precision),
            fixed_opt(row.n_minus, precision),
            fixed_opt(row.q_plus, precision),
            fixed_opt(row.q_minus, precision),
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Renders the initial and conditional photon distributions side by side,
/// one line per number state.
pub fn distribution_csv<T: Scalar>(
    initial: &FieldVector<T>,
    conditional: &FieldVector<T>,
    precision: usize,
) -> Result<String> {
    if initial.dim() != conditional.dim() {
        return Err(Error::DimensionMismatch {
            left: initial.dim(),
            right: conditional.dim(),
        });
    }
    let p_initial = photon_distribution(initial);
    let p_conditional = photon_distribution(conditional);
    let mut out = String::with_capacity((initial.dim() + 1) * 3 * (precision + 4));
    out.push_str("n,p_initial,p_conditional");
    out.push('\n');
    for n in 0..initial.dim() {
        out.push_str(&format!(
            "{n},{},{}\n",
            fixed(p_initial[n], precision),
            fixed(p_conditional[n], precision),
        ));
    }
    Ok(out)
}

fn nearest_row<T: Scalar>(rows: &[SweepRow<T>], tau: T) -> &SweepRow<T> {
    rows.iter()
        .min_by(|a, b| {
            (a.tau - tau)
                .abs()
                .partial_cmp(&(b.tau - tau).abs())
                .unwrap()
        })
        .expect("peaks imply a nonempty sweep")
}

/// Text report of the detected photon-gain peaks: location, conditional
/// mean, gain over the initial mean `alpha^2`, and the four measurement
/// probabilities at the nearest grid point.
pub fn peaks_report<T: Scalar>(
    alpha: T,
    rows: &[SweepRow<T>],
    peaks: &[Peak<T>],
    precision: usize,
) -> String {
    if peaks.is_empty() {
        return "no peaks detected\n".to_string();
    }
    let mut out = String::new();
    for (idx, peak) in peaks.iter().enumerate() {
        let row = nearest_row(rows, peak.tau_at);
        out.push_str(&format!(
            "peak {}: tau={} n_plus={} delta_n={} p_excited={} p_ground={} lambda_plus={} lambda_minus={}\n",
            idx + 1,
            fixed(peak.tau_at, precision),
            fixed(peak.value, precision),
            fixed(peak.value - alpha * alpha, precision),
            fixed(row.p_excited, precision),
            fixed(row.p_ground, precision),
            fixed(row.lambda_plus, precision),
            fixed(row.lambda_minus, precision),
        ));
    }
    out
}
