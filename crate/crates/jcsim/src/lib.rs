//! Truncated Fock-space simulation of a resonant two-level atom coupled to a
//! single cavity mode, with conditional measurements on the exiting atom.
//!
//! The field lives in the span of the number states `|0>..|n_max>`. An atom
//! prepared excited and a cavity prepared in a coherent state evolve under the
//! resonant Jaynes-Cummings interaction into an entangled state
//! `|c>|e> + |s>|g>`. Measuring the atom, either in the bare `{|e>,|g>}` basis
//! or in the Schmidt basis diagonalizing its reduced density matrix, collapses
//! the field onto a conditional state whose photon statistics can differ from
//! the initial ones by several quanta even though the interaction exchanges
//! photons one at a time.
//!
//! Modules:
//! - [`fock`]: field vectors, coherent/number states, cutoff selection.
//! - [`dynamics`]: closed-form propagator and an independent block-eigen oracle.
//! - [`schmidt`]: Schmidt decomposition and conditional projection.
//! - [`observables`]: mean photon number, Mandel Q, distribution mode.
//! - [`sweep`]: time-grid sweeps, peak detection, amplitude scans.
//! - [`output`]: fixed-precision CSV and text report rendering.
//!
//! All numerics are generic over the scalar through [`scalar::Scalar`];
//! concrete `f64` aliases are exported at the crate root.

pub mod dynamics;
pub mod error;
pub mod fock;
pub mod observables;
pub mod output;
pub mod schmidt;
pub mod scalar;
pub mod sweep;

pub use dynamics::{
    evolve_closed_form, evolve_excited_coherent, evolve_oracle, hamiltonian_matrix,
    AtomFieldState, HermitianMatrix,
};
pub use error::{Error, Result};
pub use fock::{
    coherent_state, default_cutoff, fock_state, inner_product, photon_distribution, FieldVector,
};
pub use observables::{mandel_q, mean_photon, mode_index, record, ObservableRecord};
pub use output::{distribution_csv, peaks_report, sweep_csv, SWEEP_CSV_HEADER};
pub use schmidt::{
    conditional_project, mixing_angle, overlap_params, schmidt_decompose, MeasurementResult,
    Outcome, SchmidtData,
};
pub use scalar::Scalar;
pub use sweep::{
    alpha_scaling_scan, find_peaks, sweep_time, AlphaScanRecord, Peak, SweepRow,
    NPLUS_PROMINENCE, PROBABILITY_PROMINENCE,
};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type C32 = Complex<f32>;

pub type FieldVector64 = FieldVector<f64>;
pub type AtomFieldState64 = AtomFieldState<f64>;
pub type SchmidtData64 = SchmidtData<f64>;
pub type MeasurementResult64 = MeasurementResult<f64>;
pub type ObservableRecord64 = ObservableRecord<f64>;
pub type SweepRow64 = SweepRow<f64>;
pub type Peak64 = Peak<f64>;
pub type AlphaScanRecord64 = AlphaScanRecord<f64>;
