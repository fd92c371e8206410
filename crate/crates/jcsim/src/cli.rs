//! Command-line front end: argument parsing, dispatch, and file/stdout
//! emission. All numeric defaults live here, next to the flags that set
//! them.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use jcsim::{
    coherent_state, conditional_project, default_cutoff, distribution_csv, evolve_excited_coherent,
    find_peaks, peaks_report, sweep_csv, sweep_time, Outcome, C64, NPLUS_PROMINENCE,
};

/// Conditional simulation of a two-level atom exchanging photons with a
/// cavity mode, measured on exit in the bare or Schmidt atomic basis.
#[derive(Debug, Parser)]
#[command(name = "jcsim")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep the interaction time and write one CSV row per grid point.
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the initial and conditional photon distributions at one time.
    Distribution {
        #[command(flatten)]
        field: FieldArgs,
        /// Dimensionless interaction time.
        #[arg(long)]
        tau: f64,
        /// Atomic measurement outcome selecting the conditional state.
        #[arg(long, value_enum, default_value_t = OutcomeArg::SchmidtPlus)]
        outcome: OutcomeArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report peaks of the conditional mean photon number over a sweep.
    Peaks {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Real coherent amplitude of the initial cavity field.
    #[arg(long, default_value_t = 4.0)]
    alpha: f64,
    /// Fock-space cutoff; chosen from alpha when omitted.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// First grid point of the dimensionless time sweep.
    #[arg(long, default_value_t = 0.0)]
    tau_start: f64,
    /// Last grid point of the dimensionless time sweep.
    #[arg(long, default_value_t = 15.0)]
    tau_end: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 1500)]
    steps: usize,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decimal digits of every number written.
    #[arg(long, default_value_t = 12)]
    precision: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutcomeArg {
    SchmidtPlus,
    SchmidtMinus,
    Excited,
    Ground,
}

impl From<OutcomeArg> for Outcome {
    fn from(arg: OutcomeArg) -> Self {
        match arg {
            OutcomeArg::SchmidtPlus => Outcome::SchmidtPlus,
            OutcomeArg::SchmidtMinus => Outcome::SchmidtMinus,
            OutcomeArg::Excited => Outcome::Excited,
            OutcomeArg::Ground => Outcome::Ground,
        }
    }
}

impl FieldArgs {
    fn alpha(&self) -> C64 {
        C64::new(self.alpha, 0.0)
    }

    fn cutoff(&self) -> usize {
        self.n_max.unwrap_or_else(|| default_cutoff(self.alpha()))
    }
}

fn write_out(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep { grid, output } => {
            let rows = sweep_time(
                grid.field.alpha(),
                grid.field.cutoff(),
                grid.tau_start,
                grid.tau_end,
                grid.steps,
            )?;
            write_out(output.out.as_deref(), &sweep_csv(&rows, output.precision))?;
        }
        Command::Distribution {
            field,
            tau,
            outcome,
            output,
        } => {
            let n_max = field.cutoff();
            let initial = coherent_state(field.alpha(), n_max)?;
            let state = evolve_excited_coherent(field.alpha(), tau, n_max)?;
            let result = conditional_project(&state, outcome.into())?;
            let csv = distribution_csv(&initial, &result.post_state, output.precision)?;
            write_out(output.out.as_deref(), &csv)?;
        }
        Command::Peaks { grid, output } => {
            let rows = sweep_time(
                grid.field.alpha(),
                grid.field.cutoff(),
                grid.tau_start,
                grid.tau_end,
                grid.steps,
            )?;
            let series: Vec<(f64, f64)> = rows.iter().map(|r| (r.tau, r.n_plus)).collect();
            let peaks = find_peaks(&series, NPLUS_PROMINENCE)?;
            let report = peaks_report(grid.field.alpha, &rows, &peaks, output.precision);
            write_out(output.out.as_deref(), &report)?;
        }
    }
    Ok(())
}
