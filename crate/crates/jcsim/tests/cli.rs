//! End-to-end tests of the `jcsim` binary: flag handling, CSV bytes,
//! exit codes, and diagnostics.

use std::path::Path;
use std::process::{Command, Output};

use jcsim::{sweep_csv, sweep_time, C64};

fn jcsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jcsim"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(args: &[&str]) -> String {
    let out = jcsim(args);
    assert!(
        out.status.success(),
        "jcsim {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Parses one numeric CSV column (header skipped, empty cells -> None).
fn column(csv: &str, index: usize) -> Vec<Option<f64>> {
    csv.lines()
        .skip(1)
        .map(|line| {
            let cell = line.split(',').nth(index).unwrap();
            (!cell.is_empty()).then(|| cell.parse().unwrap())
        })
        .collect()
}

#[test]
fn sweep_matches_the_library_bytes_and_is_deterministic() {
    let args = [
        "sweep",
        "--alpha",
        "4",
        "--n-max",
        "66",
        "--tau-start",
        "0",
        "--tau-end",
        "15",
        "--steps",
        "200",
    ];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);

    let rows = sweep_time(C64::new(4.0, 0.0), 66, 0.0, 15.0, 200).unwrap();
    assert_eq!(first, sweep_csv(&rows, 12));
}

#[test]
fn sweep_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let args = [
        "sweep", "--alpha", "2", "--steps", "50", "--tau-end", "10", "--out",
    ];
    let out = jcsim(&[&args[..], &[path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let from_file = std::fs::read_to_string(&path).unwrap();
    let from_stdout = stdout_of(&args[..args.len() - 1]);
    assert_eq!(from_file, from_stdout);
}

#[test]
fn vacuum_sweep_columns_and_formatting() {
    let csv = stdout_of(&[
        "sweep",
        "--alpha",
        "0",
        "--tau-start",
        "0",
        "--tau-end",
        "3.141592653589793",
        "--steps",
        "3",
    ]);
    assert!(csv.starts_with(
        "tau,p_excited,p_ground,lambda_plus,lambda_minus,r,w,theta,phi,n_plus,n_minus,q_plus,q_minus\n"
    ));
    assert!(!csv.contains('\r'));
    let n_plus: Vec<f64> = column(&csv, 9).into_iter().map(Option::unwrap).collect();
    assert_eq!(n_plus.len(), 3);
    assert!(n_plus[0].abs() < 1e-12);
    assert!((n_plus[1] - 1.0).abs() < 1e-12);
    assert!(n_plus[2].abs() < 1e-12);
    // vacuum rows have no minor Schmidt branch and no Mandel-Q
    let n_minus = column(&csv, 10);
    assert_eq!(n_minus[0], None);
    for line in csv.lines().skip(1) {
        for cell in line.split(',') {
            assert!(!cell.contains(['e', 'E']), "scientific notation in {cell}");
        }
    }
}

#[test]
fn default_sweep_gains_photons_near_the_collapse_time() {
    let csv = stdout_of(&["sweep"]);
    let rows: Vec<(f64, f64)> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            (cells[0].parse().unwrap(), cells[9].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 1500);
    let nearest = rows
        .iter()
        .min_by(|a, b| {
            (a.0 - 1.75)
                .abs()
                .partial_cmp(&(b.0 - 1.75).abs())
                .unwrap()
        })
        .unwrap();
    assert!(
        (18.0..=22.0).contains(&nearest.1),
        "n_plus near tau=1.75 is {}",
        nearest.1
    );
}

#[test]
fn distribution_at_time_zero_copies_the_initial_column() {
    let csv = stdout_of(&[
        "distribution",
        "--alpha",
        "4",
        "--tau",
        "0",
        "--outcome",
        "excited",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,p_initial,p_conditional");
    assert_eq!(lines.len(), 1 + 67);
    for line in &lines[1..] {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[1], cells[2]);
    }
}

#[test]
fn ground_measurement_on_vacuum_adds_one_photon() {
    let csv = stdout_of(&[
        "distribution",
        "--alpha",
        "0",
        "--tau",
        "1.5707963267948966",
        "--outcome",
        "ground",
    ]);
    let p_conditional: Vec<f64> = column(&csv, 2).into_iter().map(Option::unwrap).collect();
    assert!((p_conditional[1] - 1.0).abs() < 1e-12);
    let rest: f64 = p_conditional
        .iter()
        .enumerate()
        .filter(|(n, _)| *n != 1)
        .map(|(_, p)| p)
        .sum();
    assert!(rest < 1e-12);
}

#[test]
fn schmidt_conditioned_distribution_shifts_upward() {
    let csv = stdout_of(&[
        "distribution",
        "--alpha",
        "4",
        "--tau",
        "1.7552",
        "--outcome",
        "schmidt-plus",
    ]);
    let p_initial: Vec<f64> = column(&csv, 1).into_iter().map(Option::unwrap).collect();
    let p_conditional: Vec<f64> = column(&csv, 2).into_iter().map(Option::unwrap).collect();
    let argmax = |p: &[f64]| -> usize {
        p.iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap().then(a.0.cmp(&b.0)))
            .unwrap()
            .0
    };
    assert_eq!(argmax(&p_initial), 16);
    let shifted = argmax(&p_conditional);
    assert!(
        (18..=22).contains(&shifted),
        "conditional mode at {shifted}"
    );
}

#[test]
fn impossible_outcome_exits_nonzero_with_a_diagnostic() {
    let out = jcsim(&[
        "distribution",
        "--alpha",
        "4",
        "--tau",
        "0",
        "--outcome",
        "ground",
    ]);
    assert!(!out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
    assert!(stderr.contains("ground"), "stderr: {stderr}");
    assert_eq!(stderr.lines().count(), 1);
}

#[test]
fn unwritable_output_path_exits_nonzero() {
    let out = jcsim(&[
        "sweep",
        "--alpha",
        "1",
        "--steps",
        "5",
        "--out",
        "/nonexistent-jcsim-dir/out.csv",
    ]);
    assert!(!out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn degenerate_grid_exits_nonzero() {
    let out = jcsim(&["sweep", "--steps", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("grid"));
}

#[test]
fn peaks_report_locates_the_first_maximum() {
    let report = stdout_of(&["peaks"]);
    let first = report.lines().next().unwrap();
    assert!(first.starts_with("peak 1: tau="), "{first}");
    let tau: f64 = first
        .split("tau=")
        .nth(1)
        .unwrap()
        .split(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((1.6..=1.9).contains(&tau), "first peak at {tau}");
}

#[test]
fn peaks_report_handles_peakless_windows() {
    let report = stdout_of(&["peaks", "--tau-end", "0.2", "--steps", "50"]);
    assert_eq!(report, "no peaks detected\n");
}

#[test]
fn sweep_output_is_stable_against_path_of_emission() {
    // same run emitted to a file inside a fresh directory
    let dir = tempfile::tempdir().unwrap();
    let path: &Path = &dir.path().join("x.csv");
    let out = jcsim(&[
        "sweep",
        "--alpha",
        "0",
        "--tau-end",
        "3.141592653589793",
        "--steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(path).unwrap();
    assert_eq!(body.lines().count(), 4);
    assert!(body.ends_with('\n'));
}
