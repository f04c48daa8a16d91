use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twistorlab::checks::{suite_checks, SUITES};
use twistorlab::{export_grid, run_suite, AxisSpec, GridField, VerifyError};

#[derive(Parser)]
#[command(name = "twistorlab", version, about = "Seeded verification suites for twistor-core")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite and write its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Cap on each check's outer sample count.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Loosens upper-bound tolerances to at least this value.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        /// Report path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time in the report (breaks byte-stability).
        #[arg(long)]
        timing: bool,
    },
    /// List suites and their checks.
    Suites,
    /// Evaluate a BPST quantity on a grid and write CSV.
    Grid {
        /// lambda | curvature_norm | fct_residual | xi_norm
        #[arg(long)]
        field: String,
        /// e.g. `q0=-2:2:0.25,q1=0` or `q0+iq3=-1:1:0.25`
        #[arg(long)]
        axes: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn verify(
    suite: &str,
    seed: u64,
    samples: usize,
    tol: f64,
    out: Option<PathBuf>,
    timing: bool,
) -> Result<bool, VerifyError> {
    if tol.is_nan() || tol < 0.0 || samples == 0 {
        return Err(VerifyError::InvalidOption("tol must be ≥ 0 and samples ≥ 1".into()));
    }
    let mut report = run_suite(suite, seed, samples, tol)?;
    if timing {
        report.wall_time_s = Some(report.elapsed.as_secs_f64());
    }
    for c in &report.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let err = c.error.as_deref().map(|e| format!("  ({e})")).unwrap_or_default();
        eprintln!("{status} {:<36} {:>10.3e} {:?} {:.1e}{err}", c.id, c.value, c.bound, c.tolerance);
    }
    let failed = report.failed().count();
    eprintln!("{} checks, {failed} failed, {:.2} s", report.checks.len(), report.elapsed.as_secs_f64());
    let json = report.to_json();
    match out {
        Some(path) => std::fs::write(path, json)?,
        // A closed pipe on stdout is not an error worth reporting.
        None => drop(std::io::stdout().lock().write_all(json.as_bytes())),
    }
    Ok(report.pass)
}

fn suites() {
    let mut out = std::io::stdout().lock();
    for s in SUITES {
        let _ = writeln!(out, "{s}");
        for c in suite_checks(s).unwrap_or_default() {
            let _ = writeln!(out, "  {:<36} {}", c.id, c.anchor);
        }
    }
}

fn grid(field: &str, axes: &str, out: PathBuf) -> Result<(), VerifyError> {
    let field: GridField = field.parse()?;
    let axes: AxisSpec = axes.parse()?;
    let g = export_grid(field, &axes, &out)?;
    eprintln!("{}: {} rows ({} singular) -> {}", g.field.name(), g.rows, g.singular, g.path.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { suite, seed, samples, tol, out, timing } => verify(&suite, seed, samples, tol, out, timing),
        Command::Suites => {
            suites();
            Ok(true)
        }
        Command::Grid { field, axes, out } => grid(&field, &axes, out).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
