//! Suite execution and the JSON report.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{suite_checks, Bound, Check, Ctx};
use crate::VerifyError;

pub const SCHEMA: &str = "twistorlab-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub module: String,
    pub anchor: String,
    pub bound: Bound,
    pub samples: usize,
    /// Worst residual for upper-bound checks, smallest detected violation
    /// for lower-bound checks. `null` when the check errored or produced NaN.
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub error: Option<String>,
}

/// Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub checks: Vec<CheckRecord>,
    /// Only filled in on request so that reports stay byte-stable.
    pub wall_time_s: Option<f64>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn run_check(check: &Check, seed: u64, samples: usize, tol: f64) -> CheckRecord {
    let ctx = Ctx::new(seed, check, samples);
    let tolerance = match check.bound {
        Bound::Upper => check.tolerance.max(tol),
        Bound::Lower => check.tolerance,
    };
    let (value, error) = match catch_unwind(AssertUnwindSafe(|| (check.run)(&ctx))) {
        Ok(Ok(v)) => (v, None),
        Ok(Err(e)) => (f64::NAN, Some(e.to_string())),
        Err(p) => (f64::NAN, Some(format!("panic: {}", panic_message(p)))),
    };
    let pass = error.is_none()
        && match check.bound {
            Bound::Upper => value <= tolerance,
            Bound::Lower => value >= tolerance,
        };
    CheckRecord {
        id: check.id.into(),
        module: check.module().into(),
        anchor: check.anchor.into(),
        bound: check.bound,
        samples: ctx.n,
        value,
        tolerance,
        pass,
        error,
    }
}

/// Runs every check of `name` with streams derived from `seed`.
///
/// `samples` caps each check's outer sample count. `tol` can only loosen
/// upper-bound tolerances: the effective value is `max(pinned, tol)`.
pub fn run_suite(name: &str, seed: u64, samples: usize, tol: f64) -> Result<SuiteReport, VerifyError> {
    let checks = suite_checks(name).ok_or_else(|| VerifyError::UnknownSuite(name.into()))?;
    let start = Instant::now();
    let records: Vec<CheckRecord> = checks.par_iter().map(|c| run_check(c, seed, samples, tol)).collect();
    let pass = records.iter().all(|r| r.pass);
    Ok(SuiteReport {
        schema: SCHEMA,
        suite: name.into(),
        seed,
        samples,
        tol,
        checks: records,
        wall_time_s: None,
        pass,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run_suite("nosuch", 1, 10, 0.0), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn failing_check_is_recorded() {
        let bad = Check {
            id: "test.bad",
            anchor: "always fails",
            suites: &[],
            bound: Bound::Upper,
            tolerance: 1e-3,
            samples: 1,
            run: |_| Err(twistor_core::Error::SingularField),
        };
        let r = run_check(&bad, 1, 10, 0.0);
        assert!(!r.pass && r.value.is_nan() && r.error.is_some());
        let panicking = Check { run: |_| panic!("boom"), ..bad };
        let r = run_check(&panicking, 1, 10, 0.0);
        assert_eq!(r.error.as_deref(), Some("panic: boom"));
    }

    #[test]
    fn tolerance_override_only_loosens_upper_bounds() {
        let c = Check {
            id: "test.tol",
            anchor: "",
            suites: &[],
            bound: Bound::Upper,
            tolerance: 1e-3,
            samples: 1,
            run: |_| Ok(1e-2),
        };
        assert!(!run_check(&c, 1, 1, 0.0).pass);
        assert!(run_check(&c, 1, 1, 0.1).pass);
        let lower = Check { bound: Bound::Lower, run: |_| Ok(1e-4), ..c };
        let r = run_check(&lower, 1, 1, 1.0);
        assert!(!r.pass && r.tolerance == 1e-3);
    }
}
