//! Invariant batteries, one file per library module.

use rand_chacha::ChaCha8Rng;
use twistor_core::{Error, Result};

use crate::seed::Stream;

mod algebra;
mod ambitwistor;
mod fct;
mod forms;
mod moebius;
mod twistor;

/// Direction of the comparison between a check's statistic and its tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Worst residual must not exceed the tolerance.
    Upper,
    /// Smallest detected violation must reach the tolerance.
    Lower,
}

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub suites: &'static [&'static str],
    pub bound: Bound,
    pub tolerance: f64,
    /// Outer sample count before the `--samples` cap.
    pub samples: usize,
    pub run: fn(&Ctx) -> Result<f64>,
}

impl Check {
    pub fn module(&self) -> &'static str {
        self.id.split('.').next().unwrap_or(self.id)
    }
}

pub struct Ctx {
    stream: Stream,
    pub n: usize,
}

impl Ctx {
    pub fn new(seed: u64, check: &Check, cap: usize) -> Self {
        Ctx { stream: Stream::new(seed, check.id), n: check.samples.min(cap).max(1) }
    }

    pub fn rng(&self, k: usize) -> ChaCha8Rng {
        self.stream.rng(k as u64)
    }

    /// Largest value of `f` over the outer samples; NaN propagates.
    pub fn max_over(&self, mut f: impl FnMut(&mut ChaCha8Rng) -> Result<f64>) -> Result<f64> {
        let mut acc = 0.0;
        for k in 0..self.n {
            acc = worst(acc, f(&mut self.rng(k))?);
        }
        Ok(acc)
    }

    /// Smallest value of `f` over the outer samples; NaN propagates.
    pub fn min_over(&self, mut f: impl FnMut(&mut ChaCha8Rng) -> Result<f64>) -> Result<f64> {
        let mut acc = f64::INFINITY;
        for k in 0..self.n {
            let r = f(&mut self.rng(k))?;
            acc = if acc.is_nan() || r.is_nan() { f64::NAN } else { acc.min(r) };
        }
        Ok(acc)
    }
}

pub fn worst(acc: f64, r: f64) -> f64 {
    if acc.is_nan() || r.is_nan() {
        f64::NAN
    } else {
        acc.max(r)
    }
}

/// Redraws until `f` accepts, giving up after a fixed number of attempts.
pub fn draw<R, T>(rng: &mut R, mut f: impl FnMut(&mut R) -> Option<T>) -> Result<T> {
    for _ in 0..1000 {
        if let Some(t) = f(rng) {
            return Ok(t);
        }
    }
    Err(Error::InvalidArgument("no admissible sample".into()))
}

pub const SUITES: [&str; 8] = ["algebra", "forms", "moebius", "twistor", "ambitwistor", "fct", "bpst", "all"];

/// Every check in report order.
pub fn registry() -> Vec<&'static Check> {
    [algebra::CHECKS, forms::CHECKS, moebius::CHECKS, twistor::CHECKS, ambitwistor::CHECKS, fct::CHECKS]
        .into_iter()
        .flatten()
        .collect()
}

pub fn suite_checks(name: &str) -> Option<Vec<&'static Check>> {
    if !SUITES.contains(&name) {
        return None;
    }
    Some(registry().into_iter().filter(|c| name == "all" || c.suites.contains(&name)).collect())
}
