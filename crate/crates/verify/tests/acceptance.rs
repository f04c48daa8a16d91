//! Acceptance criteria 1–9, one PASS/FAIL line each.
//!
//! Suites run at seed 42 with no tolerance override, so every check is judged
//! at its pinned tolerance; each criterion additionally requires that the
//! pinned tolerance is no looser than the criterion's and that enough
//! samples were drawn.

use std::process::Command;
use std::time::{Duration, Instant};

use twistorlab::checks::Bound;
use twistorlab::{run_suite, SuiteReport};

const SEED: u64 = 42;
const SAMPLES: usize = 1000;

/// `(check id, criterion tolerance, minimum samples)`.
type Req = (&'static str, f64, usize);

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn judge(report: &SuiteReport, reqs: &[Req], limit: Option<Duration>) -> Outcome {
    let mut pass = true;
    let mut worst: Vec<String> = Vec::new();
    for &(id, tol, n) in reqs {
        let Some(c) = report.checks.iter().find(|c| c.id == id) else {
            pass = false;
            worst.push(format!("{id} missing"));
            continue;
        };
        let pinned = match c.bound {
            Bound::Upper => c.tolerance <= tol,
            Bound::Lower => c.tolerance >= tol,
        };
        let ok = c.pass && pinned && c.samples >= n;
        pass &= ok;
        let rel = match c.bound {
            Bound::Upper => "≤",
            Bound::Lower => "≥",
        };
        let mark = if ok { "" } else { " ✗" };
        let err = c.error.as_deref().map(|e| format!(" [{e}]")).unwrap_or_default();
        worst.push(format!("{id} {:.2e} {rel} {tol:.0e}{mark}{err}", c.value));
    }
    if let Some(limit) = limit {
        let ok = report.elapsed < limit;
        pass &= ok;
        worst.push(format!(
            "runtime {:.2} s < {} s{}",
            report.elapsed.as_secs_f64(),
            limit.as_secs(),
            if ok { "" } else { " ✗" }
        ));
    }
    Outcome { pass, detail: worst.join("; ") }
}

fn suite(name: &str) -> SuiteReport {
    run_suite(name, SEED, SAMPLES, 0.0).expect("known suite")
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let run = |k: usize| {
        let path = dir.path().join(format!("run{k}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_twistorlab"))
            .args(["verify", "--suite", "all", "--seed", "42", "--samples", "1000", "--out"])
            .arg(&path)
            .stderr(std::process::Stdio::null())
            .status()
            .expect("binary runs");
        (status.code(), std::fs::read(&path).unwrap_or_default())
    };
    let (c1, a) = run(1);
    let (c2, b) = run(2);
    let pass = c1 == Some(0) && c2 == Some(0) && !a.is_empty() && a == b;
    Outcome {
        pass,
        detail: format!("two `verify --suite all` runs: {} bytes, identical = {}, exit {c1:?}/{c2:?}", a.len(), a == b),
    }
}

fn main() {
    let forms = suite("forms");
    let fct = suite("fct");
    let criteria: Vec<Criterion> = vec![
        (
            "algebra identities",
            Box::new(|| {
                let r = suite("algebra");
                judge(
                    &r,
                    &[
                        ("quat.real_part", 1e-12, 1000),
                        ("quat.conjugate", 1e-12, 1000),
                        ("forms.wedge_identity", 1e-12, 1000),
                    ],
                    Some(Duration::from_secs(1)),
                )
            }),
        ),
        (
            "duality table and ⋆⋆ = id",
            Box::new(|| {
                judge(&forms, &[("forms.duality_table", 0.0, 1), ("forms.hodge_involution", 1e-14, 100)], None)
            }),
        ),
        (
            "twistor suite",
            Box::new(|| {
                judge(
                    &suite("twistor"),
                    &[
                        ("twistor.chart_change", 1e-10, 200),
                        ("twistor.eta_rays", 1e-12, 500),
                        ("twistor.sphere_data", 1e-10, 20),
                    ],
                    None,
                )
            }),
        ),
        (
            "Möbius suite",
            Box::new(|| {
                judge(
                    &suite("moebius"),
                    &[
                        ("moebius.cp1_square", 1e-10, 500),
                        ("moebius.lorentz_interval", 1e-12, 1000),
                        ("moebius.factorization", 1e-9, 50),
                        ("moebius.twisted_holomorphic", 1e-8, 50),
                    ],
                    None,
                )
            }),
        ),
        (
            "holomorphic one-form criterion",
            Box::new(|| {
                judge(
                    &forms,
                    &[("forms.holomorphic_equivalence", 1e-10, 100), ("forms.holomorphic_detection", 1e-3, 100)],
                    None,
                )
            }),
        ),
        (
            "ambitwistor suite",
            Box::new(|| {
                judge(
                    &suite("ambitwistor"),
                    &[
                        ("ambitwistor.nullity", 1e-12, 1000),
                        ("ambitwistor.incidence", 1e-10, 1),
                        ("ambitwistor.chart_membership", 1e-10, 1),
                        ("ambitwistor.chart_consistency", 1e-9, 100),
                    ],
                    None,
                )
            }),
        ),
        (
            "BPST suite",
            Box::new(|| {
                judge(
                    &suite("bpst"),
                    &[
                        ("bpst.curvature", 1e-9, 100),
                        ("bpst.duality", 1e-9, 100),
                        ("bpst.xi_conditions", 1e-9, 100),
                        ("bpst.fct_residual", 1e-9, 100),
                        ("bpst.lambda", 1e-8, 20),
                        ("bpst.transport_origin", 1e-10, 1),
                        ("bpst.ambimap", 1e-8, 20),
                        ("bpst.patching", 1e-7, 1),
                    ],
                    Some(Duration::from_secs(60)),
                )
            }),
        ),
        ("RK4 order (|ratio − 16| ≤ 4)", Box::new(|| judge(&fct, &[("fct.ode_order", 4.0, 10)], None))),
        ("determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "criterion {} {} {name} ({:.1} s): {}",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
