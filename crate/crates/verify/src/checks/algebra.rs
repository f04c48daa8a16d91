use twistor_core::quat::{bq_conj, bq_inv, qmul};
use twistor_core::{Biquaternion, ConjKind, QOneForm, Quaternion};

use super::{draw, Bound, Check, Ctx};
use crate::sample::{biquaternion, quaternion};
use twistor_core::forms::wedge;
use twistor_core::Result;

pub const CHECKS: &[Check] = &[
    Check {
        id: "quat.real_part",
        anchor: "real part as the average of conjugations by the basis",
        suites: &["algebra"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: real_part,
    },
    Check {
        id: "quat.conjugate",
        anchor: "conjugate as minus half the sum of basis sandwiches",
        suites: &["algebra"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: conjugate,
    },
    Check {
        id: "forms.wedge_identity",
        anchor: "dq ∧ w dq = −½(w̄ dq̄∧dq + dq∧dq̄ w̄)",
        suites: &["algebra", "forms"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: wedge_identity,
    },
    Check {
        id: "quat.norm_multiplicative",
        anchor: "|ab| = |a||b| (relative)",
        suites: &["algebra"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: norm_multiplicative,
    },
    Check {
        id: "quat.inverse_round_trip",
        anchor: "a · a⁻¹ = a⁻¹ · a = 1 for non-degenerate biquaternions",
        suites: &["algebra"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 1000,
        run: inverse_round_trip,
    },
    Check {
        id: "quat.conj_antihomomorphism",
        anchor: "conj(ab) = conj(b) conj(a)",
        suites: &["algebra"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: conj_antihomomorphism,
    },
];

fn real_part(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let q = quaternion(rng, 1.0);
        let s = Quaternion::BASIS.iter().fold(Quaternion::ZERO, |s, e| s + *e * q * e.conj());
        Ok(s.scale(0.25).max_abs_diff(Quaternion::real(q.w)))
    })
}

fn conjugate(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let q = quaternion(rng, 1.0);
        let s = Quaternion::BASIS.iter().fold(Quaternion::ZERO, |s, e| s + *e * q * *e);
        Ok(s.scale(-0.5).max_abs_diff(q.conj()))
    })
}

fn wedge_identity(ctx: &Ctx) -> Result<f64> {
    let dq = QOneForm::dq();
    let dqb = QOneForm::dqbar();
    ctx.max_over(|rng| {
        let w = biquaternion(rng, 1.0, 1.0);
        let wb = w.qconj();
        let lhs = wedge(&dq, &dq.left_mul(w));
        let rhs = (wedge(&dqb, &dq).left_mul(wb) + wedge(&dq, &dqb).right_mul(wb)).scale(-0.5);
        Ok((lhs - rhs).norm())
    })
}

fn norm_multiplicative(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (a, b) = (quaternion(rng, 1.0), quaternion(rng, 1.0));
        let lhs = qmul(a, b).norm();
        Ok((lhs - a.norm() * b.norm()).abs() / (1.0 + lhs))
    })
}

fn inverse_round_trip(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let a = draw(rng, |r| Some(biquaternion(r, 1.0, 1.0)).filter(|a| a.reduced_norm().norm() > 1e-3))?;
        let ai = bq_inv(a)?;
        Ok((a * ai).max_abs_diff(Biquaternion::ONE).max((ai * a).max_abs_diff(Biquaternion::ONE)))
    })
}

fn conj_antihomomorphism(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (a, b) = (biquaternion(rng, 1.0, 1.0), biquaternion(rng, 1.0, 1.0));
        let q = ConjKind::Quaternion;
        Ok(bq_conj(a * b, q).max_abs_diff(bq_conj(b, q) * bq_conj(a, q)))
    })
}
