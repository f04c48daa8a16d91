use rand::Rng;
use twistor_core::field::{Domain, Field};
use twistor_core::forms::*;
use twistor_core::{Biquaternion, QOneForm, QTwoForm, Result};

use super::{draw, worst, Bound, Check, Ctx};
use crate::sample::{biquaternion, quaternion, unit_imaginary};

pub const CHECKS: &[Check] = &[
    Check {
        id: "forms.reconstruction_fd",
        anchor: "dF(v) equals the directional derivative (central difference)",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-6,
        samples: 200,
        run: reconstruction_fd,
    },
    Check {
        id: "forms.reconstruction_exact",
        anchor: "dF(v) on polynomial fields is exact",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 200,
        run: reconstruction_exact,
    },
    Check {
        id: "forms.duality_table",
        anchor: "dq∧dq̄ and dq̄∧e dq self-dual; dq̄∧dq and dq∧e dq̄ anti-self-dual",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 0.0,
        samples: 1,
        run: duality_table,
    },
    Check {
        id: "forms.hodge_involution",
        anchor: "⋆⋆ = id on two-forms",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-14,
        samples: 100,
        run: hodge_involution,
    },
    Check {
        id: "forms.sd_split",
        anchor: "self-dual plus anti-self-dual parts rebuild the form",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-14,
        samples: 100,
        run: sd_split_check,
    },
    Check {
        id: "forms.projectors",
        anchor: "π⁺π⁻ = 0 and (π^±)² = 2i π^± on both sides",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: projectors,
    },
    Check {
        id: "forms.holomorphic_equivalence",
        anchor: "holomorphic one-forms: contraction and operator conditions agree",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 100,
        run: holomorphic_equivalence,
    },
    Check {
        id: "forms.holomorphic_detection",
        anchor: "forms with an antilinear part violate the holomorphic condition (relative)",
        suites: &["forms"],
        bound: Bound::Lower,
        tolerance: 1e-3,
        samples: 100,
        run: holomorphic_detection,
    },
    Check {
        id: "forms.invariant_subspace",
        anchor: "ω = ½(dq ξ − ξ̄ dq̄) satisfies 𝓘_η π⁺[η, ω] = 0",
        suites: &["forms"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 50,
        run: invariant_subspace,
    },
];

fn real_point(rng: &mut impl Rng) -> Biquaternion {
    quaternion(rng, 1.0).into()
}

fn polynomial(a: Biquaternion, b: Biquaternion, c: Biquaternion) -> Field {
    let q = Field::identity(Domain::Real);
    let k = Field::constant;
    &(&(&k(a) * &q) * &k(b)) + &(&(&q * &k(c)) * &q)
}

fn reconstruction_fd(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (a, b, c) = (biquaternion(rng, 1.0, 1.0), biquaternion(rng, 1.0, 1.0), biquaternion(rng, 1.0, 1.0));
        let (d, p) = draw(rng, |r| {
            let (d, p) = (biquaternion(r, 1.0, 1.0), real_point(r));
            ((p + d).reduced_norm().norm() > 0.1).then_some((d, p))
        })?;
        let v = real_point(rng);
        let f = &polynomial(a, b, c) + &(&Field::identity(Domain::Real) + &Field::constant(d)).inv();
        let h = 1e-5;
        let fd = (f.eval(p + v * h)? - f.eval(p - v * h)?) * (0.5 / h);
        Ok(differential(&f, p)?.contract(v).max_abs_diff(fd) / (1.0 + fd.norm()))
    })
}

fn reconstruction_exact(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (a, b, c) = (biquaternion(rng, 1.0, 1.0), biquaternion(rng, 1.0, 1.0), biquaternion(rng, 1.0, 1.0));
        let (p, v) = (real_point(rng), real_point(rng));
        let exact = a * v * b + v * c * p + p * c * v;
        Ok(differential(&polynomial(a, b, c), p)?.contract(v).max_abs_diff(exact))
    })
}

fn duality_table(_: &Ctx) -> Result<f64> {
    let dq = QOneForm::dq();
    let dqb = QOneForm::dqbar();
    let mut r: f64 = 0.0;
    let a = wedge(&dq, &dqb);
    r = r.max((hodge_star(&a) - a).norm());
    let b = wedge(&dqb, &dq);
    r = r.max((hodge_star(&b) + b).norm());
    for e in &Biquaternion::BASIS[1..] {
        let c = wedge(&dq, &dqb.left_mul(*e));
        r = r.max((hodge_star(&c) + c).norm());
        let d = wedge(&dqb, &dq.left_mul(*e));
        r = r.max((hodge_star(&d) - d).norm());
    }
    Ok(r)
}

fn two_form(rng: &mut impl Rng) -> QTwoForm {
    QTwoForm { c: std::array::from_fn(|_| biquaternion(rng, 1.0, 1.0)) }
}

fn hodge_involution(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let f = two_form(rng);
        Ok((hodge_star(&hodge_star(&f)) - f).norm())
    })
}

fn sd_split_check(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let f = two_form(rng);
        let (p, m) = sd_split(&f);
        Ok((p + m - f).norm().max((hodge_star(&p) - p).norm()).max((hodge_star(&m) + m).norm()))
    })
}

fn projectors(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (eta, x) = (unit_imaginary(rng), biquaternion(rng, 1.0, 1.0));
        let mut r: f64 = 0.0;
        for side in [Side::Left, Side::Right] {
            let m = proj_pm(eta, Sign::Minus, x, side);
            r = r.max(proj_pm(eta, Sign::Plus, m, side).norm());
            for s in [Sign::Plus, Sign::Minus] {
                let once = proj_pm(eta, s, x, side);
                r = r.max(proj_pm(eta, s, once, side).max_abs_diff(once * Biquaternion::CI * 2.0));
            }
        }
        Ok(r)
    })
}

fn holomorphic_form(rng: &mut impl Rng) -> QOneForm {
    QOneForm::holomorphic(std::array::from_fn(|_| biquaternion(rng, 1.0, 1.0)))
}

fn holomorphic_equivalence(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let w = holomorphic_form(rng);
        let scale = 1.0 + w.norm();
        let class = QOneForm::dq().right_mul(w.hol[0]);
        let mut r: f64 = if is_holomorphic(&w) { 0.0 } else { 1.0 };
        for _ in 0..100 {
            let eta = unit_imaginary(rng);
            let (rc, ro) = lemma1_check(&class, eta);
            r = worst(r, lemma1_defect(&w, eta).max(rc).max(ro) / scale);
        }
        Ok(r)
    })
}

fn holomorphic_detection(ctx: &Ctx) -> Result<f64> {
    ctx.min_over(|rng| {
        let w = draw(rng, |r| {
            let w = QOneForm {
                hol: std::array::from_fn(|_| biquaternion(r, 1.0, 1.0)),
                anti: std::array::from_fn(|_| biquaternion(r, 1.0, 1.0)),
            };
            (w.anti_norm() > 0.1).then_some(w)
        })?;
        let detected = (0..20).map(|_| lemma1_defect(&w, unit_imaginary(rng))).fold(0.0, f64::max);
        Ok(detected / w.norm())
    })
}

fn invariant_subspace(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (xi, eta) = (biquaternion(rng, 1.0, 1.0), unit_imaginary(rng));
        let w = (QOneForm::dq().right_mul(xi) - QOneForm::dqbar().left_mul(xi.qconj())).scale(0.5);
        let comm = w.left_mul(eta.bq()) - w.right_mul(eta.bq());
        Ok(script_i(eta, &comm.left_mul(pi(Sign::Plus, eta.bq()))).norm())
    })
}
