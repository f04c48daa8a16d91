use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use twistor_core::ambitwistor::{NullHyperplane, NullLine};
use twistor_core::fct::*;
use twistor_core::field::{Domain, Field};
use twistor_core::forms::{pi, sd_split, wedge, Sign};
use twistor_core::{Biquaternion, QOneForm, QTwoForm, Result, UnitImaginary};

use super::{draw, worst, Bound, Check, Ctx};
use crate::sample::{avoids_pole, biquaternion, complex, quaternion, tame_line, tame_point, uniform, unit_imaginary};

pub const CHECKS: &[Check] = &[
    Check {
        id: "fct.null_line_integrability",
        anchor: "both curvatures vanish on null lines; Ω_ℓ on β-planes, Ω_r on α-planes",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 500,
        run: null_line_integrability,
    },
    Check {
        id: "fct.s2_membership",
        anchor: "½(γ̄ dq̄∧dq − dq∧dq̄ γ̄) arises as a real one-form wedged with λ dq",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 100,
        run: s2_membership,
    },
    Check {
        id: "fct.curvature_first_principles",
        anchor: "closed-form curvatures equal dA + A∧A and dB − B∧B",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: curvature_first_principles_check,
    },
    Check {
        id: "fct.sigma_bar",
        anchor: "σ̄ is idempotent and kills complex multiples of dq",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 100,
        run: sigma_bar_check,
    },
    Check {
        id: "fct.ode_order",
        anchor: "transport step halving shows fourth-order convergence (|ratio − 16| ≤ 4)",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 4.0,
        samples: 10,
        run: ode_order,
    },
    Check {
        id: "fct.conformal_covariance",
        anchor: "instanton family: f = (q − c)/ρ solves σ̄∇f = 0 for ξ centred at c with scale ρ",
        suites: &["fct"],
        bound: Bound::Upper,
        tolerance: 1e-8,
        samples: 50,
        run: conformal_covariance,
    },
    Check {
        id: "bpst.curvature",
        anchor: "BPST curvatures equal ±(dq∧dq̄, dq̄∧dq)/(1 + q q̄)²",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: bpst_curvature,
    },
    Check {
        id: "bpst.duality",
        anchor: "BPST Ω_ℓ is self-dual and Ω_r anti-self-dual",
        suites: &["fct", "bpst"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: bpst_duality,
    },
    Check {
        id: "bpst.xi_conditions",
        anchor: "BPST potential satisfies both ξ conditions",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: bpst_xi_conditions,
    },
    Check {
        id: "bpst.fct_residual",
        anchor: "f = q solves σ̄∇f = 0 for the BPST connection",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: bpst_fct_residual,
    },
    Check {
        id: "bpst.lambda",
        anchor: "λ along null lines equals (1 − q q̄)/(1 + q q̄)",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-8,
        samples: 20,
        run: bpst_lambda,
    },
    Check {
        id: "bpst.transport_origin",
        anchor: "transport is trivial along null lines through the origin",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 20,
        run: bpst_transport_origin,
    },
    Check {
        id: "bpst.ambimap",
        anchor: "induced map keeps the α/β classes and sends null lines to null lines",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-8,
        samples: 20,
        run: bpst_ambimap,
    },
    Check {
        id: "bpst.patching",
        anchor: "two chart descriptions of the induced map agree through the transition functions",
        suites: &["bpst"],
        bound: Bound::Upper,
        tolerance: 1e-7,
        samples: 20,
        run: bpst_patching,
    },
];

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn w_a() -> QTwoForm {
    wedge(&QOneForm::dq(), &QOneForm::dqbar())
}

fn w_b() -> QTwoForm {
    wedge(&QOneForm::dqbar(), &QOneForm::dq())
}

fn bq(rng: &mut ChaCha8Rng) -> Biquaternion {
    biquaternion(rng, 1.0, 1.0)
}

fn null_line_integrability(ctx: &Ctx) -> Result<f64> {
    let xi = XiField::bpst();
    ctx.max_over(|rng| {
        let p = tame_point(rng);
        let (l, r) = curvature(&xi, p)?;
        let (m1, m2) = (pi(Sign::Minus, unit_imaginary(rng).bq()), pi(Sign::Minus, unit_imaginary(rng).bq()));
        let d: [Biquaternion; 4] = std::array::from_fn(|_| bq(rng));
        let rel =
            |w: &QTwoForm, u: Biquaternion, v: Biquaternion| w.contract(u, v).norm() / (1.0 + u.norm() * v.norm());
        let (u, v) = (m1 * d[0] * m2, m1 * d[1] * m2);
        let (b1, b2) = (d[2] * m2, d[3] * m2);
        let (a1, a2) = (m1 * d[2], m1 * d[3]);
        Ok(rel(&l, u, v).max(rel(&r, u, v)).max(rel(&l, b1, b2)).max(rel(&r, a1, a2)))
    })
}

fn s2_membership(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (g, lam) = (bq(rng), complex(rng, 1.0));
        let dq = QOneForm::dq();
        let real_form = dq.right_mul(g) + QOneForm::dqbar().left_mul(g.qconj());
        let lhs = wedge(&real_form, &dq).scale_c(lam);
        let gb = g.qconj();
        let rhs = (w_b().left_mul(gb) - w_a().right_mul(gb)).scale(0.5).scale_c(lam);
        Ok((lhs - rhs).norm() / (1.0 + lhs.norm()))
    })
}

fn curvature_first_principles_check(ctx: &Ctx) -> Result<f64> {
    let q = Field::identity(Domain::Complex);
    ctx.max_over(|rng| {
        let (a, b, c) = (biquaternion(rng, 0.5, 0.25), biquaternion(rng, 0.5, 0.25), biquaternion(rng, 0.5, 0.25));
        let f = &(&(&q.right_mul(a) * &q) + &q.qconj().left_mul(b)) + &Field::constant(c);
        let xi = XiField::new(f);
        let p = biquaternion(rng, 1.0, 0.25);
        let (l, r) = curvature(&xi, p)?;
        let (l2, r2) = curvature_first_principles(&xi, p)?;
        Ok(((l - l2).norm() / (1.0 + l.norm())).max((r - r2).norm() / (1.0 + r.norm())))
    })
}

fn sigma_bar_check(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let w = QOneForm { hol: std::array::from_fn(|_| bq(rng)), anti: std::array::from_fn(|_| bq(rng)) };
        let s = sigma_bar(&w);
        let k = QOneForm::dq().right_mul(Biquaternion::scalar(complex(rng, 2.0)));
        Ok((sigma_bar(&s) - s).norm().max(sigma_bar(&k).norm()))
    })
}

fn ode_order(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let l = tame_line(rng);
        // BPST transport is linear in t along null lines, so RK4 is exact
        // there; a constant shift makes the integrand genuinely nonlinear.
        let shift = biquaternion(rng, 0.5, 0.1);
        let xi = XiField::new(XiField::bpst().field() + &Field::constant(shift));
        let (ratio, _) = rk4_convergence_ratio(&xi, l.p, l.direction(), 1.0, 8)?;
        Ok((ratio - 16.0).abs())
    })
}

fn conformal_covariance(ctx: &Ctx) -> Result<f64> {
    let q = Field::identity(Domain::Complex);
    ctx.max_over(|rng| {
        let c: Biquaternion = quaternion(rng, 1.0).into();
        let rho = uniform(rng, 0.3, 3.0);
        let p: Biquaternion = quaternion(rng, 2.0).into();
        let xi = XiField::instanton(c, rho);
        let f = (&q - &Field::constant(c)).scale(Complex64::new(1.0 / rho, 0.0));
        let base = fct_residual(&XiField::bpst(), &q, p)?;
        Ok(fct_residual(&xi, &f, p)?.max(base))
    })
}

fn bpst_curvature(ctx: &Ctx) -> Result<f64> {
    let xi = XiField::bpst();
    ctx.max_over(|rng| {
        let p = tame_point(rng);
        let s = one() + p.reduced_norm();
        let k = one() / (s * s);
        let (l, r) = curvature(&xi, p)?;
        let (l2, r2) = curvature_first_principles(&xi, p)?;
        let closed = (l - w_a().scale_c(k)).norm().max((r + w_b().scale_c(k)).norm());
        Ok(closed.max((l - l2).norm()).max((r - r2).norm()))
    })
}

fn bpst_duality(ctx: &Ctx) -> Result<f64> {
    let xi = XiField::bpst();
    ctx.max_over(|rng| {
        let (l, r) = curvature(&xi, tame_point(rng))?;
        Ok(sd_split(&l).1.norm().max(sd_split(&r).0.norm()))
    })
}

fn bpst_xi_conditions(ctx: &Ctx) -> Result<f64> {
    let xi = XiField::bpst();
    ctx.max_over(|rng| {
        let (a, b) = xi_conditions_residual(&xi, tame_point(rng))?;
        Ok(a.max(b))
    })
}

fn bpst_fct_residual(ctx: &Ctx) -> Result<f64> {
    let (xi, q) = (XiField::bpst(), Field::identity(Domain::Complex));
    ctx.max_over(|rng| fct_residual(&xi, &q, tame_point(rng)))
}

fn bpst_lambda(ctx: &Ctx) -> Result<f64> {
    let q = Field::identity(Domain::Complex);
    ctx.max_over(|rng| {
        let l = tame_line(rng);
        let mut r: f64 = 0.0;
        for (t, lam) in lambda_transport(&q, &l, 0.0, 1.0, default_steps(1.0))? {
            let s = l.point(Complex64::new(t, 0.0)).reduced_norm();
            r = worst(r, (lam - (one() - s) / (one() + s)).norm());
        }
        Ok(r)
    })
}

fn bpst_transport_origin(ctx: &Ctx) -> Result<f64> {
    let xi = XiField::bpst();
    ctx.max_over(|rng| {
        let l = NullLine::new(Biquaternion::ZERO, unit_imaginary(rng), unit_imaginary(rng));
        let t1 = uniform(rng, 0.5, 2.0);
        let s = transport(&xi, &l, one(), 0.0, t1, default_steps(t1))?;
        Ok(s.chi.max_abs_diff(Biquaternion::ONE).max(s.psi.max_abs_diff(Biquaternion::ONE)))
    })
}

fn bpst_ambimap(ctx: &Ctx) -> Result<f64> {
    let (xi, q) = (XiField::bpst(), Field::identity(Domain::Complex));
    ctx.max_over(|rng| {
        let d = ambimap_eval(&xi, &q, &tame_line(rng), 6)?;
        Ok(d.constancy.max(d.collinearity))
    })
}

fn bpst_patching(ctx: &Ctx) -> Result<f64> {
    let (xi, q) = (XiField::bpst(), Field::identity(Domain::Complex));
    let gap = |a: UnitImaginary, b: UnitImaginary| (a.quaternion() - b.quaternion()).norm();
    ctx.max_over(|rng| {
        let (l, s, t) = draw(rng, |r| {
            let l = tame_line(r);
            let s = NullHyperplane { q0: Biquaternion::ZERO, eta1: unit_imaginary(r), eta2: unit_imaginary(r) };
            let t = NullHyperplane { q0: Biquaternion::ZERO, eta1: unit_imaginary(r), eta2: unit_imaginary(r) };
            let general = [(l.eta1, s.eta1), (l.eta2, s.eta2), (l.eta1, t.eta1), (l.eta2, t.eta2)]
                .iter()
                .all(|&(a, b)| gap(a, b) > 0.2);
            if !general {
                return None;
            }
            let qs = twistor_core::ambitwistor::chart_coords(&s, &l).ok()?;
            let qt = twistor_core::ambitwistor::chart_coords(&t, &l).ok()?;
            let star = l.p + l.direction();
            let tame = qs.norm() < 3.0
                && qt.norm() < 3.0
                && avoids_pole(qs, star)
                && avoids_pole(qt, star)
                && avoids_pole(qt, qs);
            tame.then_some((l, s, t))
        })?;
        patching_check(&xi, &q, &l, &s, &t)
    })
}
