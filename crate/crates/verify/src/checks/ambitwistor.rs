use rand_chacha::ChaCha8Rng;
use twistor_core::ambitwistor::*;
use twistor_core::forms::{pi, Sign};
use twistor_core::{Biquaternion, Quaternion, Result, UnitImaginary};

use super::{draw, Bound, Check, Ctx};
use crate::sample::{biquaternion, complex, unit_imaginary};

pub const CHECKS: &[Check] = &[
    Check {
        id: "ambitwistor.nullity",
        anchor: "π⁻_{η₁} δ π⁻_{η₂} is a null direction",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: nullity,
    },
    Check {
        id: "ambitwistor.alpha_equivalence",
        anchor: "q + π⁻_η δ lies on the α-plane (β-plane for right factors) through q",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 500,
        run: alpha_equivalence,
    },
    Check {
        id: "ambitwistor.incidence",
        anchor: "intersecting α- and β-planes meet in a null line",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 200,
        run: incidence,
    },
    Check {
        id: "ambitwistor.chart_membership",
        anchor: "chart coordinates of a null line lie on the chart hyperplane",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 100,
        run: chart_membership,
    },
    Check {
        id: "ambitwistor.chart_consistency",
        anchor: "two chart coordinates of one line differ by a null direction of that line",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 100,
        run: chart_consistency,
    },
    Check {
        id: "ambitwistor.translation",
        anchor: "null lines are invariant under q ↦ q + π⁻_{η₁} δ π⁻_{η₂}",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 500,
        run: translation,
    },
    Check {
        id: "ambitwistor.klein",
        anchor: "α-plane meets the two Klein hyperplanes",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 200,
        run: klein,
    },
    Check {
        id: "ambitwistor.minkowski_round_trip",
        anchor: "light-cone coordinates round trip",
        suites: &["ambitwistor"],
        bound: Bound::Upper,
        tolerance: 1e-14,
        samples: 1000,
        run: minkowski_round_trip,
    },
];

fn m(eta: UnitImaginary) -> Biquaternion {
    pi(Sign::Minus, eta.bq())
}

fn bq(rng: &mut ChaCha8Rng) -> Biquaternion {
    biquaternion(rng, 1.0, 1.0)
}

fn nullity(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (e1, e2, d) = (unit_imaginary(rng), unit_imaginary(rng), bq(rng));
        let v = m(e1) * d * m(e2);
        let r = null_residual(v);
        Ok(if is_null(v) { r } else { r.max(1.0) })
    })
}

fn alpha_equivalence(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (c, eta, d) = (bq(rng), unit_imaginary(rng), bq(rng));
        let a = AlphaPlane { c, eta };
        let b = BetaPlane { c, eta };
        let (qa, qb) = (c + m(eta) * d, c + d * m(eta));
        if !alpha_contains(&a, qa) || !beta_contains(&b, qb) {
            return Ok(1.0);
        }
        Ok(a.residual(qa).max(b.residual(qb)))
    })
}

fn incidence(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (c, e1, e2, d, g) = (bq(rng), unit_imaginary(rng), unit_imaginary(rng), bq(rng), bq(rng));
        let a = AlphaPlane { c, eta: e1 };
        let b = BetaPlane { c: c + m(e1) * d + g * m(e2), eta: e2 };
        if !planes_intersect(&a, &b) {
            return Ok(intersection_residual(&a, &b).max(1.0));
        }
        let l = null_line_from(&a, &b)?;
        let q = l.point(complex(rng, 1.0));
        Ok(a.residual(l.p).max(b.residual(l.p)).max(a.residual(q)).max(b.residual(q)))
    })
}

/// A line with two origin hyperplanes in general position to it.
fn charted(rng: &mut ChaCha8Rng) -> Result<(NullLine, NullHyperplane, NullHyperplane)> {
    let gap = |a: UnitImaginary, b: UnitImaginary| (a.quaternion() - b.quaternion()).norm();
    draw(rng, |r| {
        let e: [UnitImaginary; 6] = std::array::from_fn(|_| unit_imaginary(r));
        let general = gap(e[0], e[2]) > 0.1 && gap(e[1], e[3]) > 0.1 && gap(e[0], e[4]) > 0.1 && gap(e[1], e[5]) > 0.1;
        general.then(|| {
            (
                NullLine::new(bq(r), e[0], e[1]),
                NullHyperplane { q0: Biquaternion::ZERO, eta1: e[2], eta2: e[3] },
                NullHyperplane { q0: Biquaternion::ZERO, eta1: e[4], eta2: e[5] },
            )
        })
    })
}

fn chart_membership(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (l, s, t) = charted(rng)?;
        Ok(s.residual(chart_coords(&s, &l)?).max(t.residual(chart_coords(&t, &l)?)))
    })
}

fn chart_consistency(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (l, s, t) = charted(rng)?;
        let (qs, qt) = (chart_coords(&s, &l)?, chart_coords(&t, &l)?);
        Ok(l.residual(qs).max(l.residual(qt)).max(null_residual(qs - qt)))
    })
}

fn translation(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let l = NullLine::new(bq(rng), unit_imaginary(rng), unit_imaginary(rng));
        let shifted = l.p + m(l.eta1) * bq(rng) * m(l.eta2);
        let along = l.point(complex(rng, 2.0));
        if !l.contains(shifted) || !l.contains(along) {
            return Ok(1.0);
        }
        Ok(l.residual(shifted).max(l.residual(along)))
    })
}

fn klein(ctx: &Ctx) -> Result<f64> {
    let away = |eta: &UnitImaginary| {
        let q = eta.quaternion();
        (q - Quaternion::I).norm() > 0.1 && (q + Quaternion::I).norm() > 0.1
    };
    ctx.max_over(|rng| {
        let eta = draw(rng, |r| Some(unit_imaginary(r)).filter(away))?;
        let z = AlphaPlane { c: bq(rng), eta };
        let (qp, qm) = klein_intersections(&z)?;
        let hp = (pi(Sign::Plus, Biquaternion::I) * qp).norm() / (1.0 + qp.norm());
        let hm = (pi(Sign::Minus, Biquaternion::I) * qm).norm() / (1.0 + qm.norm());
        Ok(z.residual(qp).max(z.residual(qm)).max(hp).max(hm))
    })
}

fn minkowski_round_trip(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let q = bq(rng);
        Ok(mink_unconvert(&mink_convert(q)).max_abs_diff(q))
    })
}
