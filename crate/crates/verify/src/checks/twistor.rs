use rand_chacha::ChaCha8Rng;
use twistor_core::twistor::*;
use twistor_core::{Result, UnitImaginary};

use super::{draw, worst, Bound, Check, Ctx};
use crate::sample::{complex, cp1, gl2};

pub const CHECKS: &[Check] = &[
    Check {
        id: "twistor.chart_change",
        anchor: "chart change on CP³ then trivialization equals the transition map",
        suites: &["twistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 200,
        run: chart_change,
    },
    Check {
        id: "twistor.fibre_structure",
        anchor: "induced complex structure on the fibre is left multiplication by η",
        suites: &["twistor"],
        bound: Bound::Upper,
        tolerance: 1e-8,
        samples: 200,
        run: fibre_structure,
    },
    Check {
        id: "twistor.eta_rays",
        anchor: "η(z₁, z₂) is constant on complex rays",
        suites: &["twistor"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 500,
        run: eta_rays,
    },
    Check {
        id: "twistor.sphere_data",
        anchor: "sphere data of an embedded line reproduces the composed map",
        suites: &["twistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 20,
        run: sphere_data,
    },
    Check {
        id: "twistor.fibration",
        anchor: "fibration to ℍP¹ matches the trivialization and is projective",
        suites: &["twistor"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 100,
        run: fibration,
    },
];

fn gap(a: UnitImaginary, b: UnitImaginary) -> f64 {
    a.quaternion().max_abs_diff(b.quaternion())
}

fn chart_point(rng: &mut ChaCha8Rng) -> Result<CP3Point> {
    let z = draw(rng, |r| {
        let z: [_; 4] = std::array::from_fn(|_| complex(r, 1.0));
        (z[0].norm() > 1e-2 && z[1].norm() > 1e-2 && z[3].norm() > 1e-2).then_some(z)
    })?;
    CP3Point::new(z)
}

fn chart_change(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (p, q, eta) = draw(rng, |r| {
            let p = chart_point(r).ok()?;
            let (q, eta) = trivialize_phi(&p).ok()?;
            (q.norm() > 1e-3).then_some((p, q, eta))
        })?;
        let (q2, eta2) = transition_tau(q, eta)?;
        let (q3, eta3) = trivialize_phi(&p.swap_charts())?;
        Ok((q2.max_abs_diff(q3) / (1.0 + q2.norm())).max(gap(eta2, eta3)))
    })
}

fn fibre_structure(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| fiber_structure_residual(complex(rng, 2.0)))
}

fn eta_rays(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (z1, z2) = cp1(rng);
        let l = draw(rng, |r| Some(complex(r, 2.0)).filter(|l| l.norm() > 1e-2))?;
        Ok(gap(eta_stereo(z1, z2)?, eta_stereo(l * z1, l * z2)?))
    })
}

fn sphere_data(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let e = draw(rng, |r| LineEmbedding::new(gl2(r), gl2(r)).ok())?;
        let s = embed_line(&e)?;
        let mut res: f64 = 0.0;
        for _ in 0..50 {
            let (z1, z2, q, eta) = draw(rng, |r| {
                let (z1, z2) = cp1(r);
                let (q, eta) = e.compose_direct(z1, z2).ok()?;
                (q.norm() < 1e3).then_some((z1, z2, q, eta))
            })?;
            let (q2, eta2) = s.evaluate(eta_stereo(z1, z2)?)?;
            res = worst(res, (q.max_abs_diff(q2) / (1.0 + q.norm())).max(gap(eta, eta2)));
        }
        Ok(res)
    })
}

fn fibration(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let p = chart_point(rng)?;
        let l = draw(rng, |r| Some(complex(r, 2.0)).filter(|l| l.norm() > 1e-2))?;
        let (q, _) = trivialize_phi(&p)?;
        let h = fibration_pi(&p);
        if !h.equivalent(&fibration_pi(&p.scale(l))) {
            return Ok(1.0);
        }
        Ok(h.chart()?.max_abs_diff(q) / (1.0 + q.norm()))
    })
}
