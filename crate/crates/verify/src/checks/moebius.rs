use num_complex::Complex64;
use twistor_core::field::{Domain, Field};
use twistor_core::forms::differential;
use twistor_core::moebius::*;
use twistor_core::twistor::eta_stereo;
use twistor_core::{Biquaternion, Error, Result};

use super::{draw, worst, Bound, Check, Ctx};
use crate::sample::{biquaternion, cp1, gl2, quaternion, uniform};

pub const CHECKS: &[Check] = &[
    Check {
        id: "moebius.cp1_square",
        anchor: "sphere Möbius map from GL(2,ℂ) commutes with stereographic η",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 500,
        run: cp1_square,
    },
    Check {
        id: "moebius.lorentz_interval",
        anchor: "φ q (φ̄)* preserves the Minkowski interval (relative)",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-12,
        samples: 1000,
        run: lorentz_interval,
    },
    Check {
        id: "moebius.generator_imaginary",
        anchor: "generator banks of a normalized path are imaginary",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 200,
        run: generator_imaginary,
    },
    Check {
        id: "moebius.composition_closure",
        anchor: "matrix product of coefficients composes the maps (relative)",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-10,
        samples: 100,
        run: composition_closure,
    },
    Check {
        id: "moebius.factorization",
        anchor: "dκ = χ dq ψ for Möbius maps (relative)",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-9,
        samples: 50,
        run: factorization,
    },
    Check {
        id: "moebius.twisted_holomorphic",
        anchor: "factorized Möbius maps satisfy the twisted holomorphicity conditions",
        suites: &["moebius"],
        bound: Bound::Upper,
        tolerance: 1e-8,
        samples: 50,
        run: twisted_holomorphic,
    },
];

fn cp1_square(ctx: &Ctx) -> Result<f64> {
    let maps: Vec<[Complex64; 4]> = {
        let mut rng = ctx.rng(usize::MAX);
        (0..50).map(|_| gl2(&mut rng)).collect()
    };
    ctx.max_over(|rng| {
        let (z1, z2) = cp1(rng);
        let eta = eta_stereo(z1, z2)?;
        let mut r: f64 = 0.0;
        for &[a, b, c, d] in &maps {
            let lhs = mob_apply(&mob_from_cp1(a, b, c, d)?, eta)?;
            let rhs = eta_stereo(a * z1 + b * z2, c * z1 + d * z2)?;
            r = worst(r, lhs.quaternion().max_abs_diff(rhs.quaternion()));
        }
        Ok(r)
    })
}

fn lorentz_interval(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let x = draw(rng, |r| Some(biquaternion(r, 1.0, 1.0)).filter(|x| x.reduced_norm().norm() > 1e-2))?;
        let phi = LorentzBiquaternion::new(x * (Complex64::new(1.0, 0.0) / x.reduced_norm().sqrt()))?;
        let qm = MinkowskiQuaternion::new(
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
        );
        let raw = phi.value() * qm.to_bq() * phi.value().qconj().cconj();
        let out = lorentz_apply(phi, qm);
        let scale = 1.0 + raw.norm_sq();
        Ok(((out.interval() - qm.interval()).abs() / scale).max(MinkowskiQuaternion::shape_defect(raw) / scale))
    })
}

fn generator_imaginary(ctx: &Ctx) -> Result<f64> {
    let q = Field::identity(Domain::Real);
    ctx.max_over(|rng| {
        draw(rng, |r| {
            let (a, b) = (biquaternion(r, 1.0, 1.0), biquaternion(r, 1.0, 1.0));
            let (p, v) = (quaternion(r, 1.0).into(), quaternion(r, 1.0).into());
            let chi = &q.right_mul(a) + &Field::constant(b);
            if chi.eval(p).ok()?.reduced_norm().norm() < 1e-2 {
                return None;
            }
            match mob_generator(&normalized_phi(&chi), p, v) {
                Ok((g, d)) => Some(g.w.abs().max(d.w.abs()) / (1.0 + g.norm() + d.norm())),
                Err(_) => None,
            }
        })
    })
}

fn composition_closure(ctx: &Ctx) -> Result<f64> {
    let big = |m: &BqMoebius, q: Biquaternion| (m.gamma * q + m.delta).reduced_norm().norm() > 1e-2;
    ctx.max_over(|rng| {
        let (m1, m2, q) = draw(rng, |r| {
            let c: [Biquaternion; 8] = std::array::from_fn(|_| biquaternion(r, 1.0, 1.0));
            let m1 = BqMoebius::new(c[0], c[1], c[2], c[3]);
            let m2 = BqMoebius::new(c[4], c[5], c[6], c[7]);
            let q = biquaternion(r, 1.0, 1.0);
            let inner = m2.apply(q).ok()?;
            (big(&m2, q) && big(&m1, inner) && big(&m1.compose(&m2), q)).then_some((m1, m2, q))
        })?;
        let lhs = bq_mob_apply(&m1, bq_mob_apply(&m2, q)?)?;
        let rhs = bq_mob_apply(&m1.compose(&m2), q)?;
        Ok(lhs.max_abs_diff(rhs) / (1.0 + lhs.norm()).powi(2))
    })
}

/// A real Möbius map with its factorization.
fn factorized(rng: &mut rand_chacha::ChaCha8Rng) -> Result<(BqMoebius, Factorization)> {
    draw(rng, |r| {
        let c: [Biquaternion; 4] = std::array::from_fn(|_| quaternion(r, 1.0).into());
        let m = BqMoebius::new(c[0], c[1], c[2], c[3]);
        let fac = bq_mob_factor(&m, Domain::Real).ok()?;
        Some((m, fac))
    })
}

/// `(χ(p), ψ(p), p)` at a point away from the pole of the map.
fn regular_point(
    rng: &mut rand_chacha::ChaCha8Rng,
    fac: &Factorization,
) -> Result<(Biquaternion, Biquaternion, Biquaternion)> {
    draw(rng, |r| {
        let p: Biquaternion = quaternion(r, 1.0).into();
        let (chi, psi) = (fac.chi.eval(p).ok()?, fac.psi.eval(p).ok()?);
        (chi.norm() < 1e3 && psi.norm() < 1e3).then_some((chi, psi, p))
    })
}

fn factorization(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (m, fac) = factorized(rng)?;
        let kappa = m.field(Domain::Real);
        let mut r: f64 = 0.0;
        for _ in 0..20 {
            let (chi, psi, p) = regular_point(rng, &fac)?;
            let dk = differential(&kappa, p)?;
            for e in Biquaternion::BASIS {
                let lhs = dk.contract(e);
                r = worst(r, lhs.max_abs_diff(chi * e * psi) / (1.0 + lhs.norm()));
            }
        }
        Ok(r)
    })
}

fn twisted_holomorphic(ctx: &Ctx) -> Result<f64> {
    ctx.max_over(|rng| {
        let (m, fac) = factorized(rng)?;
        let kappa = m.field(Domain::Real);
        let phi = normalized_phi(&fac.chi);
        let mut r: f64 = 0.0;
        for _ in 0..20 {
            let (chi, psi, p) = regular_point(rng, &fac)?;
            let (r1, r2) = match theorem1_residual(&kappa, &phi, p) {
                Err(Error::BranchFailure) => continue,
                other => other?,
            };
            r = worst(r, (r1 / (1.0 + chi.norm() * psi.norm())).max(r2 / (1.0 + chi.norm())));
        }
        Ok(r)
    })
}
