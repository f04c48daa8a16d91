mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use twistor_core::ambitwistor::NullLine;
use twistor_core::fct::*;
use twistor_core::field::{Domain, Field};
use twistor_core::forms::{pi, sd_split, wedge, Sign};
use twistor_core::{Biquaternion, QOneForm};

fn small_bq() -> impl Strategy<Value = Biquaternion> {
    (quaternion(), quaternion()).prop_map(|(a, b)| Biquaternion::new(a, b.scale(0.25)))
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Keeps lines whose segment `t ∈ [0, 1]` stays away from `1 + q q̄ = 0`.
fn tame(l: &NullLine) -> bool {
    (0..=20).all(|k| (one() + l.point(Complex64::new(k as f64 / 20.0, 0.0)).reduced_norm()).norm() >= 0.5)
}

fn line() -> impl Strategy<Value = NullLine> {
    (small_bq(), unit_imaginary(), unit_imaginary())
        .prop_map(|(p, a, b)| NullLine::new(p * 0.5, a, b))
        .prop_filter("segment avoids the pole", tame)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bpst_curvature_and_duality(p in small_bq()) {
        let s = one() + p.reduced_norm();
        prop_assume!(s.norm() > 0.3);
        let k = one() / (s * s);
        let xi = XiField::bpst();
        let (l, r) = curvature(&xi, p).unwrap();
        let wa = wedge(&QOneForm::dq(), &QOneForm::dqbar());
        let wb = wedge(&QOneForm::dqbar(), &QOneForm::dq());
        prop_assert!((l - wa.scale_c(k)).norm() < 1e-9);
        prop_assert!((r + wb.scale_c(k)).norm() < 1e-9);
        prop_assert!(sd_split(&l).1.norm() < 1e-9);
        prop_assert!(sd_split(&r).0.norm() < 1e-9);
        let (l2, r2) = curvature_first_principles(&xi, p).unwrap();
        prop_assert!((l - l2).norm() < 1e-9 && (r - r2).norm() < 1e-9);
        let (c1, c2) = xi_conditions_residual(&xi, p).unwrap();
        prop_assert!(c1 < 1e-9 && c2 < 1e-9);
        prop_assert!(fct_residual(&xi, &Field::identity(Domain::Complex), p).unwrap() < 1e-9);
    }

    #[test]
    fn curvatures_vanish_on_planes(p in small_bq(), e1 in unit_imaginary(), e2 in unit_imaginary(), d in proptest::array::uniform4(biquaternion())) {
        prop_assume!((one() + p.reduced_norm()).norm() > 0.3);
        let (l, r) = curvature(&XiField::bpst(), p).unwrap();
        let (m1, m2) = (pi(Sign::Minus, e1.bq()), pi(Sign::Minus, e2.bq()));
        // Two directions of one null line.
        let (u, v) = (m1 * d[0] * m2, m1 * d[1] * m2);
        prop_assert!(l.contract(u, v).norm() < 1e-10 * (1.0 + u.norm() * v.norm()));
        prop_assert!(r.contract(u, v).norm() < 1e-10 * (1.0 + u.norm() * v.norm()));
        // Ω_ℓ vanishes on β-planes, Ω_r on α-planes.
        let (b1, b2) = (d[2] * m2, d[3] * m2);
        prop_assert!(l.contract(b1, b2).norm() < 1e-10 * (1.0 + b1.norm() * b2.norm()));
        let (a1, a2) = (m1 * d[2], m1 * d[3]);
        prop_assert!(r.contract(a1, a2).norm() < 1e-10 * (1.0 + a1.norm() * a2.norm()));
    }

    #[test]
    fn s2_characterization(g in biquaternion(), lam in complex()) {
        let dq = QOneForm::dq();
        let r = dq.right_mul(g) + QOneForm::dqbar().left_mul(g.qconj());
        let lhs = wedge(&r, &dq).scale_c(lam);
        let gb = g.qconj();
        let wa = wedge(&dq, &QOneForm::dqbar());
        let wb = wedge(&QOneForm::dqbar(), &dq);
        let rhs = (wb.left_mul(gb) - wa.right_mul(gb)).scale(0.5).scale_c(lam);
        prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
    }

    #[test]
    fn instanton_family_covariance(c in quaternion(), rho in 0.3..3.0f64, p in quaternion()) {
        let cb: Biquaternion = c.into();
        let xi = XiField::instanton(cb, rho);
        let f = (&Field::identity(Domain::Complex) - &Field::constant(cb)).scale(Complex64::new(1.0 / rho, 0.0));
        prop_assert!(fct_residual(&xi, &f, p.into()).unwrap() < 1e-8);
        let (c1, c2) = xi_conditions_residual(&xi, p.into()).unwrap();
        prop_assert!(c1 < 1e-9 && c2 < 1e-9);
    }

    #[test]
    fn sigma_bar_is_idempotent(h in proptest::array::uniform4(biquaternion()), a in proptest::array::uniform4(biquaternion()), lam in complex()) {
        let w = QOneForm { hol: h, anti: a };
        let s = sigma_bar(&w);
        prop_assert!((sigma_bar(&s) - s).norm() < 1e-12);
        let k = QOneForm::dq().right_mul(Biquaternion::scalar(lam));
        prop_assert!(sigma_bar(&k).norm() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn lambda_matches_closed_form(l in line()) {
        for (t, lam) in lambda_transport(&Field::identity(Domain::Complex), &l, 0.0, 1.0, 512).unwrap() {
            let s = l.point(Complex64::new(t, 0.0)).reduced_norm();
            prop_assert!((lam - (one() - s) / (one() + s)).norm() < 1e-8);
        }
    }

    #[test]
    fn ambimap_on_generic_lines(l in line()) {
        let d = ambimap_eval(&XiField::bpst(), &Field::identity(Domain::Complex), &l, 6).unwrap();
        prop_assert!(d.constancy < 1e-8 && d.collinearity < 1e-8);
    }

    #[test]
    fn transport_is_parametrization_independent(l in line(), s in 0.5..2.0f64) {
        let xi = XiField::bpst();
        let a = transport(&xi, &l, one(), 0.0, 1.0, 1024).unwrap();
        let b = transport(&xi, &l, Complex64::new(s, 0.0), 0.0, 1.0 / s, 1024).unwrap();
        prop_assert!(a.chi.max_abs_diff(b.chi) < 1e-8 && a.psi.max_abs_diff(b.psi) < 1e-8);
    }
}
