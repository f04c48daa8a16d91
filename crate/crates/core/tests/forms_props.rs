mod common;

use common::*;
use proptest::prelude::*;
use twistor_core::field::{Domain, Field};
use twistor_core::forms::*;
use twistor_core::{Biquaternion, QOneForm, QTwoForm};

fn one_form() -> impl Strategy<Value = QOneForm> {
    (proptest::array::uniform4(biquaternion()), proptest::array::uniform4(biquaternion()))
        .prop_map(|(hol, anti)| QOneForm { hol, anti })
}

fn hol_form() -> impl Strategy<Value = QOneForm> {
    proptest::array::uniform4(biquaternion()).prop_map(QOneForm::holomorphic)
}

fn two_form() -> impl Strategy<Value = QTwoForm> {
    proptest::array::uniform6(biquaternion()).prop_map(|c| QTwoForm { c })
}

fn real_point() -> impl Strategy<Value = Biquaternion> {
    quaternion().prop_map(Biquaternion::from)
}

/// `a q b + q c q + (q + d)⁻¹`.
fn test_field(a: Biquaternion, b: Biquaternion, c: Biquaternion, d: Biquaternion) -> Field {
    let q = Field::identity(Domain::Real);
    let k = Field::constant;
    let poly = &(&(&k(a) * &q) * &k(b)) + &(&(&q * &k(c)) * &q);
    &poly + &(&q + &k(d)).inv()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn differential_matches_directional_derivative(
        a in biquaternion(), b in biquaternion(), c in biquaternion(), d in biquaternion(),
        p in real_point(), v in real_point(),
    ) {
        let pd = p + d;
        prop_assume!(pd.reduced_norm().norm() > 0.1);
        let f = test_field(a, b, c, d);
        let w = differential(&f, p).unwrap();
        let h = 1e-5;
        let fd = (f.eval(p + v * h).unwrap() - f.eval(p - v * h).unwrap()) * (0.5 / h);
        let got = w.contract(v);
        prop_assert!(got.max_abs_diff(fd) < 1e-6 * (1.0 + fd.norm()), "{got} vs {fd}");

        // Polynomial part: d(aqb + qcq)(v) = a v b + v c p + p c v exactly.
        let poly = &(&(&Field::constant(a) * &Field::identity(Domain::Real)) * &Field::constant(b))
            + &(&(&Field::identity(Domain::Real) * &Field::constant(c)) * &Field::identity(Domain::Real));
        let exact = a * v * b + v * c * p + p * c * v;
        prop_assert!(differential(&poly, p).unwrap().contract(v).max_abs_diff(exact) < 1e-12);
    }

    #[test]
    fn quaternionic_reconstruction(a in biquaternion(), b in biquaternion(), c in biquaternion(), p in real_point(), v in real_point()) {
        let f = test_field(a, b, c, Biquaternion::real(5.0));
        let j = f.jet(p).unwrap();
        let e = Biquaternion::BASIS;
        let rebuilt: Biquaternion = (0..4)
            .map(|n| (e[n] * v.qconj() + v * e[n].qconj()) * j.d[n] * 0.5)
            .sum();
        prop_assert!(rebuilt.max_abs_diff(differential(&f, p).unwrap().contract(v)) < 1e-11);
    }

    #[test]
    fn useful_wedge_identity(w in biquaternion()) {
        let dq = QOneForm::dq();
        let dqb = QOneForm::dqbar();
        let lhs = wedge(&dq, &dq.left_mul(w));
        let wb = w.qconj();
        let rhs = (wedge(&dqb, &dq).left_mul(wb) + wedge(&dq, &dqb).right_mul(wb)).scale(-0.5);
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn hodge_star_is_an_involution(f in two_form()) {
        prop_assert!((hodge_star(&hodge_star(&f)) - f).norm() < 1e-14);
        let (p, m) = sd_split(&f);
        prop_assert!((p + m - f).norm() < 1e-14);
        prop_assert!((hodge_star(&p) - p).norm() < 1e-14);
        prop_assert!((hodge_star(&m) + m).norm() < 1e-14);
    }

    #[test]
    fn two_form_contraction_is_antisymmetric(f in two_form(), u in biquaternion(), v in biquaternion()) {
        prop_assert!((f.contract(u, v) + f.contract(v, u)).norm() < 1e-12);
    }

    #[test]
    fn projector_identities(eta in unit_imaginary(), x in biquaternion()) {
        let pm = proj_pm(eta, Sign::Minus, x, Side::Left);
        prop_assert!(proj_pm(eta, Sign::Plus, pm, Side::Left).norm() < 1e-12);
        let pr = proj_pm(eta, Sign::Minus, x, Side::Right);
        prop_assert!(proj_pm(eta, Sign::Plus, pr, Side::Right).norm() < 1e-12);
        for s in [Sign::Plus, Sign::Minus] {
            let once = proj_pm(eta, s, x, Side::Left);
            let twice = proj_pm(eta, s, once, Side::Left);
            prop_assert!(twice.max_abs_diff(once * Biquaternion::CI * 2.0) < 1e-12);
        }
    }

    #[test]
    fn ir_is_precomposition_with_eta(eta in unit_imaginary(), w in one_form(), v in biquaternion()) {
        let lhs = apply_ir(eta, &w).contract(v);
        prop_assert!(lhs.max_abs_diff(w.contract(eta.bq() * v)) < 1e-12);
        prop_assert!((apply_ir(eta, &apply_ir(eta, &w)) + w).norm() < 1e-12);
    }

    #[test]
    fn contraction_and_operator_conditions_agree(w in hol_form(), eta in unit_imaginary()) {
        prop_assert!(is_holomorphic(&w));
        prop_assert!(lemma1_defect(&w, eta) < 1e-10 * (1.0 + w.norm()));
        let (rc, ro) = lemma1_check(&QOneForm::dq().right_mul(w.hol[0]), eta);
        prop_assert!(rc.max(ro) < 1e-10 * (1.0 + w.norm()));
    }

    #[test]
    fn antilinear_part_is_detected(w in one_form()) {
        prop_assume!(w.anti_norm() > 0.1);
        let worst = (0..20)
            .map(|k| {
                let t = k as f64 * 0.7;
                twistor_core::UnitImaginary::new(t.cos(), t.sin(), 0.3 * t.cos() + 0.2).unwrap()
            })
            .map(|eta| lemma1_defect(&w, eta))
            .fold(0.0, f64::max);
        prop_assert!(worst > 1e-3 * w.norm());
    }

    #[test]
    fn commutator_form_lies_in_invariant_subspace(xi in biquaternion(), eta in unit_imaginary()) {
        let w = (QOneForm::dq().right_mul(xi) - QOneForm::dqbar().left_mul(xi.qconj())).scale(0.5);
        let comm = w.left_mul(eta.bq()) - w.right_mul(eta.bq());
        let r = script_i(eta, &comm.left_mul(pi(Sign::Plus, eta.bq())));
        prop_assert!(r.norm() < 1e-10);
    }
}
