//! Frustrated conformal transformations: the connection
//! `∇f = df + dq ξ f + f ξ dq`, the symbol `σ̄`, curvature of the left and
//! right connections, transport of `χ, ψ, λ` along null lines and the data
//! of the induced map on null lines.

use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::ambitwistor::{chart_coords, null_residual, NullHyperplane, NullLine, MEMBERSHIP_TOL};
use crate::error::{Error, Result};
use crate::field::{Domain, Field};
use crate::forms::{differential, pi, wedge, QOneForm, QTwoForm, Sign};
use crate::jet::Jet;
use crate::quat::{Biquaternion, Quaternion};

/// Default number of RK4 steps per unit of path parameter.
pub const DEFAULT_STEPS_PER_UNIT: usize = 1024;

/// Tolerance of the ambitwistor map checks; `NotASolution` is raised at ten
/// times this value.
pub const AMBIMAP_TOL: f64 = 1e-8;

/// A gauge potential `ξ`, giving `A = dq ξ` and `B = ξ dq`.
#[derive(Clone, Debug)]
pub struct XiField(Field);

impl XiField {
    pub fn new(f: Field) -> Self {
        XiField(f)
    }

    pub fn zero() -> Self {
        XiField(Field::constant(Biquaternion::ZERO))
    }

    pub fn constant(c: Biquaternion) -> Self {
        XiField(Field::constant(c))
    }

    /// `ξ = −q̄ / (1 + q q̄)`, continued to ℍ_ℂ with `q q̄` complex.
    pub fn bpst() -> Self {
        XiField::instanton(Biquaternion::ZERO, 1.0)
    }

    /// `ξ = −(q − c)‾ / (ρ² + (q − c)(q − c)‾)`.
    pub fn instanton(c: Biquaternion, rho: f64) -> Self {
        let x = &Field::identity(Domain::Complex) - &Field::constant(c);
        let xb = x.qconj();
        let den = &Field::constant(Biquaternion::real(rho * rho)) + &(&x * &xb);
        XiField(-(&xb * &den.inv()))
    }

    pub fn field(&self) -> &Field {
        &self.0
    }

    pub fn eval(&self, p: Biquaternion) -> Result<Biquaternion> {
        self.0.eval(p)
    }

    pub fn jet(&self, p: Biquaternion) -> Result<Jet> {
        self.0.jet(p)
    }
}

/// `−q̄ / (1 + |q|²)` on the real slice.
pub fn bpst_xi(q: Quaternion) -> Quaternion {
    q.conj().scale(-1.0 / (1.0 + q.norm_sq()))
}

/// `ξ ↦ f`: a candidate solution of `σ̄∇f = 0`.
#[derive(Clone, Debug)]
pub struct FctCandidate {
    pub f: Field,
    pub xi: XiField,
}

impl FctCandidate {
    pub fn residual(&self, p: Biquaternion) -> Result<f64> {
        fct_residual(&self.xi, &self.f, p)
    }
}

/// `∇f = df + dq ξ f + f ξ dq` at `p`.
pub fn nabla_apply(xi: &XiField, f: &Field, p: Biquaternion) -> Result<QOneForm> {
    let df = differential(f, p)?;
    let x = xi.eval(p)?;
    let fv = f.eval(p)?;
    let (xf, fx) = (x * fv, fv * x);
    let mut w = df;
    for (m, e) in Biquaternion::BASIS.iter().enumerate() {
        w.hol[m] += *e * xf + fx * *e;
    }
    Ok(w)
}

/// Complex coefficient of the orthogonal projection of `ω` onto `ℂ·dq`.
pub fn kernel_coefficient(w: &QOneForm) -> Complex64 {
    (0..4).map(|m| w.hol[m].coeff(m)).sum::<Complex64>() / 4.0
}

/// `ω − λ* dq`, the component orthogonal to the complex line of `dq`.
pub fn sigma_bar(w: &QOneForm) -> QOneForm {
    *w - QOneForm::dq().right_mul(Biquaternion::scalar(kernel_coefficient(w)))
}

/// `‖σ̄ ∇f‖` at `p`.
pub fn fct_residual(xi: &XiField, f: &Field, p: Biquaternion) -> Result<f64> {
    Ok(sigma_bar(&nabla_apply(xi, f, p)?).norm())
}

/// Whether `f(p)` has vanishing imaginary (vector) part, where the duality
/// argument for the curvature does not apply.
pub fn f_is_real(f: &Field, p: Biquaternion) -> Result<bool> {
    Ok(f.eval(p)?.vector_part().norm() < 1e-10)
}

fn w_a() -> QTwoForm {
    wedge(&QOneForm::dq(), &QOneForm::dqbar())
}

fn w_b() -> QTwoForm {
    wedge(&QOneForm::dqbar(), &QOneForm::dq())
}

/// `½ Σ_ν e_ν W ∂_ν ξ`.
fn del_qbar_through(w: &QTwoForm, j: &Jet) -> QTwoForm {
    (0..4).map(|n| w.left_mul(Biquaternion::BASIS[n]).right_mul(j.d[n])).sum::<QTwoForm>().scale(0.5)
}

/// `½ Σ_ν ∂_ν ξ W e_ν`.
fn del_qbar_from_right(w: &QTwoForm, j: &Jet) -> QTwoForm {
    (0..4).map(|n| w.left_mul(j.d[n]).right_mul(Biquaternion::BASIS[n])).sum::<QTwoForm>().scale(0.5)
}

fn dqbar_xi(j: &Jet) -> Biquaternion {
    (0..4).map(|n| Biquaternion::BASIS[n] * j.d[n]).sum::<Biquaternion>() * 0.5
}

/// `(∂_q̄ − ξ̄) dq̄∧dq ξ`.
fn xi_two_form(j: &Jet) -> QTwoForm {
    let wb = w_b();
    del_qbar_through(&wb, j) - wb.left_mul(j.v.qconj()).right_mul(j.v)
}

/// `(‖(∂_q̄ − ξ̄) dq̄∧dq ξ‖, ‖Im ∂_q̄ ξ‖)` at `p`.
pub fn xi_conditions_residual(xi: &XiField, p: Biquaternion) -> Result<(f64, f64)> {
    let j = xi.jet(p)?;
    Ok((xi_two_form(&j).norm(), dqbar_xi(&j).vector_part().norm()))
}

/// `(Ω_ℓ, Ω_r)` from the closed formulas in `ξ` and its derivatives.
pub fn curvature(xi: &XiField, p: Biquaternion) -> Result<(QTwoForm, QTwoForm)> {
    let j = xi.jet(p)?;
    let (x, xb) = (j.v, j.v.qconj());
    let (wa, wb) = (w_a(), w_b());
    let left = (xi_two_form(&j) - wa.right_mul(dqbar_xi(&j) + xb * x)).scale(0.5);
    let xi_dqbar = (0..4).map(|n| j.d[n] * Biquaternion::BASIS[n]).sum::<Biquaternion>() * 0.5;
    let first = wb.left_mul(xi_dqbar + x * xb);
    let second = del_qbar_from_right(&wa, &j) - wa.left_mul(x).right_mul(xb);
    Ok((left, (first - second).scale(0.5)))
}

/// `(dA + A∧A, dB − B∧B)` with `A_μ = e_μ ξ`, `B_μ = ξ e_μ`.
pub fn curvature_first_principles(xi: &XiField, p: Biquaternion) -> Result<(QTwoForm, QTwoForm)> {
    let j = xi.jet(p)?;
    let e = Biquaternion::BASIS;
    let a = QOneForm::dq().right_mul(j.v);
    let b = QOneForm::dq().left_mul(j.v);
    let da = QTwoForm::from_fn(|m, n| e[n] * j.d[m] - e[m] * j.d[n]);
    let db = QTwoForm::from_fn(|m, n| j.d[m] * e[n] - j.d[n] * e[m]);
    Ok((da + wedge(&a, &a), db - wedge(&b, &b)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransportState {
    pub chi: Biquaternion,
    pub psi: Biquaternion,
    pub t: f64,
}

#[derive(Clone, Copy)]
struct Pair(Biquaternion, Biquaternion);

impl Add for Pair {
    type Output = Pair;
    fn add(self, o: Pair) -> Pair {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}

impl Mul<f64> for Pair {
    type Output = Pair;
    fn mul(self, s: f64) -> Pair {
        Pair(self.0 * s, self.1 * s)
    }
}

/// Classical fixed-step RK4; `visit` sees the state after every step.
fn rk4<S>(
    y0: S,
    t0: f64,
    t1: f64,
    steps: usize,
    f: impl Fn(f64, S) -> Result<S>,
    mut visit: impl FnMut(f64, S),
) -> Result<S>
where
    S: Copy + Add<Output = S> + Mul<f64, Output = S>,
{
    let steps = steps.max(1);
    let h = (t1 - t0) / steps as f64;
    let mut y = y0;
    for k in 0..steps {
        let t = t0 + h * k as f64;
        let k1 = f(t, y)?;
        let k2 = f(t + 0.5 * h, y + k1 * (0.5 * h))?;
        let k3 = f(t + 0.5 * h, y + k2 * (0.5 * h))?;
        let k4 = f(t + h, y + k3 * h)?;
        y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        visit(t + h, y);
    }
    Ok(y)
}

fn xi_on_path(xi: &XiField, q: Biquaternion) -> Result<Biquaternion> {
    match xi.eval(q) {
        Ok(x) if x.norm() < 1e8 => Ok(x),
        _ => Err(Error::SingularOnPath),
    }
}

fn check_null(v: Biquaternion) -> Result<()> {
    if null_residual(v) > MEMBERSHIP_TOL {
        return Err(Error::NonNullDirection);
    }
    Ok(())
}

/// Steps for a segment of parameter length `len` at the default density.
pub fn default_steps(len: f64) -> usize {
    ((len.abs() * DEFAULT_STEPS_PER_UNIT as f64).ceil() as usize).max(16)
}

/// Integrates `χ' = χ (v ξ)`, `ψ' = (ξ v) ψ` along `q(t) = p + t v` with
/// `χ(t₀) = ψ(t₀) = 1`.
pub fn transport_segment(
    xi: &XiField,
    p: Biquaternion,
    v: Biquaternion,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<TransportState> {
    check_null(v)?;
    let rhs = |t: f64, s: Pair| -> Result<Pair> {
        let x = xi_on_path(xi, p + v * t)?;
        Ok(Pair(s.0 * (v * x), (x * v) * s.1))
    };
    let y = rk4(Pair(Biquaternion::ONE, Biquaternion::ONE), t0, t1, steps, rhs, |_, _| {})?;
    Ok(TransportState { chi: y.0, psi: y.1, t: t1 })
}

/// Transport along `l` with direction `scale · l.direction()`.
pub fn transport(
    xi: &XiField,
    l: &NullLine,
    scale: Complex64,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<TransportState> {
    transport_segment(xi, l.p, l.direction() * scale, t0, t1, steps)
}

/// Transport between two points of a null line along the straight segment.
pub fn transport_between(xi: &XiField, a: Biquaternion, b: Biquaternion) -> Result<TransportState> {
    let v = b - a;
    transport_segment(xi, a, v, 0.0, 1.0, default_steps(v.norm()))
}

/// `(ratio, error at n steps)` where ratio compares the deviation from the
/// Richardson limit at `n` and `2n` steps; fourth order gives about 16.
pub fn rk4_convergence_ratio(xi: &XiField, p: Biquaternion, v: Biquaternion, t1: f64, n: usize) -> Result<(f64, f64)> {
    let run = |k: usize| transport_segment(xi, p, v, 0.0, t1, k);
    let (a, b, c) = (run(n)?, run(2 * n)?, run(4 * n)?);
    let limit_chi = c.chi + (c.chi - b.chi) * (1.0 / 15.0);
    let limit_psi = c.psi + (c.psi - b.psi) * (1.0 / 15.0);
    let err = |s: &TransportState| (s.chi - limit_chi).norm() + (s.psi - limit_psi).norm();
    let (ea, eb) = (err(&a), err(&b));
    Ok((ea / eb, ea))
}

/// `λ(t)` along `l` for the BPST potential, from
/// `dλ/dt = −2 (v f̄ + f v̄) / (1 + q q̄)²`, started at the `dq` coefficient
/// of `∇f`.
pub fn lambda_transport(f: &Field, l: &NullLine, t0: f64, t1: f64, steps: usize) -> Result<Vec<(f64, Complex64)>> {
    let v = l.direction();
    check_null(v)?;
    let p0 = l.p + v * t0;
    let lam0 = kernel_coefficient(&nabla_apply(&XiField::bpst(), f, p0)?);
    let rhs = |t: f64, _: Complex64| -> Result<Complex64> {
        let q = l.p + v * t;
        let fv = f.eval(q).map_err(|_| Error::SingularOnPath)?;
        let den = Complex64::new(1.0, 0.0) + q.reduced_norm();
        if den.norm() < 1e-8 {
            return Err(Error::SingularOnPath);
        }
        let num = (v * fv.qconj() + fv * v.qconj()).scalar_part();
        Ok(num * -2.0 / (den * den))
    };
    let mut out = vec![(t0, lam0)];
    rk4(lam0, t0, t1, steps, rhs, |t, y| out.push((t, y)))?;
    Ok(out)
}

/// Images of a null line under the induced map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbiMapData {
    pub m1: Biquaternion,
    pub m2: Biquaternion,
    pub kappa0: Biquaternion,
    /// Largest `‖π⁺_{m_a} π⁻_{m_b}‖` (left) or `‖π⁻_{m_b} π⁺_{m_a}‖` (right).
    pub constancy: f64,
    /// Largest `‖π⁺_{m₁} Δκ‖`, `‖Δκ π⁺_{m₂}‖` over sampled image pairs.
    pub collinearity: f64,
}

/// Transports `χ, ψ` along `l` for `t ∈ [0, 1]` and checks that
/// `m₁ = χ⁻¹η₁χ`, `m₂ = ψη₂ψ⁻¹` stay in one α/β class and that the images
/// `κ = χ f ψ` lie on one null line.
pub fn ambimap_eval(xi: &XiField, f: &Field, l: &NullLine, samples: usize) -> Result<AmbiMapData> {
    let samples = samples.max(2);
    let v = l.direction();
    let (e1, e2) = (l.eta1.bq(), l.eta2.bq());
    let per = default_steps(1.0 / (samples - 1) as f64);
    let mut state = Pair(Biquaternion::ONE, Biquaternion::ONE);
    let mut ms = Vec::with_capacity(samples);
    let mut kappas = Vec::with_capacity(samples);
    for k in 0..samples {
        let t = k as f64 / (samples - 1) as f64;
        if k > 0 {
            let t_prev = (k - 1) as f64 / (samples - 1) as f64;
            let seg = transport_segment(xi, l.p, v, t_prev, t, per)?;
            // Segment transport restarts at 1, so compose with the running state.
            state = Pair(state.0 * seg.chi, seg.psi * state.1);
        }
        let q = l.p + v * t;
        let (chi, psi) = (state.0, state.1);
        let chi_i = chi.inv().map_err(|_| Error::SingularOnPath)?;
        let psi_i = psi.inv().map_err(|_| Error::SingularOnPath)?;
        ms.push((chi_i * e1 * chi, psi * e2 * psi_i));
        kappas.push(chi * f.eval(q).map_err(|_| Error::SingularOnPath)? * psi);
    }
    let mut constancy: f64 = 0.0;
    for a in &ms {
        for b in &ms {
            constancy = constancy
                .max((pi(Sign::Plus, a.0) * pi(Sign::Minus, b.0)).norm())
                .max((pi(Sign::Minus, b.1) * pi(Sign::Plus, a.1)).norm());
        }
    }
    let (m1, m2) = ms[0];
    let mut collinearity: f64 = 0.0;
    for k in &kappas[1..] {
        let d = *k - kappas[0];
        let scale = 1.0 + d.norm();
        collinearity =
            collinearity.max((pi(Sign::Plus, m1) * d).norm() / scale).max((d * pi(Sign::Plus, m2)).norm() / scale);
    }
    let worst = constancy.max(collinearity);
    if worst > 10.0 * AMBIMAP_TOL {
        return Err(Error::NotASolution(worst));
    }
    Ok(AmbiMapData { m1, m2, kappa0: kappas[0], constancy, collinearity })
}

/// Compares the two chart descriptions of `κ` on `l`.
///
/// Each chart transports from its own base point (where `l` meets the
/// hyperplane). With `F_χ = χ_T(q_S)` and `F_ψ = ψ_T(q_S)` the relation
/// `κ_T = F_χ κ_S F_ψ` must hold at every point of `l`; the residual is
/// measured at `l.p + l.direction()`.
pub fn patching_check(xi: &XiField, f: &Field, l: &NullLine, s: &NullHyperplane, t: &NullHyperplane) -> Result<f64> {
    let qs = chart_coords(s, l)?;
    let qt = chart_coords(t, l)?;
    let star = l.p + l.direction();
    let fs = transport_between(xi, qs, star)?;
    let ft = transport_between(xi, qt, star)?;
    let bridge = transport_between(xi, qt, qs)?;
    let fv = f.eval(star).map_err(|_| Error::SingularOnPath)?;
    let kappa_s = fs.chi * fv * fs.psi;
    let kappa_t = ft.chi * fv * ft.psi;
    Ok((kappa_t - bridge.chi * kappa_s * bridge.psi).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::UnitImaginary;

    fn bq(r: [f64; 8]) -> Biquaternion {
        Biquaternion::from_reals(r)
    }

    fn q() -> Field {
        Field::identity(Domain::Complex)
    }

    fn generic_line() -> NullLine {
        NullLine::new(
            bq([0.3, -0.2, 0.4, 0.1, 0.05, 0.1, -0.1, 0.02]),
            UnitImaginary::new(0.3, 1.0, -0.4).unwrap(),
            UnitImaginary::new(-0.8, 0.2, 0.5).unwrap(),
        )
    }

    #[test]
    fn bpst_xi_values() {
        assert_eq!(bpst_xi(Quaternion::ZERO), Quaternion::ZERO);
        assert_eq!(bpst_xi(Quaternion::ONE), Quaternion::real(-0.5));
        assert_eq!(bpst_xi(Quaternion::I), Quaternion::I.scale(0.5));
        let p = Quaternion::new(0.3, -1.2, 0.5, 2.0);
        let f = XiField::bpst().eval(p.into()).unwrap();
        assert!(f.max_abs_diff(bpst_xi(p).into()) < 1e-16);
    }

    #[test]
    fn nabla_examples() {
        let p = bq([0.3, -1.2, 0.5, 2.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(nabla_apply(&XiField::zero(), &q(), p).unwrap(), QOneForm::dq());
        let at0 = nabla_apply(&XiField::bpst(), &q(), Biquaternion::ZERO).unwrap();
        assert_eq!(at0, QOneForm::dq());
        let n = nabla_apply(&XiField::bpst(), &q(), p).unwrap();
        let s = p.norm_sq();
        let expect = QOneForm::dq().scale((1.0 - s) / (1.0 + s));
        assert!((n - expect).norm() < 1e-15);
    }

    #[test]
    fn sigma_bar_examples() {
        assert!(sigma_bar(&QOneForm::dq().scale(3.0)).norm() < 1e-15);
        assert!(sigma_bar(&QOneForm::dq().right_mul(Biquaternion::CI)).norm() < 1e-15);
        let s = sigma_bar(&QOneForm::dqbar());
        assert_eq!(s, QOneForm::dqbar() + QOneForm::dq().scale(0.5));
        assert_eq!(sigma_bar(&s), s);
        let r = fct_residual(&XiField::zero(), &q().qconj(), Biquaternion::ONE).unwrap();
        assert!((r - 1.5).abs() < 1e-15);
    }

    #[test]
    fn xi_conditions_examples() {
        let p = bq([0.3, -1.2, 0.5, 2.0, 0.1, 0.0, 0.2, 0.0]);
        assert_eq!(xi_conditions_residual(&XiField::zero(), p).unwrap(), (0.0, 0.0));
        let (r1, r2) = xi_conditions_residual(&XiField::bpst(), p).unwrap();
        assert!(r1 < 1e-14 && r2 < 1e-14, "{r1} {r2}");
        let (r1, r2) = xi_conditions_residual(&XiField::constant(Biquaternion::I), p).unwrap();
        let expect = w_b().left_mul(Biquaternion::I).right_mul(Biquaternion::I).norm();
        assert!((r1 - expect).abs() < 1e-15 && r1 > 0.0 && r2 == 0.0);
    }

    #[test]
    fn curvature_of_bpst() {
        let (l, r) = curvature(&XiField::bpst(), Biquaternion::ZERO).unwrap();
        assert!((l - w_a()).norm() < 1e-15);
        assert!((r + w_b()).norm() < 1e-15);
        let p = bq([0.3, -1.2, 0.5, 2.0, 0.1, 0.0, 0.2, -0.3]);
        let s = Complex64::new(1.0, 0.0) + p.reduced_norm();
        let k = Complex64::new(1.0, 0.0) / (s * s);
        let (l, r) = curvature(&XiField::bpst(), p).unwrap();
        assert!((l - w_a().scale_c(k)).norm() < 1e-14);
        assert!((r + w_b().scale_c(k)).norm() < 1e-14);
    }

    #[test]
    fn curvature_matches_first_principles() {
        let xi = XiField::new(&(&q() * &q()).right_mul(Biquaternion::J) + &q().qconj().exp());
        let p = bq([0.3, -0.2, 0.5, 0.1, 0.1, 0.0, 0.2, -0.3]);
        let (l, r) = curvature(&xi, p).unwrap();
        let (l2, r2) = curvature_first_principles(&xi, p).unwrap();
        assert!((l - l2).norm() < 1e-13, "{}", (l - l2).norm());
        assert!((r - r2).norm() < 1e-13, "{}", (r - r2).norm());
    }

    #[test]
    fn transport_trivial_cases() {
        let l = generic_line();
        let s = transport(&XiField::zero(), &l, Complex64::new(1.0, 0.0), 0.0, 1.0, 64).unwrap();
        assert_eq!((s.chi, s.psi), (Biquaternion::ONE, Biquaternion::ONE));
        let through0 = NullLine::new(Biquaternion::ZERO, l.eta1, l.eta2);
        let s = transport(&XiField::bpst(), &through0, Complex64::new(1.0, 0.0), 0.0, 2.0, 64).unwrap();
        assert!(s.chi.max_abs_diff(Biquaternion::ONE) < 1e-14);
        assert!(s.psi.max_abs_diff(Biquaternion::ONE) < 1e-14);
        let err = transport_segment(&XiField::zero(), Biquaternion::ZERO, Biquaternion::ONE, 0.0, 1.0, 4);
        assert_eq!(err, Err(Error::NonNullDirection));
    }

    #[test]
    fn reparametrized_transport_agrees() {
        let l = generic_line();
        let xi = XiField::bpst();
        let a = transport(&xi, &l, Complex64::new(1.0, 0.0), 0.0, 1.0, 1024).unwrap();
        let b = transport(&xi, &l, Complex64::new(2.0, 0.0), 0.0, 0.5, 1024).unwrap();
        assert!(a.chi.max_abs_diff(b.chi) < 1e-12 && a.psi.max_abs_diff(b.psi) < 1e-12);
    }

    #[test]
    fn lambda_along_lines() {
        let l = generic_line();
        for (t, lam) in lambda_transport(&q(), &l, 0.0, 1.0, 256).unwrap() {
            let s = l.point(Complex64::new(t, 0.0)).reduced_norm();
            let one = Complex64::new(1.0, 0.0);
            assert!((lam - (one - s) / (one + s)).norm() < 1e-10);
        }
        let l0 = NullLine::new(Biquaternion::ZERO, l.eta1, l.eta2);
        for (_, lam) in lambda_transport(&q(), &l0, 0.0, 1.0, 16).unwrap() {
            assert!((lam - 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn ambimap_identity_and_bpst() {
        let l = generic_line();
        let d = ambimap_eval(&XiField::zero(), &q(), &l, 5).unwrap();
        assert_eq!((d.m1, d.m2, d.kappa0), (l.eta1.bq(), l.eta2.bq(), l.p));
        let d = ambimap_eval(&XiField::bpst(), &q(), &l, 5).unwrap();
        assert!(d.constancy < 1e-8 && d.collinearity < 1e-8, "{d:?}");
        let bad = ambimap_eval(&XiField::zero(), &q().qconj(), &l, 5);
        assert!(matches!(bad, Err(Error::NotASolution(_))));
    }

    #[test]
    fn patching_examples() {
        let l = generic_line();
        let s = NullHyperplane { q0: Biquaternion::ZERO, eta1: UnitImaginary::K, eta2: UnitImaginary::J };
        let t = NullHyperplane { q0: Biquaternion::ZERO, eta1: UnitImaginary::J, eta2: UnitImaginary::K };
        assert_eq!(patching_check(&XiField::zero(), &q(), &l, &s, &t).unwrap(), 0.0);
        let r = patching_check(&XiField::bpst(), &q(), &l, &s, &t).unwrap();
        assert!(r < 1e-7, "{r}");
    }

    #[test]
    fn fourth_order_convergence() {
        let l = generic_line();
        let xi =
            XiField::new(XiField::bpst().field() + &Field::constant(bq([0.3, 0.2, -0.1, 0.4, 0.0, 0.1, 0.0, 0.0])));
        let (ratio, _) = rk4_convergence_ratio(&xi, l.p, l.direction(), 1.0, 8).unwrap();
        assert!((12.0..20.0).contains(&ratio), "{ratio}");
    }
}
