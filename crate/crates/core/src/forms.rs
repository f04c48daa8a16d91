//! Biquaternion-valued one- and two-forms on ℍ and ℍ_ℂ.
//!
//! A one-form stores two banks of coefficients. On a vector `v` with complex
//! components `v_μ` it evaluates to `Σ hol_μ v_μ + anti_μ v_μ*`, so the `hol`
//! bank is complex-linear and the `anti` bank complex-antilinear. Two-forms
//! use the ordered basis `dx0∧dx1, dx0∧dx2, dx0∧dx3, dx1∧dx2, dx1∧dx3, dx2∧dx3`.

use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::field::{Domain, Field};
use crate::quat::{Biquaternion, Quaternion, UnitImaginary};

/// Index pairs `(μ, ν)` of the two-form basis.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Tolerance used by [`is_holomorphic`], relative to the size of the form.
pub const HOLOMORPHIC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QOneForm {
    pub hol: [Biquaternion; 4],
    pub anti: [Biquaternion; 4],
}

impl QOneForm {
    pub const ZERO: QOneForm = QOneForm { hol: [Biquaternion::ZERO; 4], anti: [Biquaternion::ZERO; 4] };

    pub fn holomorphic(hol: [Biquaternion; 4]) -> Self {
        QOneForm { hol, anti: [Biquaternion::ZERO; 4] }
    }

    /// The real basis form `dx_μ`.
    pub fn dx(mu: usize) -> Self {
        let mut hol = [Biquaternion::ZERO; 4];
        hol[mu] = Biquaternion::ONE;
        QOneForm::holomorphic(hol)
    }

    /// `dq = Σ e_μ dx_μ`.
    pub fn dq() -> Self {
        QOneForm::holomorphic(Biquaternion::BASIS)
    }

    /// `dq̄ = Σ ē_μ dx_μ`.
    pub fn dqbar() -> Self {
        QOneForm::holomorphic(Biquaternion::BASIS.map(Biquaternion::qconj))
    }

    pub fn contract(&self, v: Biquaternion) -> Biquaternion {
        (0..4)
            .map(|m| {
                let c = v.coeff(m);
                self.hol[m] * c + self.anti[m] * c.conj()
            })
            .sum()
    }

    fn map(&self, f: impl Fn(Biquaternion) -> Biquaternion) -> Self {
        QOneForm { hol: self.hol.map(&f), anti: self.anti.map(&f) }
    }

    /// `a·ω`.
    pub fn left_mul(&self, a: Biquaternion) -> Self {
        self.map(|c| a * c)
    }

    /// `ω·a`.
    pub fn right_mul(&self, a: Biquaternion) -> Self {
        self.map(|c| c * a)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|c| c * s)
    }

    /// Coefficient of `dx_μ` seen on the real slice.
    pub fn real_coeff(&self, mu: usize) -> Biquaternion {
        self.hol[mu] + self.anti[mu]
    }

    /// Largest Euclidean norm among the eight coefficients.
    pub fn norm(&self) -> f64 {
        self.hol.iter().chain(self.anti.iter()).map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn anti_norm(&self) -> f64 {
        self.anti.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl Add for QOneForm {
    type Output = QOneForm;
    fn add(self, o: QOneForm) -> QOneForm {
        let mut r = self;
        for m in 0..4 {
            r.hol[m] += o.hol[m];
            r.anti[m] += o.anti[m];
        }
        r
    }
}

impl Sub for QOneForm {
    type Output = QOneForm;
    fn sub(self, o: QOneForm) -> QOneForm {
        self + (-o)
    }
}

impl Neg for QOneForm {
    type Output = QOneForm;
    fn neg(self) -> QOneForm {
        self.map(|c| -c)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QTwoForm {
    pub c: [Biquaternion; 6],
}

impl QTwoForm {
    pub const ZERO: QTwoForm = QTwoForm { c: [Biquaternion::ZERO; 6] };

    /// `dx_μ∧dx_ν` for `μ < ν`.
    pub fn basis(mu: usize, nu: usize) -> Self {
        let k = PAIRS.iter().position(|&p| p == (mu, nu)).expect("basis pair must satisfy mu < nu < 4");
        let mut c = [Biquaternion::ZERO; 6];
        c[k] = Biquaternion::ONE;
        QTwoForm { c }
    }

    /// Builds the form whose `dx_μ∧dx_ν` coefficient is `f(μ, ν)`.
    pub fn from_fn(f: impl Fn(usize, usize) -> Biquaternion) -> Self {
        QTwoForm { c: PAIRS.map(|(m, n)| f(m, n)) }
    }

    /// Antisymmetric coefficient for any ordered pair.
    pub fn coeff(&self, mu: usize, nu: usize) -> Biquaternion {
        match mu.cmp(&nu) {
            std::cmp::Ordering::Equal => Biquaternion::ZERO,
            std::cmp::Ordering::Less => self.c[PAIRS.iter().position(|&p| p == (mu, nu)).unwrap()],
            std::cmp::Ordering::Greater => -self.coeff(nu, mu),
        }
    }

    /// `F(u, v)`, complex-bilinear in the vector components.
    pub fn contract(&self, u: Biquaternion, v: Biquaternion) -> Biquaternion {
        PAIRS.iter().zip(self.c).map(|(&(m, n), c)| c * (u.coeff(m) * v.coeff(n) - u.coeff(n) * v.coeff(m))).sum()
    }

    fn map(&self, f: impl Fn(Biquaternion) -> Biquaternion) -> Self {
        QTwoForm { c: self.c.map(f) }
    }

    pub fn left_mul(&self, a: Biquaternion) -> Self {
        self.map(|c| a * c)
    }

    pub fn right_mul(&self, a: Biquaternion) -> Self {
        self.map(|c| c * a)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|c| c * s)
    }

    pub fn scale_c(&self, z: num_complex::Complex64) -> Self {
        self.map(|c| c * z)
    }

    pub fn norm(&self) -> f64 {
        self.c.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl Add for QTwoForm {
    type Output = QTwoForm;
    fn add(self, o: QTwoForm) -> QTwoForm {
        let mut r = self;
        for k in 0..6 {
            r.c[k] += o.c[k];
        }
        r
    }
}

impl Sub for QTwoForm {
    type Output = QTwoForm;
    fn sub(self, o: QTwoForm) -> QTwoForm {
        self + (-o)
    }
}

impl Neg for QTwoForm {
    type Output = QTwoForm;
    fn neg(self) -> QTwoForm {
        self.map(|c| -c)
    }
}

impl std::iter::Sum for QTwoForm {
    fn sum<I: Iterator<Item = QTwoForm>>(iter: I) -> Self {
        iter.fold(QTwoForm::ZERO, |a, b| a + b)
    }
}

/// `dF` at `p`.
///
/// Real-domain fields put every partial in the `hol` bank. Complex-domain
/// fields split the pair of partials along `e_μ` and `i·e_μ` into the
/// complex-linear and antilinear parts.
pub fn differential(f: &Field, p: Biquaternion) -> Result<QOneForm> {
    let j = f.jet(p)?;
    Ok(match f.domain() {
        Domain::Real => QOneForm::holomorphic([j.d[0], j.d[1], j.d[2], j.d[3]]),
        Domain::Complex => {
            let mut w = QOneForm::ZERO;
            for m in 0..4 {
                let along_i = Biquaternion::CI * j.d[m + 4];
                w.hol[m] = (j.d[m] - along_i) * 0.5;
                w.anti[m] = (j.d[m] + along_i) * 0.5;
            }
            w
        }
    })
}

/// `∂_q F = ½ Σ ē_μ ∂_μ F`.
pub fn del_q(f: &Field, p: Biquaternion) -> Result<Biquaternion> {
    let j = f.jet(p)?;
    Ok((0..4).map(|m| Biquaternion::BASIS[m].qconj() * j.d[m]).sum::<Biquaternion>() * 0.5)
}

/// `∂_q̄ F = ½ Σ e_μ ∂_μ F`.
pub fn del_qbar(f: &Field, p: Biquaternion) -> Result<Biquaternion> {
    let j = f.jet(p)?;
    Ok((0..4).map(|m| Biquaternion::BASIS[m] * j.d[m]).sum::<Biquaternion>() * 0.5)
}

/// Wedge product with biquaternion coefficients multiplied in order.
pub fn wedge(a: &QOneForm, b: &QOneForm) -> QTwoForm {
    QTwoForm::from_fn(|m, n| {
        let (am, an) = (a.real_coeff(m), a.real_coeff(n));
        let (bm, bn) = (b.real_coeff(m), b.real_coeff(n));
        am * bn - an * bm
    })
}

/// Hodge star with volume form `dx0∧dx1∧dx2∧dx3`.
pub fn hodge_star(f: &QTwoForm) -> QTwoForm {
    let c = f.c;
    QTwoForm { c: [c[5], -c[4], c[3], c[2], -c[1], c[0]] }
}

/// `(½(F + ⋆F), ½(F − ⋆F))`.
pub fn sd_split(f: &QTwoForm) -> (QTwoForm, QTwoForm) {
    let s = hodge_star(f);
    ((*f + s).scale(0.5), (*f - s).scale(0.5))
}

/// Real matrix `M` with `η e_μ = Σ_ν M[ν][μ] e_ν`.
fn left_mult_matrix(eta: Quaternion) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    for (mu, e) in Quaternion::BASIS.iter().enumerate() {
        let col = eta * *e;
        for (nu, row) in m.iter_mut().enumerate() {
            row[mu] = col[nu];
        }
    }
    m
}

/// `(I_η^r ω)(v) = ω(η v)`.
pub fn apply_ir(eta: UnitImaginary, w: &QOneForm) -> QOneForm {
    let m = left_mult_matrix(eta.quaternion());
    let act = |bank: &[Biquaternion; 4]| -> [Biquaternion; 4] {
        std::array::from_fn(|mu| (0..4).map(|nu| bank[nu] * m[nu][mu]).sum())
    };
    QOneForm { hol: act(&w.hol), anti: act(&w.anti) }
}

/// `𝓘_η ω = η ω − I_η^r ω`.
pub fn script_i(eta: UnitImaginary, w: &QOneForm) -> QOneForm {
    w.left_mul(eta.bq()) - apply_ir(eta, w)
}

/// `𝓙_η ω = η ω − ω η − I_η^r ω`.
pub fn script_j(eta: UnitImaginary, w: &QOneForm) -> QOneForm {
    w.left_mul(eta.bq()) - w.right_mul(eta.bq()) - apply_ir(eta, w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `i ± m` for any (possibly complexified) structure `m`.
pub fn pi(s: Sign, m: Biquaternion) -> Biquaternion {
    match s {
        Sign::Plus => Biquaternion::CI + m,
        Sign::Minus => Biquaternion::CI - m,
    }
}

/// `π_η^± x` or `x π_η^±`.
pub fn proj_pm(eta: UnitImaginary, s: Sign, x: Biquaternion, side: Side) -> Biquaternion {
    let p = pi(s, eta.bq());
    match side {
        Side::Left => p * x,
        Side::Right => x * p,
    }
}

pub fn is_holomorphic(w: &QOneForm) -> bool {
    w.anti_norm() <= HOLOMORPHIC_TOL * w.norm().max(1.0)
}

/// Vectors `e_μ` and `i·e_μ`, which span ℍ_ℂ over ℝ.
pub fn spanning_set() -> [Biquaternion; 8] {
    std::array::from_fn(|k| {
        let e = Biquaternion::BASIS[k % 4];
        if k < 4 {
            e
        } else {
            Biquaternion::CI * e
        }
    })
}

/// `(max_δ ‖π⁺ω(π⁻δ)‖, ‖𝓘_η π⁺ω‖)`.
pub fn lemma1_check(w: &QOneForm, eta: UnitImaginary) -> (f64, f64) {
    let pp = pi(Sign::Plus, eta.bq());
    let pm = pi(Sign::Minus, eta.bq());
    let pw = w.left_mul(pp);
    let r_contract = spanning_set().iter().map(|&d| pw.contract(pm * d).norm()).fold(0.0, f64::max);
    (r_contract, script_i(eta, &pw).norm())
}

/// `max_δ ‖π⁺ω(π⁻δ) − (𝓘_η π⁺ω)(δ)‖`; zero for every holomorphic `ω`.
pub fn lemma1_defect(w: &QOneForm, eta: UnitImaginary) -> f64 {
    let pp = pi(Sign::Plus, eta.bq());
    let pm = pi(Sign::Minus, eta.bq());
    let pw = w.left_mul(pp);
    let ipw = script_i(eta, &pw);
    spanning_set().iter().map(|&d| (pw.contract(pm * d) - ipw.contract(d)).norm()).fold(0.0, f64::max)
}

/// `‖I_η^r ω − m ω‖`: how far `ω` is from intertwining `η` with left
/// multiplication by `m`.
pub fn twisted_holomorphic_residual(eta: UnitImaginary, w: &QOneForm, m: Biquaternion) -> f64 {
    (apply_ir(eta, w) - w.left_mul(m)).norm()
}
