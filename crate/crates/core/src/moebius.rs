//! Möbius maps of the fibre sphere, the biquaternion Lorentz action and
//! biquaternion fractional-linear maps with their χ/ψ factorization.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Domain, Field};
use crate::forms::{differential, QOneForm};
use crate::linalg::least_squares;
use crate::quat::{Biquaternion, Quaternion, UnitImaginary};

/// Tolerance on `|φ φ̄ − 1|`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// `η ↦ (α + ηβ)⁻¹ η (α + ηβ)` with real quaternion coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereMoebius {
    pub alpha: Quaternion,
    pub beta: Quaternion,
}

impl SphereMoebius {
    pub const IDENTITY: SphereMoebius = SphereMoebius { alpha: Quaternion::ONE, beta: Quaternion::ZERO };

    pub fn new(alpha: Quaternion, beta: Quaternion) -> Self {
        SphereMoebius { alpha, beta }
    }

    pub fn apply(&self, eta: UnitImaginary) -> Result<UnitImaginary> {
        mob_apply(self, eta)
    }
}

pub fn mob_apply(m: &SphereMoebius, eta: UnitImaginary) -> Result<UnitImaginary> {
    let e = eta.quaternion();
    let x = m.alpha + e * m.beta;
    let xi = x.inv().map_err(|_| Error::SingularMoebius)?;
    UnitImaginary::from_quaternion(xi * e * x).map_err(|_| Error::SingularMoebius)
}

/// `re + im·𝐢`.
fn cq(z: Complex64) -> Quaternion {
    Quaternion::from_complex(z)
}

/// Sphere map induced by `(z₁, z₂) ↦ (a z₁ + b z₂, c z₁ + d z₂)`.
pub fn mob_from_cp1(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<SphereMoebius> {
    let det = a * d - b * c;
    let scale = a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr();
    if det.norm() <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::DegenerateMap);
    }
    let j = Quaternion::J;
    let head = cq(a) + cq(c) * j;
    let tail = (j * cq(b) + cq(d)).conj();
    let alpha = (head + tail).scale(0.5);
    // 2𝐢β = head − tail, so β = −𝐢(head − tail)/2.
    let beta = (Quaternion::I * (head - tail)).scale(-0.5);
    Ok(SphereMoebius { alpha, beta })
}

/// A biquaternion `φ` with `φ φ̄ = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzBiquaternion(Biquaternion);

impl LorentzBiquaternion {
    pub fn new(phi: Biquaternion) -> Result<Self> {
        let err = (phi.reduced_norm() - 1.0).norm();
        if err > NORMALIZATION_TOL {
            return Err(Error::NotNormalized(err));
        }
        Ok(LorentzBiquaternion(phi))
    }

    pub fn value(self) -> Biquaternion {
        self.0
    }
}

/// `x₀ + i(𝐢x₁ + 𝐣x₂ + 𝐤x₃)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinkowskiQuaternion {
    pub x: [f64; 4],
}

impl MinkowskiQuaternion {
    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        MinkowskiQuaternion { x: [x0, x1, x2, x3] }
    }

    pub fn to_bq(self) -> Biquaternion {
        let [x0, x1, x2, x3] = self.x;
        Biquaternion::new(Quaternion::real(x0), Quaternion::new(0.0, x1, x2, x3))
    }

    /// Reads the Minkowski components, ignoring anything outside the shape.
    pub fn from_bq(q: Biquaternion) -> Self {
        MinkowskiQuaternion::new(q.re.w, q.im.x, q.im.y, q.im.z)
    }

    /// Distance of `q` from the Minkowski shape.
    pub fn shape_defect(q: Biquaternion) -> f64 {
        q.re.im().norm().max(q.im.w.abs())
    }

    /// `x₀² − x₁² − x₂² − x₃²`.
    pub fn interval(self) -> f64 {
        let [x0, x1, x2, x3] = self.x;
        x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3
    }
}

/// `q_m ↦ φ q_m (φ̄)*`.
pub fn lorentz_apply(phi: LorentzBiquaternion, qm: MinkowskiQuaternion) -> MinkowskiQuaternion {
    let p = phi.value();
    MinkowskiQuaternion::from_bq(p * qm.to_bq() * p.qconj().cconj())
}

/// `φ̄(p) dφ(v)` split into real and `i` banks.
pub fn mob_generator(phi: &Field, p: Biquaternion, v: Biquaternion) -> Result<(Quaternion, Quaternion)> {
    let val = LorentzBiquaternion::new(phi.eval(p)?)?.value();
    let g = val.qconj() * differential(phi, p)?.contract(v);
    Ok((g.re, g.im))
}

/// `κ(q) = (αq + β)(γq + δ)⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BqMoebius {
    pub alpha: Biquaternion,
    pub beta: Biquaternion,
    pub gamma: Biquaternion,
    pub delta: Biquaternion,
}

impl BqMoebius {
    pub fn new(alpha: Biquaternion, beta: Biquaternion, gamma: Biquaternion, delta: Biquaternion) -> Self {
        BqMoebius { alpha, beta, gamma, delta }
    }

    pub fn identity() -> Self {
        BqMoebius::new(Biquaternion::ONE, Biquaternion::ZERO, Biquaternion::ZERO, Biquaternion::ONE)
    }

    /// Coefficient-matrix product; `self.compose(o)` acts as `self ∘ o`.
    pub fn compose(&self, o: &BqMoebius) -> BqMoebius {
        BqMoebius::new(
            self.alpha * o.alpha + self.beta * o.gamma,
            self.alpha * o.beta + self.beta * o.delta,
            self.gamma * o.alpha + self.delta * o.gamma,
            self.gamma * o.beta + self.delta * o.delta,
        )
    }

    pub fn apply(&self, q: Biquaternion) -> Result<Biquaternion> {
        bq_mob_apply(self, q)
    }

    pub fn field(&self, domain: Domain) -> Field {
        let q = Field::identity(domain);
        let num = &q.left_mul(self.alpha) + &Field::constant(self.beta);
        let den = &q.left_mul(self.gamma) + &Field::constant(self.delta);
        &num * &den.inv()
    }
}

pub fn bq_mob_apply(m: &BqMoebius, q: Biquaternion) -> Result<Biquaternion> {
    let den = (m.gamma * q + m.delta).inv().map_err(|_| Error::SingularPoint)?;
    Ok((m.alpha * q + m.beta) * den)
}

/// Fields with `dκ = χ dq ψ`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub alpha_t: Biquaternion,
    pub beta_t: Biquaternion,
    pub chi: Field,
    pub psi: Field,
}

/// `χ = (qα̃ + β̃)⁻¹`, `ψ = (γq + δ)⁻¹` with `α̃ = (αγ⁻¹δ − β)⁻¹`,
/// `β̃ = (α − βδ⁻¹γ)⁻¹`.
pub fn bq_mob_factor(m: &BqMoebius, domain: Domain) -> Result<Factorization> {
    let inv = |x: Biquaternion| x.inv().map_err(|_| Error::DegenerateFactorization);
    for c in [m.alpha, m.beta, m.gamma, m.delta] {
        inv(c)?;
    }
    let alpha_t = inv(m.alpha * inv(m.gamma)? * m.delta - m.beta)?;
    let beta_t = inv(m.alpha - m.beta * inv(m.delta)? * m.gamma)?;
    let q = Field::identity(domain);
    let chi = (&q.right_mul(alpha_t) + &Field::constant(beta_t)).inv();
    let psi = (&q.left_mul(m.gamma) + &Field::constant(m.delta)).inv();
    Ok(Factorization { alpha_t, beta_t, chi, psi })
}

/// `φ = χ (χ χ̄)^{-1/2}` with the principal square root.
pub fn normalized_phi(chi: &Field) -> Field {
    let n = chi * &chi.qconj();
    chi * &n.sqrt().inv()
}

/// Stacks the real components of all 8 coefficients of a one-form.
fn form_reals(w: &QOneForm) -> Vec<f64> {
    w.hol.iter().chain(w.anti.iter()).flat_map(|c| c.to_reals()).collect()
}

/// Best fit of `target` by the real-linear family `x ↦ model(x)` over the
/// 8 real parameters of `x`; returns the coefficient norm of the misfit.
fn fit_residual(target: &QOneForm, model: impl Fn(Biquaternion) -> QOneForm) -> f64 {
    let b = DVector::from_vec(form_reals(target));
    let mut a = DMatrix::zeros(b.len(), 8);
    for k in 0..8 {
        let mut e = [0.0; 8];
        e[k] = 1.0;
        a.set_column(k, &DVector::from_vec(form_reals(&model(Biquaternion::from_reals(e)))));
    }
    let ls = least_squares(&a, &b);
    let x = Biquaternion::from_reals(std::array::from_fn(|k| ls.x[k]));
    (*target - model(x)).norm()
}

/// `(min_ν ‖dκ − φ dq ν‖, min_ξ ‖φ̄ dφ − ½(dq ξ − ξ̄ dq̄)‖)` at `p`.
pub fn theorem1_residual(kappa: &Field, phi: &Field, p: Biquaternion) -> Result<(f64, f64)> {
    let ph = LorentzBiquaternion::new(phi.eval(p)?)?.value();
    let dk = differential(kappa, p)?;
    let r1 = fit_residual(&dk, |nu| QOneForm::dq().left_mul(ph).right_mul(nu));
    let dphi = differential(phi, p)?.left_mul(ph.qconj());
    let r2 =
        fit_residual(&dphi, |xi| (QOneForm::dq().right_mul(xi) - QOneForm::dqbar().left_mul(xi.qconj())).scale(0.5));
    Ok((r1, r2))
}
