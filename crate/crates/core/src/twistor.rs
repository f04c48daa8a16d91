//! The fibration `CP³ → ℍP¹`, its `z₄ = 1` trivialization, the transition
//! function between the two charts, and degree-one line embeddings.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Domain, Field};
use crate::forms::differential;
use crate::linalg::{real_matrix, solve8, to_vec8, Mat8, Vec8};
use crate::moebius::{mob_apply, mob_from_cp1, SphereMoebius};
use crate::quat::{Biquaternion, Quaternion, UnitImaginary};

/// Tolerance used to decide [`HPPoint`] equivalence.
pub const HP_EQUIV_TOL: f64 = 1e-10;

fn cq(z: Complex64) -> Quaternion {
    Quaternion::from_complex(z)
}

/// `z₁ + z₂𝐣` with the complex unit identified with `𝐢`.
fn pair(z1: Complex64, z2: Complex64) -> Quaternion {
    cq(z1) + cq(z2) * Quaternion::J
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CP3Point {
    pub z: [Complex64; 4],
}

impl CP3Point {
    pub fn new(z: [Complex64; 4]) -> Result<Self> {
        if z.iter().all(|c| c.norm() == 0.0) {
            return Err(Error::ZeroHomogeneous);
        }
        Ok(CP3Point { z })
    }

    pub fn scale(&self, l: Complex64) -> CP3Point {
        CP3Point { z: self.z.map(|c| c * l) }
    }

    /// Chart change `(z₁, z₂, z₃, z₄) ↦ (z₃, z₄, z₁, z₂)`.
    pub fn swap_charts(&self) -> CP3Point {
        let [a, b, c, d] = self.z;
        CP3Point { z: [c, d, a, b] }
    }

    fn norm(&self) -> f64 {
        self.z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `(q₁, q₂)` up to left multiplication by a nonzero quaternion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPPoint {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

impl HPPoint {
    /// Returns `u` with `u q₁ = q₁′` and `u q₂ = q₂′`, if there is one.
    pub fn relating(&self, other: &HPPoint, tol: f64) -> Option<Quaternion> {
        let (from, to) = if self.q1.norm() >= self.q2.norm() { (self.q1, other.q1) } else { (self.q2, other.q2) };
        let u = to * from.inv().ok()?;
        let scale = 1.0 + other.q1.norm() + other.q2.norm();
        let ok = (u * self.q1 - other.q1).norm() <= tol * scale && (u * self.q2 - other.q2).norm() <= tol * scale;
        (ok && u.norm() > 0.0).then_some(u)
    }

    pub fn equivalent(&self, other: &HPPoint) -> bool {
        self.relating(other, HP_EQUIV_TOL).is_some()
    }

    /// Chart coordinate `q₂⁻¹ q₁`.
    pub fn chart(&self) -> Result<Quaternion> {
        Ok(self.q2.inv().map_err(|_| Error::ChartMiss)? * self.q1)
    }
}

pub fn fibration_pi(z: &CP3Point) -> HPPoint {
    let [z1, z2, z3, z4] = z.z;
    HPPoint { q1: pair(z1, z2), q2: pair(z3, z4) }
}

/// `(z₁ + z₂𝐣)⁻¹ 𝐢 (z₁ + z₂𝐣)`.
pub fn eta_stereo(z1: Complex64, z2: Complex64) -> Result<UnitImaginary> {
    let v = pair(z1, z2);
    let vi = v.inv().map_err(|_| Error::ZeroHomogeneous)?;
    UnitImaginary::from_quaternion(vi * Quaternion::I * v)
}

pub fn trivialize_phi(z: &CP3Point) -> Result<(Quaternion, UnitImaginary)> {
    let z4 = z.z[3];
    if z4.norm() <= 1e-14 * z.norm() {
        return Err(Error::ChartMiss);
    }
    let [z1, z2, z3, _] = z.z.map(|c| c / z4);
    let den = pair(z3, Complex64::new(1.0, 0.0)).inv().map_err(|_| Error::ChartMiss)?;
    Ok((den * pair(z1, z2), eta_stereo(z3, Complex64::new(1.0, 0.0))?))
}

/// `(q, η) ↦ (q⁻¹, q⁻¹ η q)`.
pub fn transition_tau(q: Quaternion, eta: UnitImaginary) -> Result<(Quaternion, UnitImaginary)> {
    let qi = q.inv().map_err(|_| Error::OriginSingular)?;
    Ok((qi, UnitImaginary::from_quaternion(qi * eta.quaternion() * q)?))
}

/// `η(z₃)` as a field of the complex variable `z₃ = x₀ + x₁𝐢`.
pub fn fiber_eta_field() -> Field {
    let q = Field::identity(Domain::Real);
    let v = &q + &Field::constant(Biquaternion::J);
    &(&v.inv() * &Field::constant(Biquaternion::I)) * &v
}

/// `‖dη(i v) − η dη(v)‖` at `z₃`, with `v` the unit real direction.
pub fn fiber_structure_residual(z3: Complex64) -> Result<f64> {
    let f = fiber_eta_field();
    let p: Biquaternion = cq(z3).into();
    let d = differential(&f, p)?;
    let eta = f.eval(p)?;
    let along_real = d.contract(Biquaternion::ONE);
    let along_i = d.contract(Biquaternion::I);
    Ok((along_i - eta * along_real).norm())
}

/// `(z₁, z₂) ↦ (a z₁ + b z₂, c z₁ + d z₂, ã z₁ + b̃ z₂, c̃ z₁ + d̃ z₂)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineEmbedding {
    pub num: [Complex64; 4],
    pub den: [Complex64; 4],
}

impl LineEmbedding {
    /// Rejects maps whose upper or lower 2×2 block is singular.
    pub fn new(num: [Complex64; 4], den: [Complex64; 4]) -> Result<Self> {
        let det = |m: &[Complex64; 4]| (m[0] * m[3] - m[1] * m[2]).norm();
        let size = |m: &[Complex64; 4]| m.iter().map(|c| c.norm_sqr()).sum::<f64>();
        if det(&num) <= 1e-12 * size(&num) || det(&den) <= 1e-12 * size(&den) {
            return Err(Error::DegenerateEmbedding);
        }
        Ok(LineEmbedding { num, den })
    }

    pub fn image(&self, z1: Complex64, z2: Complex64) -> CP3Point {
        let [a, b, c, d] = self.num;
        let [at, bt, ct, dt] = self.den;
        CP3Point { z: [a * z1 + b * z2, c * z1 + d * z2, at * z1 + bt * z2, ct * z1 + dt * z2] }
    }

    /// Trivialized image of a CP¹ point, without any sphere data.
    pub fn compose_direct(&self, z1: Complex64, z2: Complex64) -> Result<(Quaternion, UnitImaginary)> {
        trivialize_phi(&self.image(z1, z2))
    }
}

/// `τ_q(η) = (h + M(η) ρ, M(η))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereData {
    pub h: Quaternion,
    pub rho: Quaternion,
    pub m: SphereMoebius,
}

impl SphereData {
    pub fn evaluate(&self, eta: UnitImaginary) -> Result<(Quaternion, UnitImaginary)> {
        let e = mob_apply(&self.m, eta)?;
        Ok((self.h + e.quaternion() * self.rho, e))
    }
}

fn closed_form(a: Quaternion, b: Quaternion, at: Quaternion, bt: Quaternion) -> Result<(Quaternion, Quaternion)> {
    let ai = a.inv()?;
    let bi = b.inv()?;
    let ati = at.inv()?;
    let mid = (b * ai + a * bi).inv()?;
    let h = ai * mid * (a * bi + bt * ati) * at;
    let rho = bi * mid * (bt * ati - b * ai) * at;
    Ok((h, rho))
}

/// Solves `αh − βρ = α̃`, `βh + αρ = β̃` for `(h, ρ)`.
fn linear_form(a: Quaternion, b: Quaternion, at: Quaternion, bt: Quaternion) -> Result<(Quaternion, Quaternion)> {
    // Unknown packed as h + i·ρ; the rows are split the same way.
    let m: Mat8 = real_matrix(|x| {
        let (h, r) = (x.re, x.im);
        Biquaternion::new(a * h - b * r, b * h + a * r)
    });
    let rhs: Vec8 = to_vec8(Biquaternion::new(at, bt));
    let sol = solve8(&m, &rhs).ok_or(Error::DegenerateEmbedding)?;
    let s = crate::linalg::from_vec8(&sol);
    Ok((s.re, s.im))
}

pub fn embed_line(e: &LineEmbedding) -> Result<SphereData> {
    let [at, bt, ct, dt] = e.den;
    let [a, b, c, d] = e.num;
    let m = mob_from_cp1(at, bt, ct, dt).map_err(|_| Error::DegenerateEmbedding)?;
    let t = mob_from_cp1(a, b, c, d).map_err(|_| Error::DegenerateEmbedding)?;
    let (h, rho) = match closed_form(m.alpha, m.beta, t.alpha, t.beta) {
        Ok(v) if v.0.norm().is_finite() && v.1.norm().is_finite() => v,
        _ => linear_form(m.alpha, m.beta, t.alpha, t.beta)?,
    };
    Ok(SphereData { h, rho, m })
}
