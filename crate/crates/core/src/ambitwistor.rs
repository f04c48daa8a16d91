//! Incidence geometry of complexified Minkowski space: α- and β-planes,
//! null lines, null hyperplanes and the charts they induce on the space of
//! null lines.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::forms::{pi, Sign};
use crate::linalg::{from_vec8, min_norm_solve, real_matrix, to_vec8};
use crate::quat::{Biquaternion, UnitImaginary};

/// Scale-relative tolerance of every membership predicate.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

fn plus(eta: UnitImaginary) -> Biquaternion {
    pi(Sign::Plus, eta.bq())
}

fn minus(eta: UnitImaginary) -> Biquaternion {
    pi(Sign::Minus, eta.bq())
}

/// `‖x‖ / (1 + scale)`.
fn relative(x: Biquaternion, scale: f64) -> f64 {
    x.norm() / (1.0 + scale)
}

/// `{q : π_η⁺ (q − c) = 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaPlane {
    pub c: Biquaternion,
    pub eta: UnitImaginary,
}

impl AlphaPlane {
    pub fn residual(&self, q: Biquaternion) -> f64 {
        let d = q - self.c;
        relative(plus(self.eta) * d, d.norm())
    }

    pub fn contains(&self, q: Biquaternion) -> bool {
        self.residual(q) < MEMBERSHIP_TOL
    }
}

/// `{q : (q − c) π_η⁺ = 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaPlane {
    pub c: Biquaternion,
    pub eta: UnitImaginary,
}

impl BetaPlane {
    pub fn residual(&self, q: Biquaternion) -> f64 {
        let d = q - self.c;
        relative(d * plus(self.eta), d.norm())
    }

    pub fn contains(&self, q: Biquaternion) -> bool {
        self.residual(q) < MEMBERSHIP_TOL
    }
}

pub fn alpha_contains(a: &AlphaPlane, q: Biquaternion) -> bool {
    a.contains(q)
}

pub fn beta_contains(b: &BetaPlane, q: Biquaternion) -> bool {
    b.contains(q)
}

/// `‖π_{η₁}⁺ (c₁ − c₂) π_{η₂}⁺‖`, scale-relative.
pub fn intersection_residual(a: &AlphaPlane, b: &BetaPlane) -> f64 {
    let d = a.c - b.c;
    relative(plus(a.eta) * d * plus(b.eta), d.norm())
}

pub fn planes_intersect(a: &AlphaPlane, b: &BetaPlane) -> bool {
    intersection_residual(a, b) < MEMBERSHIP_TOL
}

/// A null line through `p`, the intersection of the α-plane with structure
/// `η₁` and the β-plane with structure `η₂` through `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NullLine {
    pub p: Biquaternion,
    pub eta1: UnitImaginary,
    pub eta2: UnitImaginary,
}

impl NullLine {
    pub fn new(p: Biquaternion, eta1: UnitImaginary, eta2: UnitImaginary) -> Self {
        NullLine { p, eta1, eta2 }
    }

    /// Unit representative of `π_{η₁}⁻ δ π_{η₂}⁻`.
    ///
    /// `δ = 1` alone vanishes for `η₂ = −η₁`, so the candidates `1, 𝐢, 𝐣, 𝐤`
    /// are all tried and the largest image is kept.
    pub fn direction(&self) -> Biquaternion {
        let (l, r) = (minus(self.eta1), minus(self.eta2));
        let v = Biquaternion::BASIS
            .iter()
            .map(|&d| l * d * r)
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .expect("four candidates");
        v * (1.0 / v.norm())
    }

    pub fn point(&self, t: Complex64) -> Biquaternion {
        self.p + self.direction() * t
    }

    pub fn alpha_plane(&self) -> AlphaPlane {
        AlphaPlane { c: self.p, eta: self.eta1 }
    }

    pub fn beta_plane(&self) -> BetaPlane {
        BetaPlane { c: self.p, eta: self.eta2 }
    }

    pub fn residual(&self, q: Biquaternion) -> f64 {
        self.alpha_plane().residual(q).max(self.beta_plane().residual(q))
    }

    pub fn contains(&self, q: Biquaternion) -> bool {
        self.residual(q) < MEMBERSHIP_TOL
    }
}

/// Solves `π_{η₁}⁻ δ π_{η₂}⁺ = (c₂ − c₁) π_{η₂}⁺` and returns the line
/// through `c₁ + π_{η₁}⁻ δ`.
pub fn null_line_from(a: &AlphaPlane, b: &BetaPlane) -> Result<NullLine> {
    if !planes_intersect(a, b) {
        return Err(Error::NoIntersection);
    }
    let (lm, rp) = (minus(a.eta), plus(b.eta));
    let m = real_matrix(|d| lm * d * rp);
    let rhs = (b.c - a.c) * rp;
    let mat = DMatrix::from_column_slice(8, 8, m.as_slice());
    let (x, r) = min_norm_solve(&mat, &DVector::from_column_slice(to_vec8(rhs).as_slice()));
    if r > MEMBERSHIP_TOL * (1.0 + rhs.norm()) {
        return Err(Error::NoIntersection);
    }
    let delta = from_vec8(&nalgebra::SVector::<f64, 8>::from_column_slice(x.as_slice()));
    Ok(NullLine::new(a.c + lm * delta, a.eta, b.eta))
}

/// `|v v̄| / (1 + ‖v‖²)`.
pub fn null_residual(v: Biquaternion) -> f64 {
    v.reduced_norm().norm() / (1.0 + v.norm_sq())
}

pub fn is_null(v: Biquaternion) -> bool {
    null_residual(v) < MEMBERSHIP_TOL
}

/// `{q : π_{η₁}⁺ (q − q₀) π_{η₂}⁺ = 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NullHyperplane {
    pub q0: Biquaternion,
    pub eta1: UnitImaginary,
    pub eta2: UnitImaginary,
}

impl NullHyperplane {
    pub fn residual(&self, q: Biquaternion) -> f64 {
        let d = q - self.q0;
        relative(plus(self.eta1) * d * plus(self.eta2), d.norm())
    }

    pub fn contains(&self, q: Biquaternion) -> bool {
        self.residual(q) < MEMBERSHIP_TOL
    }
}

/// Point where `l` meets `h`:
/// `q − π_{μ₁}⁻ δ π_{μ₂}⁻` with `δ = (η₁ − μ₁)⁻¹ (q − q₀) (η₂ − μ₂)⁻¹`.
pub fn chart_coords(h: &NullHyperplane, l: &NullLine) -> Result<Biquaternion> {
    let d1 = (h.eta1.bq() - l.eta1.bq()).inv().map_err(|_| Error::ChartSingular)?;
    let d2 = (h.eta2.bq() - l.eta2.bq()).inv().map_err(|_| Error::ChartSingular)?;
    let delta = d1 * (l.p - h.q0) * d2;
    Ok(l.p - minus(l.eta1) * delta * minus(l.eta2))
}

/// Null coordinates of complexified Minkowski space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinkCoords {
    pub z: Complex64,
    pub zt: Complex64,
    pub w: Complex64,
    pub wt: Complex64,
}

pub fn mink_convert(q: Biquaternion) -> MinkCoords {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let i = Complex64::i();
    let [q0, q1, q2, q3] = q.coeffs();
    MinkCoords { z: (q0 + i * q3) * s, zt: (q0 - i * q3) * s, w: (q1 + i * q2) * s, wt: (-q1 + i * q2) * s }
}

pub fn mink_unconvert(m: &MinkCoords) -> Biquaternion {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let i = Complex64::i();
    let q0 = (m.z + m.zt) * s;
    let q3 = (m.z - m.zt) * s / i;
    let q1 = (m.w - m.wt) * s;
    let q2 = (m.w + m.wt) * s / i;
    Biquaternion::from_coeffs([q0, q1, q2, q3])
}

/// Points where `z` meets the planes `π_𝐢^± q = 0`:
/// `q^± = (η ∓ 𝐢)⁻¹ π_η⁺ c`.
pub fn klein_intersections(z: &AlphaPlane) -> Result<(Biquaternion, Biquaternion)> {
    let e = z.eta.bq();
    let pc = plus(z.eta) * z.c;
    let qp = (e - Biquaternion::I).inv().map_err(|_| Error::PoleChart)? * pc;
    let qm = (e + Biquaternion::I).inv().map_err(|_| Error::PoleChart)? * pc;
    Ok((qp, qm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bq(r: [f64; 8]) -> Biquaternion {
        Biquaternion::from_reals(r)
    }

    fn eta(x: f64, y: f64, z: f64) -> UnitImaginary {
        UnitImaginary::new(x, y, z).unwrap()
    }

    #[test]
    fn alpha_membership() {
        let e = eta(0.3, -0.4, 1.0);
        let c = bq([1.0, 0.2, -0.3, 0.0, 0.5, 0.0, 0.1, 0.9]);
        let a = AlphaPlane { c, eta: e };
        assert!(alpha_contains(&a, c));
        let d = bq([0.7, -1.0, 0.2, 0.3, 0.1, 0.4, -0.5, 0.2]);
        assert!(alpha_contains(&a, c + minus(e) * d));
        let a = AlphaPlane { c: Biquaternion::ZERO, eta: UnitImaginary::I };
        assert!(!alpha_contains(&a, Biquaternion::ONE));
        let b = BetaPlane { c, eta: e };
        assert!(beta_contains(&b, c + d * minus(e)));
    }

    #[test]
    fn intersections() {
        let (e1, e2) = (eta(1.0, 0.2, 0.0), eta(-0.3, 0.5, 0.8));
        let c1 = bq([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]);
        let d = bq([1.0, -1.0, 0.5, 0.0, 0.3, 0.0, -0.2, 0.4]);
        let a = AlphaPlane { c: c1, eta: e1 };
        let b = BetaPlane { c: c1 + minus(e1) * d, eta: e2 };
        assert!(planes_intersect(&a, &b));
        let l = null_line_from(&a, &b).unwrap();
        assert!(a.contains(l.p) && b.contains(l.p));
        let a = AlphaPlane { c: Biquaternion::ONE, eta: UnitImaginary::I };
        let b = BetaPlane { c: Biquaternion::ZERO, eta: UnitImaginary::I };
        assert!(!planes_intersect(&a, &b));
        assert_eq!(null_line_from(&a, &b), Err(Error::NoIntersection));
        let a = AlphaPlane { c: Biquaternion::ZERO, eta: UnitImaginary::I };
        let b = BetaPlane { c: Biquaternion::ZERO, eta: UnitImaginary::J };
        let l = null_line_from(&a, &b).unwrap();
        assert_eq!((l.p, l.eta1, l.eta2), (Biquaternion::ZERO, UnitImaginary::I, UnitImaginary::J));
    }

    #[test]
    fn nullity() {
        let v = minus(eta(0.2, 0.9, -0.1)) * bq([0.3, 1.0, 0.0, -2.0, 0.4, 0.1, 0.2, 0.0]) * minus(eta(1.0, 1.0, 1.0));
        assert!(is_null(v));
        assert!(!is_null(Biquaternion::ONE));
        assert!(is_null(Biquaternion::ZERO));
    }

    #[test]
    fn direction_fallback_for_opposite_structures() {
        let l = NullLine::new(Biquaternion::ZERO, -UnitImaginary::I, UnitImaginary::I);
        let v = l.direction();
        assert!((v.norm() - 1.0).abs() < 1e-14);
        assert!(null_residual(v) < 1e-15);
        assert!(l.contains(l.point(Complex64::new(0.3, -2.0))));
    }

    #[test]
    fn chart_examples() {
        let h = NullHyperplane { q0: Biquaternion::ZERO, eta1: eta(0.0, 0.0, 1.0), eta2: eta(0.0, 1.0, 0.0) };
        let l = NullLine::new(Biquaternion::ZERO, eta(1.0, 0.0, 0.0), eta(1.0, 0.3, 0.0));
        assert_eq!(chart_coords(&h, &l).unwrap(), Biquaternion::ZERO);
        let l = NullLine::new(bq([0.3, -0.2, 1.0, 0.5, 0.1, 0.0, -0.4, 0.2]), eta(1.0, 0.1, -0.5), eta(0.2, 1.0, 0.3));
        let q = chart_coords(&h, &l).unwrap();
        assert!(h.contains(q) && l.contains(q));
        let l = NullLine::new(l.p, h.eta1, l.eta2);
        assert_eq!(chart_coords(&h, &l), Err(Error::ChartSingular));
    }

    #[test]
    fn minkowski_coordinates() {
        let m = mink_convert(Biquaternion::ONE);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((m.z - s).norm() < 1e-16 && (m.zt - s).norm() < 1e-16);
        assert_eq!((m.w, m.wt), (Complex64::new(0.0, 0.0), Complex64::new(0.0, -0.0)));
        let q = bq([0.3, -0.2, 1.0, 0.5, 0.1, 0.0, -0.4, 0.2]);
        assert!(mink_unconvert(&mink_convert(q)).max_abs_diff(q) < 1e-15);
        let r = mink_convert(bq([0.3, -0.2, 1.0, 0.5, 0.0, 0.0, 0.0, 0.0]));
        assert!((r.zt - r.z.conj()).norm() < 1e-16 && (r.wt + r.w.conj()).norm() < 1e-16);
    }

    #[test]
    fn klein_points() {
        let z = AlphaPlane { c: Biquaternion::ZERO, eta: UnitImaginary::J };
        assert_eq!(klein_intersections(&z).unwrap(), (Biquaternion::ZERO, Biquaternion::ZERO));
        let z = AlphaPlane { c: bq([0.3, -0.2, 1.0, 0.5, 0.1, 0.0, -0.4, 0.2]), eta: eta(0.4, 0.5, 0.6) };
        let (qp, qm) = klein_intersections(&z).unwrap();
        assert!(z.contains(qp) && z.contains(qm));
        assert!((pi(Sign::Plus, Biquaternion::I) * qp).norm() < 1e-14);
        assert!((pi(Sign::Minus, Biquaternion::I) * qm).norm() < 1e-14);
        let z = AlphaPlane { c: Biquaternion::ONE, eta: UnitImaginary::I };
        assert_eq!(klein_intersections(&z), Err(Error::PoleChart));
    }
}
