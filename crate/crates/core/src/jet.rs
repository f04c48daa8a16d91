//! First-order jets: a biquaternion value together with its partial
//! derivatives along the eight real coordinates of ℍ_ℂ.
//!
//! Partial `k < 4` is along `e_k`; partial `k >= 4` is along `i·e_{k-4}`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quat::Biquaternion;

pub const NVARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub v: Biquaternion,
    pub d: [Biquaternion; NVARS],
}

impl Jet {
    pub fn constant(v: Biquaternion) -> Self {
        Jet { v, d: [Biquaternion::ZERO; NVARS] }
    }

    /// The coordinate jet `q` seeded at `p`.
    pub fn variable(p: Biquaternion) -> Self {
        let mut d = [Biquaternion::ZERO; NVARS];
        for (k, dk) in d.iter_mut().enumerate() {
            let e = Biquaternion::BASIS[k % 4];
            *dk = if k < 4 { e } else { Biquaternion::CI * e };
        }
        Jet { v: p, d }
    }

    pub fn map_linear(&self, f: impl Fn(Biquaternion) -> Biquaternion) -> Jet {
        Jet { v: f(self.v), d: self.d.map(&f) }
    }

    pub fn qconj(&self) -> Jet {
        self.map_linear(Biquaternion::qconj)
    }

    pub fn cconj(&self) -> Jet {
        self.map_linear(Biquaternion::cconj)
    }

    pub fn left_mul(&self, a: Biquaternion) -> Jet {
        self.map_linear(|x| a * x)
    }

    pub fn right_mul(&self, a: Biquaternion) -> Jet {
        self.map_linear(|x| x * a)
    }

    /// Complex coefficient of `e_k`, as a scalar jet.
    pub fn coord(&self, k: usize) -> Jet {
        self.map_linear(|x| Biquaternion::scalar(x.coeff(k)))
    }

    /// `d(x⁻¹) = −x⁻¹ dx x⁻¹`.
    pub fn inv(&self) -> Result<Jet> {
        let vi = self.v.inv().map_err(|_| Error::SingularField)?;
        Ok(Jet { v: vi, d: self.d.map(|dx| -(vi * dx * vi)) })
    }

    /// Applies a complex function to the scalar part; the vector part of the
    /// value is discarded.
    pub fn scalar_fn(&self, f: impl Fn(Complex64) -> Complex64, df: impl Fn(Complex64) -> Complex64) -> Jet {
        let s = self.v.scalar_part();
        let ds = df(s);
        Jet { v: Biquaternion::scalar(f(s)), d: self.d.map(|x| Biquaternion::scalar(ds * x.scalar_part())) }
    }

    /// Principal square root of the scalar part.
    pub fn sqrt(&self) -> Result<Jet> {
        let s = self.v.scalar_part();
        if s.norm() < 1e-300 || (s.re < 0.0 && s.im.abs() <= 1e-12 * s.norm()) {
            return Err(Error::BranchFailure);
        }
        Ok(self.scalar_fn(|z| z.sqrt(), |z| 0.5 / z.sqrt()))
    }

    pub fn exp(&self) -> Jet {
        self.scalar_fn(|z| z.exp(), |z| z.exp())
    }

    pub fn sin(&self) -> Jet {
        self.scalar_fn(|z| z.sin(), |z| z.cos())
    }

    pub fn cos(&self) -> Jet {
        self.scalar_fn(|z| z.cos(), |z| -z.sin())
    }

    pub fn is_finite(&self) -> bool {
        std::iter::once(&self.v).chain(self.d.iter()).all(|x| x.to_reals().iter().all(|c| c.is_finite()))
    }

    /// Derivative along a real direction given by 8 real weights.
    pub fn directional(&self, w: &[f64; NVARS]) -> Biquaternion {
        self.d.iter().zip(w).map(|(d, &c)| *d * c).sum()
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(o.d) {
            *a += b;
        }
        Jet { v: self.v + o.v, d }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.map_linear(|x| -x)
    }
}

/// Product rule with the factor order preserved.
impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut d = [Biquaternion::ZERO; NVARS];
        for (k, dk) in d.iter_mut().enumerate() {
            *dk = self.d[k] * o.v + self.v * o.d[k];
        }
        Jet { v: self.v * o.v, d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    #[test]
    fn product_rule_keeps_order() {
        let p = Biquaternion::from_reals([0.3, -0.2, 0.9, 1.1, 0.1, 0.0, -0.4, 0.2]);
        let q = Jet::variable(p);
        let sq = q * q;
        // ∂_k(q²) = e_k q + q e_k
        for k in 0..4 {
            let e = Biquaternion::BASIS[k];
            assert!(sq.d[k].max_abs_diff(e * p + p * e) < 1e-15);
        }
    }

    #[test]
    fn inverse_derivative() {
        let p = Biquaternion::from(Quaternion::new(1.0, 2.0, -1.0, 0.5));
        let q = Jet::variable(p);
        let qi = q.inv().unwrap();
        let one = q * qi;
        assert!(one.v.max_abs_diff(Biquaternion::ONE) < 1e-15);
        for d in one.d {
            assert!(d.norm() < 1e-15);
        }
    }

    #[test]
    fn sqrt_branch_cut() {
        let neg = Jet::constant(Biquaternion::real(-4.0));
        assert_eq!(neg.sqrt(), Err(Error::BranchFailure));
        let pos = Jet::variable(Biquaternion::real(4.0)).sqrt().unwrap();
        assert!((pos.v.scalar_part() - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        assert!((pos.d[0].scalar_part() - Complex64::new(0.25, 0.0)).norm() < 1e-15);
    }
}
