//! Closed-form biquaternion fields with exact first derivatives.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::quat::Biquaternion;

/// Whether a field is regarded as a function on ℝ⁴ or on ℍ_ℂ ≅ ℂ⁴.
///
/// Only the assembly of differentials depends on it: real-domain fields
/// keep their whole differential in the holomorphic bank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Real,
    Complex,
}

impl Domain {
    fn join(self, other: Domain) -> Domain {
        if self == Domain::Complex || other == Domain::Complex {
            Domain::Complex
        } else {
            Domain::Real
        }
    }
}

type JetFn = dyn Fn(&Jet) -> Result<Jet> + Send + Sync;

/// A map `q ↦ F(q)` built from library primitives.
///
/// Fields are cheap to clone and evaluate by running the whole expression on
/// [`Jet`]s, so the value and all eight real partials come out together.
#[derive(Clone)]
pub struct Field {
    domain: Domain,
    f: Arc<JetFn>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("domain", &self.domain).finish_non_exhaustive()
    }
}

impl Field {
    pub fn from_jet_fn(domain: Domain, f: impl Fn(&Jet) -> Result<Jet> + Send + Sync + 'static) -> Self {
        Field { domain, f: Arc::new(f) }
    }

    /// `F(q) = q`.
    pub fn identity(domain: Domain) -> Self {
        Field::from_jet_fn(domain, |q| Ok(*q))
    }

    pub fn constant(c: Biquaternion) -> Self {
        Field::from_jet_fn(Domain::Real, move |_| Ok(Jet::constant(c)))
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn with_domain(mut self, domain: Domain) -> Self {
        self.domain = domain;
        self
    }

    pub fn jet(&self, p: Biquaternion) -> Result<Jet> {
        let out = (self.f)(&Jet::variable(p))?;
        if !out.is_finite() {
            return Err(Error::SingularField);
        }
        Ok(out)
    }

    pub fn eval(&self, p: Biquaternion) -> Result<Biquaternion> {
        self.jet(p).map(|j| j.v)
    }

    /// Central difference along real coordinate `k`, used as an oracle.
    pub fn finite_difference(&self, p: Biquaternion, k: usize, h: f64) -> Result<Biquaternion> {
        let mut r = p.to_reals();
        r[k] += h;
        let plus = self.eval(Biquaternion::from_reals(r))?;
        r[k] -= 2.0 * h;
        let minus = self.eval(Biquaternion::from_reals(r))?;
        Ok((plus - minus) * (0.5 / h))
    }

    fn unary(&self, g: impl Fn(Jet) -> Result<Jet> + Send + Sync + 'static) -> Field {
        let f = Arc::clone(&self.f);
        Field::from_jet_fn(self.domain, move |q| g(f(q)?))
    }

    fn binary(&self, other: &Field, g: impl Fn(Jet, Jet) -> Jet + Send + Sync + 'static) -> Field {
        let (a, b) = (Arc::clone(&self.f), Arc::clone(&other.f));
        Field::from_jet_fn(self.domain.join(other.domain), move |q| Ok(g(a(q)?, b(q)?)))
    }

    pub fn inv(&self) -> Field {
        self.unary(|x| x.inv())
    }

    pub fn qconj(&self) -> Field {
        self.unary(|x| Ok(x.qconj()))
    }

    pub fn cconj(&self) -> Field {
        self.unary(|x| Ok(x.cconj()))
    }

    pub fn left_mul(&self, a: Biquaternion) -> Field {
        self.unary(move |x| Ok(x.left_mul(a)))
    }

    pub fn right_mul(&self, a: Biquaternion) -> Field {
        self.unary(move |x| Ok(x.right_mul(a)))
    }

    pub fn scale(&self, c: Complex64) -> Field {
        self.right_mul(Biquaternion::scalar(c))
    }

    /// Complex coefficient of `e_k` as a scalar field.
    pub fn coord(&self, k: usize) -> Field {
        assert!(k < 4, "coordinate index {k} out of range");
        self.unary(move |x| Ok(x.coord(k)))
    }

    pub fn sqrt(&self) -> Field {
        self.unary(|x| x.sqrt())
    }

    pub fn exp(&self) -> Field {
        self.unary(|x| Ok(x.exp()))
    }

    pub fn sin(&self) -> Field {
        self.unary(|x| Ok(x.sin()))
    }

    pub fn cos(&self) -> Field {
        self.unary(|x| Ok(x.cos()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Field) -> Field {
        let (a, b) = (Arc::clone(&self.f), Arc::clone(&inner.f));
        Field::from_jet_fn(self.domain.join(inner.domain), move |q| a(&b(q)?))
    }
}

impl Add for &Field {
    type Output = Field;
    fn add(self, o: &Field) -> Field {
        self.binary(o, |a, b| a + b)
    }
}

impl Sub for &Field {
    type Output = Field;
    fn sub(self, o: &Field) -> Field {
        self.binary(o, |a, b| a - b)
    }
}

impl Mul for &Field {
    type Output = Field;
    fn mul(self, o: &Field) -> Field {
        self.binary(o, |a, b| a * b)
    }
}

impl Neg for &Field {
    type Output = Field;
    fn neg(self) -> Field {
        self.unary(|x| Ok(-x))
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for Field {
            type Output = Field;
            fn $m(self, o: Field) -> Field {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for Field {
    type Output = Field;
    fn neg(self) -> Field {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    fn sample() -> Biquaternion {
        Biquaternion::from_reals([0.4, -0.7, 0.2, 1.3, 0.0, 0.0, 0.0, 0.0])
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let q = Field::identity(Domain::Real);
        let a = Field::constant(Quaternion::new(0.5, 1.0, -2.0, 0.3).into());
        let f = &(&q * &a) * &q.inv() + q.qconj() * q.exp();
        let p = sample();
        let j = f.jet(p).unwrap();
        for k in 0..4 {
            let fd = f.finite_difference(p, k, 1e-5).unwrap();
            assert!(j.d[k].max_abs_diff(fd) < 1e-8, "k={k}");
        }
    }

    #[test]
    fn singular_inverse_is_reported() {
        let q = Field::identity(Domain::Real);
        assert_eq!(q.inv().eval(Biquaternion::ZERO), Err(Error::SingularField));
    }

    #[test]
    fn domain_propagates() {
        let r = Field::identity(Domain::Real);
        let c = Field::identity(Domain::Complex);
        assert_eq!((&r * &c).domain(), Domain::Complex);
        assert_eq!((&r + &Field::constant(Biquaternion::ONE)).domain(), Domain::Real);
    }
}
