//! Quaternions, biquaternions and unit imaginary quaternions.
//!
//! Components are always stored in the order `(w, x, y, z)` for the basis
//! `(1, 𝐢, 𝐣, 𝐤)`. A [`Biquaternion`] is a pair `re + i·im` where the
//! complex unit `i` commutes with `𝐢, 𝐣, 𝐤`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative threshold used by [`Biquaternion::inv`] and [`Quaternion::inv`].
pub const ZERO_DIVISOR_REL_TOL: f64 = 1e-12;

/// A real quaternion `w + x𝐢 + y𝐣 + z𝐤`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);
    /// The basis `e_μ = {1, 𝐢, 𝐣, 𝐤}`.
    pub const BASIS: [Quaternion; 4] = [Self::ONE, Self::I, Self::J, Self::K];

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// Embeds a complex number as `re + im·𝐢`.
    pub fn from_complex(c: Complex64) -> Self {
        Quaternion::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Real part `Re(q) = w`.
    pub fn re(self) -> f64 {
        self.w
    }

    /// Imaginary part `x𝐢 + y𝐣 + z𝐤`.
    pub fn im(self) -> Self {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inv(self) -> Result<Self> {
        let n = self.norm_sq();
        if n <= ZERO_DIVISOR_REL_TOL * (1.0 + n) {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }
}

impl Index<usize> for Quaternion {
    type Output = f64;
    fn index(&self, k: usize) -> &f64 {
        match k {
            0 => &self.w,
            1 => &self.x,
            2 => &self.y,
            3 => &self.z,
            _ => panic!("quaternion component index {k} out of range"),
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// Hamilton product, as a free function.
pub fn qmul(a: Quaternion, b: Quaternion) -> Quaternion {
    a * b
}

/// Which conjugation to apply to a biquaternion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjKind {
    /// Reverses `𝐢, 𝐣, 𝐤`, fixes `i`.
    Quaternion,
    /// Reverses `i`, fixes `𝐢, 𝐣, 𝐤`.
    Complex,
    Both,
}

/// A complexified quaternion `re + i·im`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Biquaternion {
    pub re: Quaternion,
    pub im: Quaternion,
}

impl Biquaternion {
    pub const ZERO: Biquaternion = Biquaternion::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Biquaternion = Biquaternion::new(Quaternion::ONE, Quaternion::ZERO);
    /// The complex unit `i`.
    pub const CI: Biquaternion = Biquaternion::new(Quaternion::ZERO, Quaternion::ONE);
    pub const I: Biquaternion = Biquaternion::new(Quaternion::I, Quaternion::ZERO);
    pub const J: Biquaternion = Biquaternion::new(Quaternion::J, Quaternion::ZERO);
    pub const K: Biquaternion = Biquaternion::new(Quaternion::K, Quaternion::ZERO);
    pub const BASIS: [Biquaternion; 4] = [Self::ONE, Self::I, Self::J, Self::K];

    pub const fn new(re: Quaternion, im: Quaternion) -> Self {
        Biquaternion { re, im }
    }

    pub const fn real(s: f64) -> Self {
        Biquaternion::new(Quaternion::real(s), Quaternion::ZERO)
    }

    /// The complex scalar `c.re + i·c.im`.
    pub fn scalar(c: Complex64) -> Self {
        Biquaternion::new(Quaternion::real(c.re), Quaternion::real(c.im))
    }

    /// Builds from the complex coefficients of `1, 𝐢, 𝐣, 𝐤`.
    pub fn from_coeffs(c: [Complex64; 4]) -> Self {
        Biquaternion::new(
            Quaternion::new(c[0].re, c[1].re, c[2].re, c[3].re),
            Quaternion::new(c[0].im, c[1].im, c[2].im, c[3].im),
        )
    }

    /// Builds from the 8 real components `(re.w, re.x, re.y, re.z, im.w, …)`.
    pub fn from_reals(r: [f64; 8]) -> Self {
        Biquaternion::new(Quaternion::new(r[0], r[1], r[2], r[3]), Quaternion::new(r[4], r[5], r[6], r[7]))
    }

    pub fn to_reals(self) -> [f64; 8] {
        [self.re.w, self.re.x, self.re.y, self.re.z, self.im.w, self.im.x, self.im.y, self.im.z]
    }

    /// Complex coefficient of basis element `e_k`.
    pub fn coeff(self, k: usize) -> Complex64 {
        Complex64::new(self.re[k], self.im[k])
    }

    pub fn coeffs(self) -> [Complex64; 4] {
        [self.coeff(0), self.coeff(1), self.coeff(2), self.coeff(3)]
    }

    pub fn conj(self, kind: ConjKind) -> Self {
        match kind {
            ConjKind::Quaternion => Biquaternion::new(self.re.conj(), self.im.conj()),
            ConjKind::Complex => Biquaternion::new(self.re, -self.im),
            ConjKind::Both => Biquaternion::new(self.re.conj(), -self.im.conj()),
        }
    }

    /// Quaternion conjugate `ā`.
    pub fn qconj(self) -> Self {
        self.conj(ConjKind::Quaternion)
    }

    /// Complex conjugate `a*`.
    pub fn cconj(self) -> Self {
        self.conj(ConjKind::Complex)
    }

    /// Reduced norm `a ā`, always a complex scalar.
    pub fn reduced_norm(self) -> Complex64 {
        let c = self.coeffs();
        c.iter().map(|z| z * z).sum()
    }

    /// Sum of squares of all 8 real components.
    pub fn norm_sq(self) -> f64 {
        self.re.norm_sq() + self.im.norm_sq()
    }

    /// Euclidean norm over the 8 real components.
    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Complex scalar part (the coefficient of `1`).
    pub fn scalar_part(self) -> Complex64 {
        self.coeff(0)
    }

    /// Part along `𝐢, 𝐣, 𝐤` (both banks).
    pub fn vector_part(self) -> Self {
        Biquaternion::new(self.re.im(), self.im.im())
    }

    pub fn is_zero_divisor(self) -> bool {
        self.reduced_norm().norm() < ZERO_DIVISOR_REL_TOL * (1.0 + self.norm_sq())
    }

    /// `ā / (a ā)`; fails with [`Error::ZeroDivisor`] when `a ā` vanishes
    /// relative to the size of `a`.
    pub fn inv(self) -> Result<Self> {
        if self.is_zero_divisor() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.reduced_norm();
        Ok(self.qconj() * (1.0 / n))
    }

    pub fn scale(self, s: f64) -> Self {
        Biquaternion::new(self.re.scale(s), self.im.scale(s))
    }

    /// Largest absolute difference over the 8 real components.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        self.re.max_abs_diff(other.re).max(self.im.max_abs_diff(other.im))
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(self, b: Self) -> Self {
        self * b - b * self
    }
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Biquaternion::new(q, Quaternion::ZERO)
    }
}

impl From<Complex64> for Biquaternion {
    fn from(c: Complex64) -> Self {
        Biquaternion::scalar(c)
    }
}

impl Add for Biquaternion {
    type Output = Biquaternion;
    fn add(self, o: Biquaternion) -> Biquaternion {
        Biquaternion::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for Biquaternion {
    fn add_assign(&mut self, o: Biquaternion) {
        *self = *self + o;
    }
}

impl Sub for Biquaternion {
    type Output = Biquaternion;
    fn sub(self, o: Biquaternion) -> Biquaternion {
        Biquaternion::new(self.re - o.re, self.im - o.im)
    }
}

impl SubAssign for Biquaternion {
    fn sub_assign(&mut self, o: Biquaternion) {
        *self = *self - o;
    }
}

impl Neg for Biquaternion {
    type Output = Biquaternion;
    fn neg(self) -> Biquaternion {
        Biquaternion::new(-self.re, -self.im)
    }
}

impl Mul for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, b: Biquaternion) -> Biquaternion {
        Biquaternion::new(self.re * b.re - self.im * b.im, self.re * b.im + self.im * b.re)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, s: f64) -> Biquaternion {
        self.scale(s)
    }
}

impl Mul<Complex64> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, c: Complex64) -> Biquaternion {
        Biquaternion::new(self.re.scale(c.re) - self.im.scale(c.im), self.re.scale(c.im) + self.im.scale(c.re))
    }
}

impl Mul<Biquaternion> for Complex64 {
    type Output = Biquaternion;
    fn mul(self, b: Biquaternion) -> Biquaternion {
        b * self
    }
}

impl std::iter::Sum for Biquaternion {
    fn sum<I: Iterator<Item = Biquaternion>>(iter: I) -> Self {
        iter.fold(Biquaternion::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + i({})", self.re, self.im)
    }
}

pub fn bq_mul(a: Biquaternion, b: Biquaternion) -> Biquaternion {
    a * b
}

pub fn bq_conj(a: Biquaternion, kind: ConjKind) -> Biquaternion {
    a.conj(kind)
}

pub fn bq_inv(a: Biquaternion) -> Result<Biquaternion> {
    a.inv()
}

/// A unit imaginary quaternion, i.e. a point of the twistor fibre `S²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitImaginary(Quaternion);

impl UnitImaginary {
    pub const I: UnitImaginary = UnitImaginary(Quaternion::I);
    pub const J: UnitImaginary = UnitImaginary(Quaternion::J);
    pub const K: UnitImaginary = UnitImaginary(Quaternion::K);

    /// Normalizes `(x, y, z)`; fails on the zero vector.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if !n.is_finite() || n <= 1e-300 {
            return Err(Error::NotUnitImaginary);
        }
        Ok(UnitImaginary(Quaternion::new(0.0, x / n, y / n, z / n)))
    }

    /// Projects a quaternion onto the sphere by dropping its real part and
    /// renormalizing.
    pub fn from_quaternion(q: Quaternion) -> Result<Self> {
        UnitImaginary::new(q.x, q.y, q.z)
    }

    /// Accepts `q` only if it is already a unit imaginary within `tol`.
    pub fn try_exact(q: Quaternion, tol: f64) -> Result<Self> {
        if q.w.abs() > tol || (q.norm() - 1.0).abs() > tol {
            return Err(Error::NotUnitImaginary);
        }
        UnitImaginary::from_quaternion(q)
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }

    pub fn bq(self) -> Biquaternion {
        self.0.into()
    }
}

impl Neg for UnitImaginary {
    type Output = UnitImaginary;
    fn neg(self) -> Self {
        UnitImaginary(-self.0)
    }
}

impl From<UnitImaginary> for Quaternion {
    fn from(u: UnitImaginary) -> Quaternion {
        u.0
    }
}

impl From<UnitImaginary> for Biquaternion {
    fn from(u: UnitImaginary) -> Biquaternion {
        u.bq()
    }
}
