#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use twistor_core::{Biquaternion, Quaternion, UnitImaginary};

pub type M2 = [[Complex64; 2]; 2];

/// `ℍ_ℂ ≅ M₂(ℂ)`: 𝐢 ↦ diag(i, −i), 𝐣 ↦ [[0, 1], [−1, 0]], 𝐤 ↦ [[0, i], [i, 0]],
/// with the complex unit acting as a scalar.
pub fn to_m2(x: Biquaternion) -> M2 {
    let [a, b, c, d] = x.coeffs();
    let i = Complex64::i();
    [[a + i * b, c + i * d], [-c + i * d, a - i * b]]
}

pub fn from_m2(m: M2) -> Biquaternion {
    let i = Complex64::i();
    let a = (m[0][0] + m[1][1]) / 2.0;
    let b = (m[0][0] - m[1][1]) / (2.0 * i);
    let c = (m[0][1] - m[1][0]) / 2.0;
    let d = (m[0][1] + m[1][0]) / (2.0 * i);
    Biquaternion::from_coeffs([a, b, c, d])
}

pub fn m2_mul(a: M2, b: M2) -> M2 {
    let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    r
}

pub fn m2_det(a: M2) -> Complex64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Product computed through the matrix representation.
pub fn oracle_mul(a: Biquaternion, b: Biquaternion) -> Biquaternion {
    from_m2(m2_mul(to_m2(a), to_m2(b)))
}

pub fn coord() -> impl Strategy<Value = f64> {
    -2.0..2.0f64
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    (coord(), coord(), coord(), coord()).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

pub fn biquaternion() -> impl Strategy<Value = Biquaternion> {
    (quaternion(), quaternion()).prop_map(|(re, im)| Biquaternion::new(re, im))
}

pub fn unit_imaginary() -> impl Strategy<Value = UnitImaginary> {
    (coord(), coord(), coord())
        .prop_filter("non-zero vector", |(x, y, z)| x * x + y * y + z * z > 1e-2)
        .prop_map(|(x, y, z)| UnitImaginary::new(x, y, z).unwrap())
}

pub fn complex() -> impl Strategy<Value = Complex64> {
    (coord(), coord()).prop_map(|(a, b)| Complex64::new(a, b))
}
