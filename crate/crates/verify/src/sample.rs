//! Random draws of library values.

use num_complex::Complex64;
use rand::Rng;
use twistor_core::ambitwistor::NullLine;
use twistor_core::{Biquaternion, Quaternion, UnitImaginary};

pub fn uniform(rng: &mut impl Rng, a: f64, b: f64) -> f64 {
    rng.random_range(a..b)
}

pub fn quaternion(rng: &mut impl Rng, s: f64) -> Quaternion {
    Quaternion::new(uniform(rng, -s, s), uniform(rng, -s, s), uniform(rng, -s, s), uniform(rng, -s, s))
}

pub fn biquaternion(rng: &mut impl Rng, s: f64, s_im: f64) -> Biquaternion {
    let re = quaternion(rng, s);
    Biquaternion::new(re, quaternion(rng, s_im))
}

pub fn complex(rng: &mut impl Rng, s: f64) -> Complex64 {
    Complex64::new(uniform(rng, -s, s), uniform(rng, -s, s))
}

pub fn unit_imaginary(rng: &mut impl Rng) -> UnitImaginary {
    loop {
        let (x, y, z) = (uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
        let n = x * x + y * y + z * z;
        if n > 1e-2 && n <= 1.0 {
            return UnitImaginary::new(x, y, z).expect("nonzero vector");
        }
    }
}

/// A complex 2×2 matrix `[a, b, c, d]` with `|ad − bc| > 0.1`.
pub fn gl2(rng: &mut impl Rng) -> [Complex64; 4] {
    loop {
        let m = [complex(rng, 1.0), complex(rng, 1.0), complex(rng, 1.0), complex(rng, 1.0)];
        if (m[0] * m[3] - m[1] * m[2]).norm() > 0.1 {
            return m;
        }
    }
}

/// A nonzero CP¹ representative.
pub fn cp1(rng: &mut impl Rng) -> (Complex64, Complex64) {
    loop {
        let (a, b) = (complex(rng, 1.0), complex(rng, 1.0));
        if a.norm() + b.norm() > 1e-2 {
            return (a, b);
        }
    }
}

/// `true` if `1 + q q̄` stays at least `0.5` in modulus along `a → b`.
pub fn avoids_pole(a: Biquaternion, b: Biquaternion) -> bool {
    (0..=32).all(|k| {
        let q = a + (b - a) * (k as f64 / 32.0);
        (Complex64::new(1.0, 0.0) + q.reduced_norm()).norm() >= 0.5
    })
}

/// A generic null line whose segment `t ∈ [0, 1]` avoids the BPST pole.
pub fn tame_line(rng: &mut impl Rng) -> NullLine {
    loop {
        let l = NullLine::new(biquaternion(rng, 0.5, 0.125), unit_imaginary(rng), unit_imaginary(rng));
        if avoids_pole(l.p, l.point(Complex64::new(1.0, 0.0))) {
            return l;
        }
    }
}

/// A point of ℍ_ℂ away from the BPST pole.
pub fn tame_point(rng: &mut impl Rng) -> Biquaternion {
    loop {
        let p = biquaternion(rng, 1.0, 0.25);
        if (Complex64::new(1.0, 0.0) + p.reduced_norm()).norm() > 0.3 {
            return p;
        }
    }
}
