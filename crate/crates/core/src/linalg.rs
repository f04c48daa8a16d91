//! Small real linear-algebra helpers over the 8 real coordinates of ℍ_ℂ.

use nalgebra::{DMatrix, DVector, SMatrix, SVector};

use crate::quat::Biquaternion;

pub type Mat8 = SMatrix<f64, 8, 8>;
pub type Vec8 = SVector<f64, 8>;

pub fn to_vec8(x: Biquaternion) -> Vec8 {
    Vec8::from_column_slice(&x.to_reals())
}

pub fn from_vec8(v: &Vec8) -> Biquaternion {
    Biquaternion::from_reals(std::array::from_fn(|k| v[k]))
}

/// Matrix of a real-linear map `ℍ_ℂ → ℍ_ℂ`.
pub fn real_matrix(f: impl Fn(Biquaternion) -> Biquaternion) -> Mat8 {
    let mut m = Mat8::zeros();
    for k in 0..8 {
        let mut e = [0.0; 8];
        e[k] = 1.0;
        m.set_column(k, &to_vec8(f(Biquaternion::from_reals(e))));
    }
    m
}

/// Solves a square system, or `None` if it is numerically singular.
pub fn solve8(a: &Mat8, b: &Vec8) -> Option<Vec8> {
    let sv = a.singular_values();
    let (max, min) = (sv.max(), sv.min());
    if max.is_nan() || max <= 0.0 || min <= 1e-12 * max {
        return None;
    }
    a.lu().solve(b)
}

pub struct LeastSquares {
    pub x: DVector<f64>,
    pub residual: DVector<f64>,
    pub condition: f64,
}

/// Minimizes `‖A x − b‖` through the normal equations.
pub fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> LeastSquares {
    let ata = a.transpose() * a;
    let atb = a.transpose() * b;
    let sv = ata.clone().singular_values();
    let condition = if sv.min() > 0.0 { sv.max() / sv.min() } else { f64::INFINITY };
    log::debug!("normal equations: {}x{} condition number {condition:e}", ata.nrows(), ata.ncols());
    let x = match ata.clone().cholesky() {
        Some(c) => c.solve(&atb),
        None => ata.svd(true, true).solve(&atb, 1e-14).unwrap_or_else(|_| DVector::zeros(a.ncols())),
    };
    let residual = a * &x - b;
    LeastSquares { x, residual, condition }
}

/// Minimum-norm solution of a possibly rank-deficient system, with the
/// residual norm.
pub fn min_norm_solve(a: &DMatrix<f64>, b: &DVector<f64>) -> (DVector<f64>, f64) {
    let svd = a.clone().svd(true, true);
    let tol = 1e-12 * svd.singular_values.max().max(1.0);
    let x = svd.solve(b, tol).unwrap_or_else(|_| DVector::zeros(a.ncols()));
    let r = (a * &x - b).norm();
    (x, r)
}
