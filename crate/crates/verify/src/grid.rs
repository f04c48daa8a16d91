//! CSV export of BPST quantities on coordinate grids.
//!
//! Axis syntax: comma-separated entries `names=range`, where `names` is one
//! coordinate (`q0`..`q3` for real parts, `iq0`..`iq3` for imaginary parts)
//! or several joined by `+` that share the value, and `range` is either a
//! single number or `min:max:step`. Coordinates not mentioned are zero.
//! `q0+iq3=-1:1:0.25` walks the null line through the origin with direction
//! `1 + i𝐤`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use twistor_core::fct::{curvature, fct_residual, kernel_coefficient, nabla_apply, XiField};
use twistor_core::field::{Domain, Field};
use twistor_core::{Biquaternion, Result};

use crate::VerifyError;

pub const COORDS: [&str; 8] = ["q0", "q1", "q2", "q3", "iq0", "iq1", "iq2", "iq3"];

/// Upper bound on nodes per axis, against typos such as a zero-ish step.
const MAX_NODES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridField {
    /// Kernel coefficient of `∇q` for the BPST connection (complex).
    Lambda,
    /// Coefficient norm of the BPST `Ω_ℓ`.
    CurvatureNorm,
    /// `‖σ̄∇q‖` for the BPST connection.
    FctResidual,
    /// `‖ξ_BPST‖`.
    XiNorm,
}

impl GridField {
    pub const ALL: [GridField; 4] =
        [GridField::Lambda, GridField::CurvatureNorm, GridField::FctResidual, GridField::XiNorm];

    pub fn name(self) -> &'static str {
        match self {
            GridField::Lambda => "lambda",
            GridField::CurvatureNorm => "curvature_norm",
            GridField::FctResidual => "fct_residual",
            GridField::XiNorm => "xi_norm",
        }
    }

    pub fn evaluate(self, p: Biquaternion) -> Result<Complex64> {
        let xi = XiField::bpst();
        let q = Field::identity(Domain::Complex);
        let real = |x: f64| Complex64::new(x, 0.0);
        match self {
            GridField::Lambda => Ok(kernel_coefficient(&nabla_apply(&xi, &q, p)?)),
            GridField::CurvatureNorm => Ok(real(curvature(&xi, p)?.0.norm())),
            GridField::FctResidual => Ok(real(fct_residual(&xi, &q, p)?)),
            GridField::XiNorm => Ok(real(xi.eval(p)?.norm())),
        }
    }
}

impl FromStr for GridField {
    type Err = VerifyError;
    fn from_str(s: &str) -> std::result::Result<Self, VerifyError> {
        GridField::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| VerifyError::UnknownField(s.into()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub coords: Vec<usize>,
    pub nodes: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxisSpec {
    pub axes: Vec<Axis>,
}

fn invalid(msg: impl Into<String>) -> VerifyError {
    VerifyError::InvalidAxes(msg.into())
}

fn number(s: &str) -> std::result::Result<f64, VerifyError> {
    let x: f64 = s.trim().parse().map_err(|_| invalid(format!("`{s}` is not a number")))?;
    if !x.is_finite() {
        return Err(invalid(format!("`{s}` is not finite")));
    }
    Ok(x)
}

fn nodes(range: &str) -> std::result::Result<Vec<f64>, VerifyError> {
    let parts: Vec<&str> = range.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![number(v)?]),
        [a, b, s] => {
            let (min, max, step) = (number(a)?, number(b)?, number(s)?);
            if min > max {
                return Err(invalid(format!("min {min} exceeds max {max}")));
            }
            if step <= 0.0 {
                return Err(invalid(format!("step {step} must be positive")));
            }
            let span = (max - min) / step;
            if span >= MAX_NODES as f64 {
                return Err(invalid(format!("more than {MAX_NODES} nodes on one axis")));
            }
            let n = (span + 1e-9).floor() as usize + 1;
            Ok((0..n).map(|k| min + step * k as f64).collect())
        }
        _ => Err(invalid(format!("`{range}` is neither a value nor min:max:step"))),
    }
}

impl AxisSpec {
    pub fn row_count(&self) -> usize {
        self.axes.iter().map(|a| a.nodes.len()).product()
    }

    /// Points in row order: the first axis varies slowest.
    pub fn points(&self) -> Vec<[f64; 8]> {
        let mut out = vec![[0.0; 8]];
        for axis in &self.axes {
            out = out
                .into_iter()
                .flat_map(|p| {
                    axis.nodes.iter().map(move |&x| {
                        let mut p = p;
                        for &c in &axis.coords {
                            p[c] = x;
                        }
                        p
                    })
                })
                .collect();
        }
        out
    }
}

impl FromStr for AxisSpec {
    type Err = VerifyError;
    fn from_str(s: &str) -> std::result::Result<Self, VerifyError> {
        let mut seen = [false; 8];
        let mut axes = Vec::new();
        for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (names, range) = entry.split_once('=').ok_or_else(|| invalid(format!("`{entry}` lacks `=`")))?;
            let mut coords = Vec::new();
            for name in names.split('+').map(str::trim) {
                let c = COORDS
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| invalid(format!("unknown coordinate `{name}`")))?;
                if std::mem::replace(&mut seen[c], true) {
                    return Err(invalid(format!("coordinate `{name}` given twice")));
                }
                coords.push(c);
            }
            axes.push(Axis { coords, nodes: nodes(range)? });
        }
        if axes.is_empty() {
            return Err(invalid("no axes given"));
        }
        Ok(AxisSpec { axes })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridExport {
    pub field: GridField,
    pub path: PathBuf,
    pub rows: usize,
    /// Rows whose value is the `NaN` sentinel.
    pub singular: usize,
}

fn fmt_value(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "NaN".into()
    }
}

/// Evaluates `field` at every node and writes
/// `q0,…,iq3,value,value_im` rows with 17 significant digits.
pub fn export_grid(field: GridField, axes: &AxisSpec, path: &Path) -> std::result::Result<GridExport, VerifyError> {
    let mut csv = COORDS.join(",");
    csv.push_str(",value,value_im\n");
    let mut rows = 0;
    let mut singular = 0;
    for p in axes.points() {
        let v = field
            .evaluate(Biquaternion::from_reals(p))
            .ok()
            .filter(|v| v.re.is_finite() && v.im.is_finite())
            .unwrap_or_else(|| {
                singular += 1;
                Complex64::new(f64::NAN, f64::NAN)
            });
        for x in p {
            let _ = write!(csv, "{},", fmt_value(x));
        }
        let _ = writeln!(csv, "{},{}", fmt_value(v.re), fmt_value(v.im));
        rows += 1;
    }
    let mut file = std::fs::File::create(path)?;
    file.write_all(csv.as_bytes())?;
    Ok(GridExport { field, path: path.to_path_buf(), rows, singular })
}
