//! The completed ξ function, functional-equation checks and the
//! `f^k = (−f)^k e^{−iπk}` branch probe.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{cis_pi, complex::real_pow, complex_pow, recip_gamma, BranchSpec, Complex};
use crate::zeta::{reflection_factor, zeta, zeta_theta_integral, DEFAULT_TOL};

/// Half-width of the symmetric stencil used at removable points of the
/// product form.
pub const LIMIT_STEP: f64 = 1e-6;

/// Whether the leading 1/2 is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XiConvention {
    #[default]
    Half,
    Unit,
}

impl XiConvention {
    pub fn factor(self) -> f64 {
        match self {
            XiConvention::Half => 0.5,
            XiConvention::Unit => 1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            XiConvention::Half => "half",
            XiConvention::Unit => "unit",
        }
    }
}

impl std::str::FromStr for XiConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(XiConvention::Half),
            "unit" => Ok(XiConvention::Unit),
            other => Err(Error::InvalidArgument(format!("unknown convention `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiValue {
    pub value: Complex,
    pub prefactor_convention: XiConvention,
}

/// Points where `s(s−1) π^{−s/2} Γ(s/2) ζ(s)` is `0·∞`: 0, 1 and the
/// trivial zeros, where the Γ pole meets the ζ zero.
fn removable_point(s: Complex) -> Option<f64> {
    if s.im.abs() >= LIMIT_STEP {
        return None;
    }
    let mut candidates = vec![0.0, 1.0];
    if s.re < -1.0 {
        let even = 2.0 * (s.re / 2.0).round();
        candidates.push(even);
    }
    candidates
        .into_iter()
        .find(|&r| (s - Complex::new(r, 0.0)).norm() < LIMIT_STEP)
}

/// `s(s−1) π^{−s/2} Γ(s/2) ζ(s)` away from removable points.
fn xi_product(s: Complex) -> Result<Complex> {
    let z = zeta(s, DEFAULT_TOL)?.value;
    Ok(s * (s - 1.0) * real_pow(PI, -s / 2.0) * z / recip_gamma(s / 2.0)?)
}

/// `ξ(s) = c · s(s−1) π^{−s/2} Γ(s/2) ζ(s)` with `c` set by `convention`.
///
/// Within [`LIMIT_STEP`] of 0, 1 or a trivial zero the value is
/// interpolated from `ξ(r ± LIMIT_STEP)`.
pub fn xi(s: Complex, convention: XiConvention) -> Result<XiValue> {
    let raw = match removable_point(s) {
        Some(r) => {
            let plus = xi_product(Complex::new(r + LIMIT_STEP, 0.0))?;
            let minus = xi_product(Complex::new(r - LIMIT_STEP, 0.0))?;
            let slope = (plus - minus) / (2.0 * LIMIT_STEP);
            (plus + minus) / 2.0 + slope * (s - r)
        }
        None => xi_product(s)?,
    };
    Ok(XiValue {
        value: raw * convention.factor(),
        prefactor_convention: convention,
    })
}

fn relative(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / a.norm().max(1.0)
}

/// `|ζ(s) − 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)| / max(1, |ζ(s)|)`.
///
/// On the left half-plane the left side comes from the theta integral so
/// that the reflection formula is not checked against itself.
pub fn functional_equation_residual(s: Complex) -> Result<f64> {
    let guard = 1e-6;
    if s.norm() < guard || (s - 1.0).norm() < guard {
        return Err(Error::Pole {
            at: Complex::new(s.re.round(), 0.0),
            note: "the functional equation is singular at s = 0 and s = 1",
        });
    }
    let k = s.re.round();
    if k >= 1.0 && (s - Complex::new(k, 0.0)).norm() < guard {
        return Err(Error::Pole {
            at: Complex::new(k, 0.0),
            note: "Gamma(1 - s) has a pole at positive integer s",
        });
    }
    let lhs = if s.re <= -0.5 {
        match zeta_theta_integral(s, DEFAULT_TOL) {
            Ok(r) if r.meets(1e-10) => r.value,
            _ => zeta(s, DEFAULT_TOL)?.value,
        }
    } else {
        zeta(s, DEFAULT_TOL)?.value
    };
    let one = Complex::new(1.0, 0.0);
    let rhs = reflection_factor(s)? * zeta(one - s, DEFAULT_TOL)?.value;
    Ok(relative(lhs, rhs))
}

/// `|ξ(s) − ξ(1−s)| / max(1, |ξ(s)|)`.
pub fn xi_symmetry_residual(s: Complex) -> Result<f64> {
    let a = xi(s, XiConvention::Half)?.value;
    let b = xi(Complex::new(1.0, 0.0) - s, XiConvention::Half)?.value;
    Ok(relative(a, b))
}

/// Summary of [`xi_symmetry_residual`] over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryScan {
    pub points: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub argmax: Complex,
}

/// [`xi_symmetry_residual`] on an `n × n` grid over
/// `[re_min, re_max] × [im_min, im_max]`, endpoints included.
pub fn xi_symmetry_scan(re_min: f64, re_max: f64, im_min: f64, im_max: f64, n: usize) -> Result<SymmetryScan> {
    if n < 2 {
        return Err(Error::InvalidArgument("the grid needs at least 2 points per side".into()));
    }
    let at = |a: f64, b: f64, k: usize| a + (b - a) * k as f64 / (n - 1) as f64;
    let rows = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let s = Complex::new(at(re_min, re_max, k % n), at(im_min, im_max, k / n));
            Ok((s, xi_symmetry_residual(s)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let (argmax, max_residual) = rows
        .iter()
        .copied()
        .fold((rows[0].0, f64::NEG_INFINITY), |best, r| if r.1 > best.1 { r } else { best });
    Ok(SymmetryScan {
        points: rows.len(),
        max_residual,
        mean_residual: rows.iter().map(|r| r.1).sum::<f64>() / rows.len() as f64,
        argmax,
    })
}

/// `|ζ(1/2 + iy) − conj ζ(1/2 − iy)|`.
pub fn conjugate_symmetry_residual(y: f64) -> Result<f64> {
    let up = zeta(Complex::new(0.5, y), DEFAULT_TOL)?.value;
    let down = zeta(Complex::new(0.5, -y), DEFAULT_TOL)?.value;
    Ok((up - down.conj()).norm())
}

/// Both sides of `f^k = (−f)^k e^{−iπk}` with `−1` written as `e^{iπn}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eq12Check {
    pub lhs: Complex,
    pub rhs: Complex,
    pub residual: f64,
}

/// Evaluates `f^k` against `(f e^{iπn})^k e^{−iπk}`, the power taken on
/// the principal branch by [`complex_pow`].
///
/// For odd integer `n` the base is exactly `−f` and the two sides agree;
/// for even `n` it is `f` and the ratio is `e^{−iπk}`.
pub fn eq12_check(f: f64, k: f64, n_phase: f64) -> Result<Eq12Check> {
    if !(f > 0.0) || !f.is_finite() {
        return Err(Error::Domain(format!("f = {f}; a positive base is required")));
    }
    let exponent = Complex::new(k, 0.0);
    let lhs = complex_pow(Complex::new(f, 0.0), exponent, BranchSpec::PRINCIPAL)?;
    let base = cis_pi(n_phase) * f;
    let rhs = complex_pow(base, exponent, BranchSpec::PRINCIPAL)? * cis_pi(-k);
    Ok(Eq12Check {
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveFamily {
    /// `x^x`
    XPowX,
    /// `c^x`
    CPowX,
}

impl CurveFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveFamily::XPowX => "x_pow_x",
            CurveFamily::CPowX => "c_pow_x",
        }
    }
}

impl fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CurveFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x_pow_x" => Ok(CurveFamily::XPowX),
            "c_pow_x" => Ok(CurveFamily::CPowX),
            other => Err(Error::InvalidArgument(format!("unknown curve family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub x: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchCurve {
    pub family: CurveFamily,
    pub c: f64,
    pub n_phase: f64,
    pub samples: Vec<CurveSample>,
}

/// Samples `x^x` or `c^x` on an even grid over `[x_min, x_max]` with the
/// branch `n_phase`. `0^0` is taken as its limit 1.
pub fn branch_curves(
    family: CurveFamily,
    c: f64,
    n_phase: f64,
    x_min: f64,
    x_max: f64,
    samples: usize,
) -> Result<BranchCurve> {
    if samples < 2 {
        return Err(Error::InvalidArgument("at least two samples are required".into()));
    }
    if !(x_min < x_max) || !x_min.is_finite() || !x_max.is_finite() {
        return Err(Error::InvalidArgument(format!("empty interval [{x_min}, {x_max}]")));
    }
    if family == CurveFamily::CPowX && c == 0.0 {
        return Err(Error::InvalidArgument("c must be nonzero".into()));
    }
    let branch = BranchSpec::new(n_phase);
    let last = samples - 1;
    let points = (0..samples)
        .into_par_iter()
        .map(|j| {
            let x = if j == last {
                x_max
            } else {
                x_min + (x_max - x_min) * j as f64 / last as f64
            };
            let v = match family {
                CurveFamily::XPowX if x == 0.0 => Complex::new(1.0, 0.0),
                CurveFamily::XPowX => complex_pow(Complex::new(x, 0.0), Complex::new(x, 0.0), branch)?,
                CurveFamily::CPowX => complex_pow(Complex::new(c, 0.0), Complex::new(x, 0.0), branch)?,
            };
            Ok(CurveSample { x, re: v.re, im: v.im })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchCurve {
        family,
        c,
        n_phase,
        samples: points,
    })
}

/// `t = i/2 − i s`, which maps the critical line onto the real axis.
pub fn t_of_s(s: Complex) -> Complex {
    Complex::new(s.im, 0.5 - s.re)
}

/// Inverse of [`t_of_s`]: `s = 1/2 + i t`.
pub fn s_of_t(t: Complex) -> Complex {
    Complex::new(0.5 - t.im, t.re)
}
