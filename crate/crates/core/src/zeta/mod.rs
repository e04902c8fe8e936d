//! Evaluation of ζ(s) by several independent routes.
//!
//! | method           | region                                   |
//! |------------------|------------------------------------------|
//! | `Dirichlet`      | `re(s) > 1.05`                           |
//! | `Eta`            | `re(s) > −1`, `1 − 2^{1−s}` not near zero |
//! | `ThetaIntegral`  | `s ∉ {0, 1}`                              |
//! | `Reflection`     | `re(s) < 0`                              |
//!
//! [`zeta`] picks one automatically; the others are public so callers can
//! cross-check them against each other.

mod dirichlet;
mod eta;
mod reflect;
mod series;
mod theta;

use std::fmt;

pub use dirichlet::{u_v_decompose, zeta_dirichlet, DIRICHLET_MARGIN};
pub use eta::zeta_eta;
pub use reflect::{reflection_factor, zeta_reflect};
pub use series::{laurent_coeffs, taylor_series_eval, zeta_derivative, LaurentCoefficient};
pub use theta::zeta_theta_integral;

use crate::error::{Error, Result};
use crate::numerics::Complex;

/// `|s − 1|` at or below this is treated as the pole.
pub const POLE_RADIUS: f64 = 1e-9;

/// Default tolerance used by callers that do not pass one.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalMethod {
    Dirichlet,
    Eta,
    ThetaIntegral,
    Reflection,
    Auto,
}

impl EvalMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalMethod::Dirichlet => "dirichlet",
            EvalMethod::Eta => "eta",
            EvalMethod::ThetaIntegral => "theta_integral",
            EvalMethod::Reflection => "reflection",
            EvalMethod::Auto => "auto",
        }
    }
}

impl fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for EvalMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dirichlet" => Ok(EvalMethod::Dirichlet),
            "eta" => Ok(EvalMethod::Eta),
            "theta_integral" | "theta" => Ok(EvalMethod::ThetaIntegral),
            "reflection" => Ok(EvalMethod::Reflection),
            "auto" => Ok(EvalMethod::Auto),
            other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        }
    }
}

/// A ζ value together with how it was obtained.
///
/// `method` is the route actually taken, never `Auto`. `est_error` is an
/// absolute error estimate including truncation and roundoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex,
    pub method: EvalMethod,
    pub terms_used: usize,
    pub est_error: f64,
}

impl EvalResult {
    /// `est_error ≤ tol·max(1, |value|)`: absolute for small values,
    /// relative near the pole.
    pub fn meets(&self, tol: f64) -> bool {
        self.est_error <= tol * self.value.norm().max(1.0)
    }
}

/// Relative error model for the Gamma approximation at `s`.
pub(crate) fn gamma_rel_error(s: Complex) -> f64 {
    let m = s.norm();
    2e-15 * (4.0 + m * (2.0 + m).ln())
}

fn pole_error() -> Error {
    Error::Pole {
        at: Complex::new(1.0, 0.0),
        note: "zeta has a simple pole at s = 1 (residue 1)",
    }
}

/// ζ(s) with automatic method selection.
///
/// `re(s) ≥ 1.5` sums the Dirichlet series and `re(s) ≤ −0.5` reflects.
/// In between the theta integral is tried first; where its cancellation
/// cannot reach `tol` (large `|im(s)|`) the accelerated eta series is used.
/// If neither reaches `tol` a [`Error::Precision`] is returned.
pub fn zeta(s: Complex, tol: f64) -> Result<EvalResult> {
    if (s - 1.0).norm() <= POLE_RADIUS {
        return Err(pole_error());
    }
    if s.re >= 1.5 {
        return zeta_dirichlet(s, tol);
    }
    if s.re <= -0.5 {
        return zeta_reflect(s, tol);
    }
    let mut best: Option<EvalResult> = None;
    let theta_viable = s.norm() > POLE_RADIUS
        && theta::roundoff_floor(s)
            .map(|f| f <= 0.5 * tol * (0.5 / (s - 1.0).norm()).max(1.0))
            .unwrap_or(false);
    if theta_viable {
        let r = zeta_theta_integral(s, tol)?;
        if r.meets(tol) {
            return Ok(r);
        }
        best = Some(r);
    }
    if let Ok(r) = zeta_eta(s, tol) {
        if r.meets(tol) {
            return Ok(r);
        }
        if best.is_none_or(|b| r.est_error < b.est_error) {
            best = Some(r);
        }
    }
    if s.re < 0.0 {
        if let Ok(r) = zeta_reflect(s, tol) {
            if r.meets(tol) {
                return Ok(r);
            }
        }
    }
    Err(Error::Precision {
        tol,
        achieved: best.map_or(f64::INFINITY, |b| b.est_error),
    })
}

/// ζ(s) by an explicitly chosen method (`Auto` defers to [`zeta`]).
pub fn zeta_with(s: Complex, tol: f64, method: EvalMethod) -> Result<EvalResult> {
    match method {
        EvalMethod::Auto => zeta(s, tol),
        EvalMethod::Dirichlet => zeta_dirichlet(s, tol),
        EvalMethod::Eta => zeta_eta(s, tol),
        EvalMethod::ThetaIntegral => zeta_theta_integral(s, tol),
        EvalMethod::Reflection => zeta_reflect(s, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn dispatcher_examples() {
        let r = zeta(Complex::new(2.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-12);
        assert_eq!(r.method, EvalMethod::Dirichlet);

        let r = zeta(Complex::new(0.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re + 0.5).abs() < 1e-12);
        assert_eq!(r.method, EvalMethod::Eta);

        assert!(matches!(zeta(Complex::new(1.0, 0.0), 1e-12), Err(Error::Pole { .. })));
        assert!(matches!(zeta(Complex::new(1.0 + 1e-10, 0.0), 1e-12), Err(Error::Pole { .. })));
    }

    #[test]
    fn region_policy() {
        let m = |re, im| zeta(Complex::new(re, im), 1e-12).unwrap().method;
        assert_eq!(m(1.5, 3.0), EvalMethod::Dirichlet);
        assert_eq!(m(-0.5, 3.0), EvalMethod::Reflection);
        assert_eq!(m(0.5, 3.0), EvalMethod::ThetaIntegral);
        assert_eq!(m(0.5, 80.0), EvalMethod::Eta);
    }

    #[test]
    fn near_pole_is_relative() {
        let s = 1.0 + 1e-6;
        let h = s - 1.0;
        let r = zeta(Complex::new(s, 0.0), 1e-12).unwrap();
        // ζ(1 + h) = 1/h + γ + γ₁'h with |γ₁'| < 0.1
        let expected = 1.0 / h + 0.577_215_664_901_532_9;
        assert!((r.value.re - expected).abs() < 1e-6, "{}", r.value.re);
    }

    #[test]
    fn method_names_round_trip() {
        for m in [
            EvalMethod::Dirichlet,
            EvalMethod::Eta,
            EvalMethod::ThetaIntegral,
            EvalMethod::Reflection,
            EvalMethod::Auto,
        ] {
            assert_eq!(m.as_str().parse::<EvalMethod>().unwrap(), m);
        }
        assert!("euler".parse::<EvalMethod>().is_err());
    }
}
