//! Reflection through the functional equation
//! `ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)`.

use std::f64::consts::PI;

use super::{
    dirichlet::{zeta_dirichlet, DIRICHLET_MARGIN},
    gamma_rel_error,
    theta::zeta_theta_integral,
    EvalMethod, EvalResult,
};
use crate::error::{Error, Result};
use crate::numerics::{complex::real_pow, gamma, sin_pi_complex, Complex};

/// The factor `2^s π^{s−1} sin(πs/2) Γ(1−s)` multiplying `ζ(1−s)`.
pub fn reflection_factor(s: Complex) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    Ok(real_pow(2.0, s) * real_pow(PI, s - one) * sin_pi_complex(s / 2.0)? * gamma(one - s)?)
}

/// ζ(s) for `re(s) < 0` from ζ(1−s).
pub fn zeta_reflect(s: Complex, tol: f64) -> Result<EvalResult> {
    if s.re >= 0.0 {
        return Err(Error::Region {
            method: "reflection",
            at: s,
        });
    }
    let factor = reflection_factor(s)?;
    let reflected = Complex::new(1.0, 0.0) - s;
    let inner_tol = if factor.norm() > 1.0 { tol / factor.norm() } else { tol };
    let inner = if reflected.re > 1.0 + DIRICHLET_MARGIN {
        zeta_dirichlet(reflected, inner_tol)?
    } else {
        zeta_theta_integral(reflected, inner_tol)?
    };
    let value = factor * inner.value;
    let est_error = factor.norm() * inner.est_error
        + (gamma_rel_error(reflected) + 8.0 * f64::EPSILON * (1.0 + s.norm())) * value.norm();
    Ok(EvalResult {
        value,
        method: EvalMethod::Reflection,
        terms_used: inner.terms_used,
        est_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_zeros() {
        for k in 1..=5 {
            let r = zeta_reflect(Complex::new(-2.0 * k as f64, 0.0), 1e-12).unwrap();
            assert!(r.value.norm() < 1e-12, "{k}: {}", r.value);
        }
    }

    #[test]
    fn minus_one_is_minus_one_twelfth() {
        // 2^{-1} π^{-2} sin(−π/2) Γ(2) ζ(2) = −(1/2)(1/π²)(π²/6).
        let oracle = -0.5 / (PI * PI) * (PI * PI / 6.0);
        let r = zeta_reflect(Complex::new(-1.0, 0.0), 1e-13).unwrap();
        assert!((r.value.re - oracle).abs() < 1e-13);
        assert!((r.value.re + 0.083_333_333).abs() < 1e-9);
    }

    #[test]
    fn region_is_enforced() {
        assert!(zeta_reflect(Complex::new(0.2, 1.0), 1e-10).is_err());
    }
}
