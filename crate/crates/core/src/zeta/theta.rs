//! Theta-function integral representation
//!
//! `π^{−s/2} Γ(s/2) ζ(s) = 1/(s(s−1)) + ∫₁^∞ ψ(σ) (σ^{s/2−1} + σ^{−(1+s)/2}) dσ`
//! with `ψ(σ) = Σ_{n≥1} e^{−πn²σ}`. Valid for every `s ∉ {0, 1}`.

use std::f64::consts::PI;

use super::{gamma_rel_error, EvalMethod, EvalResult, POLE_RADIUS};
use crate::error::{Error, Result};
use crate::numerics::{complex::real_pow, quadrature::integrate, recip_gamma, Complex};

const MAX_PANELS: usize = 4000;

/// `ψ(σ)` truncated once `e^{−πn²σ}` falls below `cutoff`.
pub(crate) fn psi(sigma: f64, cutoff: f64) -> f64 {
    let mut sum = 0.0;
    for n in 1.. {
        let term = (-PI * (n * n) as f64 * sigma).exp();
        sum += term;
        if term < cutoff {
            break;
        }
    }
    sum
}

/// Upper limit `U` with `e^{−πU} max(U^{x/2−1}, U^{−(1+x)/2}) < cutoff`.
fn upper_limit(x: f64, cutoff: f64) -> f64 {
    let growth = (x / 2.0 - 1.0).max(-(1.0 + x) / 2.0).max(0.0);
    let mut u = (1.0 / cutoff).ln() / PI;
    for _ in 0..50 {
        let next = ((1.0 / cutoff).ln() + growth * u.max(1.0).ln()) / PI;
        if (next - u).abs() < 1e-12 {
            break;
        }
        u = next;
    }
    u.max(1.5)
}

/// `|1/(π^{−s/2}Γ(s/2))|`: the factor that amplifies integral errors.
fn amplification(s: Complex) -> Result<f64> {
    Ok((real_pow(PI, s / 2.0) * recip_gamma(s / 2.0)?).norm())
}

/// Roundoff floor of the representation at `s`, cheap to evaluate; used by
/// the dispatcher to skip the integral where cancellation makes it useless.
pub(crate) fn roundoff_floor(s: Complex) -> Result<f64> {
    let scale = (s * (s - 1.0)).inv().norm() + 0.1;
    Ok(16.0 * f64::EPSILON * scale * amplification(s)?)
}

/// The integral term alone, `∫₁^U ψ(σ)(σ^{s/2−1} + σ^{−(1+s)/2}) dσ`.
pub(crate) fn theta_integral_term(s: Complex, abs_tol: f64) -> (Complex, f64, f64, usize) {
    let cutoff = (abs_tol / 10.0).max(1e-300);
    let upper = upper_limit(s.re, cutoff);
    let a = s / 2.0 - 1.0;
    let b = -(s + 1.0) / 2.0;
    let q = integrate(
        |sigma| {
            let l = sigma.ln();
            psi(sigma, cutoff * 1e-3) * ((a * l).exp() + (b * l).exp())
        },
        1.0,
        upper,
        abs_tol,
        0.0,
        MAX_PANELS,
    );
    (q.value, q.abs_err, q.magnitude, q.evals)
}

/// ζ(s) from the theta-function integral.
pub fn zeta_theta_integral(s: Complex, tol: f64) -> Result<EvalResult> {
    if (s - 1.0).norm() <= POLE_RADIUS {
        return Err(Error::Pole {
            at: Complex::new(1.0, 0.0),
            note: "zeta has a simple pole at s = 1 with residue 1",
        });
    }
    if s.norm() <= POLE_RADIUS {
        return Err(Error::RemovablePoint {
            at: Complex::new(0.0, 0.0),
            note: "1/(s(s-1)) and Gamma(s/2) cancel at s = 0; use the eta or reflection route",
        });
    }
    let amp = amplification(s)?;
    // Aim the integral at the accuracy ζ needs, but not below roundoff.
    let polar = (s * (s - 1.0)).inv();
    let floor = 4.0 * f64::EPSILON * (polar.norm() + 0.1);
    let abs_tol = (0.5 * tol / amp).max(floor);
    let (integral, quad_err, magnitude, evals) = theta_integral_term(s, abs_tol);
    let completed = polar + integral;
    let value = completed * real_pow(PI, s / 2.0) * recip_gamma(s / 2.0)?;
    let roundoff = 4.0 * f64::EPSILON * (polar.norm() + magnitude);
    let est_error = (quad_err + abs_tol / 10.0 + roundoff) * amp
        + gamma_rel_error(s / 2.0) * value.norm();
    Ok(EvalResult {
        value,
        method: EvalMethod::ThetaIntegral,
        terms_used: evals,
        est_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two() {
        let r = zeta_theta_integral(Complex::new(2.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-10, "{}", r.value);
        assert!(r.value.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_half() {
        let r = zeta_theta_integral(Complex::new(0.5, 0.0), 1e-12).unwrap();
        assert!((r.value.re + 1.460_354_508_809_586_8).abs() < 1e-11);
    }

    #[test]
    fn first_zero() {
        let r = zeta_theta_integral(Complex::new(0.5, 14.134_725), 1e-12).unwrap();
        assert!(r.value.norm() < 1e-5, "{}", r.value);
    }

    #[test]
    fn pole_and_removable_point() {
        assert!(matches!(
            zeta_theta_integral(Complex::new(1.0, 0.0), 1e-10),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            zeta_theta_integral(Complex::new(0.0, 0.0), 1e-10),
            Err(Error::RemovablePoint { .. })
        ));
    }

    #[test]
    fn negative_odd_integer() {
        let r = zeta_theta_integral(Complex::new(-1.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re + 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn trivial_zero_from_reciprocal_gamma() {
        let r = zeta_theta_integral(Complex::new(-4.0, 0.0), 1e-12).unwrap();
        assert_eq!(r.value.norm(), 0.0);
    }

    #[test]
    fn psi_sums_converge_fast() {
        assert!((psi(1.0, 1e-20) - 0.043_217_405_606_654_007).abs() < 1e-15);
    }
}
