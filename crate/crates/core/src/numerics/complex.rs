//! Complex helpers with an explicit choice of logarithm branch.
//!
//! The branch is described by a phase index `n_phase`: the number −1 is
//! written as `e^{iπ·n_phase}`, so the logarithm of a negative real `−x`
//! is `ln x + iπ·n_phase`. Odd integers reproduce `−1` exactly; other
//! values such as 0.5, 1.5 or 6 deliberately break it.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point `x + iy` of the complex plane.
pub type Complex = Complex64;

/// Largest argument for which `cosh`/`sinh`/`exp` stay finite in f64.
pub const HYPERBOLIC_LIMIT: f64 = 709.0;

/// Phase index selecting the branch of `ln(−x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchSpec {
    pub n_phase: f64,
}

impl BranchSpec {
    pub const PRINCIPAL: BranchSpec = BranchSpec { n_phase: 1.0 };

    pub fn new(n_phase: f64) -> Self {
        BranchSpec { n_phase }
    }

    /// The value `e^{iπ·n_phase}` that stands in for −1.
    pub fn minus_one(&self) -> Complex {
        cis_pi(self.n_phase)
    }
}

impl Default for BranchSpec {
    fn default() -> Self {
        Self::PRINCIPAL
    }
}

/// Reduces `x` to `[-1, 1]` modulo 2 without touching the low bits.
fn reduce_mod2(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    r
}

/// `sin(πx)`, exact (zero) at integers and exactly ±1 at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = reduce_mod2(x);
    let a = r.abs();
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (a - 0.5)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    if r < 0.0 {
        -v
    } else {
        v
    }
}

/// `cos(πx)`, exact (zero) at half-integers and exactly ±1 at integers.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let a = reduce_mod2(x).abs();
    if a <= 0.25 {
        (PI * a).cos()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).sin()
    } else {
        -(PI * (1.0 - a)).cos()
    }
}

/// `e^{iπθ}`.
pub fn cis_pi(theta: f64) -> Complex {
    Complex::new(cos_pi(theta), sin_pi(theta))
}

/// Branch-controlled logarithm.
///
/// The closed right half-plane always uses the principal value. A point
/// `z` with negative real part is written as `(−z)·(−1)` and `ln(−1)` is
/// taken as `±iπ·n_phase`, the sign following the sign of `im(z)` (with
/// `im = 0` on the positive side). `n_phase = 1` is therefore exactly the
/// principal branch.
pub fn complex_log(z: Complex, branch: BranchSpec) -> Result<Complex> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("logarithm of a non-finite value".into()));
    }
    let modulus = z.re.hypot(z.im).ln();
    if z.re >= 0.0 {
        if z.im == 0.0 {
            return Ok(Complex::new(z.re.ln(), 0.0));
        }
        return Ok(Complex::new(modulus, z.im.atan2(z.re)));
    }
    // −z lies in the open right half-plane.
    let reflected = (-z.im).atan2(-z.re);
    let phase = if z.im >= 0.0 {
        reflected + PI * branch.n_phase
    } else {
        reflected - PI * branch.n_phase
    };
    Ok(Complex::new(modulus, phase))
}

/// `e^z`, with overflow reported rather than returned as infinity.
pub fn complex_exp(z: Complex) -> Result<Complex> {
    if z.re > HYPERBOLIC_LIMIT {
        return Err(Error::Overflow(format!("exp of real part {}", z.re)));
    }
    let m = z.re.exp();
    let (s, c) = z.im.sin_cos();
    Ok(Complex::new(m * c, m * s))
}

/// `base^exponent = exp(exponent · log(base))` on the given branch.
pub fn complex_pow(base: Complex, exponent: Complex, branch: BranchSpec) -> Result<Complex> {
    if base.re == 0.0 && base.im == 0.0 {
        if exponent.re > 0.0 {
            return Ok(Complex::new(0.0, 0.0));
        }
        return Err(Error::Domain(
            "zero base with non-positive exponent real part".into(),
        ));
    }
    if base.im == 0.0 && base.re > 0.0 && exponent.im == 0.0 {
        return Ok(Complex::new(base.re.powf(exponent.re), 0.0));
    }
    if base.im == 0.0 && base.re < 0.0 && exponent.im == 0.0 {
        // |b|^x e^{iπnx}: exact zeros of cos and sin at (half-)integers.
        let x = exponent.re;
        let phase = cis_pi(branch.n_phase * x);
        let modulus = (-base.re).powf(x);
        if !modulus.is_finite() {
            return Err(Error::Overflow(format!("|{base}|^{x} overflows")));
        }
        return Ok(phase * modulus);
    }
    let log = complex_log(base, branch)?;
    complex_exp(exponent * log)
}

fn check_hyperbolic(b: f64) -> Result<()> {
    if b.abs() > HYPERBOLIC_LIMIT {
        Err(Error::Overflow(format!(
            "imaginary part {b} exceeds the hyperbolic range"
        )))
    } else {
        Ok(())
    }
}

/// `sin(a + ib) = cosh(b) sin(a) + i sinh(b) cos(a)`.
pub fn complex_sin(s: Complex) -> Result<Complex> {
    check_hyperbolic(s.im)?;
    let (sa, ca) = s.re.sin_cos();
    Ok(Complex::new(s.im.cosh() * sa, s.im.sinh() * ca))
}

/// `cos(a + ib) = cosh(b) cos(a) − i sinh(b) sin(a)`.
pub fn complex_cos(s: Complex) -> Result<Complex> {
    check_hyperbolic(s.im)?;
    let (sa, ca) = s.re.sin_cos();
    Ok(Complex::new(s.im.cosh() * ca, -s.im.sinh() * sa))
}

/// `sin(πs)` with exact argument reduction in the real part.
pub fn sin_pi_complex(s: Complex) -> Result<Complex> {
    let b = PI * s.im;
    check_hyperbolic(b)?;
    Ok(Complex::new(sin_pi(s.re) * b.cosh(), cos_pi(s.re) * b.sinh()))
}

/// `cos(πs)` with exact argument reduction in the real part.
pub fn cos_pi_complex(s: Complex) -> Result<Complex> {
    let b = PI * s.im;
    check_hyperbolic(b)?;
    Ok(Complex::new(cos_pi(s.re) * b.cosh(), -sin_pi(s.re) * b.sinh()))
}

/// `a^s` for a real `a > 0`.
pub(crate) fn real_pow(a: f64, s: Complex) -> Complex {
    let l = a.ln();
    let m = (s.re * l).exp();
    let (sn, cs) = (s.im * l).sin_cos();
    Complex::new(m * cs, m * sn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn log_of_minus_one_is_i_pi() {
        let v = complex_log(Complex::new(-1.0, 0.0), BranchSpec::PRINCIPAL).unwrap();
        assert!(close(v, Complex::new(0.0, PI), 1e-15));
    }

    #[test]
    fn log_of_e_is_one() {
        let v = complex_log(Complex::new(std::f64::consts::E, 0.0), BranchSpec::PRINCIPAL).unwrap();
        assert_eq!(v, Complex::new(1.0, 0.0));
    }

    #[test]
    fn log_on_third_branch() {
        let v = complex_log(Complex::new(-2.0, 0.0), BranchSpec::new(3.0)).unwrap();
        assert!(close(v, Complex::new(2f64.ln(), 3.0 * PI), 1e-15));
    }

    #[test]
    fn log_of_zero_is_a_domain_error() {
        assert!(matches!(
            complex_log(Complex::new(0.0, 0.0), BranchSpec::PRINCIPAL),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn principal_log_matches_std_everywhere() {
        for &(re, im) in &[(-3.0, 2.0), (-3.0, -2.0), (0.0, 1.0), (0.0, -1.0), (2.0, -5.0), (-0.5, 0.0)] {
            let z = Complex::new(re, im);
            let ours = complex_log(z, BranchSpec::PRINCIPAL).unwrap();
            assert!(close(ours, z.ln(), 1e-14), "{z}: {ours} vs {}", z.ln());
        }
    }

    #[test]
    fn integer_power() {
        let v = complex_pow(Complex::new(2.0, 0.0), Complex::new(3.0, 0.0), BranchSpec::PRINCIPAL).unwrap();
        assert_eq!(v, Complex::new(8.0, 0.0));
    }

    #[test]
    fn principal_square_root_of_minus_four() {
        let v = complex_pow(Complex::new(-4.0, 0.0), Complex::new(0.5, 0.0), BranchSpec::PRINCIPAL).unwrap();
        assert!(close(v, Complex::new(0.0, 2.0), 1e-15));
    }

    #[test]
    fn square_root_of_minus_one_on_third_branch() {
        let v = complex_pow(Complex::new(-1.0, 0.0), Complex::new(0.5, 0.0), BranchSpec::new(3.0)).unwrap();
        assert!(close(v, Complex::new(0.0, -1.0), 1e-15));
    }

    #[test]
    fn zero_base() {
        let zero = Complex::new(0.0, 0.0);
        assert_eq!(
            complex_pow(zero, Complex::new(2.0, 1.0), BranchSpec::PRINCIPAL).unwrap(),
            zero
        );
        assert!(complex_pow(zero, Complex::new(0.0, 1.0), BranchSpec::PRINCIPAL).is_err());
    }

    #[test]
    fn sin_and_cos_examples() {
        let v = complex_sin(Complex::new(0.0, 1.0)).unwrap();
        assert!(close(v, Complex::new(0.0, 1.175_201_193_643_801_4), 1e-15));
        assert_eq!(complex_cos(Complex::new(0.0, 0.0)).unwrap(), Complex::new(1.0, 0.0));
        // cosh(π) from an independent series evaluation.
        let cosh_pi: f64 = (0..40)
            .map(|k| PI.powi(2 * k) / (1..=(2 * k) as u64).map(|j| j as f64).product::<f64>())
            .sum();
        let v = complex_sin(Complex::new(PI / 2.0, PI)).unwrap();
        assert!((v.re - cosh_pi).abs() < 1e-12 && v.im.abs() < 1e-12);
        assert!((cosh_pi - 11.591_953_276).abs() < 1e-9);
    }

    #[test]
    fn hyperbolic_overflow_is_reported() {
        assert!(matches!(complex_sin(Complex::new(0.0, 800.0)), Err(Error::Overflow(_))));
        assert!(matches!(complex_cos(Complex::new(1.0, -800.0)), Err(Error::Overflow(_))));
    }

    #[test]
    fn sin_pi_is_exact_at_integers_and_halves() {
        for k in -20..=20 {
            assert_eq!(sin_pi(k as f64).abs(), 0.0);
            assert_eq!(cos_pi(k as f64 + 0.5).abs(), 0.0);
            assert_eq!(sin_pi(k as f64 + 0.5).abs(), 1.0);
        }
        assert!((sin_pi(0.3) - (0.3 * PI).sin()).abs() < 1e-15);
        assert!((cos_pi(-1.7) - (-1.7 * PI).cos()).abs() < 1e-15);
    }

    #[test]
    fn odd_phase_indices_give_minus_one() {
        for n in [-5.0, -1.0, 1.0, 3.0, 7.0] {
            let m = BranchSpec::new(n).minus_one();
            assert_eq!((m.re, m.im.abs()), (-1.0, 0.0));
        }
    }
}
