//! Alternating (eta) series with Borwein's convergence acceleration.
//!
//! `η(s) = Σ (−1)^{n−1} n^{−s}` is summed with the weights
//! `1 − d_k/d_n`, `d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)!(2i)!)`, and
//! `ζ(s) = η(s) / (1 − 2^{1−s})`. The truncation error after `n` terms is
//! bounded by `3 (1 + 2|t|) e^{π|t|/2} / ((3+√8)^n |Γ(s)| |1 − 2^{1−s}|)`.

use std::f64::consts::PI;

use super::{EvalMethod, EvalResult};
use crate::error::{Error, Result};
use crate::numerics::{complex::real_pow, recip_gamma, Complex};

/// Left edge of the region the accelerated series is used on.
pub const ETA_MIN_RE: f64 = -1.0;

/// Smallest admissible `|1 − 2^{1−s}|`.
pub const DENOMINATOR_FLOOR: f64 = 1e-3;

const MIN_TERMS: usize = 16;
// (3+√8)^380 is ~1e291; beyond that the weights overflow.
const MAX_TERMS: usize = 380;

fn ln_rate() -> f64 {
    (3.0 + 8f64.sqrt()).ln()
}

/// Normalized weights `1 − d_k/d_n` for `k = 0..n`.
fn weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut partial = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 0.0;
    for i in 0..=n {
        acc += term;
        partial.push(acc);
        let fi = i as f64;
        term *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
    }
    let dn = acc;
    partial.into_iter().map(|d| 1.0 - d / dn).collect()
}

/// `1 − 2^{1−s}`.
pub(crate) fn eta_denominator(s: Complex) -> Complex {
    Complex::new(1.0, 0.0) - real_pow(2.0, Complex::new(1.0, 0.0) - s)
}

fn truncation_bound(s: Complex, n: usize, recip_gamma_abs: f64) -> f64 {
    let t = s.im.abs();
    let ln_bound = (3.0 * (1.0 + 2.0 * t)).ln() + PI * t / 2.0 - n as f64 * ln_rate();
    ln_bound.exp() * recip_gamma_abs
}

/// ζ(s) from the accelerated eta series, for `re(s) > −1` away from the
/// zeros of `1 − 2^{1−s}`.
pub fn zeta_eta(s: Complex, tol: f64) -> Result<EvalResult> {
    if s.re <= ETA_MIN_RE {
        return Err(Error::Region { method: "eta", at: s });
    }
    let denom = eta_denominator(s);
    if denom.norm() < DENOMINATOR_FLOOR {
        return Err(Error::Region { method: "eta", at: s });
    }
    // The bound vanishes with 1/Γ at s = 0, −1, …; the one added keeps it
    // honest there, where the observed error is ~3/(3+√8)^n.
    let rg = recip_gamma(s)?.norm() + 1.0;
    let target = 0.5 * tol * denom.norm();
    let mut n = MIN_TERMS;
    while n < MAX_TERMS && truncation_bound(s, n, rg) > target {
        n += 1;
    }
    let w = weights(n);
    let mut sum = Complex::new(0.0, 0.0);
    let mut sq_weight = 0.0;
    for k in (0..n).rev() {
        let l = ((k + 1) as f64).ln();
        let mag = (-s.re * l).exp() * w[k];
        let (sn, cs) = (-s.im * l).sin_cos();
        let term = Complex::new(mag * cs, mag * sn);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        // Phase rounding grows with |t| ln k; errors add in quadrature.
        sq_weight += (mag * (2.0 + s.im.abs() * l)).powi(2);
    }
    let value = sum / denom;
    let est_error =
        (truncation_bound(s, n, rg) + 4.0 * f64::EPSILON * sq_weight.sqrt()) / denom.norm()
            + 4.0 * f64::EPSILON * value.norm();
    Ok(EvalResult {
        value,
        method: EvalMethod::Eta,
        terms_used: n,
        est_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain alternating partial sums averaged over consecutive pairs,
    /// repeated: the classical Euler-style oracle for real s > 0.
    fn averaged_eta(s: f64, terms: usize, depth: usize) -> f64 {
        let mut partial = Vec::with_capacity(terms);
        let mut acc = 0.0;
        for n in 1..=terms {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * (n as f64).powf(-s);
            partial.push(acc);
        }
        for _ in 0..depth {
            partial = partial.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        }
        *partial.last().unwrap()
    }

    #[test]
    fn zeta_half_against_averaged_partial_sums() {
        let oracle = averaged_eta(0.5, 4000, 40) / (1.0 - 2f64.sqrt());
        let r = zeta_eta(Complex::new(0.5, 0.0), 1e-13).unwrap();
        assert!((r.value.re - oracle).abs() < 1e-10, "{} {oracle}", r.value.re);
        assert!((r.value.re + 1.460_354_509).abs() < 1e-9);
    }

    #[test]
    fn zeta_zero_is_minus_half() {
        let r = zeta_eta(Complex::new(0.0, 0.0), 1e-13).unwrap();
        assert!((r.value.re + 0.5).abs() < 1e-13 && r.value.im.abs() < 1e-15);
    }

    #[test]
    fn critical_line_reference_values() {
        // ζ(1/2 + 40i) and ζ(1/2 + 100i), high-precision references.
        let cases = [
            (40.0, (0.793_044_952_561_928_7, -1.041_274_614_651_065)),
            (100.0, (2.692_619_885_681_324, -0.020_386_029_602_598_16)),
        ];
        for (t, (re, im)) in cases {
            let r = zeta_eta(Complex::new(0.5, t), 1e-12).unwrap();
            assert!((r.value - Complex::new(re, im)).norm() < 1e-11, "{t}: {}", r.value);
            assert!(r.est_error < 1e-11);
        }
    }

    #[test]
    fn weights_decrease_from_one_to_zero() {
        let w = weights(30);
        assert!(w[0] > 0.999_999 && w[0] <= 1.0);
        assert_eq!(w[30], 0.0);
        assert!(w.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn rejects_denominator_zeros_and_far_left() {
        let s = Complex::new(1.0, 2.0 * PI / 2f64.ln());
        assert!(matches!(zeta_eta(s, 1e-10), Err(Error::Region { .. })));
        assert!(matches!(zeta_eta(Complex::new(-2.0, 1.0), 1e-10), Err(Error::Region { .. })));
    }
}
