//! Derivatives, Taylor sums and Laurent coefficients of ζ.

use super::dirichlet::{check_region, scaled_tail_integral, tail_bound, terms_for};
use super::{zeta, DEFAULT_TOL, POLE_RADIUS};
use crate::error::{Error, Result};
use crate::numerics::{cis_pi, Complex};

const FD_STEP: f64 = 1e-5;

fn ln_factorial(k: u32) -> f64 {
    (1..=k).map(|j| (j as f64).ln()).sum()
}

/// `Σ_{n≤N} (ln n)^k n^{−s} / k!`, smallest terms first.
fn scaled_partial_sum(s: Complex, k: u32, n: usize) -> Complex {
    let ln_kfact = ln_factorial(k);
    let mut sum = Complex::new(0.0, 0.0);
    for m in (2..=n).rev() {
        let l = (m as f64).ln();
        let mag = (-s.re * l + k as f64 * l.ln() - ln_kfact).exp();
        let (sn, cs) = (-s.im * l).sin_cos();
        sum += Complex::new(mag * cs, mag * sn);
    }
    if k == 0 {
        sum += 1.0;
    }
    sum
}

/// `ζ^{(k)}(s)/k!` from the termwise series `(−1)^k Σ (ln n)^k n^{−s}`,
/// valid for `re(s) > 1.05`.
fn taylor_coefficient(s: Complex, k: u32) -> Result<Complex> {
    check_region(s)?;
    let trial = 64;
    let guess = scaled_partial_sum(s, k, trial)
        + scaled_tail_integral(s - 1.0, (trial as f64 + 0.5).ln(), k);
    let target = 1e-15 * guess.norm().max(1e-300) * ln_factorial(k).exp();
    let n = terms_for(s, k, target)?;
    debug_assert!(tail_bound(s, k, n) <= target);
    let c = scaled_partial_sum(s, k, n) + scaled_tail_integral(s - 1.0, (n as f64 + 0.5).ln(), k);
    Ok(if k % 2 == 1 { -c } else { c })
}

/// The k-th derivative of ζ at `s`.
///
/// For `re(s) > 1.05` the series is differentiated termwise; elsewhere
/// `k = 1, 2` fall back to central differences with step `1e-5`,
/// Richardson-extrapolated once.
pub fn zeta_derivative(s: Complex, k: u32) -> Result<Complex> {
    if k == 0 {
        return Ok(zeta(s, DEFAULT_TOL)?.value);
    }
    if s.re > 1.0 + super::DIRICHLET_MARGIN {
        return Ok(taylor_coefficient(s, k)? * ln_factorial(k).exp());
    }
    if k > 2 || (s - 1.0).norm() <= 4.0 * FD_STEP + POLE_RADIUS {
        return Err(Error::Region {
            method: "zeta_derivative",
            at: s,
        });
    }
    let f = |z: Complex| zeta(z, DEFAULT_TOL).map(|r| r.value);
    let centre = if k == 2 { f(s)? } else { Complex::new(0.0, 0.0) };
    let difference = |h: f64| -> Result<Complex> {
        let plus = f(s + h)?;
        let minus = f(s - h)?;
        Ok(match k {
            1 => (plus - minus) / (2.0 * h),
            _ => (plus - 2.0 * centre + minus) / (h * h),
        })
    };
    let coarse = difference(FD_STEP)?;
    let fine = difference(FD_STEP / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Taylor polynomial of degree `degree` for ζ about `s0`, evaluated at `s`.
pub fn taylor_series_eval(s0: Complex, degree: u32, s: Complex) -> Result<Complex> {
    check_region(s0)?;
    let dist = (s - s0).norm();
    let radius = (s0 - 1.0).norm();
    if dist >= radius {
        return Err(Error::Radius { dist, radius });
    }
    let offset = s - s0;
    let mut power = Complex::new(1.0, 0.0);
    let mut sum = Complex::new(0.0, 0.0);
    for k in 0..=degree {
        sum += taylor_coefficient(s0, k)? * power;
        power *= offset;
    }
    Ok(sum)
}

/// One Laurent coefficient `A_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentCoefficient {
    pub n: i32,
    pub value: Complex,
}

/// Minimum distance between the contour and the pole at `s = 1`.
pub const CONTOUR_MARGIN: f64 = 0.1;

/// Laurent coefficients `A_n = (1/2πi) ∮ ζ(s) (s − s0)^{−n−1} ds` on the
/// circle `|s − s0| = radius`, by the equal-node trapezoidal rule.
pub fn laurent_coeffs(
    s0: Complex,
    radius: f64,
    n_min: i32,
    n_max: i32,
    nodes: usize,
) -> Result<Vec<LaurentCoefficient>> {
    if nodes < 64 {
        return Err(Error::InvalidArgument(format!("nodes = {nodes}; at least 64 required")));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    if n_min > n_max {
        return Err(Error::InvalidArgument("n_min exceeds n_max".into()));
    }
    let distance = ((s0 - 1.0).norm() - radius).abs();
    if distance < CONTOUR_MARGIN {
        return Err(Error::Contour { distance });
    }
    let m = nodes as i64;
    let samples = (0..m)
        .map(|j| {
            let s = s0 + cis_pi(2.0 * j as f64 / m as f64) * radius;
            zeta(s, DEFAULT_TOL).map(|r| r.value)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((n_min..=n_max)
        .map(|n| {
            let sum: Complex = samples
                .iter()
                .enumerate()
                .map(|(j, &z)| {
                    let idx = (n as i64 * j as i64).rem_euclid(m);
                    z * cis_pi(-2.0 * idx as f64 / m as f64)
                })
                .sum();
            LaurentCoefficient {
                n,
                value: sum / m as f64 * radius.powi(-n),
            }
        })
        .collect())
}
