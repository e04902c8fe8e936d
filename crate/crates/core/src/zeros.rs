//! Zeros on the critical line from sign changes of the real function
//! `ξ(1/2 + it)`.

use std::f64::consts::PI;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{gamma::ln_gamma, Complex};
use crate::zeta::zeta;

/// Largest `t` accepted by [`compare_counts`].
pub const COUNT_T_MAX: f64 = 120.0;

/// Absolute tolerance for ζ on the line; well below what sign decisions
/// and the `1e-5` residual check need, and reachable up to `t = 120`.
pub const LINE_TOL: f64 = 1e-10;

/// Largest step for which adjacent zeros below `t = 100` stay separated.
pub const MAX_STEP: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub t_max: f64,
    pub step: f64,
    pub refine_tol: f64,
}

impl ScanConfig {
    pub fn new(t_max: f64) -> Self {
        ScanConfig {
            t_max,
            ..Self::default()
        }
    }

    pub fn with_step(self, step: f64) -> Self {
        ScanConfig { step, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step <= MAX_STEP) {
            return Err(Error::InvalidArgument(format!(
                "step = {}; must lie in (0, {MAX_STEP}]",
                self.step
            )));
        }
        if !(self.refine_tol > 0.0) {
            return Err(Error::InvalidArgument("refine_tol must be positive".into()));
        }
        if !(self.t_max > self.step) || !self.t_max.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "t_max = {} must exceed the step",
                self.t_max
            )));
        }
        Ok(())
    }
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            t_max: 50.0,
            step: 0.1,
            refine_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    pub index: usize,
    pub t: f64,
    /// `|ζ(1/2 + it)|` at the refined ordinate.
    pub residual: f64,
    pub bracket: (f64, f64),
}

/// `ξ(1/2 + it) e^{π|t|/4}` (half convention), evaluated through
/// `ln Γ` so it stays representable for large `t`.
///
/// The rescaling keeps the sign and removes the exponential decay; this is
/// what the scan brackets. Fails with a consistency error if the
/// imaginary part exceeds `1e-9·max(1, |value|)`.
pub fn xi_line_scaled(t: f64) -> Result<f64> {
    let s = Complex::new(0.5, t);
    let half = s / 2.0;
    let log_factor = -half * PI.ln() + ln_gamma(half) + PI * t.abs() / 4.0;
    let z = zeta(s, LINE_TOL)?.value;
    let v = 0.5 * s * (s - 1.0) * log_factor.exp() * z;
    if v.im.abs() > 1e-9 * v.norm().max(1.0) {
        return Err(Error::Consistency(format!(
            "xi(1/2 + {t}i) has imaginary part {:e}",
            v.im
        )));
    }
    Ok(v.re)
}

/// `ξ(1/2 + it)`, real on the critical line.
pub fn xi_line(t: f64) -> Result<f64> {
    Ok(xi_line_scaled(t)? * (-PI * t.abs() / 4.0).exp())
}

/// Grid `0, step, 2·step, …` closed at `t_max`.
fn scan_grid(config: &ScanConfig) -> Vec<f64> {
    let n = (config.t_max / config.step).floor() as usize;
    let mut grid: Vec<f64> = (0..=n).map(|j| j as f64 * config.step).collect();
    if *grid.last().unwrap() < config.t_max {
        grid.push(config.t_max);
    }
    grid
}

fn refine(mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> Result<(f64, f64)> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = xi_line_scaled(mid)?;
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// All sign changes of `ξ(1/2 + it)` on `(0, t_max]`, refined by
/// bisection to `refine_tol`.
pub fn scan_zeros(config: &ScanConfig) -> Result<Vec<ZeroRecord>> {
    config.validate()?;
    let grid = scan_grid(config);
    let values = grid
        .par_iter()
        .map(|&t| xi_line_scaled(t))
        .collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    for j in 0..grid.len() - 1 {
        let (a, b) = (values[j], values[j + 1]);
        if (a < 0.0) == (b < 0.0) {
            continue;
        }
        let (lo, hi) = refine(grid[j], grid[j + 1], a, config.refine_tol)?;
        let t = 0.5 * (lo + hi);
        let residual = zeta(Complex::new(0.5, t), LINE_TOL)?.value.norm();
        records.push(ZeroRecord {
            index: records.len() + 1,
            t,
            residual,
            bracket: (lo, hi),
        });
    }
    Ok(records)
}

/// `(T/2π) ln(T/2π) − T/2π`.
pub fn zero_count_estimate(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("T = {t}; must be positive")));
    }
    let x = t / (2.0 * PI);
    Ok(x * x.ln() - x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountComparison {
    pub counted: usize,
    pub estimated: f64,
    /// `counted − estimated`.
    pub gap: f64,
}

/// Scans up to `T` with the step and tolerance of `config` and compares the
/// count with [`zero_count_estimate`].
pub fn compare_counts(t: f64, config: &ScanConfig) -> Result<CountComparison> {
    if t > COUNT_T_MAX {
        return Err(Error::Range(format!("T = {t} exceeds {COUNT_T_MAX}")));
    }
    let estimated = zero_count_estimate(t)?;
    let counted = scan_zeros(&ScanConfig { t_max: t, ..*config })?.len();
    Ok(CountComparison {
        counted,
        estimated,
        gap: counted as f64 - estimated,
    })
}

/// Parses a zero table: one ordinate per line, `#` comment lines and blank
/// lines ignored, strictly increasing.
pub fn parse_zero_table(text: &str) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("`{line}` is not a decimal ordinate"),
        })?;
        if !v.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("`{line}` is not finite"),
            });
        }
        if let Some(&prev) = out.last() {
            if v <= prev {
                return Err(Error::Monotonicity {
                    line: line_no,
                    prev,
                    next: v,
                });
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Reads and parses a zero table file.
pub fn ingest_zero_table(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path)?;
    parse_zero_table(&text)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceComparison {
    /// `(index, scanned t, reference t)` for each ordinal present in both.
    pub pairs: Vec<(usize, f64, f64)>,
    pub max_diff: f64,
}

/// Pairs scanned zeros with reference ordinates by ordinal, restricted to
/// reference entries not beyond `t_max`.
pub fn compare_with_reference(records: &[ZeroRecord], reference: &[f64], t_max: f64) -> ReferenceComparison {
    let pairs: Vec<_> = records
        .iter()
        .zip(reference.iter().filter(|&&t| t <= t_max))
        .map(|(r, &t)| (r.index, r.t, t))
        .collect();
    let max_diff = pairs.iter().map(|&(_, a, b)| (a - b).abs()).fold(0.0, f64::max);
    ReferenceComparison { pairs, max_diff }
}
