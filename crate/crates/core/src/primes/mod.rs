//! Prime counting against the logarithmic integral.

mod li;
mod sieve;

pub use li::{li, li_with_error, LiValue, DEFAULT_ALPHA};
pub use sieve::{primes_up_to, sieve_pi, SEGMENT, SIEVE_CAP};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::zeros::{scan_zeros, ScanConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeStats {
    pub x: f64,
    pub pi_x: u64,
    pub li_x: f64,
    pub x_over_ln_x: f64,
    /// `π(x)/li(x)`
    pub ratio_li: f64,
    /// `π(x)/(x/ln x)`
    pub ratio_pnt: f64,
    /// `li(x) − π(x)`
    pub gap: f64,
}

fn stats_from(x: f64, pi_x: u64) -> Result<PrimeStats> {
    let li_x = li(x, DEFAULT_ALPHA)?;
    let x_over_ln_x = x / x.ln();
    let p = pi_x as f64;
    Ok(PrimeStats {
        x,
        pi_x,
        li_x,
        x_over_ln_x,
        ratio_li: p / li_x,
        ratio_pnt: p / x_over_ln_x,
        gap: li_x - p,
    })
}

/// `π(x)` next to `li(x)` and `x/ln x`, for `2 ≤ x ≤` [`SIEVE_CAP`].
pub fn pnt_stats(x: f64) -> Result<PrimeStats> {
    if !(x >= 2.0) {
        return Err(Error::Domain(format!("x = {x}; must be at least 2")));
    }
    stats_from(x, sieve_pi(x)?)
}

/// Outcome of [`rh_bound_probe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhProbe {
    /// Smallest `C` with `|li(x) − π(x)| ≤ C x^{1/2+ε}` on the grid.
    pub c_min: f64,
    /// Grid point where that ratio peaks.
    pub argmax_x: f64,
    /// `li(x) − π(x) > 0` at every grid point.
    pub li_exceeds_pi: bool,
    pub points: usize,
}

/// Points per decade of the probe grid.
pub const PROBE_DENSITY: usize = 200;

/// Geometric grid from 2 to `x_max` with [`PROBE_DENSITY`] points per decade.
fn probe_grid(x_max: f64) -> Vec<f64> {
    let decades = (x_max / 2.0).log10();
    let n = (decades * PROBE_DENSITY as f64).floor() as usize;
    let mut grid: Vec<f64> = (0..=n)
        .map(|j| 2.0 * 10f64.powf(j as f64 / PROBE_DENSITY as f64))
        .collect();
    if *grid.last().unwrap() < x_max {
        grid.push(x_max);
    }
    grid
}

/// Scans `|li(x) − π(x)| / x^{1/2+ε}` over `[2, x_max]`.
pub fn rh_bound_probe(x_max: f64, eps: f64) -> Result<RhProbe> {
    if !(x_max > 2.0) || x_max > SIEVE_CAP {
        return Err(Error::Range(format!("x_max = {x_max}; must lie in (2, {SIEVE_CAP:e}]")));
    }
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::InvalidArgument(format!("eps = {eps}; must lie in (0, 0.5]")));
    }
    let primes = primes_up_to(x_max)?;
    let grid = probe_grid(x_max);
    let rows = grid
        .par_iter()
        .map(|&x| {
            let pi_x = primes.partition_point(|&p| p as f64 <= x);
            let gap = li(x, DEFAULT_ALPHA)? - pi_x as f64;
            Ok((x, gap, gap.abs() / x.powf(0.5 + eps)))
        })
        .collect::<Result<Vec<_>>>()?;
    let (argmax_x, _, c_min) = rows
        .iter()
        .copied()
        .fold((grid[0], 0.0, f64::NEG_INFINITY), |best, r| if r.2 > best.2 { r } else { best });
    Ok(RhProbe {
        c_min,
        argmax_x,
        li_exceeds_pi: rows.iter().all(|r| r.1 > 0.0),
        points: rows.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table13Row {
    pub k: usize,
    /// `π(t_k)`
    pub primes: u64,
    pub t: f64,
}

/// The first `k_max` zero ordinates next to the number of primes below
/// each.
pub fn table13(k_max: usize, config: &ScanConfig) -> Result<Vec<Table13Row>> {
    let zeros = scan_zeros(config)?;
    if k_max > zeros.len() {
        return Err(Error::Range(format!(
            "{k_max} rows requested but only {} zeros lie below t = {}",
            zeros.len(),
            config.t_max
        )));
    }
    zeros[..k_max]
        .iter()
        .map(|z| {
            Ok(Table13Row {
                k: z.index,
                primes: sieve_pi(z.t)?,
                t: z.t,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pnt_examples() {
        let s = pnt_stats(1e3).unwrap();
        assert_eq!(s.pi_x, 168);
        // 168 / li(1000) with li(1000) = 177.6096579901522.
        assert!((s.ratio_li - 0.945_895).abs() < 1e-6, "{}", s.ratio_li);
        let s = pnt_stats(1e6).unwrap();
        assert_eq!(s.pi_x, 78_498);
        assert!((s.ratio_li - 0.998_35).abs() < 1e-5, "{}", s.ratio_li);
        assert!((s.gap - 129.549_159_462).abs() < 1e-6);
        assert_eq!(pnt_stats(2.0).unwrap().pi_x, 1);
        assert!(pnt_stats(1.5).is_err());
    }

    #[test]
    fn ratio_rises_over_decades() {
        let r: Vec<f64> = [1e2, 1e3, 1e4, 1e5, 1e6]
            .iter()
            .map(|&x| pnt_stats(x).unwrap().ratio_li)
            .collect();
        assert!(r.windows(2).all(|w| w[0] < w[1]), "{r:?}");
        assert!(r.iter().all(|&v| v < 1.0));
    }

    #[test]
    fn probe_examples() {
        let p = rh_bound_probe(1e6, 0.01).unwrap();
        assert!(p.c_min.is_finite() && p.c_min > 0.0);
        assert!(p.li_exceeds_pi);
        assert!(p.argmax_x >= 2.0 && p.argmax_x <= 1e6);
        // log10(5e5) decades at 200 per decade, both ends included.
        assert_eq!(p.points, 1141);

        let loose = rh_bound_probe(1e3, 0.5).unwrap();
        let tight = rh_bound_probe(1e3, 0.01).unwrap();
        assert!(loose.c_min <= tight.c_min);
    }

    #[test]
    fn joint_table_rows() {
        let rows = table13(6, &ScanConfig::new(40.0)).unwrap();
        let expected = [
            (1, 6, "14.134725"),
            (2, 8, "21.022040"),
            (3, 9, "25.010858"),
            (4, 10, "30.424876"),
            (5, 11, "32.935062"),
            (6, 12, "37.586178"),
        ];
        for (row, (k, primes, t)) in rows.iter().zip(expected) {
            assert_eq!((row.k, row.primes), (k, primes));
            assert_eq!(format!("{:.6}", row.t), t);
        }
        assert!(table13(7, &ScanConfig::new(40.0)).is_err());
    }
}
