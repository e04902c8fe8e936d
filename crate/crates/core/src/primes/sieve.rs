//! Segmented sieve of Eratosthenes.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest argument accepted by the counting functions.
pub const SIEVE_CAP: f64 = 1e8;

/// Width of one sieve segment.
pub const SEGMENT: u64 = 1_000_000;

/// Primes up to `n` by the plain sieve; used for the base primes.
fn small_primes(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Marks composites in `[lo, hi)` and returns the primality flags.
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<bool> {
    let mut is_prime = vec![true; (hi - lo) as usize];
    for &p in base {
        if p * p >= hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m < hi {
            is_prime[(m - lo) as usize] = false;
            m += p;
        }
    }
    for v in lo..hi.min(2) {
        is_prime[(v - lo) as usize] = false;
    }
    is_prime
}

fn checked_limit(x: f64) -> Result<u64> {
    if !(x >= 0.0) || x > SIEVE_CAP {
        return Err(Error::Range(format!("x = {x}; the sieve covers 0 ≤ x ≤ {SIEVE_CAP:e}")));
    }
    Ok(x.floor() as u64)
}

fn segments(n: u64) -> Vec<(u64, u64)> {
    (0..=n / SEGMENT)
        .map(|k| (k * SEGMENT, ((k + 1) * SEGMENT).min(n + 1)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

/// `π(x)`, the number of primes `≤ floor(x)`.
pub fn sieve_pi(x: f64) -> Result<u64> {
    let n = checked_limit(x)?;
    if n < 2 {
        return Ok(0);
    }
    let base = small_primes((n as f64).sqrt() as u64 + 1);
    Ok(segments(n)
        .into_par_iter()
        .map(|(lo, hi)| sieve_segment(lo, hi, &base).iter().filter(|&&b| b).count() as u64)
        .sum())
}

/// All primes `≤ floor(x)` in increasing order.
pub fn primes_up_to(x: f64) -> Result<Vec<u64>> {
    let n = checked_limit(x)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let base = small_primes((n as f64).sqrt() as u64 + 1);
    let chunks: Vec<Vec<u64>> = segments(n)
        .into_par_iter()
        .map(|(lo, hi)| {
            sieve_segment(lo, hi, &base)
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| lo + i as u64)
                .collect()
        })
        .collect();
    Ok(chunks.concat())
}
