//! The Gamma function on the complex plane.
//!
//! Lanczos approximation (g = 7, nine terms) in logarithmic form for
//! `re(s) >= 0.5`, reflection `Γ(s)Γ(1−s) = π / sin(πs)` elsewhere.

use std::f64::consts::PI;

use super::complex::{sin_pi_complex, Complex};
use crate::error::{Error, Result};

/// Distance to a nonpositive integer below which `gamma` reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(s)` for `re(s) >= 0.5` (any branch of the imaginary part).
fn ln_gamma_right(s: Complex) -> Complex {
    let z = s - 1.0;
    let mut series = Complex::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + series.ln() + HALF_LN_2PI
}

/// `ln Γ(s)` for `re(s) > 0`, continuous in `im(s)`; safe where `Γ(s)`
/// itself underflows.
pub(crate) fn ln_gamma(s: Complex) -> Complex {
    if s.re >= 0.5 {
        ln_gamma_right(s)
    } else {
        ln_gamma_right(s + 1.0) - s.ln()
    }
}

/// Returns the nonpositive integer `s` sits on, within [`POLE_TOLERANCE`].
fn nearby_pole(s: Complex) -> Option<f64> {
    if s.re > 0.5 {
        return None;
    }
    let k = s.re.round();
    if k <= 0.0 && (s - Complex::new(k, 0.0)).norm() < POLE_TOLERANCE {
        Some(k)
    } else {
        None
    }
}

/// `Γ(s)`; a pole error is returned within `1e-12` of `0, −1, −2, …`.
pub fn gamma(s: Complex) -> Result<Complex> {
    if let Some(k) = nearby_pole(s) {
        return Err(Error::Pole {
            at: Complex::new(k, 0.0),
            note: "Gamma has simple poles at the nonpositive integers",
        });
    }
    if s.re >= 0.5 {
        let v = ln_gamma_right(s).exp();
        return finite(v, s);
    }
    let reflected = ln_gamma_right(1.0 - s).exp();
    let v = PI / (sin_pi_complex(s)? * reflected);
    finite(v, s)
}

fn finite(v: Complex, s: Complex) -> Result<Complex> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("Gamma({s}) is not representable")))
    }
}

/// `1/Γ(s)`, entire: exactly zero at the nonpositive integers.
pub fn recip_gamma(s: Complex) -> Result<Complex> {
    if s.re >= 0.5 {
        return Ok((-ln_gamma_right(s)).exp());
    }
    let reflected = ln_gamma_right(1.0 - s).exp();
    Ok(sin_pi_complex(s)? * reflected / PI)
}
