//! Principal-value logarithmic integral.
//!
//! `li(x) = lim_{α→0} (∫₀^{1−α} + ∫_{1+α}^x) dz / ln z`. With `u = ln z`
//! each piece becomes `∫ e^u/u du`. Excising `[1−α, 1+α]` removes the
//! `1/(z−1)` singularity exactly and leaves an error `α + c₃α³ + O(α⁵)`,
//! which two Richardson steps over `α, α/2, α/4` cancel.

use crate::error::{Error, Result};
use crate::numerics::quadrature::integrate_real;

/// Excision half-width used when callers do not pick one.
pub const DEFAULT_ALPHA: f64 = 1e-2;

const MAX_PANELS: usize = 4000;
// e^u/u is below 1e-28 past this point.
const LOWER_U: f64 = -60.0;

/// An li value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiValue {
    pub value: f64,
    pub est_error: f64,
}

fn integrand(u: f64) -> f64 {
    u.exp() / u
}

/// `(∫₀^{1−a} + ∫_{1+a}^x) dz / ln z` and its quadrature error.
fn excised(x: f64, a: f64) -> (f64, f64) {
    let (left, e1) = integrate_real(integrand, LOWER_U, (1.0 - a).ln(), 1e-14, 1e-15, MAX_PANELS);
    let (right, e2) = integrate_real(integrand, (1.0 + a).ln(), x.ln(), 1e-14, 1e-15, MAX_PANELS);
    (left + right, e1 + e2)
}

/// `li(x)` with excision `alpha`, extrapolated toward `alpha → 0`.
///
/// The excision is capped at `(x − 1)/4` so it stays inside `(0, x)`.
pub fn li_with_error(x: f64, alpha: f64) -> Result<LiValue> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("li(x) requires x > 1, got {x}")));
    }
    if !(alpha > 0.0 && alpha <= 0.1) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha}; must lie in (0, 0.1]")));
    }
    let a = alpha.min((x - 1.0) / 4.0);
    let (l1, q1) = excised(x, a);
    let (l2, q2) = excised(x, a / 2.0);
    let (l3, q3) = excised(x, a / 4.0);
    let r1 = 2.0 * l2 - l1;
    let r2 = 2.0 * l3 - l2;
    let value = (8.0 * r2 - r1) / 7.0;
    // |value − r2| estimates the α³ term left in r2, an overestimate of the
    // α⁵ term left in value.
    let quad = 3.0 * q1 + 6.0 * q2 + 12.0 * q3;
    let est_error = (value - r2).abs() * a * a + quad + 4.0 * f64::EPSILON * value.abs();
    Ok(LiValue { value, est_error })
}

/// `li(x)`; see [`li_with_error`].
pub fn li(x: f64, alpha: f64) -> Result<f64> {
    Ok(li_with_error(x, alpha)?.value)
}
