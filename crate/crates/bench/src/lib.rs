//! Fixed workloads shared by the criterion benches.

use zetawb::numerics::Complex;

/// Sample points spread over the regions each evaluation method serves.
pub fn sample_points() -> Vec<Complex> {
    vec![
        Complex::new(2.0, 0.0),
        Complex::new(3.0, 25.0),
        Complex::new(0.5, 14.134725),
        Complex::new(0.5, 60.0),
        Complex::new(0.3, 2.0),
        Complex::new(-3.0, 10.0),
    ]
}
