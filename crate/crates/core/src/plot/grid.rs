use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::zeta::zeta;

/// Samples closer than this to `s = 1` are masked.
pub const POLE_MASK: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Region {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Region { x_min, x_max, y_min, y_max }
    }
}

/// ζ sampled on a regular grid, row-major: sample `(i, j)` sits at
/// `re_values[j·nx + i]` with `i` along `re(s)` and `j` along `im(s)`.
/// Masked samples hold NaN in both arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub re_values: Vec<f64>,
    pub im_values: Vec<f64>,
}

impl GridField {
    pub fn x(&self, i: usize) -> f64 {
        lerp(self.x_min, self.x_max, i, self.nx)
    }

    pub fn y(&self, j: usize) -> f64 {
        lerp(self.y_min, self.y_max, j, self.ny)
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn is_masked(&self, i: usize, j: usize) -> bool {
        let k = self.index(i, j);
        !(self.re_values[k].is_finite() && self.im_values[k].is_finite())
    }

    pub fn cell_width(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn cell_height(&self) -> f64 {
        (self.y_max - self.y_min) / (self.ny - 1) as f64
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.cell_width().hypot(self.cell_height())
    }
}

fn lerp(a: f64, b: f64, k: usize, n: usize) -> f64 {
    if k + 1 == n {
        b
    } else {
        a + (b - a) * k as f64 / (n - 1) as f64
    }
}

/// Evaluates ζ at `nx × ny` points of `region`. Points near the pole and
/// points where [`zeta`] fails are masked rather than reported.
pub fn grid_eval(region: Region, nx: usize, ny: usize, tol: f64) -> Result<GridField> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidArgument(format!("grid {nx}×{ny}; both sides need at least 2 points")));
    }
    let Region { x_min, x_max, y_min, y_max } = region;
    if ![x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite()) || x_min > x_max || y_min > y_max {
        return Err(Error::InvalidArgument(format!(
            "region [{x_min}, {x_max}] × [{y_min}, {y_max}] is not a rectangle"
        )));
    }
    let samples: Vec<(f64, f64)> = (0..nx * ny)
        .into_par_iter()
        .map(|k| {
            let s = Complex::new(lerp(x_min, x_max, k % nx, nx), lerp(y_min, y_max, k / nx, ny));
            if (s - 1.0).norm() < POLE_MASK {
                return (f64::NAN, f64::NAN);
            }
            match zeta(s, tol) {
                Ok(r) => (r.value.re, r.value.im),
                Err(_) => (f64::NAN, f64::NAN),
            }
        })
        .collect();
    let (re_values, im_values) = samples.into_iter().unzip();
    Ok(GridField {
        x_min,
        x_max,
        y_min,
        y_max,
        nx,
        ny,
        re_values,
        im_values,
    })
}
