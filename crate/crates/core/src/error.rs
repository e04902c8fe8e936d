use num_complex::Complex64;
use thiserror::Error;

/// Every failure the workbench can report.
///
/// Numeric routines never return non-finite values silently; poles,
/// overflow and out-of-region requests surface here instead.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = {re} + {im}i: {note}", re = at.re, im = at.im)]
    Pole { at: Complex64, note: &'static str },

    #[error("removable point at s = {re} + {im}i: {note}", re = at.re, im = at.im)]
    RemovablePoint { at: Complex64, note: &'static str },

    #[error("method `{method}` is not valid at s = {re} + {im}i", re = at.re, im = at.im)]
    Region { method: &'static str, at: Complex64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("requested tolerance {tol:e} not reached (best estimate {achieved:e})")]
    Precision { tol: f64, achieved: f64 },

    #[error("point outside the radius of convergence: |s - s0| = {dist} >= {radius}")]
    Radius { dist: f64, radius: f64 },

    #[error("contour passes within {distance} of the pole at s = 1")]
    Contour { distance: f64 },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("ordinates not strictly increasing at line {line}: {prev} then {next}")]
    Monotonicity { line: usize, prev: f64, next: f64 },

    #[error("out of range: {0}")]
    Range(String),

    #[error("arity mismatch: header has {expected} columns, row {row} has {found}")]
    Arity { expected: usize, found: usize, row: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
