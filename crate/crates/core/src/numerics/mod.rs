//! Numerical substrate: branch-aware complex helpers, Gamma, quadrature.

pub mod complex;
pub mod gamma;
pub mod quadrature;

pub use complex::{
    complex_cos, complex_exp, complex_log, complex_pow, complex_sin, cos_pi, cis_pi, sin_pi,
    sin_pi_complex, BranchSpec, Complex,
};
pub use gamma::{gamma, recip_gamma};
