//! Numerical workbench for the Riemann zeta function.
//!
//! ζ(s) is evaluated by several independent routes ([`zeta`]), the
//! completed ξ and its symmetries live in [`symmetry`], critical-line zeros
//! in [`zeros`], prime counting against li(x) in [`primes`], and grid
//! sampling with zero-curve extraction in [`plot`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod numerics;
pub mod plot;
pub mod primes;
pub mod symmetry;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
pub use numerics::{BranchSpec, Complex};
pub use zeta::{EvalMethod, EvalResult};
