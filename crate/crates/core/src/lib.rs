//! Certified verification of Rogers-dilogarithm identities attached to
//! Pell's equation.
//!
//! The crate is organised as a small substrate plus a verification harness:
//!
//! - [`numerics`]: big integers, big rationals, quadratic surds and an
//!   arbitrary-precision [`numerics::Real`] with a per-evaluation
//!   [`numerics::PrecisionContext`].
//! - [`dilog`]: Li₂ and the Rogers dilogarithm with per-call error bounds.
//! - [`contfrac`]: periodic continued fractions of quadratic surds and
//!   exact convergents.
//! - [`pell`]: exact Pell-equation solutions and unit powers over ℤ[√n]
//!   and ℚ[√n].
//! - [`chebyshev`]: Chebyshev polynomials, exact at rational points.
//! - [`geometry`]: cross-ratios, annulus ortholengths and ideal-polygon
//!   orthospectra.
//! - [`verify`]: identity jobs, certified tail bounds and pass/fail
//!   reports with JSON/CSV rendering.

pub mod chebyshev;
pub mod contfrac;
pub mod dilog;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod pell;
pub mod verify;

pub use error::{Error, Result};
