//! Zeta-functions of the rank-2 root systems G2, A2 and C2.
//!
//! - [`exact`]: rationals, Bernoulli numbers and polynomials in `pi^2`
//! - [`roots`]: the G2 Weyl group and its action on exponent tuples
//! - [`numeric`]: lattice sums and classical constants with error bounds
//! - [`symbolic`]: exact linear combinations of zeta values
//! - [`funcrel`]: functional relations, closed forms and verification
//! - [`cli`]: the `rootzeta` command-line interface

pub mod cli;
pub mod error;
pub mod exact;
pub mod funcrel;
pub mod numeric;
pub mod roots;
pub mod symbolic;

pub use error::{Error, Result};
