//! Verification lab for Apery-like finite identities and prime-power
//! congruences involving multiple harmonic sums and Bernoulli numbers.
//!
//! Values are computed in one of two engines: exact rationals, or truncated
//! p-adic numbers at a fixed working precision. See [`arith::Field`].

pub mod arith;
pub mod bernoulli;
pub mod cli;
pub mod congruences;
pub mod identities;
pub mod sums;

mod error;

pub use error::{Error, Result};
