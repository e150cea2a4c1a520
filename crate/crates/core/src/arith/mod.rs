//! Number engines: exact rationals and truncated p-adic numbers.

pub mod field;
pub mod integer;
pub mod modular;
pub mod padic;
pub mod rational;

pub use field::{Engine, ExactField, Field, FieldContext, PadicField};
pub use integer::{binomial, is_prime, primes_between};
pub use padic::PadicApprox;
pub use rational::{rat, rat_int, rat_normalize, residue, valuation, BigRational, Valuation};

/// `q` as a p-adic number known modulo `p^absolute_precision`.
pub fn padic_from_rational(q: &BigRational, prime: u64, absolute_precision: i64) -> crate::Result<PadicApprox> {
    PadicApprox::from_rational(q, prime, absolute_precision)
}
