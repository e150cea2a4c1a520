//! Bernoulli numbers, exactly and modulo a prime.
//!
//! The exact path uses the defining recurrence `sum_{j<=m} C(m+1,j) B_j = 0`
//! (so `B_1 = -1/2`). The modular path runs the Akiyama-Tanigawa triangle in
//! the field of `p` elements and never touches rationals, so the two paths
//! can check each other.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::modular::{inv_mod, pow_mod};
use crate::arith::{is_prime, BigRational, ExactField, Field, PadicApprox, PadicField};
use crate::error::{Error, Result};

pub const DEFAULT_BOUND: usize = 200;

/// Bound used by the exact engine when it needs `B_{p-k}` for large `p`.
pub const EXACT_ENGINE_BOUND: usize = 1024;

fn table() -> &'static RwLock<Vec<BigRational>> {
    static TABLE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigRational::from_integer(1.into())]))
}

/// Exact `B_m` for `m <= 200`.
pub fn bernoulli_exact(m: usize) -> Result<BigRational> {
    bernoulli_exact_bounded(m, DEFAULT_BOUND)
}

pub fn bernoulli_exact_bounded(m: usize, bound: usize) -> Result<BigRational> {
    if m > bound {
        return Err(Error::IndexTooLarge { index: m, bound });
    }
    if let Some(b) = table().read().expect("bernoulli table poisoned").get(m) {
        return Ok(b.clone());
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    while t.len() <= m {
        let next = next_bernoulli(&t);
        t.push(next);
    }
    Ok(t[m].clone())
}

/// `B_m` from `B_0..B_{m-1}`.
fn next_bernoulli(prev: &[BigRational]) -> BigRational {
    let m = prev.len();
    if m >= 3 && m % 2 == 1 {
        return BigRational::zero();
    }
    let mut acc = BigRational::zero();
    let mut binom = BigInt::from(1);
    for (j, b) in prev.iter().enumerate() {
        if !b.is_zero() {
            acc += b * &binom;
        }
        binom = binom * (m + 1 - j) / (j + 1);
    }
    -acc / BigInt::from(m + 1)
}

/// `B_m mod p` by the Akiyama-Tanigawa triangle; requires `m + 1 < p`.
pub fn bernoulli_mod_p(m: usize, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (m as u64) + 1 >= p {
        return Err(Error::NotPRegularRange { index: m, prime: p });
    }
    if m >= 3 && m % 2 == 1 {
        return Ok(0);
    }
    let pm = p as u128;
    let mut row = vec![0u128; m + 1];
    for i in 0..=m {
        row[i] = inv_mod(i as u128 + 1, pm).expect("i + 1 < p");
        for j in (1..=i).rev() {
            let diff = (row[j - 1] + pm - row[j]) % pm;
            row[j - 1] = (j as u128 * diff) % pm;
        }
    }
    // The triangle produces B_1 = +1/2.
    let b = if m == 1 { (pm - row[0]) % pm } else { row[0] };
    Ok(b as u64)
}

/// `sum_{k=1}^{n} k^m`.
pub fn power_sum<F: Field>(field: &F, n: u64, m: u32) -> F::Elem {
    field.sum((1..=n).map(|k| field.pow(&field.int(k as i64), m)))
}

/// `sum_{k=1}^{n} k^m mod q`, for any modulus `q >= 1`.
pub fn power_sum_mod(n: u64, m: u64, q: u64) -> u64 {
    let q = q as u128;
    ((1..=n).fold(0u128, |acc, k| (acc + pow_mod(k as u128, m, q)) % q)) as u64
}

/// Fields that can produce `B_m` in their own arithmetic.
pub trait BernoulliField: Field {
    fn bernoulli(&self, m: usize) -> Result<Self::Elem>;
}

impl BernoulliField for ExactField {
    fn bernoulli(&self, m: usize) -> Result<BigRational> {
        bernoulli_exact_bounded(m, EXACT_ENGINE_BOUND)
    }
}

/// Only the residue mod `p` is known, so the value has absolute precision 1.
impl BernoulliField for PadicField {
    fn bernoulli(&self, m: usize) -> Result<PadicApprox> {
        let r = bernoulli_mod_p(m, self.prime())?;
        Ok(self.from_residue(r as u128, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, residue};

    #[test]
    fn exact_examples() {
        assert_eq!(bernoulli_exact(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli_exact(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_exact(3).unwrap(), rat(0, 1));
        assert_eq!(bernoulli_exact(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli_exact(12).unwrap(), rat(-691, 2730));
        assert_eq!(
            bernoulli_exact(201),
            Err(Error::IndexTooLarge { index: 201, bound: 200 })
        );
    }

    #[test]
    fn modular_examples() {
        assert_eq!(bernoulli_mod_p(2, 7).unwrap(), 6);
        assert_eq!(bernoulli_mod_p(8, 11).unwrap(), 4);
        assert_eq!(bernoulli_mod_p(5, 13).unwrap(), 0);
        assert_eq!(bernoulli_mod_p(1, 7).unwrap(), 3);
        assert_eq!(
            bernoulli_mod_p(6, 7),
            Err(Error::NotPRegularRange { index: 6, prime: 7 })
        );
        assert_eq!(bernoulli_mod_p(2, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn modular_matches_exact_for_b8() {
        let b8 = bernoulli_exact(8).unwrap();
        assert_eq!(b8, rat(-1, 30));
        for p in [11u64, 13, 17, 19] {
            let r = residue(&b8, p, 1).unwrap();
            assert_eq!(r, bernoulli_mod_p(8, p).unwrap().into());
        }
    }

    #[test]
    fn power_sums() {
        let f = ExactField;
        assert_eq!(power_sum(&f, 4, 1), rat(10, 1));
        assert_eq!(power_sum(&f, 3, 2), rat(14, 1));
        assert_eq!(power_sum_mod(6, 6, 7), 6);
        assert_eq!(power_sum(&f, 0, 3), rat(0, 1));
    }
}
