use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// p-adic valuation of a value.
///
/// `AtLeast(n)` is what a truncated p-adic number reports when its residue
/// vanishes to the full known precision `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    AtLeast(i64),
    Infinite,
}

impl Valuation {
    /// True if the value is certainly divisible by `p^e`.
    pub fn reaches(self, e: i64) -> bool {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => v >= e,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">={v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Reduced fraction `num/den` with a positive denominator.
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn rat(num: i64, den: i64) -> BigRational {
    rat_normalize(num, den).expect("nonzero denominator")
}

pub fn rat_int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Exponent of `p` in `|x|`, with `x` nonzero; also returns the cofactor.
pub(crate) fn split_prime(x: &BigInt, p: u64) -> (i64, BigInt) {
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return (v, x);
        }
        x = q;
        v += 1;
    }
}

pub fn valuation(q: &BigRational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let (vn, _) = split_prime(q.numer(), p);
    let (vd, _) = split_prime(q.denom(), p);
    Valuation::Finite(vn - vd)
}

/// The residue of a p-integral rational modulo `p^e`, in `[0, p^e)`.
pub fn residue(q: &BigRational, p: u64, e: u32) -> Result<BigUint> {
    let modulus = BigInt::from(p).pow(e);
    if q.is_zero() {
        return Ok(BigUint::zero());
    }
    let (vd, den) = split_prime(q.denom(), p);
    if vd > 0 {
        let (vn, _) = split_prime(q.numer(), p);
        return Err(Error::NotPIntegral { valuation: vn - vd });
    }
    let inv = mod_inverse(&den, &modulus).expect("p-free denominator is invertible");
    let r = (q.numer() * inv).mod_floor(&modulus);
    Ok(r.to_biguint().expect("mod_floor is nonnegative"))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

/// Residue of `q` modulo `m` for `q` with denominator coprime to `m`.
pub(crate) fn reduce_mod(q: &BigRational, m: u128) -> u128 {
    let m_big = BigInt::from(m);
    let inv = mod_inverse(&q.denom().mod_floor(&m_big), &m_big).expect("denominator coprime");
    let r = (q.numer().mod_floor(&m_big) * inv).mod_floor(&m_big);
    to_u128(&r)
}

fn to_u128(x: &BigInt) -> u128 {
    debug_assert!(x.sign() != Sign::Minus);
    let digits = x.magnitude().to_u64_digits();
    digits.iter().rev().fold(0u128, |acc, &d| (acc << 64) | d as u128)
}
