//! The two number engines behind one interface.
//!
//! Sum kernels and congruence evaluators are written once against [`Field`]
//! and run either over exact rationals ([`ExactField`]) or over truncated
//! p-adic numbers at a fixed working precision ([`PadicField`]).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::integer::is_prime;
use super::modular::prime_power;
use super::padic::PadicApprox;
use super::rational::{self, BigRational, Valuation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Exact,
    Padic,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Exact => "exact",
            Engine::Padic => "padic",
        })
    }
}

/// Which engine a computation runs in, with the p-adic working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldContext {
    Exact,
    Padic { prime: u64, precision: u32 },
}

impl FieldContext {
    pub fn engine(&self) -> Engine {
        match self {
            FieldContext::Exact => Engine::Exact,
            FieldContext::Padic { .. } => Engine::Padic,
        }
    }
}

pub trait Field: Sync {
    type Elem: Clone + fmt::Debug + Send + Sync;

    fn context(&self) -> FieldContext;

    fn zero(&self) -> Self::Elem;

    fn int(&self, v: i64) -> Self::Elem;

    fn rational(&self, q: &BigRational) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn valuation(&self, a: &Self::Elem, p: u64) -> Valuation;

    /// Residue modulo `p^e` of a p-integral value.
    fn residue(&self, a: &Self::Elem, p: u64, e: u32) -> Result<BigUint>;

    fn one(&self) -> Self::Elem {
        self.int(1)
    }

    /// `num/den` for a nonzero `den`.
    fn ratio(&self, num: i64, den: i64) -> Self::Elem {
        self.rational(&rational::rat(num, den))
    }

    fn integer(&self, v: &BigUint) -> Self::Elem {
        self.rational(&BigRational::from_integer(BigInt::from(v.clone())))
    }

    /// `1/k` for a nonzero integer `k`.
    fn recip(&self, k: u64) -> Self::Elem {
        self.ratio(1, k as i64)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut n: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `p^e` for any integer `e`.
    fn prime_power(&self, p: u64, e: i32) -> Self::Elem {
        let pe = BigInt::from(p).pow(e.unsigned_abs());
        let q = if e >= 0 {
            BigRational::from_integer(pe)
        } else {
            BigRational::new(BigInt::one(), pe)
        };
        self.rational(&q)
    }

    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, terms: I) -> Self::Elem {
        terms.into_iter().fold(self.zero(), |acc, t| self.add(&acc, &t))
    }
}

/// Exact rational arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactField;

impl Field for ExactField {
    type Elem = BigRational;

    fn context(&self) -> FieldContext {
        FieldContext::Exact
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn int(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn rational(&self, q: &BigRational) -> BigRational {
        q.clone()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn valuation(&self, a: &BigRational, p: u64) -> Valuation {
        rational::valuation(a, p)
    }

    fn residue(&self, a: &BigRational, p: u64, e: u32) -> Result<BigUint> {
        rational::residue(a, p, e)
    }
}

/// Truncated p-adic arithmetic; every constant enters with relative precision
/// equal to the working precision.
#[derive(Debug, Clone, Copy)]
pub struct PadicField {
    prime: u64,
    precision: u32,
}

impl PadicField {
    pub fn new(prime: u64, precision: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if precision == 0 {
            return Err(Error::InvalidParameter("working precision must be positive".into()));
        }
        prime_power(prime, precision).ok_or(Error::ModulusTooLarge {
            prime,
            exponent: precision,
        })?;
        Ok(PadicField { prime, precision })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// A residue `r` modulo `p^e` as a value known to absolute precision `e`.
    pub fn from_residue(&self, r: u128, e: u32) -> PadicApprox {
        PadicApprox::new(self.prime, 0, r, e).expect("e within working precision")
    }
}

impl Field for PadicField {
    type Elem = PadicApprox;

    fn context(&self) -> FieldContext {
        FieldContext::Padic {
            prime: self.prime,
            precision: self.precision,
        }
    }

    fn zero(&self) -> PadicApprox {
        PadicApprox::exact_zero(self.prime)
    }

    fn int(&self, v: i64) -> PadicApprox {
        if v == 0 {
            return PadicApprox::exact_zero(self.prime);
        }
        let (t, u) = super::modular::strip_prime(v.unsigned_abs() as u128, self.prime);
        let x = PadicApprox::new(self.prime, t as i64, u, self.precision).expect("checked precision");
        if v < 0 {
            x.neg()
        } else {
            x
        }
    }

    fn ratio(&self, num: i64, den: i64) -> PadicApprox {
        assert!(den != 0, "zero denominator");
        self.int(num).mul(&self.int(den).inv().expect("nonzero"))
    }

    fn rational(&self, q: &BigRational) -> PadicApprox {
        let v = match rational::valuation(q, self.prime) {
            Valuation::Finite(v) => v,
            _ => return PadicApprox::exact_zero(self.prime),
        };
        PadicApprox::from_rational(q, self.prime, v + self.precision as i64)
            .expect("working precision was checked at construction")
    }

    fn recip(&self, k: u64) -> PadicApprox {
        let (t, u) = super::modular::strip_prime(k as u128, self.prime);
        PadicApprox::new(self.prime, t as i64, u, self.precision)
            .and_then(|x| x.inv())
            .expect("nonzero integer")
    }

    fn add(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.add(b)
    }

    fn sub(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.sub(b)
    }

    fn mul(&self, a: &PadicApprox, b: &PadicApprox) -> PadicApprox {
        a.mul(b)
    }

    fn neg(&self, a: &PadicApprox) -> PadicApprox {
        a.neg()
    }

    fn inv(&self, a: &PadicApprox) -> Result<PadicApprox> {
        a.inv()
    }

    fn valuation(&self, a: &PadicApprox, p: u64) -> Valuation {
        assert_eq!(p, self.prime);
        a.valuation()
    }

    fn residue(&self, a: &PadicApprox, p: u64, e: u32) -> Result<BigUint> {
        assert_eq!(p, self.prime);
        a.residue(e).map(BigUint::from)
    }

    fn prime_power(&self, p: u64, e: i32) -> PadicApprox {
        assert_eq!(p, self.prime);
        PadicApprox::new(p, e as i64, 1, self.precision).expect("checked precision")
    }
}
