//! Truncated p-adic numbers.
//!
//! A [`PadicApprox`] is `u * p^v` with the unit `u` known modulo `p^k`, so the
//! value itself is known modulo `p^(v+k)` (its absolute precision). Two more
//! states exist: the exact zero and "zero modulo `p^N`", which is what a
//! subtraction produces when the operands agree to every known digit.
//!
//! Absolute precision is never inflated: sums keep the smaller of the operand
//! precisions and products add valuations to the smaller relative precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::modular::{add_mod, inv_mod, mul_mod, neg_mod, pow_mod, prime_power, strip_prime};
use super::rational::{reduce_mod, split_prime, BigRational, Valuation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Repr {
    ExactZero,
    ZeroAt(i64),
    Unit { valuation: i64, unit: u128, precision: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicApprox {
    prime: u64,
    repr: Repr,
}

fn modulus(p: u64, k: u32) -> u128 {
    prime_power(p, k).expect("relative precision never exceeds a checked modulus")
}

impl PadicApprox {
    pub fn exact_zero(prime: u64) -> Self {
        PadicApprox {
            prime,
            repr: Repr::ExactZero,
        }
    }

    pub fn zero_at(prime: u64, absolute_precision: i64) -> Self {
        PadicApprox {
            prime,
            repr: Repr::ZeroAt(absolute_precision),
        }
    }

    /// `unit * p^valuation` known modulo `p^(valuation + precision)`. The unit
    /// need not be reduced or p-free; both are normalized here.
    pub fn new(prime: u64, valuation: i64, unit: u128, precision: u32) -> Result<Self> {
        let m = prime_power(prime, precision).ok_or(Error::ModulusTooLarge {
            prime,
            exponent: precision,
        })?;
        Ok(Self::normalized(prime, valuation, unit % m, precision))
    }

    fn normalized(prime: u64, valuation: i64, unit: u128, precision: u32) -> Self {
        if precision == 0 || unit == 0 {
            return Self::zero_at(prime, valuation + precision as i64);
        }
        let (t, u) = strip_prime(unit, prime);
        if t >= precision {
            return Self::zero_at(prime, valuation + precision as i64);
        }
        let k = precision - t;
        let u = if t > 0 { u % modulus(prime, k) } else { u };
        PadicApprox {
            prime,
            repr: Repr::Unit {
                valuation: valuation + t as i64,
                unit: u,
                precision: k,
            },
        }
    }

    /// Image of `q` known modulo `p^absolute_precision`.
    pub fn from_rational(q: &BigRational, prime: u64, absolute_precision: i64) -> Result<Self> {
        use num_traits::Zero;
        if q.is_zero() {
            return Ok(Self::exact_zero(prime));
        }
        let (vn, num) = split_prime(q.numer(), prime);
        let (vd, den) = split_prime(q.denom(), prime);
        let v = vn - vd;
        if v >= absolute_precision {
            return Ok(Self::zero_at(prime, absolute_precision));
        }
        let k = u32::try_from(absolute_precision - v).map_err(|_| Error::ModulusTooLarge {
            prime,
            exponent: u32::MAX,
        })?;
        let m = prime_power(prime, k).ok_or(Error::ModulusTooLarge { prime, exponent: k })?;
        let unit = reduce_mod(&BigRational::new(num, den), m);
        Ok(PadicApprox {
            prime,
            repr: Repr::Unit {
                valuation: v,
                unit,
                precision: k,
            },
        })
    }

    pub fn from_integer(v: i64, prime: u64, absolute_precision: i64) -> Result<Self> {
        Self::from_rational(&BigRational::from_integer(v.into()), prime, absolute_precision)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn valuation(&self) -> Valuation {
        match self.repr {
            Repr::ExactZero => Valuation::Infinite,
            Repr::ZeroAt(n) => Valuation::AtLeast(n),
            Repr::Unit { valuation, .. } => Valuation::Finite(valuation),
        }
    }

    /// `None` for the exact zero.
    pub fn absolute_precision(&self) -> Option<i64> {
        match self.repr {
            Repr::ExactZero => None,
            Repr::ZeroAt(n) => Some(n),
            Repr::Unit {
                valuation, precision, ..
            } => Some(valuation + precision as i64),
        }
    }

    pub fn relative_precision(&self) -> u32 {
        match self.repr {
            Repr::Unit { precision, .. } => precision,
            _ => 0,
        }
    }

    pub fn unit(&self) -> Option<u128> {
        match self.repr {
            Repr::Unit { unit, .. } => Some(unit),
            _ => None,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.repr == Repr::ExactZero
    }

    /// Exact zero or zero to the known precision.
    pub fn is_zero(&self) -> bool {
        !matches!(self.repr, Repr::Unit { .. })
    }

    fn check_prime(&self, other: &Self) {
        assert_eq!(self.prime, other.prime, "p-adic operands over different primes");
    }

    /// Forgets every digit at or above `p^n`.
    pub fn truncate(&self, n: i64) -> Self {
        match self.repr {
            Repr::ExactZero => Self::zero_at(self.prime, n),
            Repr::ZeroAt(m) => Self::zero_at(self.prime, m.min(n)),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                let abs = valuation + precision as i64;
                if n >= abs {
                    *self
                } else if n <= valuation {
                    Self::zero_at(self.prime, n)
                } else {
                    let k = (n - valuation) as u32;
                    Self::normalized(self.prime, valuation, unit % modulus(self.prime, k), k)
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_prime(other);
        let p = self.prime;
        match (self.repr, other.repr) {
            (Repr::ExactZero, _) => *other,
            (_, Repr::ExactZero) => *self,
            (Repr::ZeroAt(n), _) => other.truncate(n),
            (_, Repr::ZeroAt(n)) => self.truncate(n),
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                    precision: ka,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                    precision: kb,
                },
            ) => {
                let n = (va + ka as i64).min(vb + kb as i64);
                let vmin = va.min(vb);
                if vmin >= n {
                    return Self::zero_at(p, n);
                }
                let k = (n - vmin) as u32;
                let m = modulus(p, k);
                let shifted = |u: u128, v: i64| -> u128 {
                    let s = (v - vmin) as u32;
                    if s >= k {
                        0
                    } else {
                        mul_mod(u % m, modulus(p, s), m)
                    }
                };
                let x = add_mod(shifted(ua, va), shifted(ub, vb), m);
                Self::normalized(p, vmin, x, k)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match self.repr {
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => PadicApprox {
                prime: self.prime,
                repr: Repr::Unit {
                    valuation,
                    unit: neg_mod(unit, modulus(self.prime, precision)),
                    precision,
                },
            },
            _ => *self,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_prime(other);
        let p = self.prime;
        match (self.repr, other.repr) {
            (Repr::ExactZero, _) | (_, Repr::ExactZero) => Self::exact_zero(p),
            (Repr::ZeroAt(a), Repr::ZeroAt(b)) => Self::zero_at(p, a + b),
            (Repr::ZeroAt(a), Repr::Unit { valuation, .. }) | (Repr::Unit { valuation, .. }, Repr::ZeroAt(a)) => {
                Self::zero_at(p, a + valuation)
            }
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                    precision: ka,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                    precision: kb,
                },
            ) => {
                let k = ka.min(kb);
                let m = modulus(p, k);
                PadicApprox {
                    prime: p,
                    repr: Repr::Unit {
                        valuation: va + vb,
                        unit: mul_mod(ua, ub, m),
                        precision: k,
                    },
                }
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self.repr {
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                let m = modulus(self.prime, precision);
                let u = inv_mod(unit, m).expect("units are invertible");
                Ok(PadicApprox {
                    prime: self.prime,
                    repr: Repr::Unit {
                        valuation: -valuation,
                        unit: u,
                        precision,
                    },
                })
            }
            _ => Err(Error::DivisionByZero),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power. `x^0` is 1 at the relative precision of `x` (precision 1
    /// for zeros); negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { *self };
        let e = n.unsigned_abs();
        match base.repr {
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                let m = modulus(self.prime, precision);
                Ok(PadicApprox {
                    prime: self.prime,
                    repr: Repr::Unit {
                        valuation: valuation * e as i64,
                        unit: pow_mod(unit, e, m),
                        precision,
                    },
                })
            }
            _ if e == 0 => Ok(Self::normalized(self.prime, 0, 1, 1)),
            Repr::ExactZero => Ok(base),
            Repr::ZeroAt(a) => Ok(Self::zero_at(self.prime, a * e as i64)),
        }
    }

    /// Residue modulo `p^e`, in `[0, p^e)`.
    pub fn residue(&self, e: u32) -> Result<u128> {
        let m = prime_power(self.prime, e).ok_or(Error::ModulusTooLarge {
            prime: self.prime,
            exponent: e,
        })?;
        match self.repr {
            Repr::ExactZero => Ok(0),
            Repr::ZeroAt(n) if n >= e as i64 => Ok(0),
            Repr::ZeroAt(n) => Err(Error::PrecisionExhausted {
                available: n,
                required: e as i64,
            }),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                if valuation < 0 {
                    return Err(Error::NotPIntegral { valuation });
                }
                let abs = valuation + precision as i64;
                if abs < e as i64 {
                    return Err(Error::PrecisionExhausted {
                        available: abs,
                        required: e as i64,
                    });
                }
                if valuation >= e as i64 {
                    return Ok(0);
                }
                Ok(mul_mod(unit % m, modulus(self.prime, valuation as u32), m))
            }
        }
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prime;
        match self.repr {
            Repr::ExactZero => f.write_str("0"),
            Repr::ZeroAt(n) => write!(f, "O({p}^{n})"),
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                write!(f, "{unit}*{p}^{valuation} + O({p}^{})", valuation + precision as i64)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for PadicApprox {
            type Output = PadicApprox;
            fn $method(self, rhs: PadicApprox) -> PadicApprox {
                PadicApprox::$method(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a PadicApprox> for &'a PadicApprox {
            type Output = PadicApprox;
            fn $method(self, rhs: &'a PadicApprox) -> PadicApprox {
                PadicApprox::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for PadicApprox {
    type Output = PadicApprox;
    fn neg(self) -> PadicApprox {
        PadicApprox::neg(&self)
    }
}
