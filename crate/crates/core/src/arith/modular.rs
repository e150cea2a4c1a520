//! Residue arithmetic modulo prime powers below 2^127.
//!
//! Every modulus handled here satisfies `m < 2^127`, so the sum of two reduced
//! residues never overflows a `u128`. Products take a direct path when the
//! modulus fits in 64 bits and fall back to double-and-add otherwise.

/// Largest admissible modulus (exclusive).
pub const MODULUS_LIMIT: u128 = 1 << 127;

/// `p^e` if it stays below [`MODULUS_LIMIT`].
pub fn prime_power(p: u64, e: u32) -> Option<u128> {
    let v = (p as u128).checked_pow(e)?;
    (v < MODULUS_LIMIT).then_some(v)
}

#[inline]
pub fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(a < m && b < m);
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(a < m && b < m);
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

#[inline]
pub fn neg_mod(a: u128, m: u128) -> u128 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

#[inline]
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    let (a, b) = (a % m, b % m);
    if m <= u64::MAX as u128 + 1 {
        // a, b < 2^64
        return (a * b) % m;
    }
    let (mut acc, mut base, mut e) = (0u128, a, b);
    while e > 0 {
        if e & 1 == 1 {
            acc = add_mod(acc, base, m);
        }
        base = add_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub fn pow_mod(mut base: u128, mut exp: u64, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, or `None` when `gcd(a, m) != 1`.
pub fn inv_mod(a: u128, m: u128) -> Option<u128> {
    debug_assert!(m < MODULUS_LIMIT);
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u128)
}

/// Splits `x > 0` into `(t, x / p^t)` with `p` not dividing the cofactor.
#[inline]
pub fn strip_prime(mut x: u128, p: u64) -> (u32, u128) {
    debug_assert!(x != 0);
    let p = p as u128;
    let mut t = 0;
    while x.is_multiple_of(p) {
        x /= p;
        t += 1;
    }
    (t, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_products_agree_with_bigint() {
        use num_bigint::BigUint;
        let m = prime_power(499, 14).unwrap();
        assert!(m > u64::MAX as u128);
        let a = m - 12345;
        let b = m / 3 + 7;
        let expect = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        assert_eq!(BigUint::from(mul_mod(a, b, m)), expect);
    }

    #[test]
    fn inverses() {
        let m = 7u128.pow(4);
        assert_eq!(inv_mod(20, m), Some(2281));
        assert_eq!(mul_mod(20, 2281, m), 1);
        assert_eq!(inv_mod(14, m), None);
        let big = prime_power(9973, 9).unwrap();
        let x = inv_mod(123456789, big).unwrap();
        assert_eq!(mul_mod(x, 123456789, big), 1);
    }

    #[test]
    fn prime_power_limit() {
        assert!(prime_power(2, 126).is_some());
        assert!(prime_power(2, 127).is_none());
        assert!(prime_power(10007, 10).is_none());
    }

    #[test]
    fn strip() {
        assert_eq!(strip_prime(2 * 343, 7), (3, 2));
        assert_eq!(strip_prime(5, 7), (0, 5));
    }
}
