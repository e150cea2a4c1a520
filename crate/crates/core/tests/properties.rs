use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use aperylab::arith::Engine;
use aperylab::arith::{rat, residue, valuation, BigRational, ExactField, Field, PadicApprox, PadicField, Valuation};
use aperylab::bernoulli::{bernoulli_exact, bernoulli_mod_p, power_sum, power_sum_mod};
use aperylab::congruences::{evaluate_statement, registry};
use aperylab::identities::{ccc_product, inverse_binomial_sums, leshchiner_even, leshchiner_odd};
use aperylab::sums::{mhs, mhs_bruteforce, odd_mhs, MhsIndex, SumKind};

const PRIMES: [u64; 8] = [5, 7, 11, 13, 29, 101, 499, 10007];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-5000i64..5000, 1i64..5000).prop_map(|(n, d)| rat(n, d))
}

fn index() -> impl Strategy<Value = MhsIndex> {
    prop::collection::vec(1u32..4, 0..4).prop_map(|v| MhsIndex::new(v).unwrap())
}

/// Largest precision whose modulus fits the residue kernel.
fn precision_for(p: u64) -> u32 {
    (1..=12).rev().find(|&k| PadicField::new(p, k).is_ok()).unwrap()
}

/// Exact value reduced into the p-adic engine at its own precision.
fn lift(f: &PadicField, q: &BigRational) -> PadicApprox {
    f.rational(q)
}

/// `x` is a correct approximation of `q`: `val_p(q - x) >= absolute precision of x`.
fn agree(f: &PadicField, x: &PadicApprox, q: &BigRational) -> bool {
    let p = f.prime();
    let Some(n) = x.absolute_precision() else {
        return q.is_zero();
    };
    let approx = match (x.unit(), x.valuation()) {
        (Some(u), Valuation::Finite(v)) => {
            let pv = BigRational::from_integer(BigInt::from(p)).pow(v as i32);
            BigRational::from_integer(BigInt::from(u)) * pv
        }
        _ => BigRational::zero(),
    };
    valuation(&(q - approx), p).reaches(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn padic_ops_track_exact(p in prime(), a in small_rational(), b in small_rational()) {
        let f = PadicField::new(p, precision_for(p)).unwrap();
        let (x, y) = (lift(&f, &a), lift(&f, &b));
        prop_assert!(agree(&f, &x.add(&y), &(&a + &b)));
        prop_assert!(agree(&f, &x.sub(&y), &(&a - &b)));
        prop_assert!(agree(&f, &x.mul(&y), &(&a * &b)));
        if !b.is_zero() {
            prop_assert!(agree(&f, &x.div(&y).unwrap(), &(&a / &b)));
        }
    }

    #[test]
    fn padic_ring_axioms(p in prime(), a in small_rational(), b in small_rational(), c in small_rational()) {
        let f = PadicField::new(p, precision_for(p)).unwrap();
        let (x, y, z) = (lift(&f, &a), lift(&f, &b), lift(&f, &c));
        let same = |u: PadicApprox, v: PadicApprox| u.sub(&v).is_zero();
        prop_assert!(same(x.add(&y), y.add(&x)));
        prop_assert!(same(x.mul(&y), y.mul(&x)));
        prop_assert!(same(x.add(&y).add(&z), x.add(&y.add(&z))));
        prop_assert!(same(x.mul(&y).mul(&z), x.mul(&y.mul(&z))));
        prop_assert!(same(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z))));
        prop_assert!(same(x.add(&f.zero()), x));
        prop_assert!(same(x.mul(&f.one()), x));
    }

    /// A result never claims digits its inputs did not carry.
    #[test]
    fn precision_is_honest(p in prime(), a in small_rational(), b in small_rational(), k in 1u32..6) {
        let f = PadicField::new(p, precision_for(p)).unwrap();
        let x = PadicApprox::from_rational(&a, p, k as i64).unwrap();
        let y = PadicApprox::from_rational(&b, p, k as i64).unwrap();
        for (z, q) in [(x.add(&y), &a + &b), (x.sub(&y), &a - &b), (x.mul(&y), &a * &b)] {
            prop_assert!(agree(&f, &z, &q));
        }
        prop_assert!(x.add(&y).absolute_precision().is_none_or(|n| n <= k as i64));
        let d = x.sub(&x);
        prop_assert!(d.is_zero());
        prop_assert_eq!(d.valuation(), Valuation::AtLeast(k as i64));
    }

    #[test]
    fn mhs_matches_enumeration(n in 0u64..10, idx in index()) {
        let f = ExactField;
        prop_assert_eq!(mhs(&f, n, &idx), mhs_bruteforce(&f, n, &idx, SumKind::Standard));
        prop_assert_eq!(odd_mhs(&f, n, &idx), mhs_bruteforce(&f, n, &idx, SumKind::Odd));
    }

    #[test]
    fn mhs_engines_agree(n in 0u64..12, idx in index()) {
        let e = ExactField;
        let f = PadicField::new(29, 8).unwrap();
        prop_assert!(agree(&f, &mhs(&f, n, &idx), &mhs(&e, n, &idx)));
        prop_assert!(agree(&f, &odd_mhs(&f, n, &idx), &odd_mhs(&e, n, &idx)));
    }

    #[test]
    fn stuffle(n in 0u64..30, r in 1u32..5, s in 1u32..5) {
        let f = ExactField;
        let i = |v: &[u32]| MhsIndex::new(v.to_vec()).unwrap();
        for sum in [mhs::<ExactField>, odd_mhs::<ExactField>] {
            let lhs = sum(&f, n, &i(&[r])) * sum(&f, n, &i(&[s]));
            let rhs = sum(&f, n, &i(&[r, s])) + sum(&f, n, &i(&[s, r])) + sum(&f, n, &i(&[r + s]));
            prop_assert_eq!(lhs, rhs);
        }
        let h22 = mhs(&f, n, &i(&[2, 2]));
        let h2 = mhs(&f, n, &i(&[2]));
        prop_assert_eq!(h22, (&h2 * &h2 - mhs(&f, n, &i(&[4]))) / BigInt::from(2));
    }

    #[test]
    fn bernoulli_paths_agree(half in 0usize..40, p in prop::sample::select(vec![83u64, 89, 97, 101, 199])) {
        let m = 2 * half;
        let exact = bernoulli_exact(m).unwrap();
        prop_assert_eq!(residue(&exact, p, 1).unwrap(), bernoulli_mod_p(m, p).unwrap().into());
    }

    #[test]
    fn power_sum_law(p in prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23, 61]), m in 1u64..61) {
        let expected = if m % (p - 1) == 0 { p - 1 } else { 0 };
        prop_assert_eq!(power_sum_mod(p - 1, m, p), expected);
        let exact = power_sum(&ExactField, p - 1, m as u32);
        prop_assert_eq!(residue(&exact, p, 1).unwrap(), expected.into());
    }

    #[test]
    fn registry_engines_agree(i in any::<prop::sample::Index>(), p in prop::sample::select(vec![7u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43])) {
        let stmt = &registry()[i.index(registry().len())];
        prop_assume!(stmt.applies(p));
        let a = evaluate_statement(stmt, p, Engine::Exact).unwrap();
        let b = evaluate_statement(stmt, p, Engine::Padic).unwrap();
        prop_assert_eq!(a.pass, b.pass);
        prop_assert_eq!(a.residue_lhs, b.residue_lhs);
        prop_assert_eq!(a.residue_rhs, b.residue_rhs);
    }

    #[test]
    fn identities_hold(n in 1u64..25, k in 0u64..25) {
        prop_assert!(leshchiner_odd(n, 1 + 2 * (k as u32 % 4)).unwrap().holds());
        prop_assert!(leshchiner_even(n, 2 + 2 * (k as u32 % 3)).unwrap().holds());
        prop_assert!(ccc_product(n, k.min(n)).unwrap().all_equal());
        let (a, b) = inverse_binomial_sums(n);
        prop_assert!(a.holds() && b.holds());
    }
}
