//! Exact checks of the finite central-binomial identities, plus floating-point
//! partial sums of the four closed-form series.
//!
//! Every identity here holds for all `n`, so one mismatch is a bug (or an
//! erratum in the printed formula).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial, rat, rat_int, BigRational, ExactField};
use crate::error::{Error, Result};
use crate::sums::{depth_prefixes, odd_mhs_prefixes, repeated_index, SumKind};

/// Both sides of an identity evaluated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(e: u64) -> BigRational {
    if e.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn pow_int(base: i64, e: u32) -> BigRational {
    rat_int(BigInt::from(base).pow(e))
}

fn odd_pow_recip(k: u64, e: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2 * k + 1).pow(e))
}

/// `C(2k,k) / base^k` for `k = 0..n`.
fn central_weights(n: u64, base: i64) -> Vec<BigRational> {
    (0..n)
        .map(|k| rat_int(binomial(2 * k, k)) / pow_int(base, k as u32))
        .collect()
}

/// `[Hbar_k({2}^j) for k in 0..=n]` for each `j` in `0..=depth`.
fn hbar_twos(n: u64, depth: usize) -> Vec<Vec<BigRational>> {
    (0..=depth)
        .map(|j| odd_mhs_prefixes(&ExactField, n, &repeated_index(2, j)))
        .collect()
}

/// Shared shape of both parities; the weight base is 16 for odd `r` and -16 for even `r`.
struct Leshchiner {
    n: u64,
    r: u32,
    half: usize,
    twos: Vec<Vec<BigRational>>,
    weights: Vec<BigRational>,
}

impl Leshchiner {
    fn new(n: u64, r: u32, half: usize, base: i64) -> Self {
        Leshchiner {
            n,
            r,
            half,
            twos: hbar_twos(n, half),
            weights: central_weights(n, base),
        }
    }

    /// `sum_j (-1)^j Hbar_k({2}^j) / (2k+1)^(r-2j)` over `j = 0..=half`.
    fn inner(&self, k: u64) -> BigRational {
        (0..=self.half).fold(BigRational::zero(), |acc, j| {
            acc + sign(j as u64) * &self.twos[j][k as usize] * odd_pow_recip(k, self.r - 2 * j as u32)
        })
    }

    /// `C(2k,k) / (base^k C(n+k, 2k+1))`.
    fn inverse_weight(&self, k: u64) -> BigRational {
        &self.weights[k as usize] / rat_int(binomial(self.n + k, 2 * k + 1))
    }
}

/// Finite odd-`r` identity, both sides evaluated as printed.
pub fn leshchiner_odd(n: u64, r: u32) -> Result<IdentityCheck> {
    if r.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("r = {r} is not odd")));
    }
    let half = ((r - 1) / 2) as usize;
    let s = Leshchiner::new(n, r, half, 16);
    let quarter = sign(half as u64) * rat(1, 4);
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for k in 0..n {
        let top = &s.twos[half][k as usize];
        lhs += &s.weights[k as usize] * (s.inner(k) - &quarter * top * odd_pow_recip(k, 1));
        rhs += sign(k) * odd_pow_recip(k, r);
        rhs += &quarter * s.inverse_weight(k) * sign(n - k) * top * odd_pow_recip(k, 1);
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// Finite even-`r` identity.
pub fn leshchiner_even(n: u64, r: u32) -> Result<IdentityCheck> {
    if r % 2 == 1 || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "r = {r} is not a positive even integer"
        )));
    }
    let half = (r / 2 - 1) as usize;
    let s = Leshchiner::new(n, r, half, -16);
    let quarter = sign(half as u64) * rat(1, 4);
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for k in 0..n {
        let top = &s.twos[half][k as usize];
        lhs += &s.weights[k as usize] * (s.inner(k) + &quarter * top * odd_pow_recip(k, 2));
        rhs += odd_pow_recip(k, r);
        rhs += &quarter * s.inverse_weight(k) * top * odd_pow_recip(k, 2);
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// The `r = 1` case written out on its own:
/// `3/4 sum C(2k,k)/(16^k(2k+1)) = sum (-1)^k/(2k+1) + (-1)^n/4 sum C(2k,k)/((-16)^k C(n+k,2k+1)(2k+1))`.
pub fn identity_r1(n: u64) -> IdentityCheck {
    let w = central_weights(n, 16);
    let wn = central_weights(n, -16);
    let mut lhs = BigRational::zero();
    let mut alt = BigRational::zero();
    let mut tail = BigRational::zero();
    for k in 0..n {
        lhs += &w[k as usize] * odd_pow_recip(k, 1);
        alt += sign(k) * odd_pow_recip(k, 1);
        tail += &wn[k as usize] / rat_int(binomial(n + k, 2 * k + 1)) * odd_pow_recip(k, 1);
    }
    IdentityCheck {
        lhs: rat(3, 4) * lhs,
        rhs: alt + sign(n) * rat(1, 4) * tail,
    }
}

/// The `r = 2` case: `5/4 sum C(2k,k)/((-16)^k(2k+1)^2) = sum 1/(2k+1)^2 + 1/4 sum ...`.
pub fn identity_r2(n: u64) -> IdentityCheck {
    let wn = central_weights(n, -16);
    let mut lhs = BigRational::zero();
    let mut sq = BigRational::zero();
    let mut tail = BigRational::zero();
    for k in 0..n {
        lhs += &wn[k as usize] * odd_pow_recip(k, 2);
        sq += odd_pow_recip(k, 2);
        tail += &wn[k as usize] / rat_int(binomial(n + k, 2 * k + 1)) * odd_pow_recip(k, 2);
    }
    IdentityCheck {
        lhs: rat(5, 4) * lhs,
        rhs: sq + rat(1, 4) * tail,
    }
}

/// The `r = 3` case, with `Hbar_k(2)` weights.
pub fn identity_r3(n: u64) -> IdentityCheck {
    let w = central_weights(n, 16);
    let wn = central_weights(n, -16);
    let h2 = odd_mhs_prefixes(&ExactField, n, &repeated_index(2, 1));
    let mut lhs = BigRational::zero();
    let mut alt = BigRational::zero();
    let mut tail = BigRational::zero();
    for k in 0..n {
        let h = &h2[k as usize];
        lhs += &w[k as usize] * (odd_pow_recip(k, 3) - rat(3, 4) * h * odd_pow_recip(k, 1));
        alt += sign(k) * odd_pow_recip(k, 3);
        tail += &wn[k as usize] * h / rat_int(binomial(n + k, 2 * k + 1)) * odd_pow_recip(k, 1);
    }
    IdentityCheck {
        lhs,
        rhs: alt - sign(n) * rat(1, 4) * tail,
    }
}

/// The three forms of `(-16)^k C(n+k,2k) / C(2k,k)` with `p = 2n+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CccCheck {
    pub binomial_form: BigRational,
    pub product_form: BigRational,
    pub mhs_form: BigRational,
}

impl CccCheck {
    pub fn all_equal(&self) -> bool {
        self.binomial_form == self.product_form && self.product_form == self.mhs_form
    }
}

/// `(-16)^k C(n+k,2k)/C(2k,k) = prod_{j<k} (1 - p^2/(2j+1)^2) = sum_{j=0}^{k} (-1)^j p^(2j) Hbar_k({2}^j)`
/// with `p = 2n+1`, checked as an identity for every `n`.
pub fn ccc_product(n: u64, k: u64) -> Result<CccCheck> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let p2 = rat_int((2 * n + 1) * (2 * n + 1));
    let binomial_form = pow_int(-16, k as u32) * rat_int(binomial(n + k, 2 * k)) / rat_int(binomial(2 * k, k));
    let product_form = (0..k).fold(BigRational::one(), |acc, j| {
        acc * (BigRational::one() - &p2 * odd_pow_recip(j, 2))
    });
    let layers = repeated_two_layers(k);
    let mut mhs_form = BigRational::zero();
    let mut p_pow = BigRational::one();
    for (j, h) in layers.into_iter().enumerate() {
        mhs_form += sign(j as u64) * &p_pow * h;
        p_pow *= &p2;
    }
    Ok(CccCheck {
        binomial_form,
        product_form,
        mhs_form,
    })
}

/// `[Hbar_k({2}^j) for j = 0..=k]`, memoized since it does not depend on `n`.
fn repeated_two_layers(k: u64) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("layer cache poisoned").get(&k) {
        return v.clone();
    }
    let v = depth_prefixes(&ExactField, k, &repeated_index(2, k as usize), SumKind::Odd);
    cache.lock().expect("layer cache poisoned").insert(k, v.clone());
    v
}

/// The two inverse-binomial identities
/// `sum_{k=0}^{n} (-16)^k C(n+k,2k)/((2k+1)C(2k,k)) = 2(-1)^n sum_{k<n} (-1)^k/(2k+1) + 1/(2n+1)`
/// and its `(2k+1)^2` analogue, which sums to `1/(2n+1)^2`.
pub fn inverse_binomial_sums(n: u64) -> (IdentityCheck, IdentityCheck) {
    let mut first = BigRational::zero();
    let mut second = BigRational::zero();
    for k in 0..=n {
        let t = pow_int(-16, k as u32) * rat_int(binomial(n + k, 2 * k)) / rat_int(binomial(2 * k, k));
        first += &t * odd_pow_recip(k, 1);
        second += t * odd_pow_recip(k, 2);
    }
    let alt = (0..n).fold(BigRational::zero(), |acc, k| acc + sign(k) * odd_pow_recip(k, 1));
    let rhs1 = rat_int(2) * sign(n) * alt + odd_pow_recip(n, 1);
    (
        IdentityCheck { lhs: first, rhs: rhs1 },
        IdentityCheck {
            lhs: second,
            rhs: odd_pow_recip(n, 2),
        },
    )
}

/// `sum_{k=0}^{n-1} C(n+k,2k+1) (-1)^k/(2k+1)`. Printed as identically zero
/// in one derivation, but it is not (28/15 at n = 3); kept for inspection only.
pub fn alternating_binomial_sum(n: u64) -> BigRational {
    (0..n).fold(BigRational::zero(), |acc, k| {
        acc + sign(k) * rat_int(binomial(n + k, 2 * k + 1)) * odd_pow_recip(k, 1)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesId {
    /// `sum C(2k,k)/(16^k (2k+1)) = pi/3`
    ArctanPi3,
    /// `sum C(2k,k)/((-16)^k (2k+1)^2) = pi^2/10`
    Zeta2Pi2_10,
    /// `sum C(2k,k)/(16^k (2k+1)^3) = 7 pi^3/216`
    Cube7Pi3_216,
    /// `sum C(2k,k) Hbar_k(2)/(16^k (2k+1)) = pi^3/648`
    H2Pi3_648,
}

impl SeriesId {
    pub const ALL: [SeriesId; 4] = [
        SeriesId::ArctanPi3,
        SeriesId::Zeta2Pi2_10,
        SeriesId::Cube7Pi3_216,
        SeriesId::H2Pi3_648,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::ArctanPi3 => "arctan_pi3",
            SeriesId::Zeta2Pi2_10 => "zeta2_pi2_10",
            SeriesId::Cube7Pi3_216 => "cube_7pi3_216",
            SeriesId::H2Pi3_648 => "h2_pi3_648",
        }
    }

    pub fn target(self) -> f64 {
        use std::f64::consts::PI;
        match self {
            SeriesId::ArctanPi3 => PI / 3.0,
            SeriesId::Zeta2Pi2_10 => PI * PI / 10.0,
            SeriesId::Cube7Pi3_216 => 7.0 * PI.powi(3) / 216.0,
            SeriesId::H2Pi3_648 => PI.powi(3) / 648.0,
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesLimit {
    pub series: SeriesId,
    pub terms: usize,
    pub partial: f64,
    pub target: f64,
    pub abs_error: f64,
}

/// Partial sum of the first `terms` terms (k = 0..terms) in `f64`.
pub fn series_limit(series: SeriesId, terms: usize) -> Result<SeriesLimit> {
    if terms == 0 {
        return Err(Error::InvalidParameter("terms must be at least 1".into()));
    }
    // c = C(2k,k)/16^k, h = Hbar_k(2)
    let mut c = 1.0f64;
    let mut h = 0.0f64;
    let mut partial = 0.0f64;
    for k in 0..terms {
        let d = (2 * k + 1) as f64;
        let term = match series {
            SeriesId::ArctanPi3 => c / d,
            SeriesId::Zeta2Pi2_10 => {
                if k % 2 == 0 {
                    c / (d * d)
                } else {
                    -c / (d * d)
                }
            }
            SeriesId::Cube7Pi3_216 => c / (d * d * d),
            SeriesId::H2Pi3_648 => c * h / d,
        };
        partial += term;
        h += 1.0 / (d * d);
        let k1 = (k + 1) as f64;
        c *= (2.0 * k1 - 1.0) / (8.0 * k1);
    }
    let target = series.target();
    Ok(SeriesLimit {
        series,
        terms,
        partial,
        target,
        abs_error: (partial - target).abs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Odd,
    Even,
    Ccc,
    Invbinom,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Odd, Family::Even, Family::Ccc, Family::Invbinom];

    pub fn name(self) -> &'static str {
        match self {
            Family::Odd => "odd",
            Family::Even => "even",
            Family::Ccc => "ccc",
            Family::Invbinom => "invbinom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Family::Odd),
            "even" => Ok(Family::Even),
            "ccc" => Ok(Family::Ccc),
            "invbinom" => Ok(Family::Invbinom),
            _ => Err(Error::InvalidParameter(format!("unknown identity family `{s}`"))),
        }
    }
}

/// One identity instance in a sweep. `param` is `r` for the Leshchiner
/// families, `k` for the product identity, and 1 or 2 for the two
/// inverse-binomial identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub family: Family,
    pub n: u64,
    pub param: u64,
    pub holds: bool,
}

/// Checks every instance with `1 <= n <= max_n`. `rs` filters the `r` values
/// of the Leshchiner families (by parity); empty means the default lists
/// `{1,3,5,7}` and `{2,4,6}`.
pub fn identity_sweep(families: &[Family], max_n: u64, rs: &[u32]) -> Result<Vec<IdentityRow>> {
    let pick = |default: &[u32], odd: bool| -> Vec<u32> {
        if rs.is_empty() {
            default.to_vec()
        } else {
            rs.iter().copied().filter(|r| (r % 2 == 1) == odd && *r > 0).collect()
        }
    };
    let mut jobs: Vec<(Family, u64, u64)> = Vec::new();
    for &fam in families {
        for n in 1..=max_n {
            match fam {
                Family::Odd => jobs.extend(pick(&[1, 3, 5, 7], true).into_iter().map(|r| (fam, n, r as u64))),
                Family::Even => jobs.extend(pick(&[2, 4, 6], false).into_iter().map(|r| (fam, n, r as u64))),
                Family::Ccc => jobs.extend((0..=n).map(|k| (fam, n, k))),
                Family::Invbinom => jobs.extend([(fam, n, 1), (fam, n, 2)]),
            }
        }
    }
    jobs.par_iter()
        .map(|&(family, n, param)| {
            let holds = match family {
                Family::Odd => leshchiner_odd(n, param as u32)?.holds(),
                Family::Even => leshchiner_even(n, param as u32)?.holds(),
                Family::Ccc => ccc_product(n, param)?.all_equal(),
                Family::Invbinom => {
                    let (a, b) = inverse_binomial_sums(n);
                    if param == 1 {
                        a.holds()
                    } else {
                        b.holds()
                    }
                }
            };
            Ok(IdentityRow {
                family,
                n,
                param,
                holds,
            })
        })
        .collect()
}
