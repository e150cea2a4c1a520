//! Every congruence statement, with both sides built from the sum and
//! Bernoulli kernels.
//!
//! Notation inside evaluators: `n = (p-1)/2`, `m = floor(p/4)`,
//! `H_x(..)` standard and `Hbar_x(..)` odd multiple harmonic sums, `B_j` a
//! Bernoulli number. Bernoulli terms always come from the engine's own
//! Bernoulli source, never from another statement.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::Serialize;

use crate::arith::{binomial, is_prime};
use crate::bernoulli::BernoulliField;
use crate::error::Result;
use crate::sums::{mhs, odd_mhs, odd_mhs_prefixes, MhsIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Proven in the source.
    Proven,
    /// Stated without a complete proof.
    Draft,
    /// Repaired form of a printed statement that fails as printed.
    Corrected,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proven => "proven",
            Status::Draft => "draft",
            Status::Corrected => "corrected",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Formula {
    LitFullOdd(u32),
    LitFullEven(u32),
    LitDouble(u32, u32),
    LitTriple(u32, u32, u32),
    LitH1Printed,
    LitH1Corrected,
    LitH12,
    LitHalfOdd(u32),
    LitHalfEven(u32),
    LemC1(u32, u32),
    LemC3(u32, u32),
    LemC2(u32, u32),
    Wmezzo,
    CorHp2,
    CorH2,
    CorH3,
    CorH12H13,
    Alts,
    AltsB,
    Note221(u32),
    Morley6,
    Mc1,
    Mc2 { num: i64, den: i64 },
    S4Sum3,
    S4Inner,
    Mc3e21,
    Claim5_864,
    Mc21H2,
    Mc21Cube,
}

/// One congruence `lhs = rhs (mod p^exponent)`.
#[derive(Debug, Clone)]
pub struct CongruenceStatement {
    pub id: &'static str,
    pub params: Vec<u32>,
    /// Human-readable form of the congruence.
    pub display: String,
    pub exponent: u32,
    /// Largest power of `p` divided out by any term.
    pub depth: u32,
    /// The statement applies to primes `p > prime_bound` (and never below 5).
    pub prime_bound: u64,
    pub status: Status,
    formula: Formula,
}

/// Statements are only claimed for `p >= 5`.
pub const MIN_PRIME: u64 = 5;

impl CongruenceStatement {
    pub fn applies(&self, p: u64) -> bool {
        p >= MIN_PRIME && p > self.prime_bound && is_prime(p)
    }

    /// Working precision for the p-adic engine: exponent + depth + 2 guard digits.
    pub fn working_precision(&self) -> u32 {
        self.exponent + self.depth + 2
    }

    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.id.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(u32::to_string).collect();
            format!("{}[{}]", self.id, ps.join(","))
        }
    }

    pub fn is_draft(&self) -> bool {
        self.status == Status::Draft
    }

    /// Both sides at `p`, in the given engine.
    pub fn sides<F: BernoulliField>(&self, field: &F, p: u64) -> Result<(F::Elem, F::Elem)> {
        let env = Env {
            f: field,
            p,
            n: (p - 1) / 2,
            m: p / 4,
        };
        let (l, r) = env.eval(self.formula)?;
        Ok((l.x, r.x))
    }
}

/// A field element carrying its field, so formulas read as arithmetic.
struct V<'a, F: BernoulliField> {
    f: &'a F,
    x: F::Elem,
}

impl<F: BernoulliField> Clone for V<'_, F> {
    fn clone(&self) -> Self {
        V {
            f: self.f,
            x: self.x.clone(),
        }
    }
}

impl<'a, F: BernoulliField> Add for V<'a, F> {
    type Output = V<'a, F>;
    fn add(self, rhs: Self) -> Self {
        V {
            f: self.f,
            x: self.f.add(&self.x, &rhs.x),
        }
    }
}

impl<'a, F: BernoulliField> Sub for V<'a, F> {
    type Output = V<'a, F>;
    fn sub(self, rhs: Self) -> Self {
        V {
            f: self.f,
            x: self.f.sub(&self.x, &rhs.x),
        }
    }
}

impl<'a, F: BernoulliField> Mul for V<'a, F> {
    type Output = V<'a, F>;
    fn mul(self, rhs: Self) -> Self {
        V {
            f: self.f,
            x: self.f.mul(&self.x, &rhs.x),
        }
    }
}

impl<'a, F: BernoulliField> Neg for V<'a, F> {
    type Output = V<'a, F>;
    fn neg(self) -> Self {
        V {
            f: self.f,
            x: self.f.neg(&self.x),
        }
    }
}

struct Env<'a, F: BernoulliField> {
    f: &'a F,
    p: u64,
    n: u64,
    m: u64,
}

fn idx(e: &[u32]) -> MhsIndex {
    MhsIndex::new(e.to_vec()).expect("registry indices are positive")
}

fn parity(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<'a, F: BernoulliField> Env<'a, F> {
    fn v(&self, x: F::Elem) -> V<'a, F> {
        V { f: self.f, x }
    }

    fn c(&self, num: i64, den: i64) -> V<'a, F> {
        self.v(self.f.ratio(num, den))
    }

    fn zero(&self) -> V<'a, F> {
        self.v(self.f.zero())
    }

    fn sign(&self, e: u64) -> V<'a, F> {
        self.c(parity(e), 1)
    }

    /// `p^e`
    fn pp(&self, e: i32) -> V<'a, F> {
        self.v(self.f.prime_power(self.p, e))
    }

    fn h(&self, upto: u64, e: &[u32]) -> V<'a, F> {
        self.v(mhs(self.f, upto, &idx(e)))
    }

    fn hp(&self, e: &[u32]) -> V<'a, F> {
        self.h(self.p - 1, e)
    }

    fn hn(&self, e: &[u32]) -> V<'a, F> {
        self.h(self.n, e)
    }

    fn hm(&self, e: &[u32]) -> V<'a, F> {
        self.h(self.m, e)
    }

    fn hbn(&self, e: &[u32]) -> V<'a, F> {
        self.v(odd_mhs(self.f, self.n, &idx(e)))
    }

    /// `B_{p-k}`
    fn b(&self, k: u64) -> Result<V<'a, F>> {
        Ok(self.v(self.f.bernoulli((self.p - k) as usize)?))
    }

    fn binom(&self, n: u64, k: u64) -> V<'a, F> {
        self.v(self.f.integer(&binomial(n, k)))
    }

    /// `C(2k,k)/16^k` for `k < n`, by `t_k = t_{k-1} (2k-1)/(8k)`.
    fn central16(&self) -> Vec<V<'a, F>> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut t = self.c(1, 1);
        for k in 0..self.n {
            if k > 0 {
                t = t * self.c(2 * k as i64 - 1, 8 * k as i64);
            }
            out.push(t.clone());
        }
        out
    }

    /// `1/(2k+1)^e`
    fn odd_recip(&self, k: u64, e: u32) -> V<'a, F> {
        self.v(self.f.pow(&self.f.recip(2 * k + 1), e))
    }

    fn sum(&self, terms: impl IntoIterator<Item = V<'a, F>>) -> V<'a, F> {
        terms.into_iter().fold(self.zero(), |a, b| a + b)
    }

    /// `H_{p-1}(1)`
    fn wolstenholme(&self) -> V<'a, F> {
        self.hp(&[1])
    }

    fn eval(&self, formula: Formula) -> Result<(V<'a, F>, V<'a, F>)> {
        let (p, n) = (self.p, self.n);
        let h1 = || self.wolstenholme();
        Ok(match formula {
            Formula::LitFullOdd(r) => {
                let (r_, r2) = (r as i64, r as u64 + 2);
                (
                    self.hp(&[r]),
                    self.c(-r_ * (r_ + 1), 2 * (r_ + 2)) * self.pp(2) * self.b(r2)?,
                )
            }
            Formula::LitFullEven(r) => {
                let r_ = r as i64;
                (self.hp(&[r]), self.c(r_, r_ + 1) * self.pp(1) * self.b(r as u64 + 1)?)
            }
            Formula::LitDouble(r, s) => {
                let w = (r + s) as u64;
                let coef = parity(s as u64) * binom_i64(w, s as u64);
                (self.hp(&[r, s]), self.c(coef, w as i64) * self.b(w)?)
            }
            Formula::LitTriple(r, s, t) => {
                let w = (r + s + t) as u64;
                let coef = parity(r as u64) * binom_i64(w, r as u64) - parity(t as u64) * binom_i64(w, t as u64);
                (self.hp(&[r, s, t]), self.c(coef, 2 * w as i64) * self.b(w)?)
            }
            Formula::LitH1Printed => (h1(), self.c(-1, 2) * self.hp(&[2]) - self.c(1, 6) * self.hp(&[3])),
            Formula::LitH1Corrected => (
                h1(),
                self.c(-1, 2) * self.pp(1) * self.hp(&[2]) - self.c(1, 6) * self.pp(2) * self.hp(&[3]),
            ),
            Formula::LitH12 => (
                self.hp(&[1, 2]),
                self.c(-3, 1) * h1() * self.pp(-2) + self.c(1, 2) * self.pp(2) * self.b(5)?,
            ),
            Formula::LitHalfOdd(r) => {
                let r_ = r as i64;
                (self.hn(&[r]), self.c(-((1 << r) - 2), r_) * self.b(r as u64)?)
            }
            Formula::LitHalfEven(r) => {
                let r_ = r as i64;
                let coef = self.c(r_ * ((1 << (r + 1)) - 1), 2 * (r_ + 1));
                (self.hn(&[r]), coef * self.pp(1) * self.b(r as u64 + 1)?)
            }
            Formula::LemC1(r, a) => {
                let tail = self.sum((0..=a).map(|k| {
                    self.c(binom_i64((r - 1 + k) as u64, k as u64), 1) * self.hn(&[r + k]) * self.pp(k as i32)
                }));
                (self.hp(&[r]), self.hn(&[r]) + self.sign(r as u64) * tail)
            }
            Formula::LemC3(r, a) => {
                let coef = |k: u32| binom_i64((r - 1 + k) as u64, k as u64);
                let over_n = self.sum((0..=a).map(|k| self.c(coef(k), 1) * self.hn(&[r + k]) * self.pp(k as i32)));
                let over_m = self.sum((0..=a).map(|k| self.c(coef(k), 1 << k) * self.hm(&[r + k]) * self.pp(k as i32)));
                let minus_two_r = self.c(parity(r as u64) << r, 1);
                (
                    self.hn(&[r]),
                    self.hm(&[r]) + minus_two_r * over_n - self.sign(r as u64) * over_m,
                )
            }
            Formula::LemC2(r, s) => {
                let w = (r + s) as u64;
                let coef = parity(s as u64) * binom_i64(w, s as u64) + (1 << w) - 2;
                (self.hn(&[r, s]), self.c(coef, 2 * w as i64) * self.b(w)?)
            }
            Formula::Wmezzo => (
                self.hn(&[2]) + self.c(7, 6) * self.pp(1) * self.hn(&[3]) + self.c(5, 8) * self.pp(2) * self.hn(&[4]),
                self.zero(),
            ),
            Formula::CorHp2 => (
                self.hp(&[2]),
                self.c(-2, 1) * h1() * self.pp(-1) + self.c(2, 5) * self.pp(3) * self.b(5)?,
            ),
            Formula::CorH2 => (
                self.hn(&[2]),
                self.c(-7, 1) * h1() * self.pp(-1) + self.c(17, 10) * self.pp(3) * self.b(5)?,
            ),
            Formula::CorH3 => (
                self.hn(&[3]),
                self.c(6, 1) * h1() * self.pp(-2) - self.c(81, 10) * self.pp(2) * self.b(5)?,
            ),
            Formula::CorH12H13 => (
                self.hn(&[1, 2]) + self.pp(1) * self.hn(&[1, 3]),
                self.c(-9, 2) * h1() * self.pp(-2) - self.c(49, 20) * self.pp(2) * self.b(5)?,
            ),
            Formula::Alts => (
                self.alternating_odd_sum(),
                self.hbn(&[1]) - self.pp(1) * self.hbn(&[2]) - self.pp(2) * self.hbn(&[2, 1])
                    + self.pp(3) * self.hbn(&[2, 2])
                    + self.pp(4) * self.hbn(&[2, 2, 1]),
            ),
            Formula::AltsB => (
                self.alternating_odd_sum(),
                self.c(-1, 2) * self.hn(&[1]) + self.c(11, 16) * h1() - self.c(57, 1280) * self.pp(4) * self.b(5)?,
            ),
            Formula::Note221(variant) => {
                let a = || self.hn(&[2, 1, 2]);
                let b = || self.c(2, 1) * self.hn(&[1, 2, 2]);
                let c = || self.c(10, 1) * self.hn(&[2, 2, 1]);
                let target = self.c(-15, 4) * self.b(5)?;
                match variant {
                    1 => (a(), b()),
                    2 => (b(), c()),
                    3 => (c(), target),
                    _ => (a(), target),
                }
            }
            Formula::Morley6 => {
                let four = self.v(self.f.pow(&self.f.int(4), (p - 1) as u32));
                let lhs = self.sign(n) * self.binom(p - 1, n) * self.v(self.f.inv(&four.x)?);
                let rhs = self.c(1, 1) - self.c(1, 4) * self.pp(1) * h1() - self.c(1, 80) * self.pp(5) * self.b(5)?;
                (lhs, rhs)
            }
            Formula::Mc1 => {
                let lhs = self.sum(
                    self.central16()
                        .into_iter()
                        .enumerate()
                        .map(|(k, t)| t * self.odd_recip(k as u64, 1)),
                );
                let rhs = self.sign(n) * (h1() * self.c(1, 12) + self.c(3, 160) * self.pp(4) * self.b(5)?);
                (lhs, rhs)
            }
            Formula::Mc2 { num, den } => {
                let lhs = self.sum(
                    self.central16()
                        .into_iter()
                        .enumerate()
                        .map(|(k, t)| self.sign(k as u64) * t * self.odd_recip(k as u64, 2)),
                );
                let rhs = h1() * self.c(1, 5) * self.pp(-1) + self.c(num, den) * self.pp(3) * self.b(5)?;
                (lhs, rhs)
            }
            Formula::S4Sum3 => {
                let lhs = self.sign(n) * self.sum((0..n).map(|k| self.sign(k) * self.odd_recip(k, 3)));
                let rhs = self.c(-3, 32) * h1() * self.pp(-2) + self.c(21, 1280) * self.pp(2) * self.b(5)?;
                (lhs, rhs)
            }
            Formula::S4Inner => {
                let h2 = odd_mhs_prefixes(self.f, n, &idx(&[2]));
                let lhs = self.sum(self.central16().into_iter().enumerate().map(|(k, t)| {
                    let k = k as u64;
                    let inv_binom = self.v(self.f.inv(&self.binom(n + k, 2 * k + 1).x).expect("p-free binomial"));
                    self.sign(k) * t * self.v(h2[k as usize].clone()) * inv_binom * self.odd_recip(k, 1)
                }));
                let rhs = self.c(-9, 8) * h1() * self.pp(-2) + self.c(9, 320) * self.pp(2) * self.b(5)?;
                (lhs, rhs)
            }
            Formula::Mc3e21 => {
                let h2 = odd_mhs_prefixes(self.f, n, &idx(&[2]));
                let lhs = self.sign(n)
                    * self.sum(self.central16().into_iter().enumerate().map(|(k, t)| {
                        let k = k as u64;
                        t * (self.odd_recip(k, 3)
                            - self.c(3, 4) * self.v(h2[k as usize].clone()) * self.odd_recip(k, 1))
                    }));
                let rhs = self.c(3, 16) * h1() * self.pp(-2) + self.c(3, 320) * self.pp(2) * self.b(5)?;
                (lhs, rhs)
            }
            Formula::Claim5_864 => {
                let h22 = odd_mhs_prefixes(self.f, n, &idx(&[2, 2]));
                let lhs = self.sum(
                    self.central16()
                        .into_iter()
                        .enumerate()
                        .map(|(k, t)| t * self.v(h22[k].clone()) * self.odd_recip(k as u64, 1)),
                );
                (lhs, self.sign(n) * self.c(5, 864) * self.b(5)?)
            }
            Formula::Mc21H2 => {
                let h2 = odd_mhs_prefixes(self.f, n, &idx(&[2]));
                let lhs = self.sum(
                    self.central16()
                        .into_iter()
                        .enumerate()
                        .map(|(k, t)| t * self.v(h2[k].clone()) * self.odd_recip(k as u64, 1)),
                );
                let rhs =
                    self.sign(n) * (h1() * self.c(1, 12) * self.pp(-2) + self.c(53, 2160) * self.pp(2) * self.b(5)?);
                (lhs, rhs)
            }
            Formula::Mc21Cube => {
                let lhs = self.sum(
                    self.central16()
                        .into_iter()
                        .enumerate()
                        .map(|(k, t)| t * self.odd_recip(k as u64, 3)),
                );
                let rhs =
                    self.sign(n) * (h1() * self.c(1, 4) * self.pp(-2) + self.c(1, 36) * self.pp(2) * self.b(5)?);
                (lhs, rhs)
            }
        })
    }

    /// `2 (-1)^n sum_{k<n} (-1)^k/(2k+1)`
    fn alternating_odd_sum(&self) -> V<'a, F> {
        self.c(2, 1) * self.sign(self.n) * self.sum((0..self.n).map(|k| self.sign(k) * self.odd_recip(k, 1)))
    }
}

fn binom_i64(n: u64, k: u64) -> i64 {
    i64::try_from(binomial(n, k)).expect("small binomial")
}

struct Builder(Vec<CongruenceStatement>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: &'static str,
        params: &[u32],
        display: String,
        exponent: u32,
        depth: u32,
        prime_bound: u64,
        status: Status,
        formula: Formula,
    ) {
        self.0.push(CongruenceStatement {
            id,
            params: params.to_vec(),
            display,
            exponent,
            depth,
            prime_bound,
            status,
            formula,
        });
    }
}

fn build() -> Vec<CongruenceStatement> {
    use Status::*;
    let mut b = Builder(Vec::new());

    for r in [1, 3, 5] {
        b.push(
            "lit_full_odd",
            &[r],
            format!("H_{{p-1}}({r}) = -{r}({r}+1)/(2({r}+2)) p^2 B_{{p-{r}-2}} mod p^3"),
            3,
            0,
            r as u64 + 2,
            Proven,
            Formula::LitFullOdd(r),
        );
    }
    for r in [2, 4, 6] {
        b.push(
            "lit_full_even",
            &[r],
            format!("H_{{p-1}}({r}) = {r}/({r}+1) p B_{{p-{r}-1}} mod p^2"),
            2,
            0,
            r as u64 + 2,
            Proven,
            Formula::LitFullEven(r),
        );
    }
    for r in 1..=4 {
        for s in 1..=4 {
            b.push(
                "lit_double",
                &[r, s],
                format!("H_{{p-1}}({r},{s}) = (-1)^{s}/({r}+{s}) C({r}+{s},{s}) B_{{p-{r}-{s}}} mod p"),
                1,
                0,
                (r + s) as u64,
                Proven,
                Formula::LitDouble(r, s),
            );
        }
    }
    for w in [3u32, 5, 7] {
        for r in 1..w {
            for s in 1..(w - r) {
                let t = w - r - s;
                b.push(
                    "lit_triple",
                    &[r, s, t],
                    format!(
                        "H_{{p-1}}({r},{s},{t}) = ((-1)^{r} C({w},{r}) - (-1)^{t} C({w},{t}))/(2*{w}) B_{{p-{w}}} mod p"
                    ),
                    1,
                    0,
                    w as u64,
                    Proven,
                    Formula::LitTriple(r, s, t),
                );
            }
        }
    }
    b.push(
        "lit_h1_235",
        &[],
        "H_{p-1}(1) = -1/2 H_{p-1}(2) - 1/6 H_{p-1}(3) mod p^5 (as printed)".into(),
        5,
        0,
        5,
        Proven,
        Formula::LitH1Printed,
    );
    b.push(
        "lit_h1_235_corrected",
        &[],
        "H_{p-1}(1) = -1/2 p H_{p-1}(2) - 1/6 p^2 H_{p-1}(3) mod p^5".into(),
        5,
        0,
        5,
        Corrected,
        Formula::LitH1Corrected,
    );
    b.push(
        "lit_h12",
        &[],
        "H_{p-1}(1,2) = -3 H_{p-1}(1)/p^2 + 1/2 p^2 B_{p-5} mod p^3".into(),
        3,
        2,
        5,
        Proven,
        Formula::LitH12,
    );
    for r in [3, 5, 7] {
        b.push(
            "lit_half_odd",
            &[r],
            format!("H_n({r}) = -(2^{r}-2)/{r} B_{{p-{r}}} mod p"),
            1,
            0,
            r as u64 + 4,
            Proven,
            Formula::LitHalfOdd(r),
        );
    }
    for r in [2, 4, 6] {
        b.push(
            "lit_half_even",
            &[r],
            format!("H_n({r}) = {r}(2^{}-1)/(2({r}+1)) p B_{{p-{r}-1}} mod p^2", r + 1),
            2,
            0,
            r as u64 + 4,
            Proven,
            Formula::LitHalfEven(r),
        );
    }
    for r in 1..=4 {
        for a in 1..=4 {
            b.push(
                "lem_C1",
                &[r, a],
                format!(
                    "H_{{p-1}}({r}) = H_n({r}) + (-1)^{r} sum_{{k=0}}^{a} C({r}-1+k,k) H_n({r}+k) p^k mod p^{}",
                    a + 1
                ),
                a + 1,
                0,
                r as u64 + 2,
                Proven,
                Formula::LemC1(r, a),
            );
        }
    }
    for r in 1..=4 {
        for a in 1..=4 {
            b.push(
                "lem_C3",
                &[r, a],
                format!(
                    "H_n({r}) = H_m({r}) + (-2)^{r} sum_k C({r}-1+k,k) H_n({r}+k) p^k - (-1)^{r} sum_k C({r}-1+k,k) H_m({r}+k) p^k/2^k, k=0..{a}, mod p^{}",
                    a + 1
                ),
                a + 1, 0, r as u64 + 2, Proven, Formula::LemC3(r, a),
            );
        }
    }
    for w in [3u32, 5, 7] {
        for r in 1..w {
            let s = w - r;
            b.push(
                "lem_C2",
                &[r, s],
                format!("H_n({r},{s}) = B_{{p-{w}}}/(2*{w}) ((-1)^{s} C({w},{s}) + 2^{w} - 2) mod p"),
                1,
                0,
                w as u64,
                Proven,
                Formula::LemC2(r, s),
            );
        }
    }
    b.push(
        "thm_wmezzo",
        &[],
        "H_n(2) + 7/6 p H_n(3) + 5/8 p^2 H_n(4) = 0 mod p^4".into(),
        4,
        0,
        2,
        Proven,
        Formula::Wmezzo,
    );
    b.push(
        "cor_Hp2",
        &[],
        "H_{p-1}(2) = -2 H_{p-1}(1)/p + 2/5 p^3 B_{p-5} mod p^4".into(),
        4,
        1,
        5,
        Proven,
        Formula::CorHp2,
    );
    b.push(
        "cor_H2",
        &[],
        "H_n(2) = -7 H_{p-1}(1)/p + 17/10 p^3 B_{p-5} mod p^4".into(),
        4,
        1,
        5,
        Proven,
        Formula::CorH2,
    );
    b.push(
        "cor_H3",
        &[],
        "H_n(3) = 6 H_{p-1}(1)/p^2 - 81/10 p^2 B_{p-5} mod p^3".into(),
        3,
        2,
        5,
        Proven,
        Formula::CorH3,
    );
    b.push(
        "cor_H12_H13",
        &[],
        "H_n(1,2) + p H_n(1,3) = -9/2 H_{p-1}(1)/p^2 - 49/20 p^2 B_{p-5} mod p^3".into(),
        3,
        2,
        5,
        Proven,
        Formula::CorH12H13,
    );
    b.push(
        "thm_alts",
        &[],
        "2(-1)^n sum_{k<n} (-1)^k/(2k+1) = Hb_n(1) - p Hb_n(2) - p^2 Hb_n(2,1) + p^3 Hb_n(2,2) + p^4 Hb_n(2,2,1) mod p^5".into(),
        5, 0, 5, Proven, Formula::Alts,
    );
    b.push(
        "thm_altsb",
        &[],
        "2(-1)^n sum_{k<n} (-1)^k/(2k+1) = -1/2 H_n(1) + 11/16 H_{p-1}(1) - 57/1280 p^4 B_{p-5} mod p^5".into(),
        5,
        0,
        5,
        Proven,
        Formula::AltsB,
    );
    let note = [
        "H_n(2,1,2) = 2 H_n(1,2,2) mod p",
        "2 H_n(1,2,2) = 10 H_n(2,2,1) mod p",
        "10 H_n(2,2,1) = -15/4 B_{p-5} mod p",
        "H_n(2,1,2) = -15/4 B_{p-5} mod p",
    ];
    for (i, text) in note.iter().enumerate() {
        let v = i as u32 + 1;
        b.push("note_221", &[v], (*text).into(), 1, 0, 5, Proven, Formula::Note221(v));
    }
    b.push(
        "morley6",
        &[],
        "(-1)^n C(p-1,n)/4^(p-1) = 1 - 1/4 p H_{p-1}(1) - 1/80 p^5 B_{p-5} mod p^6".into(),
        6,
        0,
        5,
        Proven,
        Formula::Morley6,
    );
    b.push(
        "mc1",
        &[],
        "sum_{k<n} C(2k,k)/(16^k (2k+1)) = (-1)^n (H_{p-1}(1)/12 + 3/160 p^4 B_{p-5}) mod p^5".into(),
        5,
        0,
        5,
        Proven,
        Formula::Mc1,
    );
    b.push(
        "mc2",
        &[],
        "sum_{k<n} C(2k,k)/((-16)^k (2k+1)^2) = H_{p-1}(1)/(5p) + 7/20 p^3 B_{p-5} mod p^4 (as printed)".into(),
        4,
        1,
        5,
        Proven,
        Formula::Mc2 { num: 7, den: 20 },
    );
    b.push(
        "mc2_corrected",
        &[],
        "sum_{k<n} C(2k,k)/((-16)^k (2k+1)^2) = H_{p-1}(1)/(5p) + 7/200 p^3 B_{p-5} mod p^4".into(),
        4,
        1,
        5,
        Corrected,
        Formula::Mc2 { num: 7, den: 200 },
    );
    b.push(
        "s4_sum3",
        &[],
        "(-1)^n sum_{k<n} (-1)^k/(2k+1)^3 = -3/32 H_{p-1}(1)/p^2 + 21/1280 p^2 B_{p-5} mod p^3".into(),
        3,
        2,
        5,
        Draft,
        Formula::S4Sum3,
    );
    b.push(
        "s4_inner",
        &[],
        "sum_{k<n} C(2k,k) Hb_k(2)/((-16)^k C(n+k,2k+1) (2k+1)) = -9/8 H_{p-1}(1)/p^2 + 9/320 p^2 B_{p-5} mod p^3"
            .into(),
        3,
        2,
        5,
        Draft,
        Formula::S4Inner,
    );
    b.push(
        "mc3e21",
        &[],
        "(-1)^n sum_{k<n} C(2k,k)/16^k (1/(2k+1)^3 - 3/4 Hb_k(2)/(2k+1)) = 3/16 H_{p-1}(1)/p^2 + 3/320 p^2 B_{p-5} mod p^3".into(),
        3, 2, 5, Draft, Formula::Mc3e21,
    );
    b.push(
        "claim_5_864",
        &[],
        "sum_{k<n} C(2k,k) Hb_k(2,2)/(16^k (2k+1)) = (-1)^n 5/864 B_{p-5} mod p".into(),
        1,
        0,
        5,
        Draft,
        Formula::Claim5_864,
    );
    b.push(
        "mc21_h2",
        &[],
        "sum_{k<n} C(2k,k) Hb_k(2)/(16^k (2k+1)) = (-1)^n (H_{p-1}(1)/(12 p^2) + 53/2160 p^2 B_{p-5}) mod p^3".into(),
        3,
        2,
        5,
        Draft,
        Formula::Mc21H2,
    );
    b.push(
        "mc21_cube",
        &[],
        "sum_{k<n} C(2k,k)/(16^k (2k+1)^3) = (-1)^n (H_{p-1}(1)/(4 p^2) + 1/36 p^2 B_{p-5}) mod p^3".into(),
        3,
        2,
        5,
        Draft,
        Formula::Mc21Cube,
    );
    b.0
}

/// The full statement list, in a fixed order.
pub fn registry() -> &'static [CongruenceStatement] {
    static REGISTRY: OnceLock<Vec<CongruenceStatement>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

/// Distinct statement ids in registry order.
pub fn statement_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = Vec::new();
    for s in registry() {
        if !ids.contains(&s.id) {
            ids.push(s.id);
        }
    }
    ids
}

/// Every instance of `id` (several for parametrized statements).
pub fn instances(id: &str) -> Vec<&'static CongruenceStatement> {
    registry().iter().filter(|s| s.id == id).collect()
}

/// The instance of `id` with exactly these parameters.
pub fn lookup(id: &str, params: &[u32]) -> Result<&'static CongruenceStatement> {
    registry()
        .iter()
        .find(|s| s.id == id && s.params == params)
        .ok_or_else(|| {
            if params.is_empty() {
                crate::Error::UnknownStatement(id.to_string())
            } else {
                let ps: Vec<String> = params.iter().map(u32::to_string).collect();
                crate::Error::UnknownStatement(format!("{id}[{}]", ps.join(",")))
            }
        })
}
