//! Multiple harmonic sums over either number engine.
//!
//! `H_n(a_1,...,a_r)` sums `1/(k_1^a_1 ... k_r^a_r)` over `0 < k_1 < ... < k_r <= n`.
//! The odd variant `Hbar_n(a_1,...,a_r)` sums `1/((2k_1+1)^a_1 ... (2k_r+1)^a_r)`
//! over `0 <= k_1 < ... < k_r < n`. The empty index gives 1 in both.

use std::fmt;

use crate::arith::Field;
use crate::error::{Error, Result};

/// A composition `(a_1, ..., a_r)` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MhsIndex(Vec<u32>);

impl MhsIndex {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Result<Self> {
        let v = exponents.into();
        if v.contains(&0) {
            return Err(Error::InvalidParameter(format!("index {v:?} has a zero exponent")));
        }
        Ok(MhsIndex(v))
    }

    pub fn empty() -> Self {
        MhsIndex(Vec::new())
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for MhsIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(value, ..., value)` repeated `count` times; `{2}^j` in the usual notation.
pub fn repeated_index(value: u32, count: usize) -> MhsIndex {
    assert!(value >= 1, "exponents are positive");
    MhsIndex(vec![value; count])
}

/// Which family of denominators a sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    /// `k = 1..=n`
    Standard,
    /// `2k+1` for `k = 0..n`
    Odd,
}

impl SumKind {
    fn denominators(self, n: u64) -> impl Iterator<Item = u64> {
        let (lo, hi) = match self {
            SumKind::Standard => (1, n + 1),
            SumKind::Odd => (0, n),
        };
        (lo..hi).map(move |k| if self == SumKind::Odd { 2 * k + 1 } else { k })
    }
}

/// Running layered sums. Layer `j` holds the depth-`j` sum over the prefix of
/// denominators seen so far; feeding one denominator updates the top layer
/// first so each layer reads its predecessor's value before this step.
struct Layers<'f, F: Field> {
    field: &'f F,
    exps: &'f [u32],
    layers: Vec<F::Elem>,
}

impl<'f, F: Field> Layers<'f, F> {
    fn new(field: &'f F, idx: &'f MhsIndex) -> Self {
        let mut layers = vec![field.zero(); idx.depth() + 1];
        layers[0] = field.one();
        Layers {
            field,
            exps: idx.exponents(),
            layers,
        }
    }

    fn push(&mut self, d: u64) {
        let f = self.field;
        let inv = f.recip(d);
        let mut cache: Vec<(u32, F::Elem)> = Vec::new();
        for j in (1..self.layers.len()).rev() {
            let a = self.exps[j - 1];
            let w = match cache.iter().find(|(e, _)| *e == a) {
                Some((_, w)) => w.clone(),
                None => {
                    let w = f.pow(&inv, a);
                    cache.push((a, w.clone()));
                    w
                }
            };
            let t = f.mul(&self.layers[j - 1], &w);
            self.layers[j] = f.add(&self.layers[j], &t);
        }
    }

    fn top(&self) -> &F::Elem {
        self.layers.last().expect("layer 0 always present")
    }
}

fn layered<F: Field>(field: &F, n: u64, idx: &MhsIndex, kind: SumKind) -> F::Elem {
    if idx.depth() == 0 {
        return field.one();
    }
    let mut acc = Layers::new(field, idx);
    for d in kind.denominators(n) {
        acc.push(d);
    }
    acc.top().clone()
}

fn layered_prefixes<F: Field>(field: &F, n: u64, idx: &MhsIndex, kind: SumKind) -> Vec<F::Elem> {
    let mut acc = Layers::new(field, idx);
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(acc.top().clone());
    for d in kind.denominators(n) {
        acc.push(d);
        out.push(acc.top().clone());
    }
    out
}

/// `H_n(idx)` in `O(n * depth)` field operations.
pub fn mhs<F: Field>(field: &F, n: u64, idx: &MhsIndex) -> F::Elem {
    layered(field, n, idx, SumKind::Standard)
}

/// `Hbar_n(idx)`.
pub fn odd_mhs<F: Field>(field: &F, n: u64, idx: &MhsIndex) -> F::Elem {
    layered(field, n, idx, SumKind::Odd)
}

/// `[H_0(idx), H_1(idx), ..., H_n(idx)]`.
pub fn mhs_prefixes<F: Field>(field: &F, n: u64, idx: &MhsIndex) -> Vec<F::Elem> {
    layered_prefixes(field, n, idx, SumKind::Standard)
}

/// `[Hbar_0(idx), ..., Hbar_n(idx)]`.
pub fn odd_mhs_prefixes<F: Field>(field: &F, n: u64, idx: &MhsIndex) -> Vec<F::Elem> {
    layered_prefixes(field, n, idx, SumKind::Odd)
}

/// `[S_n(), S_n(a_1), S_n(a_1,a_2), ..., S_n(idx)]` from a single pass.
pub fn depth_prefixes<F: Field>(field: &F, n: u64, idx: &MhsIndex, kind: SumKind) -> Vec<F::Elem> {
    let mut acc = Layers::new(field, idx);
    for d in kind.denominators(n) {
        acc.push(d);
    }
    acc.layers
}

/// Direct enumeration of every strictly increasing tuple. Exponential in the
/// depth; meant as an oracle for small cases.
pub fn mhs_bruteforce<F: Field>(field: &F, n: u64, idx: &MhsIndex, kind: SumKind) -> F::Elem {
    let dens: Vec<u64> = kind.denominators(n).collect();
    let exps = idx.exponents();
    let mut total = field.zero();
    let mut chosen = Vec::with_capacity(exps.len());

    fn walk<F: Field>(field: &F, dens: &[u64], exps: &[u32], start: usize, chosen: &mut Vec<u64>, total: &mut F::Elem) {
        if chosen.len() == exps.len() {
            let mut denom = num_bigint::BigUint::from(1u32);
            for (&d, &a) in chosen.iter().zip(exps) {
                denom *= num_bigint::BigUint::from(d).pow(a);
            }
            let term = field.inv(&field.integer(&denom)).expect("positive denominator");
            *total = field.add(total, &term);
            return;
        }
        for i in start..dens.len() {
            chosen.push(dens[i]);
            walk(field, dens, exps, i + 1, chosen, total);
            chosen.pop();
        }
    }

    walk(field, &dens, exps, 0, &mut chosen, &mut total);
    total
}
