//! Congruence statements and the machinery that checks them at primes.
//!
//! A statement `lhs = rhs (mod p^e)` passes at `p` when `val_p(lhs - rhs) >= e`.
//! The exact engine computes that valuation outright. The p-adic engine runs
//! at working precision `e + d + 2` and reports either a certified valuation
//! or [`Error::PrecisionExhausted`] when the difference vanishes to fewer
//! than `e` known digits.

mod registry;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use registry::{instances, lookup, registry, statement_ids, CongruenceStatement, Status, MIN_PRIME};

use crate::arith::{Engine, ExactField, Field, PadicField, Valuation};
use crate::bernoulli::BernoulliField;
use crate::error::{Error, Result};

/// Outcome of one statement at one prime in one engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceResult {
    pub statement: &'static str,
    pub params: Vec<u32>,
    pub prime: u64,
    pub engine: Engine,
    pub status: Status,
    pub required_exponent: u32,
    /// Valuation of `lhs - rhs`; `AtLeast` when the p-adic engine ran out of digits.
    pub achieved: Option<Valuation>,
    /// `lhs mod p^e`, absent when `lhs` is not p-integral.
    pub residue_lhs: Option<String>,
    pub residue_rhs: Option<String>,
    pub pass: bool,
    /// Set when evaluation itself failed; `pass` is then false.
    pub error: Option<String>,
    pub micros: u64,
}

impl CongruenceResult {
    pub fn label(&self) -> String {
        label(self.statement, &self.params)
    }

    /// Ordering key; timing is excluded so sorted output is reproducible.
    fn key(&self) -> (&'static str, &[u32], u64, Engine) {
        (self.statement, &self.params, self.prime, self.engine)
    }
}

pub(crate) fn label(id: &str, params: &[u32]) -> String {
    if params.is_empty() {
        id.to_string()
    } else {
        let ps: Vec<String> = params.iter().map(u32::to_string).collect();
        format!("{id}[{}]", ps.join(","))
    }
}

fn residue_string<F: Field>(field: &F, x: &F::Elem, p: u64, e: u32) -> Option<String> {
    field.residue(x, p, e).ok().map(|r| r.to_string())
}

fn check<F: BernoulliField>(
    field: &F,
    stmt: &CongruenceStatement,
    p: u64,
) -> Result<(Valuation, Option<String>, Option<String>)> {
    let (lhs, rhs) = stmt.sides(field, p)?;
    let diff = field.sub(&lhs, &rhs);
    let e = stmt.exponent;
    let v = field.valuation(&diff, p);
    if let Valuation::AtLeast(n) = v {
        if n < e as i64 {
            return Err(Error::PrecisionExhausted {
                available: n,
                required: e as i64,
            });
        }
    }
    Ok((v, residue_string(field, &lhs, p, e), residue_string(field, &rhs, p, e)))
}

/// Both sides of `stmt` at `p` in exact arithmetic.
pub fn exact_sides(
    stmt: &CongruenceStatement,
    p: u64,
) -> Result<(crate::arith::BigRational, crate::arith::BigRational)> {
    if !stmt.applies(p) {
        return Err(Error::NotApplicable {
            statement: stmt.label(),
            prime: p,
        });
    }
    stmt.sides(&ExactField, p)
}

/// Evaluates one statement at one prime.
pub fn evaluate_statement(stmt: &'static CongruenceStatement, p: u64, engine: Engine) -> Result<CongruenceResult> {
    if !stmt.applies(p) {
        return Err(Error::NotApplicable {
            statement: stmt.label(),
            prime: p,
        });
    }
    let start = Instant::now();
    let (achieved, residue_lhs, residue_rhs) = match engine {
        Engine::Exact => check(&ExactField, stmt, p)?,
        Engine::Padic => check(&PadicField::new(p, stmt.working_precision())?, stmt, p)?,
    };
    Ok(CongruenceResult {
        statement: stmt.id,
        params: stmt.params.clone(),
        prime: p,
        engine,
        status: stmt.status,
        required_exponent: stmt.exponent,
        achieved: Some(achieved),
        residue_lhs,
        residue_rhs,
        pass: achieved.reaches(stmt.exponent as i64),
        error: None,
        micros: start.elapsed().as_micros() as u64,
    })
}

/// Like [`evaluate_statement`], but evaluation errors become a failing row.
fn evaluate_cell(stmt: &'static CongruenceStatement, p: u64, engine: Engine) -> CongruenceResult {
    let start = Instant::now();
    evaluate_statement(stmt, p, engine).unwrap_or_else(|err| CongruenceResult {
        statement: stmt.id,
        params: stmt.params.clone(),
        prime: p,
        engine,
        status: stmt.status,
        required_exponent: stmt.exponent,
        achieved: match err {
            Error::PrecisionExhausted { available, .. } => Some(Valuation::AtLeast(available)),
            _ => None,
        },
        residue_lhs: None,
        residue_rhs: None,
        pass: false,
        error: Some(err.to_string()),
        micros: start.elapsed().as_micros() as u64,
    })
}

/// Exact and p-adic rows for the same cell that disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngineMismatch {
    pub statement: String,
    pub prime: u64,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

/// Everything a sweep produced, in deterministic order.
#[derive(Debug, Clone, Default)]
pub struct Sweep {
    pub results: Vec<CongruenceResult>,
    /// Per statement label, counted per engine.
    pub summary: BTreeMap<String, Tally>,
    pub mismatches: Vec<EngineMismatch>,
}

impl Sweep {
    /// Failing rows that count against the run.
    pub fn required_failures(&self, strict: bool) -> impl Iterator<Item = &CongruenceResult> {
        self.results
            .iter()
            .filter(move |r| !r.pass && (strict || r.status != Status::Draft))
    }
}

/// Evaluates every applicable (statement, prime, engine) cell on `workers` threads.
pub fn verify_range(
    statements: &[&'static CongruenceStatement],
    primes: &[u64],
    engines: &[Engine],
    workers: usize,
) -> Result<Sweep> {
    if workers == 0 {
        return Err(Error::InvalidParameter("worker count must be at least 1".into()));
    }
    let mut cells = Vec::new();
    let mut summary: BTreeMap<String, Tally> = BTreeMap::new();
    for &stmt in statements {
        let tally = summary.entry(stmt.label()).or_default();
        for &p in primes {
            for &engine in engines {
                if stmt.applies(p) {
                    cells.push((stmt, p, engine));
                } else {
                    tally.not_applicable += 1;
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut results: Vec<CongruenceResult> =
        pool.install(|| cells.par_iter().map(|&(s, p, e)| evaluate_cell(s, p, e)).collect());
    results.sort_by(|a, b| a.key().cmp(&b.key()));
    results.dedup_by(|a, b| a.key() == b.key());

    for r in &results {
        let tally = summary.entry(r.label()).or_default();
        if r.pass {
            tally.pass += 1;
        } else {
            tally.fail += 1;
        }
    }
    let mismatches = cross_check(&results);
    Ok(Sweep {
        results,
        summary,
        mismatches,
    })
}

/// Compares exact and p-adic rows of the same cell: verdicts and residues must agree.
fn cross_check(results: &[CongruenceResult]) -> Vec<EngineMismatch> {
    let mut out = Vec::new();
    for pair in results.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let same_cell = a.statement == b.statement && a.params == b.params && a.prime == b.prime;
        if !same_cell || a.engine != Engine::Exact || b.engine != Engine::Padic {
            continue;
        }
        let detail = if a.pass != b.pass {
            Some(format!("verdict exact={} padic={}", a.pass, b.pass))
        } else if a.residue_lhs != b.residue_lhs || a.residue_rhs != b.residue_rhs {
            Some(format!(
                "residues exact=({:?},{:?}) padic=({:?},{:?})",
                a.residue_lhs, a.residue_rhs, b.residue_lhs, b.residue_rhs
            ))
        } else {
            None
        };
        if let Some(detail) = detail {
            out.push(EngineMismatch {
                statement: a.label(),
                prime: a.prime,
                detail,
            });
        }
    }
    out
}

/// Exact valuation of `lhs - rhs` at each applicable prime.
pub fn sharpness_scan(stmt: &'static CongruenceStatement, primes: &[u64]) -> Result<Vec<(u64, Valuation)>> {
    primes
        .iter()
        .filter(|&&p| stmt.applies(p))
        .map(|&p| {
            let (lhs, rhs) = stmt.sides(&ExactField, p)?;
            Ok((p, ExactField.valuation(&(lhs - rhs), p)))
        })
        .collect()
}

/// Parses a selection such as `all`, `proven`, `draft`, `corrected` or a
/// comma list of ids and those keywords. An id selects all its instances.
pub fn select(spec: &str) -> Result<Vec<&'static CongruenceStatement>> {
    let mut out: Vec<&'static CongruenceStatement> = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let picked: Vec<&'static CongruenceStatement> = match token {
            "all" => registry().iter().collect(),
            "proven" => registry().iter().filter(|s| s.status == Status::Proven).collect(),
            "draft" => registry().iter().filter(|s| s.status == Status::Draft).collect(),
            "corrected" => registry().iter().filter(|s| s.status == Status::Corrected).collect(),
            id => {
                let found = instances(id);
                if found.is_empty() {
                    return Err(Error::UnknownStatement(id.to_string()));
                }
                found
            }
        };
        for s in picked {
            if !out.iter().any(|o| std::ptr::eq(*o, s)) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, valuation};

    fn one(id: &str) -> &'static CongruenceStatement {
        lookup(id, &[]).unwrap()
    }

    #[test]
    fn registry_shape() {
        let reg = registry();
        assert!(reg.iter().all(|s| !s.applies(3)));
        assert_eq!(one("mc1").exponent, 5);
        assert_eq!(one("mc1").depth, 0);
        assert_eq!(one("mc2").working_precision(), 7);
        let drafts: Vec<_> = statement_ids()
            .into_iter()
            .filter(|id| instances(id)[0].is_draft())
            .collect();
        assert_eq!(
            drafts,
            ["s4_sum3", "s4_inner", "mc3e21", "claim_5_864", "mc21_h2", "mc21_cube"]
        );
        assert_eq!(instances("lit_triple").len(), 1 + 6 + 15);
        assert_eq!(instances("lem_C2").len(), 2 + 4 + 6);
    }

    #[test]
    fn mc1_anchor() {
        let (l, r) = exact_sides(one("mc1"), 7).unwrap();
        assert_eq!(l, rat(1, 1) + rat(1, 24) + rat(3, 640));
        assert_eq!(&l - &r, rat(16807, 1920));
    }

    #[test]
    fn anchors_at_seven() {
        let v = |id: &str| {
            let (l, r) = exact_sides(one(id), 7).unwrap();
            valuation(&(l - r), 7)
        };
        assert_eq!(v("mc2"), Valuation::Finite(4));
        assert_eq!(v("morley6"), Valuation::Finite(6));
        assert_eq!(v("mc21_h2"), Valuation::Finite(3));
        assert_eq!(v("mc21_cube"), Valuation::Finite(3));
        assert!(v("claim_5_864").reaches(1));
    }

    #[test]
    fn not_applicable_below_floor() {
        assert!(matches!(
            evaluate_statement(one("mc1"), 5, Engine::Exact),
            Err(Error::NotApplicable { .. })
        ));
        assert!(lookup("lit_double", &[4, 4]).unwrap().applies(11));
        assert!(!lookup("lit_double", &[4, 4]).unwrap().applies(7));
    }

    #[test]
    fn engines_agree_on_mc1() {
        let a = evaluate_statement(one("mc1"), 7, Engine::Exact).unwrap();
        let b = evaluate_statement(one("mc1"), 7, Engine::Padic).unwrap();
        assert!(a.pass && b.pass);
        assert_eq!(a.residue_lhs, b.residue_lhs);
        assert_eq!(a.residue_rhs, b.residue_rhs);
        assert_eq!(a.achieved, Some(Valuation::Finite(5)));
        assert_eq!(b.achieved, Some(Valuation::AtLeast(5)));
    }

    #[test]
    fn printed_and_corrected_forms() {
        let printed = sharpness_scan(one("mc2"), &[7, 11, 13]).unwrap();
        assert_eq!(printed[0].1, Valuation::Finite(4));
        assert_eq!(printed[1].1, Valuation::Finite(3));
        let fixed = sharpness_scan(one("mc2_corrected"), &[11, 13, 17]).unwrap();
        assert!(fixed.iter().all(|(_, v)| v.reaches(4)));
        assert!(
            evaluate_statement(one("lit_h1_235_corrected"), 11, Engine::Padic)
                .unwrap()
                .pass
        );
        assert!(!evaluate_statement(one("lit_h1_235"), 11, Engine::Exact).unwrap().pass);
    }

    #[test]
    fn selection_parsing() {
        assert!(select("").unwrap().is_empty());
        assert_eq!(select("mc1,mc1").unwrap().len(), 1);
        assert_eq!(select("note_221").unwrap().len(), 4);
        assert_eq!(select("bogus").unwrap_err(), Error::UnknownStatement("bogus".into()));
        let all = select("all").unwrap().len();
        assert_eq!(select("proven,draft,corrected").unwrap().len(), all);
    }

    #[test]
    fn sweep_is_sorted_and_tallied() {
        let stmts = select("mc1,lit_double").unwrap();
        let sweep = verify_range(&stmts, &[5, 7, 11], &[Engine::Exact, Engine::Padic], 2).unwrap();
        assert!(sweep.mismatches.is_empty());
        let keys: Vec<_> = sweep.results.iter().map(|r| r.key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(
            sweep.summary["mc1"],
            Tally {
                pass: 4,
                fail: 0,
                not_applicable: 2
            }
        );
        assert_eq!(sweep.required_failures(false).count(), 0);
    }
}
