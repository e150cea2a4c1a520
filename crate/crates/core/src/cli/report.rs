use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::config::{Format, RunConfig};
use crate::arith::{Engine, Valuation};
use crate::congruences::{CongruenceResult, EngineMismatch, Status, Sweep, Tally};

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub engine: String,
    pub primes: String,
    pub statements: String,
    pub strict: bool,
    pub timestamp: String,
}

impl ReportMeta {
    pub fn new(cfg: &RunConfig) -> Self {
        ReportMeta {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            engine: cfg.engine.to_string(),
            primes: cfg.primes.to_string(),
            statements: cfg.statements.clone(),
            strict: cfg.strict,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }
}

/// Achieved valuation as reported: an integer, `ge_precision` or `infinite`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Achieved {
    Exact(i64),
    Word(&'static str),
}

impl Achieved {
    fn render(&self) -> String {
        match self {
            Achieved::Exact(v) => v.to_string(),
            Achieved::Word(w) => w.to_string(),
        }
    }
}

/// One report row. Timing lives in a separate section so rows are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub statement: String,
    pub params: Vec<u32>,
    pub prime: u64,
    pub engine: Engine,
    pub required_exponent: u32,
    pub achieved_valuation: Option<Achieved>,
    /// Digits certified by the p-adic engine when the valuation is `ge_precision`.
    pub known_digits: Option<i64>,
    pub residue_lhs: Option<String>,
    pub residue_rhs: Option<String>,
    pub pass: bool,
    pub status: Status,
    pub error: Option<String>,
}

impl From<&CongruenceResult> for Row {
    fn from(r: &CongruenceResult) -> Self {
        let (achieved, known) = match r.achieved {
            Some(Valuation::Finite(v)) => (Some(Achieved::Exact(v)), None),
            Some(Valuation::AtLeast(n)) => (Some(Achieved::Word("ge_precision")), Some(n)),
            Some(Valuation::Infinite) => (Some(Achieved::Word("infinite")), None),
            None => (None, None),
        };
        Row {
            statement: r.statement.to_string(),
            params: r.params.clone(),
            prime: r.prime,
            engine: r.engine,
            required_exponent: r.required_exponent,
            achieved_valuation: achieved,
            known_digits: known,
            residue_lhs: r.residue_lhs.clone(),
            residue_rhs: r.residue_rhs.clone(),
            pass: r.pass,
            status: r.status,
            error: r.error.clone(),
        }
    }
}

/// Flat form of [`Row`] for CSV.
#[derive(Debug, Serialize)]
struct CsvRow {
    statement: String,
    params: String,
    prime: u64,
    engine: Engine,
    required_exponent: u32,
    achieved_valuation: String,
    known_digits: Option<i64>,
    residue_lhs: Option<String>,
    residue_rhs: Option<String>,
    pass: bool,
    status: Status,
    error: Option<String>,
}

impl From<Row> for CsvRow {
    fn from(r: Row) -> Self {
        let params: Vec<String> = r.params.iter().map(u32::to_string).collect();
        CsvRow {
            statement: r.statement,
            params: params.join(";"),
            prime: r.prime,
            engine: r.engine,
            required_exponent: r.required_exponent,
            achieved_valuation: r.achieved_valuation.map(|a| a.render()).unwrap_or_default(),
            known_digits: r.known_digits,
            residue_lhs: r.residue_lhs,
            residue_rhs: r.residue_rhs,
            pass: r.pass,
            status: r.status,
            error: r.error,
        }
    }
}

#[derive(Serialize)]
struct Timing<'a> {
    statement: &'a str,
    params: &'a [u32],
    prime: u64,
    engine: Engine,
    micros: u64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    meta: &'a ReportMeta,
    rows: Vec<Row>,
    summary: &'a BTreeMap<String, Tally>,
    mismatches: &'a [EngineMismatch],
    required_failures: usize,
    timings: Vec<Timing<'a>>,
}

/// Serializes a sweep in the chosen format.
pub fn render_sweep(
    sweep: &Sweep,
    meta: &ReportMeta,
    format: Format,
    strict: bool,
) -> Result<Vec<u8>, Box<dyn std::error::Error>> {
    let rows: Vec<Row> = sweep.results.iter().map(Row::from).collect();
    let failures = sweep.required_failures(strict).count();
    Ok(match format {
        Format::Json => {
            let report = JsonReport {
                meta,
                rows,
                summary: &sweep.summary,
                mismatches: &sweep.mismatches,
                required_failures: failures,
                timings: sweep
                    .results
                    .iter()
                    .map(|r| Timing {
                        statement: r.statement,
                        params: &r.params,
                        prime: r.prime,
                        engine: r.engine,
                        micros: r.micros,
                    })
                    .collect(),
            };
            let mut bytes = serde_json::to_vec_pretty(&report)?;
            bytes.push(b'\n');
            bytes
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            if rows.is_empty() {
                w.write_record([
                    "statement",
                    "params",
                    "prime",
                    "engine",
                    "required_exponent",
                    "achieved_valuation",
                    "known_digits",
                    "residue_lhs",
                    "residue_rhs",
                    "pass",
                    "status",
                    "error",
                ])?;
            }
            for row in rows {
                w.serialize(CsvRow::from(row))?;
            }
            w.into_inner().map_err(|e| e.to_string())?
        }
        Format::Text => render_text(&rows, sweep, meta, failures).into_bytes(),
    })
}

fn render_text(rows: &[Row], sweep: &Sweep, meta: &ReportMeta, failures: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} {}  primes {}  engine {}  statements {}",
        meta.tool, meta.version, meta.primes, meta.engine, meta.statements
    );
    let _ = writeln!(
        s,
        "{:<26} {:>6} {:>6} {:>3} {:>13} {:>5}  {:<9}",
        "statement", "prime", "engine", "e", "valuation", "pass", "status"
    );
    for r in rows {
        let label = crate::congruences::label(&r.statement, &r.params);
        let val = match (&r.achieved_valuation, r.known_digits) {
            (Some(Achieved::Word("ge_precision")), Some(n)) => format!(">={n}"),
            (Some(a), _) => a.render(),
            (None, _) => "-".into(),
        };
        let pass = if r.pass { "yes" } else { "NO" };
        let _ = write!(
            s,
            "{:<26} {:>6} {:>6} {:>3} {:>13} {:>5}  {:<9}",
            label,
            r.prime,
            r.engine.to_string(),
            r.required_exponent,
            val,
            pass,
            r.status.to_string()
        );
        if let Some(e) = &r.error {
            let _ = write!(s, "  {e}");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "\nsummary");
    for (label, t) in &sweep.summary {
        let _ = writeln!(
            s,
            "  {:<26} pass {:>5}  fail {:>5}  n/a {:>5}",
            label, t.pass, t.fail, t.not_applicable
        );
    }
    for m in &sweep.mismatches {
        let _ = writeln!(s, "  engine mismatch {} p={}: {}", m.statement, m.prime, m.detail);
    }
    let _ = writeln!(s, "required failures: {failures}");
    s
}
