//! Command-line front end.
//!
//! Exit codes: 0 when every required check passes, 1 when at least one
//! required check fails, 2 for usage and configuration errors.

mod config;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::{parse_primes, ConfigFile, EngineChoice, Format, PrimeRange, RunConfig};
pub use report::{render_sweep, ReportMeta, Row};

use crate::arith::{primes_between, BigRational};
use crate::bernoulli::{bernoulli_exact, bernoulli_mod_p};
use crate::congruences::{self, lookup, sharpness_scan, CongruenceStatement};
use crate::identities::{identity_sweep, series_limit, Family, SeriesId};
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aperylab",
    version,
    about = "Verify Apery-like identities and prime-power congruences"
)]
pub struct Cli {
    /// key=value file mirroring the long flags; flags win on conflict.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep congruence statements over a prime range.
    Verify(VerifyArgs),
    /// Check the finite identities exactly.
    Identities(IdentitiesArgs),
    /// Exact valuation of lhs - rhs per prime.
    Sharpness(SharpnessArgs),
    /// Print a Bernoulli number, exactly or modulo a prime.
    Bernoulli(BernoulliArgs),
    /// Partial sums of the closed-form series.
    Limits(LimitsArgs),
}

#[derive(Debug, Args, Default)]
pub struct VerifyArgs {
    /// `all`, `proven`, `draft`, `corrected` or a comma list of ids.
    #[arg(long)]
    pub statements: Option<String>,
    /// Inclusive range `A..B`, `A >= 3`.
    #[arg(long)]
    pub primes: Option<String>,
    /// `exact`, `padic` or `both`.
    #[arg(long)]
    pub engine: Option<String>,
    #[arg(long)]
    pub jobs: Option<String>,
    /// `text`, `json` or `csv`.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Treat draft statements as required.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    /// `odd`, `even`, `ccc`, `invbinom` or `all`, comma separated.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long = "max-n")]
    pub max_n: Option<String>,
    /// Comma list of `r` values for the Leshchiner families.
    #[arg(long)]
    pub r: Option<String>,
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    /// Statement id, optionally with parameters: `lit_double[1,2]`.
    #[arg(long)]
    pub statement: Option<String>,
    #[arg(long)]
    pub primes: Option<String>,
}

#[derive(Debug, Args)]
pub struct BernoulliArgs {
    #[arg(long)]
    pub index: Option<String>,
    #[arg(long = "mod")]
    pub modulus: Option<String>,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    #[arg(long)]
    pub terms: Option<String>,
}

/// A failure that maps to an exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Exit> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    match cli.command {
        Command::Verify(args) => verify(RunConfig::resolve(&args, &file)?, out),
        Command::Identities(args) => identities(&args, &file, out),
        Command::Sharpness(args) => sharpness(&args, &file, out),
        Command::Bernoulli(args) => bernoulli(&args, &file, out),
        Command::Limits(args) => limits(&args, &file, out),
    }
}

fn io_err(e: std::io::Error) -> Exit {
    usage(format!("cannot write output: {e}"))
}

fn verify(cfg: RunConfig, out: &mut dyn Write) -> Result<i32, Exit> {
    let statements = congruences::select(&cfg.statements)?;
    let primes = primes_between(cfg.primes.lo, cfg.primes.hi);
    let sweep = congruences::verify_range(&statements, &primes, &cfg.engine.engines(), cfg.jobs)?;
    let meta = ReportMeta::new(&cfg);
    let bytes = render_sweep(&sweep, &meta, cfg.format, cfg.strict).map_err(|e| usage(e.to_string()))?;
    match &cfg.output {
        Some(path) => {
            std::fs::write(path, &bytes).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?
        }
        None => out.write_all(&bytes).map_err(io_err)?,
    }
    let failed = sweep.required_failures(cfg.strict).count() > 0 || !sweep.mismatches.is_empty();
    Ok(if failed { EXIT_FAIL } else { EXIT_PASS })
}

fn parse_number<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T, Exit> {
    raw.trim()
        .parse()
        .map_err(|_| usage(format!("invalid value `{raw}` for --{key}")))
}

fn identities(args: &IdentitiesArgs, file: &ConfigFile, out: &mut dyn Write) -> Result<i32, Exit> {
    file.check_keys(&["family", "max-n", "r"])?;
    let family = file.pick(&args.family, "family").unwrap_or_else(|| "all".into());
    let families: Vec<Family> = if family.trim() == "all" {
        Family::ALL.to_vec()
    } else {
        family
            .split(',')
            .map(|f| f.trim().parse::<Family>())
            .collect::<Result<_, _>>()?
    };
    let max_n: u64 = match file.pick(&args.max_n, "max-n") {
        Some(raw) => parse_number("max-n", &raw)?,
        None => 60,
    };
    let rs: Vec<u32> = match file.pick(&args.r, "r") {
        Some(raw) => raw
            .split(',')
            .map(|t| parse_number::<u32>("r", t))
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let rows = identity_sweep(&families, max_n, &rs)?;
    let mut failures = 0;
    for fam in &families {
        let mine: Vec<_> = rows.iter().filter(|r| r.family == *fam).collect();
        let bad: Vec<_> = mine.iter().filter(|r| !r.holds).collect();
        failures += bad.len();
        writeln!(
            out,
            "{:<9} checked {:>5}  failed {:>3}",
            fam.name(),
            mine.len(),
            bad.len()
        )
        .map_err(io_err)?;
        for r in bad {
            writeln!(out, "  FAIL {} n={} param={}", fam.name(), r.n, r.param).map_err(io_err)?;
        }
    }
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}

/// `id` or `id[a,b,..]`.
fn parse_statement(raw: &str) -> Result<Vec<&'static CongruenceStatement>, Exit> {
    let raw = raw.trim();
    if let Some((id, rest)) = raw.split_once('[') {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| usage(format!("malformed statement `{raw}`")))?;
        let params = inner
            .split(',')
            .map(|t| parse_number::<u32>("statement", t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(vec![lookup(id, &params)?])
    } else {
        Ok(congruences::select(raw)?)
    }
}

fn sharpness(args: &SharpnessArgs, file: &ConfigFile, out: &mut dyn Write) -> Result<i32, Exit> {
    file.check_keys(&["statement", "primes"])?;
    let raw = file
        .pick(&args.statement, "statement")
        .ok_or_else(|| usage("--statement is required"))?;
    let statements = parse_statement(&raw)?;
    if statements.is_empty() {
        return Err(usage("--statement selects nothing"));
    }
    let range = match file.pick(&args.primes, "primes") {
        Some(r) => parse_primes(&r)?,
        None => PrimeRange { lo: 7, hi: 199 },
    };
    let primes = primes_between(range.lo, range.hi);
    writeln!(
        out,
        "{:<24} {:>6} {:>4} {:>9} {:>6}",
        "statement", "prime", "e", "valuation", "sharp"
    )
    .map_err(io_err)?;
    let mut code = EXIT_PASS;
    for stmt in statements {
        for (p, v) in sharpness_scan(stmt, &primes)? {
            let e = stmt.exponent as i64;
            if !v.reaches(e) && stmt.status != congruences::Status::Draft {
                code = EXIT_FAIL;
            }
            let sharp = if v.finite() == Some(e) { "yes" } else { "no" };
            writeln!(
                out,
                "{:<24} {:>6} {:>4} {:>9} {:>6}",
                stmt.label(),
                p,
                e,
                v.to_string(),
                sharp
            )
            .map_err(io_err)?;
        }
    }
    Ok(code)
}

fn bernoulli(args: &BernoulliArgs, file: &ConfigFile, out: &mut dyn Write) -> Result<i32, Exit> {
    file.check_keys(&["index", "mod"])?;
    let index: usize = match file.pick(&args.index, "index") {
        Some(raw) => parse_number("index", &raw)?,
        None => return Err(usage("--index is required")),
    };
    match file.pick(&args.modulus, "mod") {
        Some(raw) => {
            let p: u64 = parse_number("mod", &raw)?;
            writeln!(out, "{}", bernoulli_mod_p(index, p)?).map_err(io_err)?;
        }
        None => {
            let b: BigRational = bernoulli_exact(index)?;
            writeln!(out, "{b}").map_err(io_err)?;
        }
    }
    Ok(EXIT_PASS)
}

fn limits(args: &LimitsArgs, file: &ConfigFile, out: &mut dyn Write) -> Result<i32, Exit> {
    file.check_keys(&["terms"])?;
    let terms: usize = match file.pick(&args.terms, "terms") {
        Some(raw) => parse_number("terms", &raw)?,
        None => 60,
    };
    writeln!(
        out,
        "{:<14} {:>6} {:>22} {:>22} {:>10}",
        "series", "terms", "partial", "target", "abs_error"
    )
    .map_err(io_err)?;
    for id in SeriesId::ALL {
        let s = series_limit(id, terms)?;
        writeln!(
            out,
            "{:<14} {:>6} {:>22.17} {:>22.17} {:>10.3e}",
            id.name(),
            s.terms,
            s.partial,
            s.target,
            s.abs_error
        )
        .map_err(io_err)?;
    }
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("aperylab").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bernoulli_command() {
        let (code, out, _) = run_str(&["bernoulli", "--index", "12"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "-691/2730");
        let (code, out, _) = run_str(&["bernoulli", "--index", "2", "--mod", "7"]);
        assert_eq!((code, out.trim()), (0, "6"));
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = run_str(&["verify", "--primes", "2..10"]);
        assert_eq!(code, 2);
        assert!(err.contains("2..10"));
        let (code, _, err) = run_str(&["verify", "--statements", "nope"]);
        assert_eq!(code, 2);
        assert!(err.contains("nope"));
        assert_eq!(run_str(&["frobnicate"]).0, 2);
    }

    #[test]
    fn sharpness_command() {
        let (code, out, _) = run_str(&["sharpness", "--statement", "mc1", "--primes", "7..7"]);
        assert_eq!(code, 0);
        assert!(out
            .lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .eq(["mc1", "7", "5", "5", "yes"]));
    }
}
