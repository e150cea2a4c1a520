use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use super::{usage, Exit, VerifyArgs};
use crate::arith::Engine;
use crate::error::{Error, Result};

/// Inclusive prime range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parses `A..B` (or a single `A`) with `3 <= A <= B`.
pub fn parse_primes(raw: &str) -> Result<PrimeRange> {
    let bad = || Error::InvalidParameter(format!("malformed prime range `{raw}`"));
    let (lo, hi) = match raw.trim().split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let a: u64 = raw.trim().parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if lo < 3 {
        return Err(Error::InvalidParameter(format!("prime range `{raw}` starts below 3")));
    }
    if lo > hi {
        return Err(Error::InvalidParameter(format!("prime range `{raw}` is empty")));
    }
    Ok(PrimeRange { lo, hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineChoice {
    Exact,
    Padic,
    Both,
}

impl EngineChoice {
    pub fn engines(self) -> Vec<Engine> {
        match self {
            EngineChoice::Exact => vec![Engine::Exact],
            EngineChoice::Padic => vec![Engine::Padic],
            EngineChoice::Both => vec![Engine::Exact, Engine::Padic],
        }
    }
}

impl FromStr for EngineChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(EngineChoice::Exact),
            "padic" => Ok(EngineChoice::Padic),
            "both" => Ok(EngineChoice::Both),
            other => Err(Error::InvalidParameter(format!("unknown engine `{other}`"))),
        }
    }
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineChoice::Exact => "exact",
            EngineChoice::Padic => "padic",
            EngineChoice::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

/// A `key=value` file. Blank lines and `#` comments are skipped; keys are
/// the long flag names without dashes.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("config line {}: expected key=value, got `{line}`", i + 1))
            })?;
            entries.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(ConfigFile { entries })
    }

    pub(super) fn load(path: &Path) -> std::result::Result<Self, Exit> {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        Ok(Self::parse(&text)?)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// The flag value if given, otherwise the file's.
    pub(super) fn pick(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.get(key).map(str::to_string))
    }

    pub(super) fn check_keys(&self, allowed: &[&str]) -> std::result::Result<(), Exit> {
        match self.entries.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(usage(format!("unknown config key `{k}`"))),
            None => Ok(()),
        }
    }
}

/// Fully resolved settings for `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub statements: String,
    pub primes: PrimeRange,
    pub engine: EngineChoice,
    pub jobs: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            statements: "proven".into(),
            primes: PrimeRange { lo: 7, hi: 199 },
            engine: EngineChoice::Both,
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            format: Format::Text,
            output: None,
            strict: false,
        }
    }
}

fn parse_bool(raw: &str) -> Result<bool> {
    match raw.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(Error::InvalidParameter(format!("invalid boolean `{other}`"))),
    }
}

impl RunConfig {
    pub(super) fn resolve(args: &VerifyArgs, file: &ConfigFile) -> std::result::Result<Self, Exit> {
        file.check_keys(&["statements", "primes", "engine", "jobs", "format", "output", "strict"])?;
        let mut cfg = RunConfig::default();
        if let Some(s) = file.pick(&args.statements, "statements") {
            cfg.statements = s;
        }
        if let Some(s) = file.pick(&args.primes, "primes") {
            cfg.primes = parse_primes(&s)?;
        }
        if let Some(s) = file.pick(&args.engine, "engine") {
            cfg.engine = s.parse()?;
        }
        if let Some(s) = file.pick(&args.jobs, "jobs") {
            cfg.jobs = match s.trim().parse() {
                Ok(n) if n >= 1 => n,
                _ => return Err(usage(format!("invalid job count `{s}`"))),
            };
        }
        if let Some(s) = file.pick(&args.format, "format") {
            cfg.format = s.parse()?;
        }
        cfg.output = args.output.clone().or_else(|| file.get("output").map(PathBuf::from));
        cfg.strict = args.strict || file.get("strict").map(parse_bool).transpose()?.unwrap_or(false);
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_ranges() {
        assert_eq!(parse_primes("7..199").unwrap(), PrimeRange { lo: 7, hi: 199 });
        assert_eq!(parse_primes("11").unwrap(), PrimeRange { lo: 11, hi: 11 });
        assert!(parse_primes("2..10").is_err());
        assert!(parse_primes("9..7").is_err());
        assert!(parse_primes("a..b").is_err());
    }

    #[test]
    fn flags_win_over_file() {
        let file = ConfigFile::parse("# sweep\nprimes = 11..13\nengine=exact\nstrict=true\n").unwrap();
        let args = VerifyArgs {
            engine: Some("padic".into()),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&args, &file).ok().unwrap();
        assert_eq!(cfg.primes, PrimeRange { lo: 11, hi: 13 });
        assert_eq!(cfg.engine, EngineChoice::Padic);
        assert!(cfg.strict);
        assert_eq!(cfg.statements, "proven");
    }

    #[test]
    fn malformed_file() {
        assert!(ConfigFile::parse("primes 7..9").is_err());
        let file = ConfigFile::parse("colour=blue").unwrap();
        assert!(RunConfig::resolve(&VerifyArgs::default(), &file).is_err());
    }
}
