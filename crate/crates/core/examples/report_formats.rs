//! The same sweep rendered as text, CSV and JSON.

use aperylab::arith::{primes_between, Engine};
use aperylab::cli::{render_sweep, Format, PrimeRange, ReportMeta, RunConfig};
use aperylab::congruences::{select, verify_range};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RunConfig {
        statements: "lit_h12".into(),
        primes: PrimeRange { lo: 7, hi: 19 },
        ..RunConfig::default()
    };
    let sweep = verify_range(
        &select(&cfg.statements)?,
        &primes_between(7, 19),
        &[Engine::Exact, Engine::Padic],
        2,
    )?;
    let meta = ReportMeta::new(&cfg);
    for format in [Format::Text, Format::Csv, Format::Json] {
        let bytes = render_sweep(&sweep, &meta, format, false)?;
        println!("{}", String::from_utf8(bytes)?);
    }
    Ok(())
}
