//! Sweep a selection of statements over a prime range and print the summary.

use aperylab::arith::{primes_between, Engine};
use aperylab::congruences::{select, verify_range};

fn main() -> aperylab::Result<()> {
    let statements = select("cor_Hp2,cor_H2,cor_H3,thm_alts,thm_altsb,morley6")?;
    let primes = primes_between(7, 151);
    let sweep = verify_range(&statements, &primes, &[Engine::Exact, Engine::Padic], 4)?;

    for (label, t) in &sweep.summary {
        println!(
            "{label:<12} pass {:>3}  fail {:>3}  n/a {:>3}",
            t.pass, t.fail, t.not_applicable
        );
    }
    println!("engine mismatches: {}", sweep.mismatches.len());
    println!("required failures: {}", sweep.required_failures(false).count());
    Ok(())
}
