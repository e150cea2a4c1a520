//! Exact valuations of lhs - rhs, and a printed coefficient next to its repair.

use aperylab::congruences::{lookup, sharpness_scan};

fn main() -> aperylab::Result<()> {
    let primes: Vec<u64> = vec![7, 11, 13, 17, 19, 23, 29, 31, 37];
    for id in ["mc1", "mc2", "mc2_corrected", "morley6", "mc21_cube"] {
        let stmt = lookup(id, &[])?;
        let vals: Vec<String> = sharpness_scan(stmt, &primes)?
            .into_iter()
            .map(|(p, v)| format!("{p}:{v}"))
            .collect();
        println!("{id:<14} e={}  {}", stmt.exponent, vals.join(" "));
    }
    Ok(())
}
