//! Bernoulli numbers exactly and modulo a prime, and the two paths side by side.

use aperylab::arith::residue;
use aperylab::bernoulli::{bernoulli_exact, bernoulli_mod_p, power_sum_mod};

fn main() -> aperylab::Result<()> {
    for m in [0, 1, 2, 4, 12, 32] {
        println!("B_{m:<2} = {}", bernoulli_exact(m)?);
    }

    let p = 37;
    let b32 = bernoulli_exact(32)?;
    println!(
        "\nB_32 mod {p}: exact {} triangle {}",
        residue(&b32, p, 1)?,
        bernoulli_mod_p(32, p)?
    );

    for p in [101u64, 103, 107] {
        let m = (p - 5) as usize;
        println!("B_{m} mod {p} = {}", bernoulli_mod_p(m, p)?);
    }
    println!("\nsum_(k<7) k^6 mod 7 = {}", power_sum_mod(6, 6, 7));
    Ok(())
}
