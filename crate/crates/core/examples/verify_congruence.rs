//! One statement at one prime, in both engines.

use aperylab::arith::Engine;
use aperylab::congruences::{evaluate_statement, exact_sides, lookup};

fn main() -> aperylab::Result<()> {
    let mc1 = lookup("mc1", &[])?;
    println!("{}\n", mc1.display);

    let (lhs, rhs) = exact_sides(mc1, 7)?;
    println!("p = 7: lhs = {lhs}, rhs = {rhs}, lhs - rhs = {}", &lhs - &rhs);

    for p in [7, 11, 101] {
        for engine in [Engine::Exact, Engine::Padic] {
            let r = evaluate_statement(mc1, p, engine)?;
            println!(
                "p = {p:<4} {engine:<5} valuation {:<5} pass {}  lhs mod p^5 = {}",
                r.achieved.map(|v| v.to_string()).unwrap_or_default(),
                r.pass,
                r.residue_lhs.unwrap_or_default()
            );
        }
    }

    match evaluate_statement(mc1, 5, Engine::Exact) {
        Err(e) => println!("p = 5: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
