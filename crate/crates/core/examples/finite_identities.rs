//! Exact checks of the finite identities.

use aperylab::identities::{
    alternating_binomial_sum, ccc_product, identity_sweep, inverse_binomial_sums, leshchiner_even, leshchiner_odd,
    Family,
};

fn main() -> aperylab::Result<()> {
    let c = leshchiner_odd(1, 1)?;
    println!("odd r=1, n=1: {} = {}", c.lhs, c.rhs);
    println!("even r=4, n=10 holds: {}", leshchiner_even(10, 4)?.holds());

    let ccc = ccc_product(3, 1)?;
    println!(
        "product identity n=3 k=1: {} {} {}",
        ccc.binomial_form, ccc.product_form, ccc.mhs_form
    );

    let (a, b) = inverse_binomial_sums(1);
    println!("inverse binomial n=1: {} / {}", a.lhs, b.lhs);

    // Not an identity: nonzero at n = 3.
    println!("alternating binomial sum n=3: {}", alternating_binomial_sum(3));

    let rows = identity_sweep(&Family::ALL, 30, &[])?;
    let failed = rows.iter().filter(|r| !r.holds).count();
    println!("{} instances up to n=30, {failed} failures", rows.len());
    Ok(())
}
