//! Truncated p-adic numbers: valuation, unit and how precision moves.

use aperylab::arith::{rat, PadicApprox};

fn main() -> aperylab::Result<()> {
    let p = 7;
    let x = PadicApprox::from_rational(&rat(49, 20), p, 6)?;
    println!("49/20        = {x}  (valuation {})", x.valuation());

    let y = PadicApprox::from_rational(&rat(5, 3), p, 6)?;
    let z = x.sub(&y);
    println!("49/20 - 5/3  = {z}");

    // Cancellation: known digits drop to what the inputs carried.
    let w = PadicApprox::from_rational(&rat(1, 1), p, 6)?;
    let v = PadicApprox::from_rational(&rat(1 + 7i64.pow(3), 1), p, 6)?;
    let d = v.sub(&w);
    println!("(1+7^3) - 1  = {d}  relative precision {}", d.relative_precision());

    println!("x - x        = {}", x.sub(&x));
    println!("1/x          = {}", x.inv()?);
    println!(
        "x/49 mod 7^4 = {}",
        x.mul(&PadicApprox::from_rational(&rat(1, 49), p, 6)?).residue(4)?
    );
    Ok(())
}
