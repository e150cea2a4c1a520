//! Multiple harmonic sums in both engines.

use aperylab::arith::{valuation, ExactField, Field, PadicField};
use aperylab::sums::{mhs, odd_mhs, repeated_index, MhsIndex};

fn main() -> aperylab::Result<()> {
    let exact = ExactField;
    let h1 = MhsIndex::new(vec![1])?;
    for p in [7u64, 11, 13, 17] {
        let h = mhs(&exact, p - 1, &h1);
        println!("H_{}(1) = {h}  val_{p} = {}", p - 1, valuation(&h, p));
    }

    println!("H_3(1,2)     = {}", mhs(&exact, 3, &MhsIndex::new(vec![1, 2])?));
    println!("Hbar_3(2)    = {}", odd_mhs(&exact, 3, &MhsIndex::new(vec![2])?));
    println!("Hbar_5({{2}}^2) = {}", odd_mhs(&exact, 5, &repeated_index(2, 2)));

    let p = 31;
    let f = PadicField::new(p, 5)?;
    let x = mhs(&f, p - 1, &MhsIndex::new(vec![1, 2])?);
    println!(
        "H_30(1,2) in Q_31 to 5 digits: {x}, residue mod 31 = {}",
        f.residue(&x, p, 1)?
    );
    Ok(())
}
