//! Curves in P1 x P2: the image of the twisted cubic and a random rational curve.

use std::time::Instant;

use vres::curves::{curve_from_p3_to_p1p2, random_monomial_curve, random_rational_curve, sample_space_curve};
use vres::PrimeField;

fn show(label: &str, i: &vres::Ideal) {
    println!("{label}: dim {}", i.krull_dimension());
    for g in i.gens() {
        println!("  {g}");
    }
}

fn main() -> vres::Result<()> {
    let k = PrimeField::new(101)?;
    let cubic = sample_space_curve("twisted-cubic", k)?;
    show("twisted cubic image", &curve_from_p3_to_p1p2(&cubic, false)?);
    match curve_from_p3_to_p1p2(&cubic, true) {
        Err(e) => println!("with degree preservation: {e}"),
        Ok(_) => println!("with degree preservation: unexpectedly succeeded"),
    }

    show("monomial curve (2,3)", &random_monomial_curve(2, 3, k, 1)?);

    let t = Instant::now();
    let c = random_rational_curve(5, 7, k, 0)?;
    println!("rational curve (5,7): dim {}, {} generators ({:.2?})", c.krull_dimension(), c.gens().len(), t.elapsed());
    Ok(())
}
