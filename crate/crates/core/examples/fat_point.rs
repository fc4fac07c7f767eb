//! Short virtual resolutions from fat points: S/(J ∩ B^a) for three points
//! in P1 x P1, and a search for a short one on P1 x P2.

use vres::virtual_res::{fat_point_of_short_length, is_virtual, resolve_via_fat_point, Strategy};
use vres::{Ideal, MultigradedRing, PrimeField};

fn points(s: &MultigradedRing, gens: &[Vec<String>]) -> vres::Result<Ideal> {
    let ideals: Vec<Ideal> = gens
        .iter()
        .map(|g| Ideal::parse(s, &g.iter().map(String::as_str).collect::<Vec<_>>()))
        .collect::<vres::Result<_>>()?;
    Ok(Ideal::intersect_all(s, &ideals)?.saturate_irrelevant())
}

fn main() -> vres::Result<()> {
    let k = PrimeField::new(32003)?;
    let s = MultigradedRing::new(k, &[1, 1])?;
    let gens: Vec<Vec<String>> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| vec![format!("x_(0,1)-{a}*x_(0,0)"), format!("x_(1,1)-{b}*x_(1,0)")])
        .collect();
    let j = points(&s, &gens)?;
    let c = resolve_via_fat_point(&j, &[2, 0])?;
    println!("{}\n", c.summary());
    print!("{}", c.betti());
    println!("virtual: {}", is_virtual(&Ideal::irrelevant(&s), &c, Strategy::Homology)?.verdict);

    let s = MultigradedRing::new(k, &[1, 2])?;
    let gens: Vec<Vec<String>> = [(1, 2, 3), (4, 5, 6), (7, 1, 9)]
        .iter()
        .map(|(a, b, c)| {
            vec![format!("x_(0,1)-{a}*x_(0,0)"), format!("x_(1,1)-{b}*x_(1,0)"), format!("x_(1,2)-{c}*x_(1,0)")]
        })
        .collect();
    let j = points(&s, &gens)?;
    let (a, c) = fat_point_of_short_length(&j, 5)?;
    println!("\nthree points in P1 x P2: a = {a:?}, {}", c.summary());
    print!("{}", c.betti());
    Ok(())
}
