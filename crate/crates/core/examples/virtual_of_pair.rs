//! Virtual resolution of three points in P1 x P1 for the pair ((2,0), n).
//! Bounded Schreyer syzygies against pruning the minimal resolution.

use std::time::Instant;

use vres::complex::free_resolution;
use vres::submodule::Presentation;
use vres::virtual_res::{virtual_of_pair, virtual_of_pair_complex};
use vres::{Ideal, Multidegree, MultigradedRing, PrimeField};

fn main() -> vres::Result<()> {
    let s = MultigradedRing::new(PrimeField::new(32003)?, &[1, 1])?;
    let points: Vec<Ideal> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| Ideal::parse(&s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]))
        .collect::<vres::Result<_>>()?;
    let m = Presentation::quotient_ring(&Ideal::intersect_all(&s, &points)?.saturate_irrelevant());
    let bounds = [Multidegree::from(vec![3, 1])];

    let t = Instant::now();
    let direct = virtual_of_pair(&m, &bounds)?;
    println!("bounded Schreyer ({:.2?})", t.elapsed());
    println!("{}\n", direct.summary());
    print!("{}", direct.betti());

    let t = Instant::now();
    let pruned = virtual_of_pair_complex(&free_resolution(&m), &bounds)?;
    println!("\npruned minimal resolution ({:.2?})", t.elapsed());
    println!("{}", pruned.summary());
    println!("same Betti table: {}", pruned.betti() == direct.betti());
    Ok(())
}
