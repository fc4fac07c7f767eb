//! Three points in P1 x P1: the saturated ideal and its minimal free resolution.
//!
//! Prints the problem file for the saturated ideal last, which is how
//! `data/three_points.json` was produced.

use vres::complex::free_resolution;
use vres::problem::ProblemFile;
use vres::submodule::Presentation;
use vres::{Ideal, MultigradedRing, PrimeField};

fn main() -> vres::Result<()> {
    let s = MultigradedRing::new(PrimeField::new(32003)?, &[1, 1])?;
    let points: Vec<Ideal> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| Ideal::parse(&s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]))
        .collect::<vres::Result<_>>()?;
    let j = Ideal::intersect_all(&s, &points)?.saturate_irrelevant().normalized();
    println!("J has {} generators, dim S/J = {}", j.gens().len(), j.krull_dimension());

    let res = free_resolution(&Presentation::quotient_ring(&j));
    println!("{}\n", res.summary());
    print!("{}", res.betti());
    println!();
    println!("{}", serde_json::to_string_pretty(&ProblemFile::from_ideal(&j)).unwrap());
    Ok(())
}
