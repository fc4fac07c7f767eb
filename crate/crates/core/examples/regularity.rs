//! Multigraded regularity of three points in P1 x P1.

use std::time::Instant;

use vres::submodule::Presentation;
use vres::virtual_res::{multigraded_regularity, RegularityOptions};
use vres::{Ideal, MultigradedRing, PrimeField};

fn main() -> vres::Result<()> {
    let s = MultigradedRing::new(PrimeField::new(32003)?, &[1, 1])?;
    let points: Vec<Ideal> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| Ideal::parse(&s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]))
        .collect::<vres::Result<_>>()?;
    let j = Ideal::intersect_all(&s, &points)?.saturate_irrelevant();
    let start = Instant::now();
    let reg = multigraded_regularity(&Presentation::quotient_ring(&j), &RegularityOptions::default())?;
    let mins: Vec<String> = reg.minimal_elements.iter().map(|d| d.to_string()).collect();
    println!("minimal elements: {}", mins.join(" "));
    println!("search box: {} .. {}", reg.search_box.0, reg.search_box.1);
    println!("twist checks: {}  ({:.2?})", reg.certified_twist_checks, start.elapsed());
    Ok(())
}
