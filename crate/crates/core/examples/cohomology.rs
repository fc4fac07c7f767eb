//! Sheaf cohomology tables: line bundles on P1 x P1 and the structure sheaf
//! of three points.

use vres::cohomology::{CohomologyOptions, CohomologyTable};
use vres::submodule::Presentation;
use vres::{FreeModule, Ideal, Multidegree, MultigradedRing, PrimeField};

fn show(table: &CohomologyTable, i: usize, lo: i32, hi: i32) {
    println!("h^{i}:");
    for b in (lo..=hi).rev() {
        let row: Vec<String> =
            (lo..=hi).map(|a| format!("{:3}", table.get(i, &Multidegree::from(vec![a, b])).unwrap())).collect();
        println!("  {}", row.join(""));
    }
}

fn main() -> vres::Result<()> {
    let s = MultigradedRing::new(PrimeField::new(32003)?, &[1, 1])?;
    let twists = Multidegree::box_points(&Multidegree::from(vec![-3, -3]), &Multidegree::from(vec![2, 2]));
    let opts = CohomologyOptions::default();

    println!("O(a,b) on P1 x P1, a across, b up, from -3 to 2");
    let table = CohomologyTable::compute(&Presentation::free(FreeModule::free(s.clone(), 1)), &twists, opts)?;
    for i in 0..=2 {
        show(&table, i, -3, 2);
    }

    let points: Vec<Ideal> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| Ideal::parse(&s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]))
        .collect::<vres::Result<_>>()?;
    let j = Ideal::intersect_all(&s, &points)?.saturate_irrelevant();
    println!("\nthree points");
    let table = CohomologyTable::compute(&Presentation::quotient_ring(&j), &twists, opts)?;
    for i in 0..=1 {
        show(&table, i, -3, 2);
    }
    Ok(())
}
