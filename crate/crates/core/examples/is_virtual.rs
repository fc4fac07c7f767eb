//! Checks a virtual resolution with both strategies, then breaks it by
//! multiplying a syzygy by x_(0,0).

use vres::submodule::Presentation;
use vres::virtual_res::{is_virtual, virtual_of_pair, Strategy};
use vres::{ChainComplex, FreeModule, Ideal, Matrix, Multidegree, MultigradedRing, PrimeField};

fn main() -> vres::Result<()> {
    let s = MultigradedRing::new(PrimeField::new(32003)?, &[1, 1])?;
    let points: Vec<Ideal> = [(1, 4), (2, 5), (3, 6)]
        .iter()
        .map(|(a, b)| Ideal::parse(&s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]))
        .collect::<vres::Result<_>>()?;
    let m = Presentation::quotient_ring(&Ideal::intersect_all(&s, &points)?.saturate_irrelevant());
    let c = virtual_of_pair(&m, &[Multidegree::from(vec![3, 1])])?;
    let b = Ideal::irrelevant(&s);

    let mut degs = c.module(2).degrees().to_vec();
    degs[0] = &degs[0] + &Multidegree::unit(2, 0);
    let mut cols = c.differential(2).columns().to_vec();
    cols[0] = cols[0].iter().map(|f| f * &s.var(0)).collect();
    let f2 = FreeModule::new(s.clone(), degs)?;
    let phi2 = Matrix::new(c.module(1).clone(), f2.clone(), cols)?;
    let broken =
        ChainComplex::new(vec![c.module(0).clone(), c.module(1).clone(), f2], vec![c.differential(1).clone(), phi2])?;

    for (name, complex) in [("virtual of pair", &c), ("corrupted", &broken)] {
        for strategy in [Strategy::Homology, Strategy::Determinantal] {
            let report = is_virtual(&b, complex, strategy)?;
            println!("{name:16} {strategy:?}: {}", report.verdict);
            for e in &report.evidence {
                println!("    {}", serde_json::to_string(e).unwrap());
            }
        }
    }
    Ok(())
}
