//! Syzygies of a Gröbner basis by Schreyer's algorithm.

use super::{GroebnerBasis, ModuleElement, ModuleOrder, Term};
use crate::module::FreeModule;
use crate::multidegree::Multidegree;

/// Syzygies of a Gröbner basis: a Gröbner basis of the syzygy module under the
/// induced Schreyer order on the free module with one generator per basis
/// element.
#[derive(Clone, Debug)]
pub struct SyzygyStep {
    pub basis: GroebnerBasis,
}

impl SyzygyStep {
    pub fn source(&self) -> &FreeModule {
        self.basis.module()
    }
}

/// Reorders a Gröbner basis by (component, lexicographically decreasing
/// leading monomial). Syzygies computed on a basis in this order give
/// resolutions of length at most the number of variables.
pub fn sort_for_schreyer(gb: &GroebnerBasis) -> GroebnerBasis {
    let mut elems: Vec<ModuleElement> = gb.elements().to_vec();
    elems.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        x.comp.cmp(&y.comp).then_with(|| y.mon.lex_cmp(&x.mon))
    });
    GroebnerBasis::from_basis(gb.module().clone(), gb.order().clone(), elems)
}

/// Syzygy module of the elements of `gb` (in their current order).
///
/// With `bounds`, only syzygies whose degree lies below some bound are
/// produced; they form a Gröbner basis of the syzygy module in that down-set.
pub fn schreyer_syzygies(gb: &GroebnerBasis, bounds: Option<&[Multidegree]>) -> SyzygyStep {
    let module = gb.module();
    let ring = module.ring();
    let field = ring.field();
    let leads = gb.leading_terms();
    let degrees: Vec<Multidegree> = gb.elements().iter().map(|e| e.lead_degree(module).unwrap()).collect();
    let source = FreeModule::new(ring.clone(), degrees.clone()).expect("degrees have the ring's length");
    let order = ModuleOrder::schreyer(gb.order(), &leads);
    let mut syzygies = Vec::new();
    let mut scratch = Vec::new();
    for i in 0..leads.len() {
        let (mi, ci) = leads[i];
        // minimal generators of (lcm(m_i, m_j) / m_i : j > i, c_j = c_i)
        let mut cands: Vec<(usize, crate::monomial::Monomial)> = Vec::new();
        for (j, &(mj, cj)) in leads.iter().enumerate().skip(i + 1) {
            if cj != ci {
                continue;
            }
            let q = mi.quotient_of(&mi.lcm(&mj)).unwrap();
            cands.push((j, q));
        }
        let minimal: Vec<(usize, crate::monomial::Monomial)> = cands
            .iter()
            .enumerate()
            .filter(|(n, (_, q))| !cands.iter().enumerate().any(|(o, (_, r))| r.divides(q) && (r != q || o < *n)))
            .map(|(_, c)| *c)
            .collect();
        for (j, q) in minimal {
            if let Some(b) = bounds {
                let d = &ring.multidegree(&q) + &degrees[i];
                if !d.below_any(b) {
                    continue;
                }
            }
            let s = gb.spoly(i, j, &mut scratch);
            let (rem, trace) = gb.reduce_with_trace(&s);
            debug_assert!(rem.is_zero(), "S-polynomial of a Gröbner basis must reduce to zero");
            let mj = leads[j].0;
            let qj = mj.quotient_of(&mi.mul(&q)).unwrap();
            let mut terms = Vec::with_capacity(trace.len() + 2);
            terms.push(Term { mon: q, comp: i as u32, coef: 1 });
            terms.push(Term { mon: qj, comp: j as u32, coef: field.neg(1) });
            for (k, m, c) in trace {
                terms.push(Term { mon: m, comp: k as u32, coef: field.neg(c) });
            }
            let e = ModuleElement::from_terms(terms, &order, field);
            debug_assert_eq!(e.lead().map(|t| (t.mon, t.comp)), Some((q, i as u32)));
            syzygies.push(e);
        }
    }
    SyzygyStep { basis: GroebnerBasis::from_basis(source, order, syzygies) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;
    use crate::ring::MultigradedRing;

    #[test]
    fn syzygies_of_twisted_cubic() {
        let s = MultigradedRing::new(PrimeField::new(101).unwrap(), &[3]).unwrap();
        let order = ModuleOrder::term_over_position(s.order().clone());
        let module = FreeModule::free(s.clone(), 1);
        let gens: Vec<_> =
            ["x_(0,0)*x_(0,2)-x_(0,1)^2", "x_(0,1)*x_(0,3)-x_(0,2)^2", "x_(0,0)*x_(0,3)-x_(0,1)*x_(0,2)"]
                .iter()
                .map(|t| ModuleElement::from_polynomial(&parse_polynomial(t, &s).unwrap(), &order))
                .collect();
        let gb = sort_for_schreyer(&GroebnerBasis::compute(&module, &order, gens));
        let step = schreyer_syzygies(&gb, None);
        assert_eq!(step.basis.len(), 2);
        let polys = gb.polynomials();
        for syz in step.basis.columns() {
            let mut acc = s.zero();
            for (a, g) in syz.iter().zip(&polys) {
                acc = &acc + &(a * g);
            }
            assert!(acc.is_zero());
        }
        let next = schreyer_syzygies(&sort_for_schreyer(&step.basis), None);
        assert!(next.basis.is_empty());
    }
}
