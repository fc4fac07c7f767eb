//! Gröbner bases of homogeneous submodules of graded free modules.
//!
//! Ideals are handled as submodules of `S^1`. Elements are sparse term lists
//! sorted by a [`ModuleOrder`], which may be term-over-position, block
//! (position-over-term style elimination of components), or a Schreyer order
//! induced by the leading terms of another Gröbner basis.

pub mod schreyer;

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{Coeff, PrimeField};
use crate::module::FreeModule;
use crate::monomial::{Monomial, MonomialOrder};
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

pub use schreyer::{schreyer_syzygies, SyzygyStep};

/// A single term `coef * mon * e_comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: Coeff,
}

#[derive(Debug)]
pub(crate) struct SchreyerFrame {
    // total multiplier of each component down to the base free module
    mult: Vec<Monomial>,
    // base component followed by the component index at each level
    path: Vec<Box<[u32]>>,
}

/// A monomial order on a free module.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    mono: MonomialOrder,
    blocks: Option<Arc<[u32]>>,
    schreyer: Option<Arc<SchreyerFrame>>,
}

impl PartialEq for ModuleOrder {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono
            && self.blocks == other.blocks
            && match (&self.schreyer, &other.schreyer) {
                (None, None) => true,
                (Some(a), Some(b)) => Arc::ptr_eq(a, b),
                _ => false,
            }
    }
}

impl ModuleOrder {
    /// Term over position: monomials first, then smaller component index wins.
    pub fn term_over_position(mono: MonomialOrder) -> Self {
        ModuleOrder { mono, blocks: None, schreyer: None }
    }

    /// Position over term on `rank` components.
    pub fn position_over_term(mono: MonomialOrder, rank: usize) -> Self {
        Self::with_blocks(mono, (0..rank as u32).collect())
    }

    /// Components in a lower-numbered block are larger than any term of a
    /// higher-numbered block; inside a block the order is term over position.
    pub fn with_blocks(mono: MonomialOrder, blocks: Vec<u32>) -> Self {
        ModuleOrder { mono, blocks: Some(blocks.into()), schreyer: None }
    }

    /// The Schreyer order on `⊕ S e_i` induced by leading terms `(m_i, c_i)`
    /// under `base`: `a e_i > b e_j` iff `a m_i e_{c_i} > b m_j e_{c_j}`, ties
    /// broken in favour of the smaller index.
    pub fn schreyer(base: &ModuleOrder, leads: &[(Monomial, u32)]) -> Self {
        let mut mult = Vec::with_capacity(leads.len());
        let mut path = Vec::with_capacity(leads.len());
        for (i, (m, c)) in leads.iter().enumerate() {
            match &base.schreyer {
                Some(frame) => {
                    mult.push(m.mul(&frame.mult[*c as usize]));
                    let mut p = frame.path[*c as usize].to_vec();
                    p.push(i as u32);
                    path.push(p.into_boxed_slice());
                }
                None => {
                    mult.push(*m);
                    path.push(vec![*c, i as u32].into_boxed_slice());
                }
            }
        }
        ModuleOrder {
            mono: base.mono.clone(),
            blocks: base.blocks.clone(),
            schreyer: Some(Arc::new(SchreyerFrame { mult, path })),
        }
    }

    pub fn monomial_order(&self) -> &MonomialOrder {
        &self.mono
    }

    pub fn is_schreyer(&self) -> bool {
        self.schreyer.is_some()
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        if ac == bc {
            return self.mono.cmp(am, bm);
        }
        match &self.schreyer {
            None => {
                if let Some(bl) = &self.blocks {
                    let (x, y) = (bl[ac as usize], bl[bc as usize]);
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                match self.mono.cmp(am, bm) {
                    Ordering::Equal => bc.cmp(&ac),
                    o => o,
                }
            }
            Some(frame) => {
                let (pa, pb) = (&frame.path[ac as usize], &frame.path[bc as usize]);
                if let Some(bl) = &self.blocks {
                    let (x, y) = (bl[pa[0] as usize], bl[pb[0] as usize]);
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                let ma = am.mul(&frame.mult[ac as usize]);
                let mb = bm.mul(&frame.mult[bc as usize]);
                match self.mono.cmp(&ma, &mb) {
                    Ordering::Equal => pb.cmp(pa),
                    o => o,
                }
            }
        }
    }

    #[inline]
    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }
}

/// A sparse vector of a free module, terms sorted decreasingly by the order
/// it was built with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleElement {
    terms: Vec<Term>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    /// Sorts, merges equal terms and drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, order: &ModuleOrder, field: PrimeField) -> Self {
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.comp == t.comp => last.coef = field.add(last.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        ModuleElement { terms: out }
    }

    pub fn from_column(col: &[Polynomial], order: &ModuleOrder, field: PrimeField) -> Self {
        let terms = col
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |&(mon, coef)| Term { mon, comp: i as u32, coef }))
            .collect();
        Self::from_terms(terms, order, field)
    }

    pub fn from_polynomial(f: &Polynomial, order: &ModuleOrder) -> Self {
        Self::from_column(std::slice::from_ref(f), order, f.ring().field())
    }

    /// Dense column of `rank` polynomials.
    pub fn to_column(&self, ring: &MultigradedRing, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            parts[t.comp as usize].push((t.mon, t.coef));
        }
        parts.into_iter().map(|p| Polynomial::from_terms(ring.clone(), p)).collect()
    }

    pub fn to_polynomial(&self, ring: &MultigradedRing) -> Polynomial {
        self.to_column(ring, 1).pop().expect("rank one")
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monic(mut self, field: PrimeField) -> Self {
        if let Some(t) = self.terms.first() {
            if t.coef != 1 {
                let inv = field.inv_nz(t.coef);
                for t in &mut self.terms {
                    t.coef = field.mul(t.coef, inv);
                }
            }
        }
        self
    }

    /// Multidegree of the leading term in `module`.
    pub fn lead_degree(&self, module: &FreeModule) -> Option<Multidegree> {
        self.lead().map(|t| &module.ring().multidegree(&t.mon) + module.degree(t.comp as usize))
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Keeps only the components in `range`, renumbered to start at zero.
    pub fn restrict_components(&self, range: std::ops::Range<u32>) -> ModuleElement {
        ModuleElement {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.comp))
                .map(|t| Term { comp: t.comp - range.start, ..*t })
                .collect(),
        }
    }
}

/// `a + c * q * b` where `q * b`'s terms keep their relative order.
fn merge_scaled(
    a: &[Term],
    b: &[Term],
    c: Coeff,
    q: &Monomial,
    order: &ModuleOrder,
    field: PrimeField,
    out: &mut Vec<Term>,
) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = None;
    loop {
        if pending.is_none() && j < b.len() {
            let t = b[j];
            pending = Some(Term { mon: t.mon.mul(q), comp: t.comp, coef: field.mul(t.coef, c) });
        }
        match (a.get(i), pending) {
            (Some(x), Some(y)) => match order.cmp_terms(x, &y) {
                Ordering::Greater => {
                    out.push(*x);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(y);
                    pending = None;
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(x.coef, y.coef);
                    if s != 0 {
                        out.push(Term { coef: s, ..*x });
                    }
                    i += 1;
                    j += 1;
                    pending = None;
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                return;
            }
            (None, Some(y)) => {
                out.push(y);
                j += 1;
                pending = None;
            }
            (None, None) => return,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Lead {
    mon: Monomial,
    comp: u32,
    mask: u64,
}

/// One step of a division: `coef * mon * g_index` was subtracted.
pub type TraceStep = (usize, Monomial, Coeff);

/// A Gröbner basis together with the data needed for fast division.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    module: FreeModule,
    order: ModuleOrder,
    elements: Vec<ModuleElement>,
    leads: Vec<Lead>,
    by_comp: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    alive: bool,
}

enum Job {
    Generator(usize),
    Pair(usize),
}

impl GroebnerBasis {
    fn empty(module: FreeModule, order: ModuleOrder) -> Self {
        let rank = module.rank();
        GroebnerBasis { module, order, elements: Vec::new(), leads: Vec::new(), by_comp: vec![Vec::new(); rank] }
    }

    /// Wraps elements already known to form a Gröbner basis.
    pub(crate) fn from_basis(module: FreeModule, order: ModuleOrder, elements: Vec<ModuleElement>) -> Self {
        let mut gb = Self::empty(module, order);
        for e in elements {
            gb.push(e);
        }
        gb
    }

    fn push(&mut self, e: ModuleElement) -> usize {
        let t = *e.lead().expect("nonzero basis element");
        let k = self.elements.len();
        self.leads.push(Lead { mon: t.mon, comp: t.comp, mask: t.mon.divmask() });
        self.by_comp[t.comp as usize].push(k);
        self.elements.push(e);
        k
    }

    /// Buchberger's algorithm for homogeneous input, degree by degree with the
    /// normal selection strategy (smallest lcm degree, then insertion index).
    pub fn compute(module: &FreeModule, order: &ModuleOrder, gens: Vec<ModuleElement>) -> Self {
        Self::compute_inner(module, order, gens, None)
    }

    /// Gröbner basis up to the down-set of `bounds`: every element of the
    /// submodule whose degree is below some bound reduces to zero.
    pub fn compute_truncated(
        module: &FreeModule,
        order: &ModuleOrder,
        gens: Vec<ModuleElement>,
        bounds: &[Multidegree],
    ) -> Self {
        Self::compute_inner(module, order, gens, Some(bounds))
    }

    fn compute_inner(
        module: &FreeModule,
        order: &ModuleOrder,
        gens: Vec<ModuleElement>,
        bounds: Option<&[Multidegree]>,
    ) -> Self {
        let field = module.ring().field();
        let ring = module.ring().clone();
        let total_twist: Vec<i64> = module.degrees().iter().map(|d| d.total()).collect();
        let rank_one = module.rank() == 1 && !order.is_schreyer();
        let mut gb = Self::empty(module.clone(), order.clone());
        let mut pairs: Vec<Pair> = Vec::new();
        let mut heap: BinaryHeap<Reverse<(i64, u64, usize, bool)>> = BinaryHeap::new();
        let mut seq = 0u64;
        let in_bounds = |mon: &Monomial, comp: u32| -> bool {
            match bounds {
                None => true,
                Some(b) => (&ring.multidegree(mon) + module.degree(comp as usize)).below_any(b),
            }
        };
        let gens: Vec<ModuleElement> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for (k, g) in gens.iter().enumerate() {
            let t = g.lead().unwrap();
            if !in_bounds(&t.mon, t.comp) {
                continue;
            }
            let d = t.mon.degree() as i64 + total_twist[t.comp as usize];
            heap.push(Reverse((d, seq, k, false)));
            seq += 1;
        }
        let mut scratch = Vec::new();
        while let Some(Reverse((_, _, idx, is_pair))) = heap.pop() {
            let job = if is_pair { Job::Pair(idx) } else { Job::Generator(idx) };
            let f = match job {
                Job::Generator(k) => gens[k].clone(),
                Job::Pair(p) => {
                    if !pairs[p].alive {
                        continue;
                    }
                    let (i, j) = (pairs[p].i, pairs[p].j);
                    gb.spoly(i, j, &mut scratch)
                }
            };
            let h = gb.reduce_full(&f);
            if h.is_zero() {
                continue;
            }
            let h = h.monic(field);
            let lead = *h.lead().unwrap();
            let k = gb.push(h);
            // Gebauer–Möller update
            let hm = lead.mon;
            for p in pairs.iter_mut().filter(|p| p.alive && p.comp == lead.comp) {
                if hm.divides(&p.lcm) {
                    let li = gb.leads[p.i].mon.lcm(&hm);
                    let lj = gb.leads[p.j].mon.lcm(&hm);
                    if li != p.lcm && lj != p.lcm {
                        p.alive = false;
                    }
                }
            }
            let cands: Vec<(usize, Monomial, bool)> = gb.by_comp[lead.comp as usize]
                .iter()
                .filter(|&&i| i != k)
                .map(|&i| {
                    let m = gb.leads[i].mon;
                    (i, m.lcm(&hm), rank_one && m.is_coprime(&hm))
                })
                .collect();
            let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
            for (n, c) in cands.iter().enumerate() {
                let dominated = !c.2
                    && (cands[n + 1..].iter().any(|o| o.1.divides(&c.1)) || kept.iter().any(|o| o.1.divides(&c.1)));
                if !dominated {
                    kept.push(*c);
                }
            }
            for (i, lcm, coprime) in kept {
                if coprime || !in_bounds(&lcm, lead.comp) {
                    continue;
                }
                let d = lcm.degree() as i64 + total_twist[lead.comp as usize];
                pairs.push(Pair { i, j: k, lcm, comp: lead.comp, alive: true });
                heap.push(Reverse((d, seq, pairs.len() - 1, true)));
                seq += 1;
            }
        }
        gb.interreduce();
        gb
    }

    /// Removes elements with redundant leading terms and tail-reduces the rest.
    fn interreduce(&mut self) {
        let n = self.elements.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i
                        && self.leads[j].comp == self.leads[i].comp
                        && self.leads[j].mon.divides(&self.leads[i].mon)
                        && (self.leads[j].mon != self.leads[i].mon || j < i)
                })
            })
            .collect();
        let old = std::mem::take(&mut self.elements);
        let mut pruned = Self::empty(self.module.clone(), self.order.clone());
        for i in keep {
            pruned.push(old[i].clone());
        }
        let mut reduced = Vec::with_capacity(pruned.elements.len());
        for g in &pruned.elements {
            let tail = ModuleElement { terms: g.terms[1..].to_vec() };
            let mut terms = vec![g.terms[0]];
            terms.extend(pruned.reduce_full(&tail).terms);
            reduced.push(ModuleElement { terms });
        }
        reduced.sort_by(|a, b| {
            let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
            self.order.cmp_terms(x, y)
        });
        *self = Self::from_basis(pruned.module, pruned.order, reduced);
    }

    pub(crate) fn spoly(&self, i: usize, j: usize, scratch: &mut Vec<Term>) -> ModuleElement {
        let field = self.module.ring().field();
        let (li, lj) = (self.leads[i], self.leads[j]);
        let lcm = li.mon.lcm(&lj.mon);
        let qi = li.mon.quotient_of(&lcm).unwrap();
        let qj = lj.mon.quotient_of(&lcm).unwrap();
        let a: Vec<Term> = self.elements[i].terms[1..].iter().map(|t| Term { mon: t.mon.mul(&qi), ..*t }).collect();
        merge_scaled(&a, &self.elements[j].terms[1..], field.neg(1), &qj, &self.order, field, scratch);
        ModuleElement { terms: std::mem::take(scratch) }
    }

    #[inline]
    fn find_reducer(&self, t: &Term) -> Option<(usize, Monomial)> {
        let mask = t.mon.divmask();
        for &k in &self.by_comp[t.comp as usize] {
            let l = &self.leads[k];
            if l.mask & !mask == 0 {
                if let Some(q) = l.mon.quotient_of(&t.mon) {
                    return Some((k, q));
                }
            }
        }
        None
    }

    fn reduce_impl(&self, f: &ModuleElement, full: bool, mut trace: Option<&mut Vec<TraceStep>>) -> ModuleElement {
        let field = self.module.ring().field();
        let mut cur = f.terms.clone();
        let mut buf = Vec::new();
        let mut pos = 0;
        let mut rem = Vec::new();
        while pos < cur.len() {
            let t = cur[pos];
            match self.find_reducer(&t) {
                Some((k, q)) => {
                    merge_scaled(
                        &cur[pos + 1..],
                        &self.elements[k].terms[1..],
                        field.neg(t.coef),
                        &q,
                        &self.order,
                        field,
                        &mut buf,
                    );
                    std::mem::swap(&mut cur, &mut buf);
                    pos = 0;
                    if let Some(tr) = trace.as_deref_mut() {
                        tr.push((k, q, t.coef));
                    }
                }
                None if full => {
                    rem.push(t);
                    pos += 1;
                }
                None => {
                    rem.extend_from_slice(&cur[pos..]);
                    break;
                }
            }
        }
        ModuleElement { terms: rem }
    }

    /// Full normal form: no term of the result is divisible by a leading term.
    pub(crate) fn reduce_full(&self, f: &ModuleElement) -> ModuleElement {
        self.reduce_impl(f, true, None)
    }

    /// Normal form together with the division steps taken.
    pub fn reduce_with_trace(&self, f: &ModuleElement) -> (ModuleElement, Vec<TraceStep>) {
        let mut trace = Vec::new();
        let r = self.reduce_impl(f, true, Some(&mut trace));
        (r, trace)
    }

    /// Normal form of `f`, which must be sorted by `order`.
    pub fn normal_form(&self, f: &ModuleElement, order: &ModuleOrder) -> Result<ModuleElement> {
        if *order != self.order {
            return Err(AlgebraError::OrderMismatch);
        }
        Ok(self.reduce_full(f))
    }

    /// Normal form of a dense column.
    pub fn reduce_column(&self, col: &[Polynomial]) -> Vec<Polynomial> {
        let ring = self.module.ring();
        let e = ModuleElement::from_column(col, &self.order, ring.field());
        self.reduce_full(&e).to_column(ring, self.module.rank())
    }

    pub fn reduce_polynomial(&self, f: &Polynomial) -> Polynomial {
        self.reduce_column(std::slice::from_ref(f)).pop().expect("rank one")
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        self.reduce_impl(f, false, None).is_zero()
    }

    pub fn contains_column(&self, col: &[Polynomial]) -> bool {
        let e = ModuleElement::from_column(col, &self.order, self.module.ring().field());
        self.contains(&e)
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading monomials and components.
    pub fn leading_terms(&self) -> Vec<(Monomial, u32)> {
        self.leads.iter().map(|l| (l.mon, l.comp)).collect()
    }

    /// Leading monomials lying in component `comp`.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.by_comp[comp].iter().map(|&k| self.leads[k].mon).collect()
    }

    /// True if `mon * e_comp` is not divisible by any leading term.
    pub fn is_standard(&self, mon: &Monomial, comp: usize) -> bool {
        self.find_reducer(&Term { mon: *mon, comp: comp as u32, coef: 1 }).is_none()
    }

    /// The basis contains a unit in some component, i.e. for an ideal: it is (1).
    pub fn has_unit(&self) -> bool {
        self.leads.iter().any(|l| l.mon.is_one())
    }

    /// Elements as dense columns.
    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        let ring = self.module.ring();
        self.elements.iter().map(|e| e.to_column(ring, self.module.rank())).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        let ring = self.module.ring();
        self.elements.iter().map(|e| e.to_polynomial(ring)).collect()
    }

    /// Every S-pair reduces to zero (used to validate results in tests).
    pub fn is_groebner(&self) -> bool {
        let mut scratch = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.leads[i].comp != self.leads[j].comp {
                    continue;
                }
                let s = self.spoly(i, j, &mut scratch);
                if !self.reduce_full(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::MultigradedRing;

    fn ring1(n: usize) -> MultigradedRing {
        MultigradedRing::new(PrimeField::new(101).unwrap(), &[n]).unwrap()
    }

    fn ideal_gb(ring: &MultigradedRing, gens: &[&str]) -> GroebnerBasis {
        let order = ModuleOrder::term_over_position(ring.order().clone());
        let module = FreeModule::free(ring.clone(), 1);
        let gens =
            gens.iter().map(|s| ModuleElement::from_polynomial(&parse_polynomial(s, ring).unwrap(), &order)).collect();
        GroebnerBasis::compute(&module, &order, gens)
    }

    #[test]
    fn single_division_step() {
        let s =
            MultigradedRing::with_names(PrimeField::new(101).unwrap(), &[1], vec!["x0".into(), "x1".into()]).unwrap();
        let gb = ideal_gb(&s, &["x0"]);
        let f = parse_polynomial("x0*x1+x1^2", &s).unwrap();
        assert_eq!(gb.reduce_polynomial(&f), parse_polynomial("x1^2", &s).unwrap());
        assert!(gb.reduce_polynomial(&s.zero()).is_zero());
        assert!(gb.reduce_polynomial(&s.var(0)).is_zero());
    }

    #[test]
    fn principal_ideal_is_monic_generator() {
        let s = ring1(2);
        let gb = ideal_gb(&s, &["3*x_(0,0)^2-x_(0,1)*x_(0,2)"]);
        assert_eq!(gb.len(), 1);
        let g = gb.polynomials().pop().unwrap();
        assert_eq!(g, parse_polynomial("3*x_(0,0)^2-x_(0,1)*x_(0,2)", &s).unwrap().monic());
    }

    #[test]
    fn linear_reduction() {
        let s = ring1(1);
        let gb = ideal_gb(&s, &["x_(0,0)", "x_(0,0)+x_(0,1)"]);
        let mut leads: Vec<_> = gb.leading_monomials(0);
        leads.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(leads, vec![Monomial::var(1), Monomial::var(0)]);
    }

    #[test]
    fn twisted_cubic_minors_form_a_basis() {
        let s = ring1(3);
        let gens = ["x_(0,0)*x_(0,2)-x_(0,1)^2", "x_(0,1)*x_(0,3)-x_(0,2)^2", "x_(0,0)*x_(0,3)-x_(0,1)*x_(0,2)"];
        let gb = ideal_gb(&s, &gens);
        assert_eq!(gb.len(), 3);
        assert!(gb.is_groebner());
        for g in gens {
            assert!(gb.reduce_polynomial(&parse_polynomial(g, &s).unwrap()).is_zero());
        }
    }

    #[test]
    fn normal_form_rejects_foreign_order() {
        let s = ring1(1);
        let gb = ideal_gb(&s, &["x_(0,0)"]);
        let other = ModuleOrder::term_over_position(MonomialOrder::elimination(2, &[0]));
        assert_eq!(gb.normal_form(&ModuleElement::zero(), &other), Err(AlgebraError::OrderMismatch));
    }

    #[test]
    fn position_over_term_eliminates_components() {
        // kernel of (x0, x1): module generated by (x0, 1, 0), (x1, 0, 1)
        let s = ring1(1);
        let (x0, x1) = (s.var(0), s.var(1));
        let module = FreeModule::new(s.clone(), vec![crate::deg![0], crate::deg![1], crate::deg![1]]).unwrap();
        let order = ModuleOrder::with_blocks(s.order().clone(), vec![0, 1, 1]);
        let cols = [vec![x0.clone(), s.one(), s.zero()], vec![x1.clone(), s.zero(), s.one()]];
        let gens = cols.iter().map(|c| ModuleElement::from_column(c, &order, s.field())).collect();
        let gb = GroebnerBasis::compute(&module, &order, gens);
        let syz: Vec<_> = gb.elements().iter().filter(|e| e.lead().unwrap().comp > 0).collect();
        assert_eq!(syz.len(), 1);
        let col = syz[0].to_column(&s, 3);
        assert!(col[0].is_zero());
        // (x1, -x0) up to a unit
        let a = &(&col[1] * &x0) + &(&col[2] * &x1);
        assert!(a.is_zero());
        assert_eq!(col[1].total_degree(), Some(1));
    }
}
