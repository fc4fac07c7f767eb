//! Homogeneous ideals and the standard operations on them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::groebner::{GroebnerBasis, ModuleElement, ModuleOrder};
use crate::module::FreeModule;
use crate::monomial::{Monomial, MonomialOrder};
use crate::multidegree::Multidegree;
use crate::parse::parse_homogeneous;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

/// A homogeneous ideal, with its grevlex Gröbner basis computed on demand.
#[derive(Clone)]
pub struct Ideal {
    ring: MultigradedRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "ideal({})", g.join(", "))
    }
}

fn rank_one_gb(ring: &MultigradedRing, order: MonomialOrder, gens: &[Polynomial]) -> GroebnerBasis {
    let order = ModuleOrder::term_over_position(order);
    let module = FreeModule::free(ring.clone(), 1);
    let elems = gens.iter().map(|g| ModuleElement::from_polynomial(g, &order)).collect();
    GroebnerBasis::compute(&module, &order, elems)
}

impl Ideal {
    /// Zero generators are dropped. Every generator must be homogeneous.
    pub fn new(ring: &MultigradedRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn parse(ring: &MultigradedRing, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| parse_homogeneous(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    fn from_gb(ring: &MultigradedRing, gb: GroebnerBasis) -> Self {
        let gens = gb.polynomials();
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(gb));
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    pub fn zero(ring: &MultigradedRing) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &MultigradedRing) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], gb: OnceLock::new() }
    }

    /// `(x_(i,0), ..., x_(i,n_i))`.
    pub fn factor_ideal(ring: &MultigradedRing, i: usize) -> Self {
        let gens = ring.block(i).map(|v| ring.var(v)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    /// The irrelevant ideal `B = ∩_i (x_(i,0), ..., x_(i,n_i))`, generated by
    /// the products of one variable from each factor.
    pub fn irrelevant(ring: &MultigradedRing) -> Self {
        let mut mons = vec![Monomial::one()];
        for i in 0..ring.num_factors() {
            mons = mons.iter().flat_map(|m| ring.block(i).map(move |v| m.mul(&Monomial::var(v)))).collect();
        }
        let gens = mons.into_iter().map(|m| ring.monomial(m, 1)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    /// `B^a = ∩_i (x_(i,0), ..., x_(i,n_i))^{a_i}`, with zeroth powers equal to (1).
    pub fn fat_irrelevant(ring: &MultigradedRing, a: &[i64]) -> Result<Self> {
        if a.len() != ring.num_factors() {
            return Err(AlgebraError::invalid(format!("expected {} exponents, got {}", ring.num_factors(), a.len())));
        }
        if a.iter().any(|&x| x < 0) {
            return Err(AlgebraError::invalid("fat point exponents must be nonnegative"));
        }
        // the factor ideals live in disjoint variables, so the intersection is the product
        let mut acc = Ideal::unit(ring);
        for (i, &ai) in a.iter().enumerate() {
            acc = acc.product(&Ideal::factor_ideal(ring, i).power(ai as u32));
        }
        Ok(acc)
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(rank_one_gb(&self.ring, self.ring.order().clone(), &self.gens)))
    }

    /// Reduced Gröbner basis under another monomial order.
    pub fn groebner_basis_for(&self, order: &MonomialOrder) -> GroebnerBasis {
        rank_one_gb(&self.ring, order.clone(), &self.gens)
    }

    /// The same ideal, generated by its reduced Gröbner basis.
    pub fn normalized(&self) -> Ideal {
        Ideal::from_gb(&self.ring, self.groebner_basis().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Polynomial::is_unit) || self.groebner_basis().has_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis().reduce_polynomial(f).is_zero()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner_basis().reduce_polynomial(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (mutual containment).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.contains_ideal(other) && other.contains_ideal(self)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal { ring: self.ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        let gens = if gens.iter().all(|g| g.num_terms() == 1) { dedup_monomials(gens) } else { gens };
        Ideal { ring: self.ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `(m_1^k, ..., m_s^k)` for an ideal generated by monomials.
    pub fn bracket_power(&self, k: u32) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let (m, _) = match g.terms() {
                [t] => *t,
                _ => return Err(AlgebraError::invalid("bracket powers need monomial generators")),
            };
            gens.push(self.ring.monomial(m.pow(k), 1));
        }
        Ok(Ideal { ring: self.ring.clone(), gens, gb: OnceLock::new() })
    }

    /// `I : f = {g : g f ∈ I}`.
    pub fn quotient_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(AlgebraError::invalid("quotient by the zero polynomial"));
        }
        if f.ring() != &self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let deg = f.multidegree().ok_or(AlgebraError::NotHomogeneous)?;
        if f.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let ring = &self.ring;
        let module = FreeModule::new(ring.clone(), vec![Multidegree::zero(ring.num_factors()), deg])?;
        let order = ModuleOrder::with_blocks(ring.order().clone(), vec![0, 1]);
        let mut cols = vec![vec![f.clone(), ring.one()]];
        for g in &self.groebner_basis().polynomials() {
            cols.push(vec![g.clone(), ring.zero()]);
        }
        let elems = cols.iter().map(|c| ModuleElement::from_column(c, &order, ring.field())).collect();
        let gb = GroebnerBasis::compute(&module, &order, elems);
        let gens = gb
            .elements()
            .iter()
            .filter(|e| e.lead().unwrap().comp == 1)
            .map(|e| e.restrict_components(1..2).to_polynomial(ring))
            .collect();
        Ideal::new(ring, gens)
    }

    /// `I : J = ∩_j (I : f_j)`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let q = self.quotient_element(f)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : x_v^∞`, read off a Gröbner basis with `x_v` last in grevlex.
    pub fn saturate_variable(&self, v: usize) -> Ideal {
        let order = MonomialOrder::grevlex_with_last(self.ring.nvars(), v);
        let gb = self.groebner_basis_for(&order);
        let gens = gb
            .polynomials()
            .into_iter()
            .map(|g| {
                let k = g.terms().iter().map(|(m, _)| m.exponent_of(v)).min().unwrap_or(0);
                if k == 0 {
                    return g;
                }
                let terms = g.terms().iter().map(|(m, c)| (m.strip_variable_by(v, k), *c)).collect();
                Polynomial::from_terms(self.ring.clone(), terms)
            })
            .collect();
        Ideal::new(&self.ring, gens).expect("homogeneous")
    }

    /// `I : f^∞`.
    pub fn saturate_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(AlgebraError::invalid("saturation by the zero polynomial"));
        }
        if let [(m, _)] = f.terms() {
            let mut acc = self.clone();
            for v in 0..self.ring.nvars() {
                if m.exponent(v) > 0 {
                    acc = acc.saturate_variable(v);
                }
            }
            return Ok(acc);
        }
        let mut acc = self.clone();
        loop {
            let next = acc.quotient_element(f)?;
            if acc.contains_ideal(&next) {
                return Ok(acc);
            }
            acc = next;
        }
    }

    /// `I : J^∞ = ∩_j (I : f_j^∞)`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(AlgebraError::invalid("saturation by the zero ideal"));
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let parts = other.gens.iter().map(|f| self.saturate_element(f)).collect::<Result<Vec<_>>>()?;
        Ideal::intersect_all(&self.ring, &parts)
    }

    /// `I : (J_1 ⋯ J_k)^∞`, one factor at a time.
    pub fn saturate_product(&self, factors: &[Ideal]) -> Result<Ideal> {
        let mut acc = self.clone();
        for j in factors {
            acc = acc.saturate(j)?;
        }
        Ok(acc)
    }

    /// `I : B^∞` for the irrelevant ideal `B` of the ring.
    pub fn saturate_irrelevant(&self) -> Ideal {
        let factors: Vec<Ideal> = (0..self.ring.num_factors()).map(|i| Ideal::factor_ideal(&self.ring, i)).collect();
        self.saturate_product(&factors).expect("factor ideals are nonzero")
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let module = FreeModule::free(ring.clone(), 2);
        let order = ModuleOrder::with_blocks(ring.order().clone(), vec![0, 1]);
        let mut cols = Vec::new();
        for f in &self.gens {
            cols.push(vec![f.clone(), f.clone()]);
        }
        for g in &other.gens {
            cols.push(vec![g.clone(), ring.zero()]);
        }
        let elems = cols.iter().map(|c| ModuleElement::from_column(c, &order, ring.field())).collect();
        let gb = GroebnerBasis::compute(&module, &order, elems);
        let gens = gb
            .elements()
            .iter()
            .filter(|e| e.lead().unwrap().comp == 1)
            .map(|e| e.restrict_components(1..2).to_polynomial(ring))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn intersect_all(ring: &MultigradedRing, ideals: &[Ideal]) -> Result<Ideal> {
        let mut acc = Ideal::unit(ring);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `I ∩ K[variables outside block]`, from a block elimination Gröbner basis.
    pub fn eliminate(&self, block: &[usize]) -> Result<Ideal> {
        if let Some(&v) = block.iter().find(|&&v| v >= self.ring.nvars()) {
            return Err(AlgebraError::invalid(format!("variable index {v} out of range")));
        }
        if block.is_empty() {
            return Ok(self.clone());
        }
        let order = MonomialOrder::elimination(self.ring.nvars(), block);
        let gb = self.groebner_basis_for(&order);
        let gens = gb
            .polynomials()
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| block.iter().all(|&v| m.exponent(v) == 0)))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Krull dimension of `S/I`; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        let gb = self.groebner_basis();
        if gb.has_unit() {
            return -1;
        }
        let masks: Vec<u32> = gb.leading_monomials(0).iter().map(|m| m.support_mask()).collect();
        max_independent_set(self.ring.nvars(), &masks) as i64
    }

    /// `codim I = N - dim S/I`, `None` (infinite) for the unit ideal.
    pub fn codimension(&self) -> Option<usize> {
        let d = self.krull_dimension();
        (d >= 0).then(|| self.ring.nvars() - d as usize)
    }

    /// `dim_K (S/I)_d`, counted as standard monomials of degree `d`.
    pub fn hilbert_function(&self, d: &Multidegree) -> usize {
        let gb = self.groebner_basis();
        if gb.has_unit() {
            return 0;
        }
        self.ring.monomials_of_degree(d).iter().filter(|m| gb.is_standard(m, 0)).count()
    }

    /// Images of the generators under `var_map` into another ring.
    pub fn map_to(&self, target: &MultigradedRing, var_map: &[usize]) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.map_variables(target, var_map)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

fn dedup_monomials(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.sort_by(|a, b| a.terms()[0].0.lex_cmp(&b.terms()[0].0));
    gens.dedup_by(|a, b| a.terms()[0].0 == b.terms()[0].0);
    // keep minimal generators only
    let mons: Vec<Monomial> = gens.iter().map(|g| g.terms()[0].0).collect();
    gens.into_iter()
        .enumerate()
        .filter(|(i, _)| !mons.iter().enumerate().any(|(j, m)| j != *i && m.divides(&mons[*i])))
        .map(|(_, g)| g.monic())
        .collect()
}

/// Largest set of variables containing the support of no mask.
pub(crate) fn max_independent_set(nvars: usize, masks: &[u32]) -> usize {
    let full: u32 = if nvars == 32 { u32::MAX } else { (1u32 << nvars) - 1 };
    let mut best = 0;
    // maximal independent sets are found by walking subsets in decreasing size order
    let mut by_size: Vec<u32> = (0..=full).collect();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    for s in by_size {
        if (s.count_ones() as usize) <= best {
            break;
        }
        if masks.iter().all(|&m| m & !s != 0) {
            best = s.count_ones() as usize;
        }
    }
    best
}
