//! Module presentations, kernels, subquotients and their annihilators.

use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::groebner::{GroebnerBasis, ModuleElement, ModuleOrder};
use crate::ideal::Ideal;
use crate::linalg::DenseMatrix;
use crate::module::{FreeModule, Matrix};
use crate::monomial::Monomial;
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

/// Gröbner basis of the column span of `m` in its target, term over position.
pub fn image_groebner(m: &Matrix) -> GroebnerBasis {
    let ring = m.ring();
    let order = ModuleOrder::term_over_position(ring.order().clone());
    let elems = m.columns().iter().map(|c| ModuleElement::from_column(c, &order, ring.field())).collect();
    GroebnerBasis::compute(m.target(), &order, elems)
}

/// A matrix whose columns generate `ker m`.
pub fn kernel(m: &Matrix) -> Matrix {
    let ring = m.ring();
    let (g, f) = (m.target(), m.source());
    let module = g.direct_sum(f);
    let blocks = (0..module.rank()).map(|i| u32::from(i >= g.rank())).collect();
    let order = ModuleOrder::with_blocks(ring.order().clone(), blocks);
    let elems = (0..f.rank())
        .map(|j| {
            let mut col = m.column(j).to_vec();
            col.extend((0..f.rank()).map(|k| if k == j { ring.one() } else { ring.zero() }));
            ModuleElement::from_column(&col, &order, ring.field())
        })
        .collect();
    let gb = GroebnerBasis::compute(&module, &order, elems);
    let (lo, hi) = (g.rank() as u32, module.rank() as u32);
    let cols: Vec<Vec<Polynomial>> = gb
        .elements()
        .iter()
        .filter(|e| e.lead().unwrap().comp >= lo)
        .map(|e| e.restrict_components(lo..hi).to_column(ring, f.rank()))
        .collect();
    Matrix::from_columns(f.clone(), cols).expect("kernel columns are homogeneous")
}

/// `(N : k) = {s : s k ∈ N}` for the column span `N` of `n` and a homogeneous
/// vector `k` of degree `deg_k` in the same free module.
pub fn submodule_quotient(n: &Matrix, k: &[Polynomial], deg_k: &Multidegree) -> Result<Ideal> {
    let ring = n.ring();
    let f = n.target();
    if k.iter().all(Polynomial::is_zero) {
        return Ok(Ideal::unit(ring));
    }
    let module = f.direct_sum(&FreeModule::new(ring.clone(), vec![deg_k.clone()])?);
    let blocks = (0..module.rank()).map(|i| u32::from(i >= f.rank())).collect();
    let order = ModuleOrder::with_blocks(ring.order().clone(), blocks);
    let mut elems = Vec::with_capacity(n.ncols() + 1);
    let mut kcol = k.to_vec();
    kcol.push(ring.one());
    elems.push(ModuleElement::from_column(&kcol, &order, ring.field()));
    for col in n.columns() {
        let mut c = col.clone();
        c.push(ring.zero());
        elems.push(ModuleElement::from_column(&c, &order, ring.field()));
    }
    let gb = GroebnerBasis::compute(&module, &order, elems);
    let last = f.rank() as u32;
    let gens = gb
        .elements()
        .iter()
        .filter(|e| e.lead().unwrap().comp == last)
        .map(|e| e.restrict_components(last..last + 1).to_polynomial(ring))
        .collect();
    Ideal::new(ring, gens)
}

/// `ann(span K / span I)`; the columns of `i` must lie in the span of `k`.
pub fn annihilator_of_subquotient(k: &Matrix, i: &Matrix) -> Result<Ideal> {
    let ring = k.ring();
    if k.target() != i.target() {
        return Err(AlgebraError::invalid("subquotient generators and relations live in different modules"));
    }
    let kgb = image_groebner(k);
    if i.columns().iter().any(|c| !kgb.contains_column(c)) {
        return Err(AlgebraError::NotContained);
    }
    let igb = image_groebner(i);
    let mut acc = Ideal::unit(ring);
    for j in 0..k.ncols() {
        if igb.contains_column(k.column(j)) {
            continue;
        }
        let q = submodule_quotient(i, k.column(j), k.degree_of_column(j))?;
        acc = acc.intersect(&q)?;
    }
    Ok(acc)
}

/// `M = coker(F_1 -> F_0)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    matrix: Matrix,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Presentation {
    pub fn new(matrix: Matrix) -> Self {
        Presentation { matrix, gb: OnceLock::new() }
    }

    /// `S/I`.
    pub fn quotient_ring(ideal: &Ideal) -> Self {
        let m = Matrix::row(ideal.ring(), ideal.gens()).expect("ideal generators are homogeneous");
        Presentation::new(m)
    }

    /// The free module itself.
    pub fn free(module: FreeModule) -> Self {
        let source = FreeModule::zero(module.ring().clone());
        Presentation::new(Matrix::zero_map(module, source))
    }

    pub fn ring(&self) -> &MultigradedRing {
        self.matrix.ring()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn target(&self) -> &FreeModule {
        self.matrix.target()
    }

    pub fn relations_groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(image_groebner(&self.matrix)))
    }

    /// `dim_K M_d` by the rank of the degree-`d` block of the presentation.
    pub fn hilbert_function(&self, d: &Multidegree) -> usize {
        self.target().graded_dim(d) - span_dim(&self.matrix, d)
    }

    /// Standard basis of `M_d`: terms `m e_i` of degree `d` outside the
    /// leading module of the relations.
    pub fn graded_basis(&self, d: &Multidegree) -> Vec<(Monomial, usize)> {
        let gb = self.relations_groebner();
        let ring = self.ring();
        let target = self.target();
        let mut out = Vec::new();
        for i in 0..target.rank() {
            for m in ring.monomials_of_degree(&(d - target.degree(i))) {
                if gb.is_standard(&m, i) {
                    out.push((m, i));
                }
            }
        }
        out
    }
}

/// `span K / span I` inside a free module.
#[derive(Clone, Debug)]
pub struct SubquotientModule {
    generators: Matrix,
    relations: Matrix,
}

impl SubquotientModule {
    pub fn new(generators: Matrix, relations: Matrix) -> Result<Self> {
        if generators.target() != relations.target() {
            return Err(AlgebraError::invalid("subquotient generators and relations live in different modules"));
        }
        Ok(SubquotientModule { generators, relations })
    }

    pub fn ambient(&self) -> &FreeModule {
        self.generators.target()
    }

    pub fn generators(&self) -> &Matrix {
        &self.generators
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// The relations span every generator.
    pub fn is_zero(&self) -> bool {
        let gb = image_groebner(&self.relations);
        self.generators.columns().iter().all(|c| gb.contains_column(c))
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        annihilator_of_subquotient(&self.generators, &self.relations)
    }

    /// `dim_K` of the degree-`d` part, by ranks of the two spans in `F_d`.
    pub fn graded_dim(&self, d: &Multidegree) -> usize {
        span_dim(&self.generators.concat(&self.relations).expect("same target"), d) - span_dim(&self.relations, d)
    }
}

/// dim_K of the degree-`d` part of the column span of `m`.
pub fn span_dim(m: &Matrix, d: &Multidegree) -> usize {
    let ring = m.ring();
    let target = m.target();
    let mut index = std::collections::HashMap::new();
    for i in 0..target.rank() {
        for mon in ring.monomials_of_degree(&(d - target.degree(i))) {
            let n = index.len();
            index.insert((mon, i), n);
        }
    }
    let dim = index.len();
    if dim == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        for q in ring.monomials_of_degree(&(d - m.degree_of_column(j))) {
            let mut row = vec![0; dim];
            for (i, p) in col.iter().enumerate() {
                for (mon, c) in p.terms() {
                    row[index[&(mon.mul(&q), i)]] = *c;
                }
            }
            rows.push(row);
        }
    }
    DenseMatrix::from_rows(ring.field(), dim, rows).rank()
}
