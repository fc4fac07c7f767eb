//! The Cox ring of a product of projective spaces.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{Coeff, PrimeField};
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;

#[derive(Debug)]
struct RingInner {
    field: PrimeField,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    nvars: usize,
    factor_of: Vec<usize>,
    order: MonomialOrder,
    names: Vec<String>,
}

/// `S = K[x_(i,j) : 0 <= i < r, 0 <= j <= n_i]` graded by Z^r with
/// `deg x_(i,j) = e_i`, ordered by degree reverse lexicographic order on all
/// variables.
///
/// Cheap to clone; clones share the same underlying description.
#[derive(Clone)]
pub struct MultigradedRing(Arc<RingInner>);

impl PartialEq for MultigradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.dims == other.0.dims && self.0.names == other.0.names)
    }
}

impl Eq for MultigradedRing {}

impl fmt::Debug for MultigradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultigradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}] over P^{:?}", self.0.field.characteristic(), self.0.names.join(", "), self.0.dims)
    }
}

/// Standard name `x_(i,j)` of the `j`-th variable of factor `i`.
pub fn standard_name(i: usize, j: usize) -> String {
    format!("x_({i},{j})")
}

impl MultigradedRing {
    /// Cox ring of `P^dims[0] x ... x P^dims[r-1]` with variables named `x_(i,j)`.
    pub fn new(field: PrimeField, dims: &[usize]) -> Result<Self> {
        let names = dims.iter().enumerate().flat_map(|(i, &n)| (0..=n).map(move |j| standard_name(i, j))).collect();
        Self::with_names(field, dims, names)
    }

    pub fn with_names(field: PrimeField, dims: &[usize], names: Vec<String>) -> Result<Self> {
        if dims.is_empty() {
            return Err(AlgebraError::invalid("a product needs at least one factor"));
        }
        let nvars: usize = dims.iter().map(|n| n + 1).sum();
        if nvars > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(nvars));
        }
        if names.len() != nvars {
            return Err(AlgebraError::VariableCount { expected: nvars, got: names.len() });
        }
        let mut offsets = Vec::with_capacity(dims.len());
        let mut factor_of = Vec::with_capacity(nvars);
        let mut acc = 0;
        for (i, &n) in dims.iter().enumerate() {
            offsets.push(acc);
            acc += n + 1;
            factor_of.extend(std::iter::repeat_n(i, n + 1));
        }
        Ok(MultigradedRing(Arc::new(RingInner {
            field,
            dims: dims.to_vec(),
            offsets,
            nvars,
            factor_of,
            order: MonomialOrder::grevlex(nvars),
            names,
        })))
    }

    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    /// Number r of projective factors.
    pub fn num_factors(&self) -> usize {
        self.0.dims.len()
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.0.dims
    }

    /// The vector n as a multidegree.
    pub fn dims_degree(&self) -> Multidegree {
        Multidegree::from(self.0.dims.iter().map(|&n| n as i32).collect::<Vec<_>>())
    }

    /// Dimension |n| of the product of projective spaces.
    pub fn projective_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn block(&self, factor: usize) -> Range<usize> {
        let s = self.0.offsets[factor];
        s..s + self.0.dims[factor] + 1
    }

    pub fn factor_of(&self, var: usize) -> usize {
        self.0.factor_of[var]
    }

    pub fn var_index(&self, factor: usize, j: usize) -> Result<usize> {
        if factor >= self.num_factors() || j > self.0.dims[factor] {
            return Err(AlgebraError::invalid(format!("no variable ({factor},{j})")));
        }
        Ok(self.0.offsets[factor] + j)
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.0.names[v]
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var(&self, v: usize) -> Polynomial {
        Polynomial::from_sorted_terms(self.clone(), vec![(Monomial::var(v), 1)])
    }

    pub fn variable(&self, factor: usize, j: usize) -> Result<Polynomial> {
        Ok(self.var(self.var_index(factor, j)?))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.clone())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.0.field.from_i64(c);
        if c == 0 {
            return self.zero();
        }
        Polynomial::from_sorted_terms(self.clone(), vec![(Monomial::one(), c)])
    }

    pub fn monomial(&self, m: Monomial, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self.clone(), vec![(m, c)])
    }

    pub fn multidegree(&self, m: &Monomial) -> Multidegree {
        Multidegree::from((0..self.num_factors()).map(|i| m.partial_degree(self.block(i)) as i32).collect::<Vec<_>>())
    }

    /// dim_K S_d = prod_i binom(d_i + n_i, n_i), zero if some d_i < 0.
    pub fn count_monomials(&self, d: &Multidegree) -> usize {
        let mut total = 1usize;
        for (i, &n) in self.0.dims.iter().enumerate() {
            let di = d.get(i);
            if di < 0 {
                return 0;
            }
            total *= binomial(di as usize + n, n);
        }
        total
    }

    /// All monomials of multidegree `d`, in decreasing ring order.
    pub fn monomials_of_degree(&self, d: &Multidegree) -> Vec<Monomial> {
        if d.iter().any(|x| x < 0) {
            return Vec::new();
        }
        let mut acc = vec![[0u32; MAX_VARS]];
        for i in 0..self.num_factors() {
            let block = self.block(i);
            let parts = compositions(d.get(i) as u32, block.len());
            let mut next = Vec::with_capacity(acc.len() * parts.len());
            for a in &acc {
                for p in &parts {
                    let mut e = *a;
                    e[block.start..block.end].copy_from_slice(p);
                    next.push(e);
                }
            }
            acc = next;
        }
        let mut out: Vec<Monomial> =
            acc.iter().map(|e| Monomial::from_exponents(&e[..self.nvars()]).expect("degree fits")).collect();
        out.sort_by(|a, b| self.order().cmp(b, a));
        out
    }
}

/// All ways of writing `d` as an ordered sum of `k` nonnegative integers.
fn compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}
