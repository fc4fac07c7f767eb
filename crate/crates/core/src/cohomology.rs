//! Graded Ext, local cohomology along a monomial ideal, sheaf cohomology and
//! Hilbert polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::BettiTally;
use crate::complex::{free_resolution, ChainComplex};
use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::groebner::{ModuleElement, Term};
use crate::ideal::Ideal;
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::multidegree::Multidegree;
use crate::ring::MultigradedRing;
use crate::submodule::Presentation;

/// `dim_K M_a`.
pub fn graded_piece_dim(m: &Presentation, a: &Multidegree) -> usize {
    m.hilbert_function(a)
}

/// Stabilization settings for local cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyOptions {
    /// Number of consecutive equal values required.
    pub window: usize,
    /// Largest bracket power tried.
    pub t_max: usize,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        CohomologyOptions { window: 3, t_max: 10 }
    }
}

struct GradedPiece {
    basis: Vec<(Monomial, usize)>,
    index: HashMap<(Monomial, usize), usize>,
}

/// Degree pieces of a presented module, cached by degree.
struct PieceCache<'a> {
    module: &'a Presentation,
    pieces: Mutex<HashMap<Multidegree, Arc<GradedPiece>>>,
}

impl<'a> PieceCache<'a> {
    fn new(module: &'a Presentation) -> Self {
        PieceCache { module, pieces: Mutex::new(HashMap::new()) }
    }

    fn get(&self, d: &Multidegree) -> Arc<GradedPiece> {
        if let Some(p) = self.pieces.lock().unwrap().get(d) {
            return p.clone();
        }
        let basis = self.module.graded_basis(d);
        let index = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let piece = Arc::new(GradedPiece { basis, index });
        self.pieces.lock().unwrap().insert(d.clone(), piece.clone());
        piece
    }

    /// Dimensions of `Ext^i(N, M)_a` for all `i`, where `g` resolves `N`.
    fn ext_dims(&self, g: &ChainComplex, a: &Multidegree) -> Vec<usize> {
        let m = self.module;
        let field = m.ring().field();
        let order = m.relations_groebner().order().clone();
        // Hom(G_j, M)_a = ⊕_k M_{a + c_k}
        let homs: Vec<Vec<Arc<GradedPiece>>> =
            g.modules().iter().map(|f| f.degrees().iter().map(|c| self.get(&(a + c))).collect()).collect();
        let dims: Vec<usize> = homs.iter().map(|h| h.iter().map(|p| p.basis.len()).sum()).collect();
        // δ_j : Hom(G_j, M)_a -> Hom(G_{j+1}, M)_a, ψ ↦ ψ ∘ φ_{j+1}
        let mut ranks = vec![0usize; dims.len() + 1];
        for j in 0..g.length() {
            if dims[j] == 0 || dims[j + 1] == 0 {
                continue;
            }
            let phi = g.differential(j + 1);
            let offsets_src = offsets(&homs[j]);
            let offsets_tgt = offsets(&homs[j + 1]);
            let mut rows = vec![vec![0 as Coeff; dims[j + 1]]; dims[j]];
            for (k, piece) in homs[j].iter().enumerate() {
                for (b, &(mon, comp)) in piece.basis.iter().enumerate() {
                    let row = &mut rows[offsets_src[k] + b];
                    for l in 0..phi.ncols() {
                        let e = phi.entry(k, l);
                        if e.is_zero() {
                            continue;
                        }
                        let terms = e
                            .terms()
                            .iter()
                            .map(|&(t, c)| Term { mon: t.mul(&mon), comp: comp as u32, coef: c })
                            .collect();
                        let v = ModuleElement::from_terms(terms, &order, field);
                        let tgt = &homs[j + 1][l];
                        let nf = m.relations_groebner().reduce_full(&v);
                        for t in nf.terms() {
                            let idx = tgt.index[&(t.mon, t.comp as usize)];
                            let pos = offsets_tgt[l] + idx;
                            row[pos] = field.add(row[pos], t.coef);
                        }
                    }
                }
            }
            ranks[j + 1] = DenseMatrix::from_rows(field, dims[j + 1], rows).rank();
        }
        // Ext^j = dim Hom_j - rank δ_j - rank δ_{j-1}; ranks[j + 1] holds rank δ_j
        (0..dims.len()).map(|j| dims[j] - ranks[j + 1] - ranks[j]).collect()
    }
}

fn offsets(pieces: &[Arc<GradedPiece>]) -> Vec<usize> {
    let mut acc = 0;
    pieces
        .iter()
        .map(|p| {
            let o = acc;
            acc += p.basis.len();
            o
        })
        .collect()
}

/// `dim_K Ext^i(N, M)_a`, from the minimal free resolution of `N`.
pub fn ext_graded_dim(i: i64, n: &Presentation, m: &Presentation, a: &Multidegree) -> Result<usize> {
    if i < 0 {
        return Err(AlgebraError::invalid("negative Ext index"));
    }
    if n.ring() != m.ring() {
        return Err(AlgebraError::RingMismatch);
    }
    let g = free_resolution(n);
    Ok(ext_graded_dim_with(i as usize, &g, m, a))
}

/// `dim_K Ext^i(N, M)_a` where `g` is any free resolution of `N`.
pub fn ext_graded_dim_with(i: usize, g: &ChainComplex, m: &Presentation, a: &Multidegree) -> usize {
    PieceCache::new(m).ext_dims(g, a).get(i).copied().unwrap_or(0)
}

/// Local cohomology `H^i_B(M)_a = colim_t Ext^i(S/B^[t], M)_a` with bracket
/// powers of a monomial ideal `B`.
pub struct LocalCohomology<'a> {
    cache: PieceCache<'a>,
    b: Ideal,
    opts: CohomologyOptions,
    resolutions: Vec<OnceLock<ChainComplex>>,
}

impl<'a> LocalCohomology<'a> {
    pub fn new(module: &'a Presentation, b: &Ideal, opts: CohomologyOptions) -> Result<Self> {
        if b.ring() != module.ring() {
            return Err(AlgebraError::RingMismatch);
        }
        if b.is_zero() || b.gens().iter().any(|g| g.num_terms() != 1) {
            return Err(AlgebraError::invalid("local cohomology needs a nonzero monomial ideal"));
        }
        if opts.window == 0 || opts.t_max < opts.window {
            return Err(AlgebraError::invalid("t_max must be at least the stability window"));
        }
        Ok(LocalCohomology {
            cache: PieceCache::new(module),
            b: b.clone(),
            opts,
            resolutions: (0..opts.t_max).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Local cohomology along the irrelevant ideal of the module's ring.
    pub fn irrelevant(module: &'a Presentation, opts: CohomologyOptions) -> Result<Self> {
        Self::new(module, &Ideal::irrelevant(module.ring()), opts)
    }

    pub fn ring(&self) -> &MultigradedRing {
        self.cache.module.ring()
    }

    fn resolution(&self, t: usize) -> &ChainComplex {
        self.resolutions[t - 1].get_or_init(|| {
            let bt = self.b.bracket_power(t as u32).expect("monomial ideal");
            free_resolution(&Presentation::quotient_ring(&bt))
        })
    }

    /// `dim H^i_B(M)_a` for `i = 0..=max_i`.
    pub fn dims(&self, a: &Multidegree, max_i: usize) -> Result<Vec<usize>> {
        let w = self.opts.window;
        let mut history: Vec<Vec<usize>> = Vec::new();
        for t in 1..=self.opts.t_max {
            let mut v = self.cache.ext_dims(self.resolution(t), a);
            v.resize(max_i + 1, 0);
            history.push(v);
            if history.len() >= w {
                let tail = &history[history.len() - w..];
                if tail.iter().all(|h| *h == tail[0]) {
                    return Ok(tail[0].clone());
                }
            }
        }
        let last = &history[history.len() - w..];
        let index = (0..=max_i).find(|&i| last.iter().any(|h| h[i] != last[0][i])).unwrap_or(0);
        Err(AlgebraError::NotStabilized { index, twist: a.clone(), t_max: self.opts.t_max })
    }

    pub fn dim(&self, i: usize, a: &Multidegree) -> Result<usize> {
        let w = self.opts.window;
        let mut history = Vec::new();
        for t in 1..=self.opts.t_max {
            history.push(self.cache.ext_dims(self.resolution(t), a).get(i).copied().unwrap_or(0));
            if history.len() >= w && history[history.len() - w..].iter().all(|&x| x == history[history.len() - 1]) {
                return Ok(history[history.len() - 1]);
            }
        }
        Err(AlgebraError::NotStabilized { index: i, twist: a.clone(), t_max: self.opts.t_max })
    }

    /// `h^i(M~(a))` for `i = 0..=|n|`.
    pub fn sheaf_dims(&self, a: &Multidegree) -> Result<Vec<usize>> {
        let n = self.ring().projective_dim();
        let h = self.dims(a, n + 1)?;
        let m_a = self.cache.get(a).basis.len();
        let mut out = Vec::with_capacity(n + 1);
        out.push(m_a - h[0] + h[1]);
        out.extend((1..=n).map(|i| h[i + 1]));
        Ok(out)
    }

    pub fn sheaf_dim(&self, i: usize, a: &Multidegree) -> Result<usize> {
        if i > self.ring().projective_dim() {
            return Err(AlgebraError::invalid(format!("cohomological index {i} exceeds the dimension")));
        }
        if i == 0 {
            let m_a = self.cache.get(a).basis.len();
            return Ok(m_a - self.dim(0, a)? + self.dim(1, a)?);
        }
        self.dim(i + 1, a)
    }
}

pub fn local_cohomology_dim(
    i: usize,
    m: &Presentation,
    a: &Multidegree,
    b: &Ideal,
    opts: CohomologyOptions,
) -> Result<usize> {
    LocalCohomology::new(m, b, opts)?.dim(i, a)
}

pub fn sheaf_cohomology_dim(
    i: usize,
    m: &Presentation,
    a: &Multidegree,
    b: &Ideal,
    opts: CohomologyOptions,
) -> Result<usize> {
    LocalCohomology::new(m, b, opts)?.sheaf_dim(i, a)
}

/// `h^i(M~(a))` for all `i` and the given twists, computed in parallel.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyEntry {
    pub i: usize,
    pub twist: Multidegree,
    pub dim: usize,
}

impl CohomologyTable {
    pub fn compute(m: &Presentation, twists: &[Multidegree], opts: CohomologyOptions) -> Result<Self> {
        let lc = LocalCohomology::irrelevant(m, opts)?;
        // bracket-power resolutions are shared, build them before fanning out
        for t in 1..=opts.t_max.min(opts.window) {
            lc.resolution(t);
        }
        let rows: Vec<(Multidegree, Vec<usize>)> =
            twists.par_iter().map(|a| lc.sheaf_dims(a).map(|h| (a.clone(), h))).collect::<Result<_>>()?;
        let mut entries = BTreeMap::new();
        for (a, h) in rows {
            for (i, d) in h.into_iter().enumerate() {
                entries.insert((i, a.clone()), d);
            }
        }
        Ok(CohomologyTable { entries })
    }

    pub fn get(&self, i: usize, a: &Multidegree) -> Option<usize> {
        self.entries.get(&(i, a.clone())).copied()
    }

    pub fn to_entries(&self) -> Vec<CohomologyEntry> {
        self.entries.iter().map(|((i, a), d)| CohomologyEntry { i: *i, twist: a.clone(), dim: *d }).collect()
    }
}

/// `binom(m + n, n)` as a polynomial in `m`, valid for negative `m`.
pub fn binomial_poly(m: i64, n: usize) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 1..=n as i128 {
        num *= m as i128 + j;
        den *= j;
    }
    num / den
}

/// `P_M(d) = Σ_i (-1)^i Σ_j Π_k binom(d_k - c_k + n_k, n_k)` over the Betti
/// degrees `c` of a free resolution of `M`.
pub fn hilbert_polynomial_from_betti(betti: &BettiTally, ring: &MultigradedRing, d: &Multidegree) -> i64 {
    let dims = ring.factor_dims();
    let mut total: i128 = 0;
    for (i, c, n) in betti.iter() {
        let mut term: i128 = 1;
        for (k, &nk) in dims.iter().enumerate() {
            term *= binomial_poly((d.get(k) - c.get(k)) as i64, nk);
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        total += sign * term * n as i128;
    }
    total as i64
}

pub fn hilbert_polynomial_eval(m: &Presentation, d: &Multidegree) -> i64 {
    hilbert_polynomial_from_betti(&free_resolution(m).betti(), m.ring(), d)
}
