//! Chain complexes of graded free modules and free resolutions.

use crate::betti::BettiTally;
use crate::error::{AlgebraError, Result};
use crate::groebner::schreyer::{schreyer_syzygies, sort_for_schreyer};
use crate::groebner::{GroebnerBasis, ModuleElement, ModuleOrder};
use crate::module::{FreeModule, Matrix};
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;
use crate::submodule::{kernel, Presentation, SubquotientModule};

/// `F_0 <- F_1 <- ... <- F_L` with `maps[i - 1] = φ_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    modules: Vec<FreeModule>,
    maps: Vec<Matrix>,
}

impl ChainComplex {
    /// Checks that consecutive maps compose to zero.
    pub fn new(modules: Vec<FreeModule>, maps: Vec<Matrix>) -> Result<Self> {
        let c = Self::from_parts(modules, maps)?;
        for i in 1..c.maps.len() {
            if !c.maps[i - 1].compose(&c.maps[i])?.is_zero() {
                return Err(AlgebraError::NotAComplex { index: i });
            }
        }
        Ok(c)
    }

    fn from_parts(modules: Vec<FreeModule>, maps: Vec<Matrix>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(AlgebraError::invalid("a complex needs one more module than maps"));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.source() != &modules[k + 1] || m.target() != &modules[k] {
                return Err(AlgebraError::invalid(format!("differential {} has the wrong shape", k + 1)));
            }
        }
        Ok(ChainComplex { modules, maps })
    }

    /// The complex `F_0` concentrated in degree zero.
    pub fn free(module: FreeModule) -> Self {
        ChainComplex { modules: vec![module], maps: Vec::new() }
    }

    pub fn ring(&self) -> &MultigradedRing {
        self.modules[0].ring()
    }

    /// Index of the last module kept (zero modules at the end are dropped).
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> &FreeModule {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `φ_i : F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &Matrix {
        &self.maps[i - 1]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::rank).collect()
    }

    pub fn betti(&self) -> BettiTally {
        let mut t = BettiTally::new();
        for (i, m) in self.modules.iter().enumerate() {
            for d in m.degrees() {
                t.add(i, d.clone(), 1);
            }
        }
        t
    }

    /// Exact check of `φ_i ∘ φ_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (1..self.maps.len()).all(|i| self.maps[i - 1].compose(&self.maps[i]).is_ok_and(|m| m.is_zero()))
    }

    fn trim(mut self) -> Self {
        while self.modules.len() > 1 && self.modules.last().unwrap().is_zero() {
            self.modules.pop();
            self.maps.pop();
        }
        self
    }

    /// The subcomplex of summands generated in degrees below some bound.
    pub fn prune(&self, bounds: &[Multidegree]) -> Result<ChainComplex> {
        if bounds.is_empty() {
            return Err(AlgebraError::invalid("empty list of bounds"));
        }
        let keep: Vec<Vec<usize>> =
            self.modules.iter().map(|m| (0..m.rank()).filter(|&j| m.degree(j).below_any(bounds)).collect()).collect();
        let modules = self.modules.iter().zip(&keep).map(|(m, k)| m.select(k)).collect();
        let maps = self.maps.iter().enumerate().map(|(k, m)| m.submatrix(&keep[k], &keep[k + 1])).collect();
        Ok(ChainComplex::from_parts(modules, maps)?.trim())
    }

    /// Cancels unit entries until every differential has entries in the
    /// maximal homogeneous ideal. The result is homotopy equivalent.
    pub fn minimalize(&self) -> ChainComplex {
        let mut modules = self.modules.clone();
        let mut cols: Vec<Vec<Vec<Polynomial>>> = self.maps.iter().map(|m| m.columns().to_vec()).collect();
        let ring = self.ring().clone();
        let field = ring.field();
        let mut k = 0;
        while k < cols.len() {
            let pivot = cols[k]
                .iter()
                .enumerate()
                .find_map(|(c, col)| col.iter().position(Polynomial::is_unit).map(|r| (r, c)));
            let Some((r, c)) = pivot else {
                k += 1;
                continue;
            };
            let u = cols[k][c][r].constant_value().unwrap();
            let uinv = field.inv_nz(u);
            let pivot_col = cols[k][c].clone();
            for j in 0..cols[k].len() {
                if j == c || cols[k][j][r].is_zero() {
                    continue;
                }
                let factor = cols[k][j][r].scale(uinv);
                let col = &mut cols[k][j];
                for (i, e) in col.iter_mut().enumerate() {
                    if !pivot_col[i].is_zero() {
                        *e = &*e - &(&factor * &pivot_col[i]);
                    }
                }
            }
            cols[k].remove(c);
            for col in cols[k].iter_mut() {
                col.remove(r);
            }
            if k > 0 {
                cols[k - 1].remove(r);
            }
            if k + 1 < cols.len() {
                for col in cols[k + 1].iter_mut() {
                    col.remove(c);
                }
            }
            let keep_r: Vec<usize> = (0..modules[k].rank()).filter(|&i| i != r).collect();
            let keep_c: Vec<usize> = (0..modules[k + 1].rank()).filter(|&i| i != c).collect();
            modules[k] = modules[k].select(&keep_r);
            modules[k + 1] = modules[k + 1].select(&keep_c);
            // neighbouring maps only lost a row or column, so new units can
            // only appear here
        }
        let maps = cols
            .into_iter()
            .enumerate()
            .map(|(k, c)| Matrix::new_unchecked(modules[k].clone(), modules[k + 1].clone(), c))
            .collect();
        ChainComplex { modules, maps }.trim()
    }

    /// `H_i = ker φ_i / im φ_{i+1}` as a subquotient of `F_i`.
    pub fn homology(&self, i: usize) -> Result<SubquotientModule> {
        if i > self.length() {
            return Err(AlgebraError::invalid(format!("homological index {i} beyond the length")));
        }
        let f = self.modules[i].clone();
        let k = if i == 0 { Matrix::identity(f.clone()) } else { kernel(&self.maps[i - 1]) };
        let im = if i < self.maps.len() {
            self.maps[i].clone()
        } else {
            Matrix::zero_map(f.clone(), FreeModule::zero(f.ring().clone()))
        };
        SubquotientModule::new(k, im)
    }

    /// `S^1 <-- S^3 <-- S^2 <-- 0` style rank summary.
    pub fn summary(&self) -> String {
        let ranks: Vec<String> = self.ranks().iter().map(|r| format!("S^{r}")).collect();
        format!("{} <-- 0", ranks.join(" <-- "))
    }
}

/// Gröbner basis of the relations of a presentation, truncated when bounded.
fn first_step(p: &Presentation, bounds: Option<&[Multidegree]>) -> GroebnerBasis {
    let ring = p.ring();
    let order = ModuleOrder::term_over_position(ring.order().clone());
    let elems = p.matrix().columns().iter().map(|c| ModuleElement::from_column(c, &order, ring.field())).collect();
    let gb = match bounds {
        None => GroebnerBasis::compute(p.target(), &order, elems),
        Some(b) => GroebnerBasis::compute_truncated(p.target(), &order, elems, b),
    };
    sort_for_schreyer(&gb)
}

/// Iterated Schreyer syzygies, not minimalized.
pub fn schreyer_resolution(p: &Presentation, bounds: Option<&[Multidegree]>) -> ChainComplex {
    let ring = p.ring();
    let mut modules = vec![p.target().clone()];
    let mut maps = Vec::new();
    let mut gb = first_step(p, bounds);
    while !gb.is_empty() {
        let target = gb.module().clone();
        let degrees: Vec<Multidegree> = gb.elements().iter().map(|e| e.lead_degree(&target).unwrap()).collect();
        let source = FreeModule::new(ring.clone(), degrees).expect("lead degrees");
        let cols = gb.columns();
        maps.push(Matrix::new_unchecked(target, source.clone(), cols));
        modules.push(source);
        let step = schreyer_syzygies(&gb, bounds);
        gb = sort_for_schreyer(&step.basis);
    }
    ChainComplex { modules, maps }
}

/// Minimal free resolution of a presentation.
pub fn free_resolution(p: &Presentation) -> ChainComplex {
    schreyer_resolution(p, None).minimalize()
}

/// Resolution restricted to generators below the bounds at every step, then
/// minimalized. Isomorphic to the pruned minimal resolution.
pub fn bounded_schreyer_resolution(p: &Presentation, bounds: &[Multidegree]) -> Result<ChainComplex> {
    if bounds.is_empty() {
        return Err(AlgebraError::invalid("empty list of bounds"));
    }
    schreyer_resolution(p, Some(bounds)).prune(bounds).map(|c| c.minimalize())
}
