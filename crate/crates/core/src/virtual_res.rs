//! Virtual resolutions: construction, verification and multigraded regularity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cohomology::{hilbert_polynomial_from_betti, CohomologyOptions, CohomologyTable};
use crate::complex::{bounded_schreyer_resolution, free_resolution, ChainComplex};
use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::linalg::DenseMatrix;
use crate::module::Matrix;
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;
use crate::submodule::Presentation;

/// Subcomplex of `c` on the summands generated in degrees below some bound.
///
/// Bounds are passed as `d + n`, nothing is added to them.
pub fn virtual_of_pair_complex(c: &ChainComplex, bounds: &[Multidegree]) -> Result<ChainComplex> {
    c.prune(bounds)
}

/// Virtual resolution of a pair computed directly with Schreyer syzygies
/// restricted to the bounds.
pub fn virtual_of_pair(m: &Presentation, bounds: &[Multidegree]) -> Result<ChainComplex> {
    bounded_schreyer_resolution(m, bounds)
}

/// Minimal free resolution of `S/(J ∩ B^a)`.
pub fn resolve_via_fat_point(j: &Ideal, a: &[i64]) -> Result<ChainComplex> {
    let fat = Ideal::fat_irrelevant(j.ring(), a)?;
    let i = j.intersect(&fat)?;
    Ok(free_resolution(&Presentation::quotient_ring(&i)))
}

/// Tries `a = (c, ..., c, 0)` for `c = 1..=max_c` until the fat point
/// resolution has length at most `|n|`.
pub fn fat_point_of_short_length(j: &Ideal, max_c: i64) -> Result<(Vec<i64>, ChainComplex)> {
    let ring = j.ring();
    let r = ring.num_factors();
    for c in 1..=max_c {
        let mut a = vec![c; r];
        a[r - 1] = 0;
        let res = resolve_via_fat_point(j, &a)?;
        if res.length() <= ring.projective_dim() {
            return Ok((a, res));
        }
    }
    Err(AlgebraError::RetriesExhausted(format!(
        "no fat point exponent up to {max_c} gave length <= {}",
        ring.projective_dim()
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Homology,
    Determinantal,
}

/// Per-index evidence behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Evidence {
    Homology {
        index: usize,
        homology_is_zero: bool,
        saturated_annihilator_is_unit: bool,
    },
    Determinantal {
        index: usize,
        expected_rank: i64,
        rank: usize,
        rank_ok: bool,
        /// `None` stands for infinite codimension (the unit ideal).
        codim: Option<usize>,
        required_depth: usize,
        depth_ok: bool,
    },
}

impl Evidence {
    pub fn passes(&self) -> bool {
        match self {
            Evidence::Homology { saturated_annihilator_is_unit, .. } => *saturated_annihilator_is_unit,
            Evidence::Determinantal { rank_ok, depth_ok, .. } => *rank_ok && *depth_ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualityReport {
    pub verdict: bool,
    pub strategy: Strategy,
    pub evidence: Vec<Evidence>,
    /// Whether `H_0` agrees with the expected module up to saturation, when
    /// one was supplied. Not part of the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0_matches_expected: Option<bool>,
}

fn saturate_by(i: &Ideal, b: &Ideal) -> Result<Ideal> {
    if b.same_ideal(&Ideal::irrelevant(b.ring())) {
        return Ok(i.saturate_irrelevant());
    }
    i.saturate(b)
}

/// Decides whether `c` is a virtual resolution with respect to `b`.
pub fn is_virtual(b: &Ideal, c: &ChainComplex, strategy: Strategy) -> Result<VirtualityReport> {
    is_virtual_with(b, c, strategy, None)
}

/// As [`is_virtual`], optionally comparing `H_0 = coker φ_1` with `S/expected`
/// after saturation (only when `F_0` has rank one).
pub fn is_virtual_with(
    b: &Ideal,
    c: &ChainComplex,
    strategy: Strategy,
    expected: Option<&Ideal>,
) -> Result<VirtualityReport> {
    if b.ring() != c.ring() {
        return Err(AlgebraError::RingMismatch);
    }
    for i in 1..c.length() {
        if !c.differential(i).compose(c.differential(i + 1))?.is_zero() {
            return Err(AlgebraError::NotAComplex { index: i });
        }
    }
    let evidence = match strategy {
        Strategy::Homology => homology_evidence(b, c)?,
        Strategy::Determinantal => determinantal_evidence(b, c)?,
    };
    let h0_matches_expected = match expected {
        Some(e) if c.module(0).rank() == 1 => {
            let gens: Vec<Polynomial> = if c.length() >= 1 {
                c.differential(1).columns().iter().map(|col| col[0].clone()).collect()
            } else {
                vec![]
            };
            let h0 = Ideal::new(c.ring(), gens)?;
            Some(saturate_by(&h0, b)?.same_ideal(&saturate_by(e, b)?))
        }
        _ => None,
    };
    Ok(VirtualityReport { verdict: evidence.iter().all(Evidence::passes), strategy, evidence, h0_matches_expected })
}

fn homology_evidence(b: &Ideal, c: &ChainComplex) -> Result<Vec<Evidence>> {
    let mut out = Vec::new();
    for i in 1..=c.length() {
        let h = c.homology(i)?;
        if h.is_zero() {
            out.push(Evidence::Homology { index: i, homology_is_zero: true, saturated_annihilator_is_unit: true });
            continue;
        }
        let ann = h.annihilator()?;
        let unit = saturate_by(&ann, b)?.is_unit();
        out.push(Evidence::Homology { index: i, homology_is_zero: false, saturated_annihilator_is_unit: unit });
    }
    Ok(out)
}

/// Seed for the random evaluation points used in rank computations.
const RANK_SEED: u64 = 0x5eed_0f_4a4b;

fn evaluate(m: &Matrix, point: &[Coeff]) -> DenseMatrix {
    let rows = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.entry(i, j).evaluate(point)).collect()).collect();
    DenseMatrix::from_rows(m.ring().field(), m.ncols(), rows)
}

/// Rows and columns of a nonsingular maximal minor of a numeric matrix.
fn nonsingular_minor(a: &DenseMatrix) -> (Vec<usize>, Vec<usize>) {
    let cols = a.clone().rref();
    let f_rows: Vec<Vec<Coeff>> = cols.iter().map(|&j| (0..a.nrows()).map(|i| a.get(i, j)).collect()).collect();
    let mut t = DenseMatrix::from_rows(a.field(), a.nrows(), f_rows);
    let rows = t.rref();
    (rows, cols)
}

/// Rank over the fraction field: the maximum numeric rank at three random
/// points, certified by a nonzero symbolic minor of that size.
pub fn generic_rank(m: &Matrix) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let ring = m.ring();
    let p = ring.field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(RANK_SEED);
    let mut best: Option<DenseMatrix> = None;
    for _ in 0..3 {
        let point: Vec<Coeff> = (0..ring.nvars()).map(|_| rng.gen_range(0..p)).collect();
        let a = evaluate(m, &point);
        if best.as_ref().is_none_or(|b| a.rank() > b.rank()) {
            best = Some(a);
        }
    }
    let a = best.unwrap();
    let (rows, cols) = nonsingular_minor(&a);
    if rows.is_empty() {
        return 0;
    }
    let minor = m.submatrix(&rows, &cols);
    let det = determinant(minor.columns());
    assert!(!det.is_zero(), "a minor that is nonzero at a point is nonzero");
    rows.len()
}

/// Determinant of a square polynomial matrix given by columns.
pub fn determinant(cols: &[Vec<Polynomial>]) -> Polynomial {
    let n = cols.len();
    assert!(cols.iter().all(|c| c.len() == n), "square matrix");
    match n {
        0 => unreachable!("empty determinant"),
        1 => cols[0][0].clone(),
        2 => &(&cols[0][0] * &cols[1][1]) - &(&cols[1][0] * &cols[0][1]),
        _ => {
            let ring = cols[0][0].ring().clone();
            let mut acc = ring.zero();
            for j in 0..n {
                let e = &cols[j][0];
                if e.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = (0..n).filter(|&k| k != j).map(|k| cols[k][1..].to_vec()).collect();
                let term = e * &determinant(&sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Ideal of `k x k` minors; `I_0 = (1)`, and `(0)` when `k` exceeds the size.
pub fn minors_ideal(m: &Matrix, k: usize) -> Result<Ideal> {
    let ring = m.ring();
    if k == 0 {
        return Ok(Ideal::unit(ring));
    }
    if k > m.nrows() || k > m.ncols() {
        return Ok(Ideal::zero(ring));
    }
    let mut gens = Vec::new();
    for rows in subsets(m.nrows(), k) {
        for cols in subsets(m.ncols(), k) {
            let sub = m.submatrix(&rows, &cols);
            let d = determinant(sub.columns());
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::new(ring, gens)
}

fn determinantal_evidence(b: &Ideal, c: &ChainComplex) -> Result<Vec<Evidence>> {
    let len = c.length();
    // r_i = Σ_{k >= i} (-1)^{k-i} rank F_k
    let mut expected = vec![0i64; len + 2];
    for i in (1..=len).rev() {
        expected[i] = c.module(i).rank() as i64 - expected[i + 1];
    }
    let mut out = Vec::new();
    for i in 1..=len {
        let phi = c.differential(i);
        let r = expected[i];
        let rank = generic_rank(phi);
        let rank_ok = r >= 0 && rank as i64 == r;
        let (codim, depth_ok) = if r < 0 {
            (Some(0), false)
        } else {
            let minors = minors_ideal(phi, r as usize)?;
            let sat = saturate_by(&minors, b)?;
            let codim = sat.codimension();
            (codim, codim.is_none_or(|cd| cd >= i))
        };
        out.push(Evidence::Determinantal {
            index: i,
            expected_rank: r,
            rank,
            rank_ok,
            codim,
            required_depth: i,
            depth_ok,
        });
    }
    Ok(out)
}

/// Search settings for [`multigraded_regularity`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityOptions {
    pub cohomology: CohomologyOptions,
    /// Overrides the lower corner of the candidate box.
    pub lower: Option<Multidegree>,
    /// Overrides the upper corner (the vanishing ceiling).
    pub upper: Option<Multidegree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityResult {
    pub minimal_elements: Vec<Multidegree>,
    pub search_box: (Multidegree, Multidegree),
    pub certified_twist_checks: usize,
}

/// Minimal elements of the multigraded regularity of a B-saturated module
/// inside a finite search box.
///
/// `d` is regular when the Hilbert function agrees with the Hilbert
/// polynomial at `d` and `h^i(M~(a)) = 0` for `1 <= i <= |n|` and every `a`
/// in the box with `a_j >= d_j - i` for all `j`.
pub fn multigraded_regularity(m: &Presentation, opts: &RegularityOptions) -> Result<RegularityResult> {
    let ring = m.ring().clone();
    let r = ring.num_factors();
    let n = ring.dims_degree();
    let np = ring.projective_dim() as i32;
    let res = free_resolution(m);
    let betti = res.betti();
    let lower = match &opts.lower {
        Some(l) => l.clone(),
        None => {
            let mut l = Multidegree::zero(r);
            for d in res.module(0).degrees() {
                l = l.meet(d);
            }
            &l - &Multidegree::constant(r, 1)
        }
    };
    let upper = match &opts.upper {
        Some(u) => u.clone(),
        None => {
            let mut u: Option<Multidegree> = None;
            for (_, d, _) in betti.iter() {
                u = Some(u.map_or(d.clone(), |x| x.join(d)));
            }
            let u = u.unwrap_or_else(|| Multidegree::zero(r));
            &(&u + &n) + &Multidegree::constant(r, 1)
        }
    };
    if lower.len() != r || upper.len() != r || !lower.le(&upper) {
        return Err(AlgebraError::invalid("empty regularity search box"));
    }
    let twist_lo = &lower - &Multidegree::constant(r, np);
    let twists = Multidegree::box_points(&twist_lo, &upper);
    let table = CohomologyTable::compute(m, &twists, opts.cohomology)?;
    let mut checks = 0;
    let mut regular = Vec::new();
    for d in Multidegree::box_points(&lower, &upper) {
        let hf = m.graded_basis(&d).len() as i64;
        if hf != hilbert_polynomial_from_betti(&betti, &ring, &d) {
            continue;
        }
        let mut ok = true;
        'outer: for i in 1..=np {
            let lo = &d - &Multidegree::constant(r, i);
            for a in Multidegree::box_points(&lo, &upper) {
                checks += 1;
                if table.get(i as usize, &a).expect("twist inside the table") != 0 {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            regular.push(d);
        }
    }
    Ok(RegularityResult {
        minimal_elements: Multidegree::minimal_elements(&regular),
        search_box: (lower, upper),
        certified_twist_checks: checks,
    })
}
