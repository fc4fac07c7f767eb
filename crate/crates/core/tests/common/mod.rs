//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! The oracles here avoid the crate's Gröbner and linear algebra code: ranks
//! are plain Gaussian elimination over `u64`, division is the textbook
//! multivariate algorithm, and cohomology of line bundles is Bott's formula.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::{Command, Output};

use vres::module::Matrix;
use vres::monomial::Monomial;
use vres::poly::Polynomial;
use vres::{Ideal, Multidegree, MultigradedRing, PrimeField};

pub fn ring(p: u32, dims: &[usize]) -> MultigradedRing {
    MultigradedRing::new(PrimeField::new(p).unwrap(), dims).unwrap()
}

pub fn p1p1() -> MultigradedRing {
    ring(32003, &[1, 1])
}

pub fn d(v: &[i32]) -> Multidegree {
    Multidegree::from(v.to_vec())
}

/// Points `([1:a],[1:b])` for the given pairs, as a saturated ideal.
pub fn points_p1p1(s: &MultigradedRing, pts: &[(i64, i64)]) -> Ideal {
    let ideals: Vec<Ideal> = pts
        .iter()
        .map(|(a, b)| Ideal::parse(s, &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)")]).unwrap())
        .collect();
    Ideal::intersect_all(s, &ideals).unwrap().saturate_irrelevant()
}

/// Points of P1 x P2 given by affine coordinates `([1:a],[1:b:c])`.
pub fn points_p1p2(s: &MultigradedRing, pts: &[(i64, i64, i64)]) -> Ideal {
    let ideals: Vec<Ideal> = pts
        .iter()
        .map(|(a, b, c)| {
            Ideal::parse(
                s,
                &[&format!("x_(0,1)-{a}*x_(0,0)"), &format!("x_(1,1)-{b}*x_(1,0)"), &format!("x_(1,2)-{c}*x_(1,0)")],
            )
            .unwrap()
        })
        .collect();
    Ideal::intersect_all(s, &ideals).unwrap().saturate_irrelevant()
}

/// The three points `([1:1],[1:4]), ([1:2],[1:5]), ([1:3],[1:6])`.
pub fn three_points() -> Ideal {
    points_p1p1(&p1p1(), &[(1, 4), (2, 5), (3, 6)])
}

pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..ncols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// `dim` of the degree-`d` part of the column span of `m`, by expanding every
/// monomial multiple of every column.
pub fn graded_span_dim(m: &Matrix, deg: &Multidegree) -> usize {
    let s = m.ring();
    let p = s.field().characteristic() as u64;
    let target = m.target();
    let mut index = std::collections::HashMap::new();
    for i in 0..target.rank() {
        for mon in s.monomials_of_degree(&(deg - target.degree(i))) {
            let n = index.len();
            index.insert((mon, i), n);
        }
    }
    let mut rows = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        for q in s.monomials_of_degree(&(deg - m.degree_of_column(j))) {
            let mut row = vec![0u64; index.len()];
            for (i, f) in col.iter().enumerate() {
                for (mon, c) in f.terms() {
                    row[index[&(mon.mul(&q), i)]] = *c as u64;
                }
            }
            rows.push(row);
        }
    }
    if index.is_empty() {
        return 0;
    }
    rank_mod_p(rows, p)
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h^i(P^n, O(c))`.
pub fn bott(n: usize, c: i64, i: usize) -> i64 {
    let n64 = n as i64;
    if i == 0 && c >= 0 {
        binom(c + n64, n64)
    } else if i == n && c < -n64 {
        binom(-c - 1, n64)
    } else {
        0
    }
}

/// `h^i(P^n1 x ... x P^nr, O(a))` by Künneth.
pub fn kunneth(dims: &[usize], a: &[i64], i: usize) -> i64 {
    fn go(dims: &[usize], a: &[i64], i: usize) -> i64 {
        match dims.split_first() {
            None => i64::from(i == 0),
            Some((&n, rest)) => (0..=i.min(n)).map(|p| bott(n, a[0], p) * go(rest, &a[1..], i - p)).sum(),
        }
    }
    go(dims, a, i)
}

/// `dim S_a` for the Cox ring of `P^dims`.
pub fn monomial_count(dims: &[usize], a: &Multidegree) -> i64 {
    dims.iter().zip(a.iter()).map(|(&n, c)| if c < 0 { 0 } else { binom(c as i64 + n as i64, n as i64) }).product()
}

/// Remainder of the textbook division of `f` by `gs` in the ring's order.
pub fn divide(f: &Polynomial, gs: &[Polynomial]) -> Polynomial {
    let s = f.ring();
    let order = s.order();
    let field = s.field();
    let mut p = f.clone();
    let mut rem = s.zero();
    while let Some((lm, lc)) = p.leading_term() {
        let hit = gs.iter().filter(|g| !g.is_zero()).find(|g| g.leading_monomial().unwrap().divides(&lm));
        match hit {
            Some(g) => {
                let (gm, gc) = g.leading_term().unwrap();
                let q = gm.quotient_of(&lm).unwrap();
                let c = field.div(lc, gc).unwrap();
                p = p.add_scaled(g, field.neg(c), &q);
            }
            None => {
                let t = s.monomial(lm, lc);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
        debug_assert!(p.leading_monomial().is_none_or(|m| order.cmp(&m, &lm) == Ordering::Less));
    }
    rem
}

/// `S(f, g)` computed from leading terms.
pub fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(&gm);
    let a = f.mul_monomial(&fm.quotient_of(&l).unwrap()).scale(field.inv(fc).unwrap());
    let b = g.mul_monomial(&gm.quotient_of(&l).unwrap()).scale(field.inv(gc).unwrap());
    &a - &b
}

/// Largest set of variables containing the support of no generator.
pub fn brute_force_dim(nvars: usize, gens: &[Monomial]) -> usize {
    let supports: Vec<u32> = gens.iter().map(Monomial::support_mask).collect();
    (0u32..1 << nvars).filter(|set| supports.iter().all(|s| s & !set != 0)).map(u32::count_ones).max().unwrap_or(0)
        as usize
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn vres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vres")).args(args).current_dir(crate_dir()).output().unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Collapses runs of whitespace so tables compare modulo alignment.
pub fn squeeze(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Homogeneous polynomial of degree `deg` with coefficients taken in order
/// from `coeffs` over the monomials of that degree (missing ones are zero).
pub fn poly_from(s: &MultigradedRing, deg: &Multidegree, coeffs: &[u32]) -> Polynomial {
    let terms = s
        .monomials_of_degree(deg)
        .into_iter()
        .zip(coeffs)
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m, c as vres::Coeff))
        .collect();
    Polynomial::from_terms(s.clone(), terms)
}

pub type GenShape = Vec<((i32, i32), Vec<u32>)>;

/// Up to `max_gens` generators on P1 x P1 of bidegree at most `max` with
/// total degree at most `max_total`.
pub fn arb_gens(max_gens: usize, max: i32, max_total: i32) -> impl proptest::strategy::Strategy<Value = GenShape> {
    use proptest::prelude::*;
    let one = ((0..=max, 0..=max), proptest::collection::vec(0u32..4, 16))
        .prop_filter("positive degree", move |((a, b), _)| a + b > 0 && a + b <= max_total);
    proptest::collection::vec(one, 1..=max_gens)
}

/// Generators with zero polynomials dropped; an empty list becomes `(x_(0,0))`.
pub fn ideal_from(s: &MultigradedRing, shape: &GenShape) -> Ideal {
    let mut gens: Vec<Polynomial> =
        shape.iter().map(|((a, b), c)| poly_from(s, &d(&[*a, *b]), c)).filter(|f| !f.is_zero()).collect();
    if gens.is_empty() {
        gens.push(s.var(0));
    }
    Ideal::new(s, gens).unwrap()
}

/// Distinct points of P1 x P1 in affine coordinates.
pub fn arb_points(n: std::ops::RangeInclusive<usize>) -> impl proptest::strategy::Strategy<Value = Vec<(i64, i64)>> {
    use proptest::prelude::*;
    proptest::collection::btree_set((0i64..40, 0i64..40), n).prop_map(|s| s.into_iter().collect())
}

/// `φ_2` replaced by `cols` over a source with the given degrees.
fn with_phi2(c: &vres::ChainComplex, degrees: Vec<Multidegree>, cols: Vec<Vec<Polynomial>>) -> vres::ChainComplex {
    let s = c.ring().clone();
    let f2 = vres::FreeModule::new(s, degrees).unwrap();
    let phi2 = Matrix::new(c.module(1).clone(), f2.clone(), cols).unwrap();
    let mut modules = c.modules()[..2].to_vec();
    modules.push(f2);
    vres::ChainComplex::new(modules, vec![c.differential(1).clone(), phi2]).unwrap()
}

/// Complexes obtained from a length two complex with `rank F_2 >= 2` whose
/// homology is no longer supported on the irrelevant locus.
pub fn corruptions(c: &vres::ChainComplex) -> Vec<(&'static str, vres::ChainComplex)> {
    assert!(c.length() == 2 && c.module(2).rank() >= 2);
    let s = c.ring().clone();
    let degs = c.module(2).degrees().to_vec();
    let cols = c.differential(2).columns().to_vec();
    let r = s.num_factors();
    let mut out = Vec::new();
    for (name, j) in [("zero column 0", 0), ("zero column 1", 1)] {
        let mut cs = cols.clone();
        cs[j] = vec![s.zero(); cs[j].len()];
        out.push((name, with_phi2(c, degs.clone(), cs)));
    }
    let last = s.block(r - 1).start;
    for (name, j, v, f) in [("x_(0,0) times column 0", 0, 0, 0), ("last factor times column 1", 1, last + 1, r - 1)] {
        let mut cs = cols.clone();
        let x = s.var(v);
        cs[j] = cs[j].iter().map(|p| p * &x).collect();
        let mut ds = degs.clone();
        ds[j] = &ds[j] + &Multidegree::unit(r, f);
        out.push((name, with_phi2(c, ds, cs)));
    }
    let keep: Vec<usize> = (1..degs.len()).collect();
    out.push((
        "drop column 0",
        with_phi2(c, keep.iter().map(|&k| degs[k].clone()).collect(), keep.iter().map(|&k| cols[k].clone()).collect()),
    ));
    out
}
