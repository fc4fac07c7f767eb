//! Curve ideals in the Cox ring of P1 x P2.
//!
//! Space curves are pushed through the coordinate projections
//! `[z0:z1:z2:z3] -> ([z0:z1], [z1:z2:z3])`; rational curves come from a pair of
//! binary forms of degrees `d` and `e`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::{Coeff, PrimeField};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{standard_name, MultigradedRing};

/// Fresh draws before `random_rational_curve` gives up.
pub const MAX_RETRIES: usize = 10;

/// Names accepted by [`sample_space_curve`].
pub const SAMPLE_CURVES: [&str; 3] = ["twisted-cubic", "elliptic-quartic", "line"];

/// `K[z_0..z_3]`, graded as the Cox ring of P3.
pub fn p3_ring(field: PrimeField) -> MultigradedRing {
    let names = (0..4).map(|i| format!("z_{i}")).collect();
    MultigradedRing::with_names(field, &[3], names).expect("four variables")
}

/// Cox ring of P1 x P2 with variables `x_(0,0), x_(0,1), x_(1,0), x_(1,1), x_(1,2)`.
pub fn p1p2_ring(field: PrimeField) -> MultigradedRing {
    MultigradedRing::new(field, &[1, 2]).expect("five variables")
}

pub fn sample_space_curve(name: &str, field: PrimeField) -> Result<Ideal> {
    let r = p3_ring(field);
    let gens: &[&str] = match name {
        "twisted-cubic" => &["z_0*z_2-z_1^2", "z_1*z_3-z_2^2", "z_0*z_3-z_1*z_2"],
        "elliptic-quartic" => &["z_0^2+z_1^2+z_2^2+z_3^2", "z_0*z_1-z_2*z_3"],
        "line" => &["z_2", "z_3"],
        _ => {
            return Err(AlgebraError::invalid(format!(
                "unknown sample curve {name:?}; known: {}",
                SAMPLE_CURVES.join(", ")
            )))
        }
    };
    Ideal::parse(&r, gens)
}

/// 2x2 minors of the matrix with rows `top` and `bottom`.
fn minors(top: &[Polynomial], bottom: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            out.push(top[i].checked_mul(&bottom[j])?.checked_sub(&top[j].checked_mul(&bottom[i])?)?);
        }
    }
    Ok(out)
}

/// Ring `A x P1 x P2` with the variables of `a` first; returns the ring and
/// the indices of the five `x` variables.
fn graph_ring(a: &MultigradedRing) -> Result<(MultigradedRing, Vec<usize>)> {
    let mut dims = a.factor_dims().to_vec();
    dims.extend([1, 2]);
    let mut names = a.names().to_vec();
    names.extend([(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)].map(|(i, j)| standard_name(i, j)));
    let n = a.nvars();
    Ok((MultigradedRing::with_names(a.field(), &dims, names)?, (n..n + 5).collect()))
}

/// Image of the graph ideal `g` (in `A x P1 x P2`) after saturating away `base`
/// and eliminating the variables of `A`.
fn image_in_p1p2(g: Ideal, base: &[Ideal], eliminate: usize, field: PrimeField) -> Result<Ideal> {
    let g = g.saturate_product(base)?;
    let elim = g.eliminate(&(0..eliminate).collect::<Vec<_>>())?;
    let target = p1p2_ring(field);
    let mut var_map = vec![0; elim.ring().nvars()];
    for (k, v) in (eliminate..eliminate + 5).enumerate() {
        var_map[v] = k;
    }
    let j = elim.map_to(&target, &var_map)?;
    Ok(j.saturate_irrelevant().normalized())
}

/// Whether `V(I + J)` is empty in P3.
fn misses(i: &Ideal, j: &Ideal) -> bool {
    i.sum(j).saturate_irrelevant().is_unit()
}

/// Image of a space curve under the projections `[z0:z1]` and `[z1:z2:z3]`.
pub fn curve_from_p3_to_p1p2(i: &Ideal, preserve_degree: bool) -> Result<Ideal> {
    let r = i.ring();
    if r.factor_dims() != [3] {
        return Err(AlgebraError::invalid("expected an ideal of K[z_0..z_3]"));
    }
    if i.krull_dimension() != 2 {
        return Err(AlgebraError::invalid(format!("not a curve: dim S/I = {}, expected 2", i.krull_dimension())));
    }
    let z = |k: usize| r.var(k);
    let base1 = Ideal::new(r, vec![z(0), z(1)])?;
    let base2 = Ideal::new(r, vec![z(1), z(2), z(3)])?;
    if preserve_degree && !(misses(i, &base1) && misses(i, &base2)) {
        return Err(AlgebraError::BaseLocus);
    }

    let (t, xs) = graph_ring(r)?;
    let emb: Vec<usize> = (0..4).collect();
    let x = |k: usize| t.var(xs[k]);
    let tz = |k: usize| t.var(k);
    let mut gens = i.map_to(&t, &emb)?.gens().to_vec();
    gens.extend(minors(&[x(0), x(1)], &[tz(0), tz(1)])?);
    gens.extend(minors(&[x(2), x(3), x(4)], &[tz(1), tz(2), tz(3)])?);
    let g = Ideal::new(&t, gens)?;
    let base = [base1.map_to(&t, &emb)?, base2.map_to(&t, &emb)?];
    image_in_p1p2(g, &base, 4, r.field())
}

/// Dense binary forms of degree `d`, coefficients of `t0^k t1^(d-k)` for `k = 0..=d`.
fn random_form(rng: &mut ChaCha8Rng, p: Coeff, d: u32) -> Vec<Coeff> {
    (0..=d).map(|_| rng.gen_range(0..p)).collect()
}

fn monomial_form(d: u32, k: u32) -> Vec<Coeff> {
    let mut c = vec![0; d as usize + 1];
    c[k as usize] = 1;
    c
}

/// Trims trailing zeros so `last()` is the leading coefficient.
fn trim(mut a: Vec<Coeff>) -> Vec<Coeff> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(field: PrimeField, mut a: Vec<Coeff>, b: &[Coeff]) -> Vec<Coeff> {
    let lb = field.inv_nz(*b.last().unwrap());
    while a.len() >= b.len() {
        let q = field.mul(*a.last().unwrap(), lb);
        let shift = a.len() - b.len();
        for (k, &bk) in b.iter().enumerate() {
            a[shift + k] = field.sub(a[shift + k], field.mul(q, bk));
        }
        a = trim(a);
    }
    a
}

fn poly_gcd(field: PrimeField, a: Vec<Coeff>, b: Vec<Coeff>) -> Vec<Coeff> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(field, a, &b);
        a = b;
        b = r;
    }
    a
}

/// No common factor of positive degree among the binary forms.
pub(crate) fn coprime_forms(field: PrimeField, forms: &[Vec<Coeff>]) -> bool {
    if forms.iter().all(|f| f.iter().all(|&c| c == 0)) {
        return false;
    }
    // t1 divides a form exactly when its t0^deg coefficient vanishes
    if forms.iter().all(|f| *f.last().unwrap() == 0) {
        return false;
    }
    let g = forms.iter().fold(Vec::new(), |acc, f| poly_gcd(field, acc, f.clone()));
    g.len() <= 1
}

/// Image of `[t0:t1] -> ([f0:f1], [g0:g1:g2])` in P1 x P2.
fn rational_curve_image(field: PrimeField, f: &[Vec<Coeff>], g: &[Vec<Coeff>]) -> Result<Ideal> {
    let p1 = MultigradedRing::with_names(field, &[1], vec!["t_0".into(), "t_1".into()])?;
    let (t, xs) = graph_ring(&p1)?;
    let form = |c: &Vec<Coeff>| -> Result<Polynomial> {
        let d = c.len() as u32 - 1;
        let mut terms = Vec::new();
        for (k, &a) in c.iter().enumerate() {
            if a != 0 {
                terms.push((Monomial::from_exponents(&[k as u32, d - k as u32])?, a));
            }
        }
        Ok(Polynomial::from_terms(t.clone(), terms))
    };
    let fs = f.iter().map(form).collect::<Result<Vec<_>>>()?;
    let gs = g.iter().map(form).collect::<Result<Vec<_>>>()?;
    let x = |k: usize| t.var(xs[k]);
    let mut gens = minors(&[x(0), x(1)], &fs)?;
    gens.extend(minors(&[x(2), x(3), x(4)], &gs)?);
    let graph = Ideal::new(&t, gens)?;
    image_in_p1p2(graph, &[Ideal::factor_ideal(&t, 0)], 2, field)
}

/// Image of a random map `P1 -> P1 x P2` of bidegree `(d, e)`; redraws when the
/// forms share a factor.
pub fn random_rational_curve(d: u32, e: u32, field: PrimeField, seed: u64) -> Result<Ideal> {
    if d < 1 || e < 1 {
        return Err(AlgebraError::invalid("degrees must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.characteristic() as Coeff;
    for _ in 0..MAX_RETRIES {
        let f: Vec<_> = (0..2).map(|_| random_form(&mut rng, p, d)).collect();
        let g: Vec<_> = (0..3).map(|_| random_form(&mut rng, p, e)).collect();
        if coprime_forms(field, &f) && coprime_forms(field, &g) {
            return rational_curve_image(field, &f, &g);
        }
    }
    Err(AlgebraError::RetriesExhausted(format!("no coprime forms of degrees ({d}, {e}) in {MAX_RETRIES} draws")))
}

/// The monomial map `(t0^d, t1^d), (t0^e, t0^k t1^(e-k), t1^e)` with `k` drawn from `1..e`.
pub fn random_monomial_curve(d: u32, e: u32, field: PrimeField, seed: u64) -> Result<Ideal> {
    if d < 1 || e < 1 {
        return Err(AlgebraError::invalid("degrees must be positive"));
    }
    if e == 1 {
        return Err(AlgebraError::invalid("e = 1 leaves no middle monomial"));
    }
    let k = ChaCha8Rng::seed_from_u64(seed).gen_range(1..e);
    monomial_curve(d, e, k, field)
}

/// Monomial curve with a fixed middle exponent.
pub fn monomial_curve(d: u32, e: u32, k: u32, field: PrimeField) -> Result<Ideal> {
    if k == 0 || k >= e {
        return Err(AlgebraError::invalid(format!("middle exponent {k} outside 1..{e}")));
    }
    let f = [monomial_form(d, d), monomial_form(d, 0)];
    let g = [monomial_form(e, e), monomial_form(e, k), monomial_form(e, 0)];
    rational_curve_image(field, &f, &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;

    fn gf101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn samples_are_curves() {
        for name in SAMPLE_CURVES {
            assert_eq!(sample_space_curve(name, gf101()).unwrap().krull_dimension(), 2, "{name}");
        }
        assert!(sample_space_curve("conic", gf101()).is_err());
    }

    #[test]
    fn twisted_cubic_image() {
        let i = sample_space_curve("twisted-cubic", gf101()).unwrap();
        let j = curve_from_p3_to_p1p2(&i, false).unwrap();
        let s = p1p2_ring(gf101());
        let expected = Ideal::parse(
            &s,
            &["x_(1,1)^2-x_(1,0)*x_(1,2)", "-x_(0,1)*x_(1,1)+x_(0,0)*x_(1,2)", "-x_(0,1)*x_(1,0)+x_(0,0)*x_(1,1)"],
        )
        .unwrap();
        assert!(j.same_ideal(&expected));
        assert_eq!(j.krull_dimension(), 3);
        // [0:0:0:1] lies on the curve and on z0 = z1 = 0
        assert!(matches!(curve_from_p3_to_p1p2(&i, true), Err(AlgebraError::BaseLocus)));
    }

    #[test]
    fn base_locus_and_non_curves() {
        let r = p3_ring(gf101());
        let inside = Ideal::parse(&r, &["z_0", "z_1"]).unwrap();
        assert!(matches!(curve_from_p3_to_p1p2(&inside, true), Err(AlgebraError::BaseLocus)));
        let point = Ideal::parse(&r, &["z_0", "z_1", "z_2"]).unwrap();
        assert!(curve_from_p3_to_p1p2(&point, false).is_err());
        let quartic = sample_space_curve("elliptic-quartic", gf101()).unwrap();
        let j = curve_from_p3_to_p1p2(&quartic, false).unwrap();
        assert_eq!(j.krull_dimension(), 3);
        assert!(j.saturate_irrelevant().same_ideal(&j));
    }

    #[test]
    fn coprimality() {
        let f = gf101();
        assert!(coprime_forms(f, &[vec![0, 1], vec![1, 0]]));
        // t0 * t1 and t0^2 share t0
        assert!(!coprime_forms(f, &[vec![0, 1, 0], vec![0, 0, 1]]));
        // t1^2 and t0 t1 share t1
        assert!(!coprime_forms(f, &[vec![1, 0, 0], vec![0, 1, 0]]));
        assert!(!coprime_forms(f, &[vec![0, 0], vec![0, 0]]));
        // (t0 + t1)(t0 + 2 t1) and (t0 + t1) t0
        assert!(!coprime_forms(f, &[vec![2, 3, 1], vec![0, 1, 1]]));
    }

    #[test]
    fn conic_from_monomials() {
        let j = monomial_curve(1, 2, 1, gf101()).unwrap();
        let s = j.ring().clone();
        assert!(j.contains(&Ideal::parse(&s, &["x_(1,1)^2-x_(1,0)*x_(1,2)"]).unwrap().gens()[0]));
        assert_eq!(j.krull_dimension(), 3);
        assert!(random_monomial_curve(2, 1, gf101(), 0).is_err());
        let c = random_monomial_curve(2, 3, gf101(), 7).unwrap();
        assert_eq!(c.krull_dimension(), 3);
        assert_eq!(c.gens(), random_monomial_curve(2, 3, gf101(), 7).unwrap().gens());
    }

    #[test]
    fn rational_one_one() {
        let j = random_rational_curve(1, 1, gf101(), 3).unwrap();
        assert_eq!(j.hilbert_function(&deg![1, 1]), 3);
        assert_eq!(j.krull_dimension(), 3);
        assert_eq!(j.gens(), random_rational_curve(1, 1, gf101(), 3).unwrap().gens());
    }
}
