//! Sparse polynomials over a [`MultigradedRing`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::multidegree::Multidegree;
use crate::ring::MultigradedRing;

/// A polynomial stored as its nonzero terms in decreasing ring order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: MultigradedRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: MultigradedRing) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms: sorts, combines, drops zeros.
    pub fn from_terms(ring: MultigradedRing, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field();
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring, terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: MultigradedRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(Monomial, Coeff)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    /// The common multidegree of all terms, or `None` for zero or a
    /// non-homogeneous polynomial.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let first = self.ring.multidegree(&self.terms.first()?.0);
        self.terms[1..].iter().all(|t| self.ring.multidegree(&t.0) == first).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, 1, &Monomial::one()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let neg_one = self.ring.field().neg(1);
        Ok(self.add_scaled(other, neg_one, &Monomial::one()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                prod.push((m.try_mul(n)?, field.mul(*c, *d)));
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), prod))
    }

    /// `self + c * m * other`, by a single merge pass.
    pub fn add_scaled(&self, other: &Polynomial, c: Coeff, m: &Monomial) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(n, d)| (n.mul(m), field.mul(*d, c))).filter(|t| t.1 != 0).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(*a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = field.add(x.1, y.1);
                        if s != 0 {
                            out.push((x.0, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => out.push(*a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let field = self.ring.field();
        if c.is_multiple_of(field.characteristic()) {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self.terms.iter().map(|&(m, d)| (m, field.mul(c, d))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|&(n, d)| (n.mul(m), d)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field().inv_nz(c)),
        }
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let field = self.ring.field();
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = field.mul(v, field.pow(x, e as u64));
                }
            }
            acc = field.add(acc, v);
        }
        acc
    }

    /// Rewrites `self` into another ring whose variables are indexed by `var_map`.
    pub fn map_variables(&self, target: &MultigradedRing, var_map: &[usize]) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &v) in var_map.iter().enumerate() {
                e[v] += m.exponent(i);
            }
            terms.push((Monomial::from_exponents(&e)?, *c));
        }
        Ok(Polynomial::from_terms(target.clone(), terms))
    }

    /// Substitutes polynomials for the variables: `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let target =
            images.first().map(|p| p.ring.clone()).ok_or_else(|| AlgebraError::invalid("empty substitution"))?;
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::VariableCount { expected: self.ring.nvars(), got: images.len() });
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(self.ring.field().to_signed(*c));
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = t.checked_mul(&img.pow(e))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let c = field.to_signed(*c);
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k > 0 || sign == "-" {
                write!(f, "{sign}")?;
            }
            let mut factors = Vec::new();
            for v in 0..self.ring.nvars() {
                match m.exponent(v) {
                    0 => {}
                    1 => factors.push(self.ring.var_name(v).to_string()),
                    e => factors.push(format!("{}^{e}", self.ring.var_name(v))),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;
    use crate::field::PrimeField;

    fn ring(p: u32, dims: &[usize]) -> MultigradedRing {
        MultigradedRing::new(PrimeField::new(p).unwrap(), dims).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let s = ring(101, &[1, 1]);
        let f = &(&s.var(0) * &s.var(2)) + &s.constant(5);
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let s = ring(2, &[1]);
        let f = &s.var(0) + &s.var(1);
        let sq = f.pow(2);
        assert_eq!(sq, &s.var(0).pow(2) + &s.var(1).pow(2));
    }

    #[test]
    fn difference_of_squares() {
        let s = ring(101, &[1]);
        let (x0, x1) = (s.var(0), s.var(1));
        let prod = &(&x1 - &x0) * &(&x1 + &x0);
        assert_eq!(prod, &x1.pow(2) - &x0.pow(2));
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let s = ring(101, &[1]);
        let t = ring(101, &[1, 1]);
        assert_eq!(s.var(0).checked_add(&t.var(0)), Err(AlgebraError::RingMismatch));
        assert_eq!(s.var(0).checked_mul(&t.var(0)), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn homogeneity_is_tracked() {
        let s = ring(101, &[1, 1]);
        let f = &(&s.var(0) * &s.var(2)) - &(&s.var(1) * &s.var(3));
        assert_eq!(f.multidegree(), Some(deg![1, 1]));
        let g = &s.var(0) + &s.var(2);
        assert!(!g.is_homogeneous());
        let h = &f * &f;
        assert_eq!(h.multidegree(), Some(deg![2, 2]));
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let s = ring(32003, &[1, 1]);
        let f = &s.var(1) - &s.var(0).scale(4);
        assert_eq!(f.to_string(), "-4*x_(0,0)+x_(0,1)");
    }
}
