//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// Largest number of ring variables supported by the fixed-width exponent vector.
pub const MAX_VARS: usize = 14;

/// A monomial as a fixed-width exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    #[inline]
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| AlgebraError::ExponentOverflow)?;
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Sum of the exponents of variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].checked_add(other.exps[i]).ok_or(AlgebraError::ExponentOverflow)?;
        }
        m.deg += other.deg;
        Ok(m)
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut overflow = false;
        for i in 0..MAX_VARS {
            let (s, o) = m.exps[i].overflowing_add(other.exps[i]);
            m.exps[i] = s;
            overflow |= o;
        }
        assert!(!overflow, "exponent overflow");
        m.deg += other.deg;
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut acc = Monomial::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        let mut deg = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        let mut deg = 0;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask with bit `i` set when variable `i` occurs.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Quick divisibility filter: `a | b` implies `a.divmask() & !b.divmask() == 0`.
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            let bits = match e {
                0 => 0u64,
                1 => 0b001,
                2..=3 => 0b011,
                _ => 0b111,
            };
            mask |= bits << (3 * i);
        }
        mask
    }

    /// Largest `k` with `var(v)^k` dividing `self`.
    pub fn exponent_of(&self, v: usize) -> u32 {
        self.exps[v] as u32
    }

    /// `self / var(v)^k`; `k` must not exceed the exponent of `v`.
    pub fn strip_variable_by(&self, v: usize, k: u32) -> Monomial {
        let mut m = *self;
        assert!(m.exps[v] as u32 >= k, "variable power does not divide");
        m.deg -= k;
        m.exps[v] -= k as u16;
        m
    }

    /// Lexicographic comparison with variable 0 largest.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "m{:?}", &self.exps[..last])
    }
}

/// A global monomial order: an optional elimination block compared first by
/// its partial degree, then total degree, then reverse lexicographic
/// tie-breaking along a variable permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    elim: Vec<usize>,
    // variables in the order they are inspected by the reverse-lex tie-break:
    // the "last" variable first
    scan: Vec<usize>,
}

impl MonomialOrder {
    /// Degree reverse lexicographic order with `x_0 > x_1 > ... > x_{n-1}`.
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { nvars, elim: Vec::new(), scan: (0..nvars).rev().collect() }
    }

    /// Grevlex in which variable `v` is moved to the end, i.e. is the smallest.
    pub fn grevlex_with_last(nvars: usize, v: usize) -> Self {
        let mut scan = vec![v];
        scan.extend((0..nvars).rev().filter(|&w| w != v));
        MonomialOrder { nvars, elim: Vec::new(), scan }
    }

    /// Block elimination order: compare the degree in `block` first, then grevlex.
    pub fn elimination(nvars: usize, block: &[usize]) -> Self {
        let mut elim = block.to_vec();
        elim.sort_unstable();
        elim.dedup();
        MonomialOrder { nvars, elim, scan: (0..nvars).rev().collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eliminated(&self) -> &[usize] {
        &self.elim
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if !self.elim.is_empty() {
            let da: u32 = self.elim.iter().map(|&v| a.exps[v] as u32).sum();
            let db: u32 = self.elim.iter().map(|&v| b.exps[v] as u32).sum();
            if da != db {
                return da.cmp(&db);
            }
        }
        if a.deg != b.deg {
            return a.deg.cmp(&b.deg);
        }
        for &v in &self.scan {
            let (ea, eb) = (a.exps[v], b.exps[v]);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}
