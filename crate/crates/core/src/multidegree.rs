use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// An element of Z^r, one entry per projective factor.
///
/// The derived `Ord` is lexicographic and only used for deterministic
/// container ordering; the mathematically relevant order is [`Multidegree::le`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i32>", into = "Vec<i32>")]
pub struct Multidegree(SmallVec<[i32; 4]>);

impl From<Vec<i32>> for Multidegree {
    fn from(v: Vec<i32>) -> Self {
        Multidegree(SmallVec::from_vec(v))
    }
}

impl From<&[i32]> for Multidegree {
    fn from(v: &[i32]) -> Self {
        Multidegree(SmallVec::from_slice(v))
    }
}

impl From<Multidegree> for Vec<i32> {
    fn from(d: Multidegree) -> Self {
        d.0.into_vec()
    }
}

impl Multidegree {
    pub fn zero(r: usize) -> Self {
        Multidegree(SmallVec::from_elem(0, r))
    }

    pub fn constant(r: usize, c: i32) -> Self {
        Multidegree(SmallVec::from_elem(c, r))
    }

    /// The unit vector e_i in Z^r.
    pub fn unit(r: usize, i: usize) -> Self {
        let mut d = Self::zero(r);
        d.0[i] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn meet(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        self.0.iter().copied()
    }

    /// True if `self <= d` for some `d` in `bounds`.
    pub fn below_any(&self, bounds: &[Multidegree]) -> bool {
        bounds.iter().any(|b| self.le(b))
    }

    /// All integer points of the box `[lo, hi]`, last coordinate fastest.
    pub fn box_points(lo: &Multidegree, hi: &Multidegree) -> Vec<Multidegree> {
        let r = lo.len();
        let mut out = Vec::new();
        if (0..r).any(|i| lo.0[i] > hi.0[i]) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            out.push(cur.clone());
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur.0[i] < hi.0[i] {
                    cur.0[i] += 1;
                    for j in i + 1..r {
                        cur.0[j] = lo.0[j];
                    }
                    break;
                }
            }
        }
    }

    /// Minimal elements of a set under the componentwise order, deduplicated and sorted.
    pub fn minimal_elements(set: &[Multidegree]) -> Vec<Multidegree> {
        let mut out: Vec<Multidegree> =
            set.iter().filter(|d| !set.iter().any(|e| e != *d && e.le(d))).cloned().collect();
        out.sort();
        out.dedup();
        out
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Add for Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: Multidegree) -> Multidegree {
        &self + &rhs
    }
}

impl Sub for Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: Multidegree) -> Multidegree {
        &self - &rhs
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Multidegree {
    type Err = crate::error::AlgebraError;

    /// Accepts `3,1` and `(3,1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Multidegree::from)
            .map_err(|_| crate::error::AlgebraError::invalid(format!("bad multidegree {s:?}")))
    }
}

/// Shorthand for building a multidegree from a literal list.
#[macro_export]
macro_rules! deg {
    ($($x:expr),* $(,)?) => {
        $crate::Multidegree::from(vec![$($x as i32),*])
    };
}
