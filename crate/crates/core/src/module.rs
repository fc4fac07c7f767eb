//! Graded free modules and homogeneous matrices between them.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::multidegree::Multidegree;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;

/// `F = ⊕_j S(-c_j)`, stored as the list of generator degrees `c_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: MultigradedRing,
    degrees: Vec<Multidegree>,
}

impl FreeModule {
    pub fn new(ring: MultigradedRing, degrees: Vec<Multidegree>) -> Result<Self> {
        let r = ring.num_factors();
        if let Some(d) = degrees.iter().find(|d| d.len() != r) {
            return Err(AlgebraError::invalid(format!("degree {d} has the wrong length")));
        }
        Ok(FreeModule { ring, degrees })
    }

    /// `S^rank` with all generators in degree zero.
    pub fn free(ring: MultigradedRing, rank: usize) -> Self {
        let r = ring.num_factors();
        FreeModule { ring, degrees: vec![Multidegree::zero(r); rank] }
    }

    pub fn zero(ring: MultigradedRing) -> Self {
        FreeModule { ring, degrees: Vec::new() }
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, j: usize) -> &Multidegree {
        &self.degrees[j]
    }

    pub fn degrees(&self) -> &[Multidegree] {
        &self.degrees
    }

    pub fn select(&self, keep: &[usize]) -> FreeModule {
        FreeModule { ring: self.ring.clone(), degrees: keep.iter().map(|&j| self.degrees[j].clone()).collect() }
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        FreeModule { ring: self.ring.clone(), degrees }
    }

    /// dim_K F_d.
    pub fn graded_dim(&self, d: &Multidegree) -> usize {
        self.degrees.iter().map(|c| self.ring.count_monomials(&(d - c))).sum()
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.degrees.iter().map(|d| format!("S{}", -d)).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// A homogeneous map `source -> target`, stored column by column.
///
/// Column `j` is homogeneous of degree `source.degree(j)`: entry `(i, j)` is
/// zero or of degree `source.degree(j) - target.degree(i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    target: FreeModule,
    source: FreeModule,
    cols: Vec<Vec<Polynomial>>,
}

impl Matrix {
    pub fn new(target: FreeModule, source: FreeModule, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        if target.ring != source.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if cols.len() != source.rank() {
            return Err(AlgebraError::RankMismatch { expected: source.rank(), got: cols.len() });
        }
        for (j, col) in cols.iter().enumerate() {
            if col.len() != target.rank() {
                return Err(AlgebraError::RankMismatch { expected: target.rank(), got: col.len() });
            }
            for (i, e) in col.iter().enumerate() {
                if e.ring() != &target.ring {
                    return Err(AlgebraError::RingMismatch);
                }
                if e.is_zero() {
                    continue;
                }
                let expected = source.degree(j) - target.degree(i);
                match e.multidegree() {
                    Some(d) if d == expected => {}
                    Some(d) => return Err(AlgebraError::DegreeMismatch { expected, got: d }),
                    None => return Err(AlgebraError::NotHomogeneous),
                }
            }
        }
        Ok(Matrix { target, source, cols })
    }

    pub(crate) fn new_unchecked(target: FreeModule, source: FreeModule, cols: Vec<Vec<Polynomial>>) -> Self {
        debug_assert!(Matrix::new(target.clone(), source.clone(), cols.clone()).is_ok());
        Matrix { target, source, cols }
    }

    /// Builds a matrix from homogeneous columns, reading each column's degree
    /// off its entries. Zero columns get degree `target.degree(0)`.
    pub fn from_columns(target: FreeModule, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = target.ring.num_factors();
        let mut degrees = Vec::with_capacity(cols.len());
        for col in &cols {
            let mut deg = None;
            for (i, e) in col.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let d = e.multidegree().ok_or(AlgebraError::NotHomogeneous)?;
                deg = Some(&d + target.degree(i));
                break;
            }
            degrees
                .push(deg.unwrap_or_else(|| target.degrees.first().cloned().unwrap_or_else(|| Multidegree::zero(r))));
        }
        let source = FreeModule::new(target.ring.clone(), degrees)?;
        Matrix::new(target, source, cols)
    }

    /// The 1 x n matrix of a list of homogeneous polynomials.
    pub fn row(ring: &MultigradedRing, entries: &[Polynomial]) -> Result<Self> {
        Matrix::from_columns(FreeModule::free(ring.clone(), 1), entries.iter().map(|f| vec![f.clone()]).collect())
    }

    pub fn zero_map(target: FreeModule, source: FreeModule) -> Self {
        let cols = vec![vec![target.ring.zero(); target.rank()]; source.rank()];
        Matrix { target, source, cols }
    }

    pub fn identity(module: FreeModule) -> Self {
        let n = module.rank();
        let ring = module.ring.clone();
        let cols = (0..n).map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect()).collect();
        Matrix { target: module.clone(), source: module, cols }
    }

    pub fn ring(&self) -> &MultigradedRing {
        &self.target.ring
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(Polynomial::is_zero))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        if other.target.degrees != self.source.degrees {
            return Err(AlgebraError::RankMismatch { expected: self.ncols(), got: other.nrows() });
        }
        let ring = self.ring().clone();
        let mut cols = Vec::with_capacity(other.ncols());
        for ocol in &other.cols {
            let mut col = vec![ring.zero(); self.nrows()];
            for (k, b) in ocol.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (i, a) in self.cols[k].iter().enumerate() {
                    if !a.is_zero() {
                        col[i] = &col[i] + &(a * b);
                    }
                }
            }
            cols.push(col);
        }
        Ok(Matrix { target: self.target.clone(), source: other.source.clone(), cols })
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let new_cols = cols.iter().map(|&j| rows.iter().map(|&i| self.cols[j][i].clone()).collect()).collect();
        Matrix { target: self.target.select(rows), source: self.source.select(cols), cols: new_cols }
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn concat(&self, other: &Matrix) -> Result<Matrix> {
        if self.target != other.target {
            return Err(AlgebraError::invalid("concatenated matrices need a common target"));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(Matrix { target: self.target.clone(), source: self.source.direct_sum(&other.source), cols })
    }

    pub fn degree_of_column(&self, j: usize) -> &Multidegree {
        self.source.degree(j)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols()).map(|j| self.cols[j][i].to_string()).collect();
            writeln!(f, "| {} |", row.join("  "))?;
        }
        Ok(())
    }
}
