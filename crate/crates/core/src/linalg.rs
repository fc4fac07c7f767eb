//! Dense linear algebra over GF(p).

use crate::field::{Coeff, PrimeField};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    nrows: usize,
    ncols: usize,
    data: Vec<Coeff>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, nrows: usize, ncols: usize) -> Self {
        DenseMatrix { field, nrows, ncols, data: vec![0; nrows * ncols] }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: Vec<Vec<Coeff>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        DenseMatrix { field, nrows, ncols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Coeff {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Coeff] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let (m, n) = (self.nrows, self.ncols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..n {
                    self.data.swap(p * n + j, r * n + j);
                }
            }
            let inv = f.inv_nz(self.get(r, c));
            for j in c..n {
                let v = self.get(r, j);
                self.set(r, j, f.mul(v, inv));
            }
            for i in 0..m {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..n {
                    let v = f.mul_add(self.data[i * n + j], neg, self.data[r * n + j]);
                    self.data[i * n + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.nrows == 0 || self.ncols == 0 {
            return 0;
        }
        self.clone().rref().len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let mut a = self.clone();
        let pivots = a.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.ncols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(a.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Vec<Coeff> {
        let f = self.field;
        (0..self.nrows).map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))).collect()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Coeff {
        assert_eq!(self.nrows, self.ncols);
        let f = self.field;
        let n = self.nrows;
        let mut a = self.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| a.get(i, c) != 0) else { return 0 };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pv = a.get(c, c);
            det = f.mul(det, pv);
            let inv = f.inv_nz(pv);
            for i in c + 1..n {
                let factor = f.mul(a.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..n {
                    let v = f.mul_add(a.data[i * n + j], neg, a.data[c * n + j]);
                    a.data[i * n + j] = v;
                }
            }
        }
        det
    }
}
