use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Dense row-major matrix over `Z[t, t^-1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: alloc::vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [LaurentPoly] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// `self - I`; the matrix must be square.
    pub fn minus_identity(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = &m[(i, i)] - &LaurentPoly::one();
        }
        Ok(m)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = LaurentPoly::zero();
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &rhs[(k, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(LaurentPoly::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Drops one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let mut entries = Vec::with_capacity(self.rows.saturating_sub(1) * self.cols.saturating_sub(1));
        for i in (0..self.rows).filter(|&i| i != row) {
            for j in (0..self.cols).filter(|&j| j != col) {
                entries.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, entries }
    }
}

impl Index<(usize, usize)> for LambdaMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for LambdaMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &LambdaMatrix {
    type Output = LambdaMatrix;
    fn mul(self, rhs: &LambdaMatrix) -> LambdaMatrix {
        self.checked_mul(rhs).expect("matrix dimensions do not match")
    }
}

impl Sub for &LambdaMatrix {
    type Output = LambdaMatrix;
    fn sub(self, rhs: &LambdaMatrix) -> LambdaMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix dimensions do not match");
        LambdaMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LambdaMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  [")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]\n")?;
        }
        f.write_str("]")
    }
}
