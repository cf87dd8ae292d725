use std::fmt;

use num_bigint::BigInt;

use super::{ArithError, Elem, Ring};

/// A dense row-major matrix over a [`Ring`].
///
/// Matrices with zero rows or zero columns are legal; they are the morphisms
/// from and to the zero object of `Rows_R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self, ArithError> {
        if entries.len() != rows * cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !ring.contains(e)) {
            return Err(ArithError::InvalidLiteral {
                literal: bad.to_string(),
                ring: ring.to_string(),
            });
        }
        Ok(Matrix { ring, rows, cols, entries })
    }

    /// Builds a matrix from integer rows, mapping each entry into the ring.
    ///
    /// ```
    /// use freyd::arith::{Matrix, Ring};
    /// let m = Matrix::from_i64(&Ring::Integers, &[&[1, 2], &[3, 4]]);
    /// assert_eq!(m.shape(), (2, 2));
    /// ```
    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(ring, rows.len(), cols, |i, j| {
            assert_eq!(rows[i].len(), cols, "ragged rows");
            ring.from_i64(rows[i][j])
        })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) {
        debug_assert!(self.ring.contains(&value));
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { self.ring.is_one(e) } else { self.ring.is_zero(e) }
                })
            })
    }

    fn same_ring(&self, other: &Matrix) -> Result<(), ArithError> {
        if self.ring != other.ring {
            return Err(ArithError::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    /// The product `self · other`; under the row convention this is
    /// "first `self`, then `other`".
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, ArithError> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut out = Matrix::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = ring.add(&out.entries[idx], &ring.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, op: &str, f: impl Fn(&Ring, &Elem, &Elem) -> Elem) -> Result<Matrix, ArithError> {
        self.same_ring(other)?;
        if self.shape() != other.shape() {
            return Err(ArithError::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(&self.ring, a, b))
            .collect();
        Ok(Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, ArithError> {
        self.zip(other, "add", Ring::add)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, ArithError> {
        self.zip(other, "subtract", Ring::sub)
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|e| self.ring.neg(e)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        let entries = self.entries.iter().map(|e| self.ring.mul(c, e)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `rows` and columns `cols` of `self`.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "submatrix out of range");
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    pub fn select_rows(&self, indices: &[usize]) -> Matrix {
        Self::from_fn(&self.ring, indices.len(), self.cols, |i, j| self.get(indices[i], j).clone())
    }

    /// Places the blocks side by side. All blocks need the same row count.
    pub fn hstack(ring: &Ring, rows: usize, blocks: &[&Matrix]) -> Result<Matrix, ArithError> {
        let mut cols = 0;
        for b in blocks {
            if b.ring != *ring {
                return Err(ArithError::RingMismatch(ring.clone(), b.ring.clone()));
            }
            if b.rows != rows {
                return Err(ArithError::DimensionMismatch(format!(
                    "block with {} rows in a row of height {rows}",
                    b.rows
                )));
            }
            cols += b.cols;
        }
        let mut out = Matrix::zero(ring, rows, cols);
        let mut offset = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.entries[i * cols + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Stacks the blocks on top of each other. All blocks need the same column count.
    pub fn vstack(ring: &Ring, cols: usize, blocks: &[&Matrix]) -> Result<Matrix, ArithError> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.ring != *ring {
                return Err(ArithError::RingMismatch(ring.clone(), b.ring.clone()));
            }
            if b.cols != cols {
                return Err(ArithError::DimensionMismatch(format!(
                    "block with {} columns in a column of width {cols}",
                    b.cols
                )));
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Ok(Matrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn block_diagonal(ring: &Ring, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zero(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.entries[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// The Kronecker product; row `(i, k)` and column `(j, l)` hold `a_ij * b_kl`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, ArithError> {
        self.same_ring(other)?;
        let (p, q) = other.shape();
        Ok(Self::from_fn(&self.ring, self.rows * p, self.cols * q, |r, c| {
            self.ring.mul(self.get(r / p, c / q), other.get(r % p, c % q))
        }))
    }

    /// Integer representatives of the entries, one vector per row.
    pub(crate) fn int_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.as_int().clone()).collect())
            .collect()
    }

    pub(crate) fn from_int_rows(ring: &Ring, cols: usize, rows: Vec<Vec<BigInt>>) -> Matrix {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            entries.extend(row.into_iter().map(|v| ring.from_int(v)));
        }
        Matrix { ring: ring.clone(), rows: n, cols, entries }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
