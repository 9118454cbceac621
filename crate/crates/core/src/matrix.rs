//! Dense exact matrices over a runtime-chosen ring.
//!
//! Convention throughout the crate: a matrix represents a module map from a
//! source with `cols` basis vectors to a target with `rows` basis vectors,
//! and entry `(i, j)` is the coefficient of target basis vector `i` in the
//! image of source basis vector `j`. `a.mul(&b)` therefore applies `b`
//! first. Zero-by-n and n-by-zero matrices are legal everywhere; they show
//! up constantly as differentials of rank-0 fibers.

use crate::ring::{Integers, Ring};
use num::BigInt;
use std::fmt;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("ragged rows: row {row} has {got} entries, expected {want}")]
    RaggedRows { row: usize, got: usize, want: usize },
    #[error("composite of consecutive differentials is nonzero at entry ({row}, {col})")]
    NotAComplex { row: usize, col: usize },
    #[error("matrix is not over a field; operation requires a field")]
    NotAField,
    #[error("linear system is inconsistent")]
    Inconsistent,
}

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &R, rows: Vec<Vec<R::Elem>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(AlgebraError::RaggedRows {
                    row: i,
                    got: row.len(),
                    want: c,
                });
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from rows of machine integers, mapped into the ring.
    pub fn from_i64_rows(ring: &R, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|row| row.iter().map(|&n| ring.from_i64(n)).collect())
                .collect(),
        )
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    /// First nonzero entry, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|e| !self.ring.is_zero(e))
            .map(|k| (k / self.cols.max(1), k % self.cols.max(1)))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_err("add", other));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.add(&other.neg())?)
    }

    pub fn neg(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| self.ring.neg(e)).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| self.ring.mul(c, e)).collect(),
        }
    }

    /// `self.mul(&b)` is the composite "apply `b`, then `self`".
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(self.dim_err("mul", other));
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if self.ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if self.ring.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let v = self.ring.add(cur, &self.ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; the left factor is the major index on both sides,
    /// matching the basis order of tensor products elsewhere in the crate.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if self.ring.is_zero(a) {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let v = self.ring.mul(a, other.get(i2, j2));
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, v);
                    }
                }
            }
        }
        out
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.rows != other.rows {
            return Err(self.dim_err("hstack", other));
        }
        let mut out = Self::zero(&self.ring, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.cols {
            return Err(self.dim_err("vstack", other));
        }
        let mut out = Self::zero(&self.ring, self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out.set(self.rows + i, j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zero(&self.ring, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_col(ring: &R, v: Vec<R::Elem>) -> Self {
        let rows = v.len();
        Matrix {
            ring: ring.clone(),
            rows,
            cols: 1,
            entries: v,
        }
    }

    fn dim_err(&self, op: &'static str, other: &Self) -> AlgebraError {
        AlgebraError::DimMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row(a) += c * row(b)
    pub fn add_multiple_of_row(&mut self, a: usize, b: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.add(
                self.get(a, j),
                &self.ring.mul(c, &self.get(b, j).clone()),
            );
            self.set(a, j, v);
        }
    }

    /// col(a) += c * col(b)
    pub fn add_multiple_of_col(&mut self, a: usize, b: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.add(
                self.get(i, a),
                &self.ring.mul(c, &self.get(i, b).clone()),
            );
            self.set(i, a, v);
        }
    }

    pub fn scale_row(&mut self, a: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(c, self.get(a, j));
            self.set(a, j, v);
        }
    }

    pub fn scale_col(&mut self, a: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.mul(c, self.get(i, a));
            self.set(i, a, v);
        }
    }
}

impl Matrix<Integers> {
    /// Reinterpret an integer matrix over another ring.
    pub fn cast<R: Ring>(&self, ring: &R) -> Matrix<R> {
        let entries = self.entries.iter().map(|e| ring.from_int(e)).collect();
        Matrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, AlgebraError> {
        Matrix::from_rows(&Integers, rows)
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.ring.name())?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.ring.elem_string(self.get(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
