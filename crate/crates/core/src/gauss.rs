//! Gaussian elimination over the field coefficients (Q and F_p).

use crate::homology::HomologyGroup;
use crate::matrix::{AlgebraError, Matrix};
use crate::ring::{PrimeField, Rationals, Ring};

/// Marker for rings where every nonzero element is a unit.
pub trait FieldRing: Ring {}
impl FieldRing for Rationals {}
impl FieldRing for PrimeField {}

/// Reduce `m` to reduced row echelon form in place; returns the pivot
/// columns in order.
pub fn rref_in_place<F: FieldRing>(m: &mut Matrix<F>) -> Vec<usize> {
    let ring = m.ring().clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(pr) = (row..m.rows()).find(|&r| !ring.is_zero(m.get(r, col))) else {
            continue;
        };
        m.swap_rows(row, pr);
        let inv = ring
            .inv(m.get(row, col))
            .expect("nonzero field element is invertible");
        m.scale_row(row, &inv);
        for r in 0..m.rows() {
            if r != row && !ring.is_zero(m.get(r, col)) {
                let c = ring.neg(m.get(r, col));
                m.add_multiple_of_row(r, row, &c);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: FieldRing>(m: &Matrix<F>) -> usize {
    let mut work = m.clone();
    rref_in_place(&mut work).len()
}

/// Basis of `{ x : m x = 0 }`, one column per basis vector.
pub fn kernel_basis<F: FieldRing>(m: &Matrix<F>) -> Matrix<F> {
    let ring = m.ring().clone();
    let mut work = m.clone();
    let pivots = rref_in_place(&mut work);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; m.cols()];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let free: Vec<usize> = (0..m.cols()).filter(|&j| !is_pivot[j]).collect();
    let mut out = Matrix::zero(&ring, m.cols(), free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, ring.one());
        for (r, &p) in pivots.iter().enumerate() {
            out.set(p, k, ring.neg(work.get(r, f)));
        }
    }
    out
}

/// Solve `a x = b` column-wise; `None` when inconsistent. Free variables are
/// set to zero, so the result is one particular solution.
pub fn solve<F: FieldRing>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Option<Matrix<F>>, AlgebraError> {
    if a.rows() != b.rows() {
        return Err(AlgebraError::DimMismatch {
            op: "solve",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let ring = a.ring().clone();
    let mut work = a.hstack(b)?;
    let pivots = rref_in_place(&mut work);
    if pivots.iter().any(|&p| p >= a.cols()) {
        return Ok(None);
    }
    let mut x = Matrix::zero(&ring, a.cols(), b.cols());
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, work.get(r, a.cols() + j).clone());
        }
    }
    Ok(Some(x))
}

/// Inverse of a square matrix of full rank, `None` otherwise.
pub fn inverse<F: FieldRing>(m: &Matrix<F>) -> Result<Option<Matrix<F>>, AlgebraError> {
    if m.rows() != m.cols() || rank(m) != m.rows() {
        return Ok(None);
    }
    solve(m, &Matrix::identity(m.ring(), m.rows()))
}

/// dim ker(d_out) - rank(d_in), with the complex condition checked first.
pub fn homology_of_pair_field<F: FieldRing>(
    d_out: &Matrix<F>,
    d_in: &Matrix<F>,
) -> Result<HomologyGroup, AlgebraError> {
    let composite = d_out.mul(d_in)?;
    if let Some((i, j)) = composite.first_nonzero() {
        return Err(AlgebraError::NotAComplex { row: i, col: j });
    }
    let betti = d_out.cols() - rank(d_out) - rank(d_in);
    Ok(HomologyGroup {
        betti,
        torsion: Vec::new(),
    })
}
