//! Smith normal form over Z, integer kernel lattices, and homology with
//! torsion.
//!
//! The reduction picks the minimal-magnitude pivot, clears its row and
//! column with rounded division, and restores the divisibility chain by
//! folding offending rows back in. Entries are `BigInt`, so coefficient
//! growth during reduction is harmless.

use crate::homology::HomologyGroup;
use crate::matrix::{AlgebraError, Matrix};
use crate::ring::Integers;
use num::{BigInt, One, Signed, Zero};

pub struct Snf {
    /// The diagonalised matrix.
    pub d: Matrix<Integers>,
    /// Nonzero invariant factors, positive, each dividing the next.
    pub factors: Vec<BigInt>,
    /// Column transform: `d = u * a * v` for unimodular `u`, `v`.
    pub v: Option<Matrix<Integers>>,
    /// Inverse of `v`.
    pub v_inv: Option<Matrix<Integers>>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Quotient of `a / b` rounded to the nearest integer (ties toward zero),
/// so the remainder satisfies `2|r| <= |b|`.
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = num::Integer::div_rem(a, b);
    if r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

type Transform = Option<Matrix<Integers>>;

fn swap_cols(d: &mut Matrix<Integers>, v: &mut Transform, v_inv: &mut Transform, x: usize, y: usize) {
    d.swap_cols(x, y);
    if let Some(v) = v.as_mut() {
        v.swap_cols(x, y);
    }
    if let Some(vi) = v_inv.as_mut() {
        vi.swap_rows(x, y);
    }
}

/// col(x) += c * col(y); the inverse transform subtracts on rows of `v_inv`.
fn add_col(d: &mut Matrix<Integers>, v: &mut Transform, v_inv: &mut Transform, x: usize, y: usize, c: &BigInt) {
    d.add_multiple_of_col(x, y, c);
    if let Some(v) = v.as_mut() {
        v.add_multiple_of_col(x, y, c);
    }
    if let Some(vi) = v_inv.as_mut() {
        let nc = -c;
        vi.add_multiple_of_row(y, x, &nc);
    }
}

fn negate_col(d: &mut Matrix<Integers>, v: &mut Transform, v_inv: &mut Transform, x: usize) {
    let m1 = BigInt::from(-1);
    d.scale_col(x, &m1);
    if let Some(v) = v.as_mut() {
        v.scale_col(x, &m1);
    }
    if let Some(vi) = v_inv.as_mut() {
        vi.scale_row(x, &m1);
    }
}

pub fn smith_normal_form(a: &Matrix<Integers>, with_transforms: bool) -> Snf {
    let ring = Integers;
    let mut d = a.clone();
    let n = d.cols();
    let (mut v, mut v_inv) = if with_transforms {
        (
            Some(Matrix::identity(&ring, n)),
            Some(Matrix::identity(&ring, n)),
        )
    } else {
        (None, None)
    };

    let mut t = 0;
    let limit = d.rows().min(d.cols());
    while t < limit {
        // minimal-magnitude nonzero pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..d.rows() {
            for j in t..d.cols() {
                if !d.get(i, j).is_zero()
                    && pivot.map_or(true, |(pi, pj)| d.get(i, j).abs() < d.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        swap_cols(&mut d, &mut v, &mut v_inv, t, pj);

        // clear row and column t; re-pivot when a division leaves a remainder
        'reduce: loop {
            for i in t + 1..d.rows() {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = div_rounded(d.get(i, t), d.get(t, t));
                let nq = -&q;
                d.add_multiple_of_row(i, t, &nq);
                if !d.get(i, t).is_zero() {
                    // remainder is strictly smaller: promote it to pivot
                    d.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            for j in t + 1..d.cols() {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = div_rounded(d.get(t, j), d.get(t, t));
                let nq = -&q;
                add_col(&mut d, &mut v, &mut v_inv, j, t, &nq);
                if !d.get(t, j).is_zero() {
                    swap_cols(&mut d, &mut v, &mut v_inv, t, j);
                    continue 'reduce;
                }
            }
            // divisibility: the pivot must divide everything below-right
            for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(d.get(i, j) % d.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        d.add_multiple_of_row(t, i, &one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if d.get(t, t).sign() == num::bigint::Sign::Minus {
            negate_col(&mut d, &mut v, &mut v_inv, t);
        }
        t += 1;
    }

    let mut factors = Vec::new();
    for i in 0..limit {
        if d.get(i, i).is_zero() {
            break;
        }
        factors.push(d.get(i, i).clone());
    }
    Snf {
        d,
        factors,
        v,
        v_inv,
    }
}

/// Basis of the kernel lattice `{ x in Z^n : a x = 0 }`, one column per
/// basis vector. The lattice is saturated (a direct summand of Z^n), since
/// the basis extends to a unimodular matrix.
pub fn integer_kernel(a: &Matrix<Integers>) -> Matrix<Integers> {
    let snf = smith_normal_form(a, true);
    let rank = snf.rank();
    let v = snf.v.expect("transforms requested");
    let cols: Vec<usize> = (rank..a.cols()).collect();
    v.select_cols(&cols)
}

/// Homology with torsion at the middle of
/// `target <- d_out - middle <- d_in - source` over Z.
///
/// The kernel lattice of `d_out` is read off the column transform of its
/// Smith form; the image of `d_in` is rewritten in those coordinates and a
/// second Smith form gives the quotient's free rank and invariant factors.
pub fn homology_of_pair_z(
    d_out: &Matrix<Integers>,
    d_in: &Matrix<Integers>,
) -> Result<HomologyGroup, AlgebraError> {
    let composite = d_out.mul(d_in)?;
    if let Some((i, j)) = composite.first_nonzero() {
        return Err(AlgebraError::NotAComplex { row: i, col: j });
    }
    let snf = smith_normal_form(d_out, true);
    let r = snf.rank();
    let k = d_out.cols() - r; // kernel rank
    let v_inv = snf.v_inv.expect("transforms requested");
    let coords = v_inv.mul(d_in)?;
    // columns of d_in are cycles, so their first r coordinates vanish
    debug_assert!(coords.select_rows(&(0..r).collect::<Vec<_>>()).is_zero());
    let rows: Vec<usize> = (r..d_out.cols()).collect();
    let b = coords.select_rows(&rows);
    let bs = smith_normal_form(&b, false);
    let betti = k - bs.rank();
    let torsion: Vec<BigInt> = bs.factors.into_iter().filter(|f| !f.is_one()).collect();
    Ok(HomologyGroup { betti, torsion })
}
