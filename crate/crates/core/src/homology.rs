//! Homology groups and maps induced on homology.
//!
//! Groups are stored as a free rank plus invariant factors. The
//! representative/coordinate machinery for induced maps and connecting
//! homomorphisms only works over a field, where cycle spaces have bases and
//! membership is a linear solve.

use crate::complex::{ChainComplex, ChainMap};
use crate::gauss::{self, FieldRing};
use crate::matrix::{AlgebraError, Matrix};
use num::{BigInt, One, Zero};
use std::fmt;

/// One homology group: `Z^betti + Z/t_1 + ... + Z/t_k` (torsion empty over a
/// field, where betti is a dimension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Invariant factors of the direct sum of two groups. Coprime factors
    /// merge, so this is not list concatenation: Z/2 + Z/3 = Z/6.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut primary: Vec<BigInt> = Vec::new();
        for t in self.torsion.iter().chain(&other.torsion) {
            primary.extend(elementary_divisors(t));
        }
        HomologyGroup {
            betti: self.betti + other.betti,
            torsion: invariant_factors_from_primary(primary),
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.betti)
            });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology in a range of degrees, indexed from degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, n: i64) -> HomologyGroup {
        if n < 0 || n as usize >= self.groups.len() {
            HomologyGroup::free(0)
        } else {
            self.groups[n as usize].clone()
        }
    }

    pub fn total_betti(&self) -> usize {
        self.groups.iter().map(|g| g.betti).sum()
    }
}

/// Prime-power decomposition of one invariant factor (trial division; the
/// torsion showing up at desk scale is tiny).
fn elementary_divisors(t: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut n = t.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut q = BigInt::one();
            while (&n % &p).is_zero() {
                n /= &p;
                q *= &p;
            }
            out.push(q);
        }
        p += 1;
    }
    if !n.is_one() {
        out.push(n);
    }
    out
}

/// Rebuild the divisibility-chain normal form from prime powers.
fn invariant_factors_from_primary(mut primary: Vec<BigInt>) -> Vec<BigInt> {
    use std::collections::BTreeMap;
    let mut by_prime: BTreeMap<BigInt, Vec<BigInt>> = BTreeMap::new();
    primary.retain(|q| !q.is_one());
    for q in primary {
        let p = smallest_prime_factor(&q);
        by_prime.entry(p).or_default().push(q);
    }
    let mut slots: Vec<BigInt> = Vec::new();
    for (_, mut powers) in by_prime {
        powers.sort(); // ascending; largest powers go into the last factors
        let offset = slots.len().max(powers.len());
        while slots.len() < offset {
            slots.insert(0, BigInt::one());
        }
        let start = slots.len() - powers.len();
        for (i, q) in powers.into_iter().enumerate() {
            slots[start + i] *= q;
        }
    }
    slots.retain(|f| !f.is_one());
    slots
}

fn smallest_prime_factor(n: &BigInt) -> BigInt {
    let mut p = BigInt::from(2);
    while &p * &p <= *n {
        if (n % &p).is_zero() {
            return p;
        }
        p += 1;
    }
    n.clone()
}

/// Cycle-space data for one degree of a complex over a field: a basis of the
/// boundary space and homology representatives extending it to the cycles.
pub struct HomologyBasis<F: FieldRing> {
    pub boundaries: Matrix<F>,
    pub reps: Matrix<F>,
}

impl<F: FieldRing> HomologyBasis<F> {
    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Coordinates of cycle columns in the representative basis, i.e. the
    /// classes modulo boundaries. Fails when a column is not a cycle plus
    /// boundary, which for genuine cycles cannot happen.
    pub fn coords(&self, cycles: &Matrix<F>) -> Result<Matrix<F>, AlgebraError> {
        let stacked = self.boundaries.hstack(&self.reps)?;
        let sol = gauss::solve(&stacked, cycles)?.ok_or(AlgebraError::Inconsistent)?;
        let rows: Vec<usize> = (self.boundaries.cols()..stacked.cols()).collect();
        Ok(sol.select_rows(&rows))
    }
}

/// Homology basis of `c` at degree `n` over a field.
pub fn homology_basis<F: FieldRing>(
    c: &ChainComplex<F>,
    n: i64,
) -> Result<HomologyBasis<F>, AlgebraError> {
    let d_out = c.diff(n);
    let d_in = c.diff(n + 1);
    let cycles = gauss::kernel_basis(&d_out);
    // independent columns of d_in form the boundary basis
    let mut work = d_in.clone();
    let pivots = gauss::rref_in_place(&mut work);
    let boundaries = d_in.select_cols(&pivots);
    // kernel columns that add new pivots beyond the boundary span represent
    // a homology basis
    let mut stacked = boundaries.hstack(&cycles)?;
    let pivots = gauss::rref_in_place(&mut stacked);
    let chosen: Vec<usize> = pivots
        .iter()
        .filter(|&&p| p >= boundaries.cols())
        .map(|&p| p - boundaries.cols())
        .collect();
    let reps = cycles.select_cols(&chosen);
    Ok(HomologyBasis { boundaries, reps })
}

/// Matrix of the map induced on homology by a chain map, from degree `n` of
/// the source to degree `n + shift` of the target.
pub fn induced_on_homology<F: FieldRing>(
    map: &ChainMap<F>,
    src: &ChainComplex<F>,
    tgt: &ChainComplex<F>,
    n: i64,
) -> Result<Matrix<F>, AlgebraError> {
    let src_basis = homology_basis(src, n)?;
    let tgt_basis = homology_basis(tgt, n + map.shift())?;
    let images = map.map_at(n).mul(&src_basis.reps)?;
    tgt_basis.coords(&images)
}

pub fn is_invertible<F: FieldRing>(m: &Matrix<F>) -> bool {
    m.rows() == m.cols() && gauss::rank(m) == m.rows()
}

/// Connecting homomorphism `H_n(C) -> H_{n-1}(A)` of a degree-wise short
/// exact sequence `0 -> A -i-> B -q-> C -> 0` of complexes over a field.
/// Exactness of the sequence is validated degree by degree.
pub fn connecting_delta<F: FieldRing>(
    i: &ChainMap<F>,
    q: &ChainMap<F>,
    a: &ChainComplex<F>,
    b: &ChainComplex<F>,
    c: &ChainComplex<F>,
    n: i64,
) -> Result<Matrix<F>, AlgebraError> {
    for m in 0..=b.top() as i64 {
        let im = i.map_at(m);
        let qm = q.map_at(m);
        let ri = gauss::rank(&im);
        let rq = gauss::rank(&qm);
        if ri != a.rank(m) || rq != c.rank(m) || ri + rq != b.rank(m) {
            return Err(AlgebraError::Inconsistent);
        }
        if !qm.mul(&im)?.is_zero() {
            return Err(AlgebraError::Inconsistent);
        }
    }
    let c_basis = homology_basis(c, n)?;
    let a_basis = homology_basis(a, n - 1)?;
    // lift representatives through q, push down with the differential of B,
    // and pull back through i
    let lift = gauss::solve(&q.map_at(n), &c_basis.reps)?.ok_or(AlgebraError::Inconsistent)?;
    let pushed = b.diff(n).mul(&lift)?;
    let pulled = gauss::solve(&i.map_at(n - 1), &pushed)?.ok_or(AlgebraError::Inconsistent)?;
    a_basis.coords(&pulled)
}

/// im(g) = ker(h) for a composable pair of homology-level matrices
/// `X -g-> M -h-> Y`: the composite vanishes and the ranks fill `dim M`.
pub fn exact_at_middle<F: FieldRing>(g: &Matrix<F>, h: &Matrix<F>) -> Result<bool, AlgebraError> {
    if !h.mul(g)?.is_zero() {
        return Ok(false);
    }
    Ok(gauss::rank(g) + gauss::rank(h) == g.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let g = HomologyGroup {
            betti: 2,
            torsion: vec![BigInt::from(2), BigInt::from(6)],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(HomologyGroup::free(0).to_string(), "0");
        assert_eq!(HomologyGroup::free(1).to_string(), "Z");
    }

    #[test]
    fn direct_sum_merges_coprime_torsion() {
        let a = HomologyGroup {
            betti: 1,
            torsion: vec![BigInt::from(2)],
        };
        let b = HomologyGroup {
            betti: 0,
            torsion: vec![BigInt::from(3)],
        };
        let s = a.direct_sum(&b);
        assert_eq!(s.betti, 1);
        assert_eq!(s.torsion, vec![BigInt::from(6)]);
        // Z/2 + Z/4 stays two factors: 2 | 4
        let c = HomologyGroup {
            betti: 0,
            torsion: vec![BigInt::from(4)],
        };
        let s2 = a.direct_sum(&c);
        assert_eq!(s2.torsion, vec![BigInt::from(2), BigInt::from(4)]);
        // (Z/2 + Z/4) + Z/3: 3 joins the largest factor
        let s3 = s2.direct_sum(&b);
        assert_eq!(s3.torsion, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn elementary_divisor_roundtrip() {
        assert_eq!(
            elementary_divisors(&BigInt::from(12)),
            vec![BigInt::from(4), BigInt::from(3)]
        );
        assert_eq!(
            invariant_factors_from_primary(vec![BigInt::from(4), BigInt::from(3)]),
            vec![BigInt::from(12)]
        );
    }
}
