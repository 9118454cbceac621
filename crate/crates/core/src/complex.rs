//! Chain complexes with labelled bases, and the complexes attached to a
//! coloured poset.
//!
//! Three families are built here:
//!
//! * the strict chain complex of a coloured poset: degree `n >= 1` is spanned
//!   by fiber vectors carried on strictly increasing chains of length `n`
//!   avoiding the top, degree 0 is the top fiber;
//! * the multi-sequence complex (weakly increasing chains, truncated at a
//!   chosen degree) together with its degenerate part, the sequences with at
//!   least one repeat;
//! * the cube complex of a coloured Boolean lattice: degree `k` is the sum of
//!   the fibers over all elements of corank `k`, with signed cover maps.
//!
//! Every constructor validates `d . d = 0` entry by entry (and grade
//! preservation when an internal grading is attached), so a value of
//! [`ChainComplex`] is always a genuine complex.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::boolean::BooleanLattice;
use crate::coloured::ColouredPoset;
use crate::homology::HomologyResult;
use crate::matrix::{AlgebraError, Matrix};
use crate::ring::Ring;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("degree {degree}: differential is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    DiffShape {
        degree: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("degree {degree}: {got} basis labels for rank {want}")]
    BasisCount { degree: usize, got: usize, want: usize },
    #[error("d.d is nonzero from degree {degree} at entry ({row}, {col})")]
    NotAComplex { degree: usize, row: usize, col: usize },
    #[error("differential mixes internal grades (degree {degree}, entry ({row}, {col}))")]
    GradeMixed { degree: usize, row: usize, col: usize },
    #[error("chain map component at degree {degree} is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    MapShape {
        degree: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("chain map square at degree {degree} fails to commute at entry ({row}, {col})")]
    NotAChainMap { degree: i64, row: usize, col: usize },
    #[error("selected basis spans no subcomplex: degree {degree} maps kept column {col} to dropped row {row}")]
    NotClosed { degree: usize, row: usize, col: usize },
    #[error("complex carries no internal grading")]
    NoGrades,
    #[error("complexes are over different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("chain maps do not compose: inner ranks disagree at degree {degree}")]
    ComposeMismatch { degree: usize },
    #[error("colouring has {got} fibers but the lattice has {want} elements")]
    CarrierMismatch { got: usize, want: usize },
    #[error("basis label missing from target complex at degree {degree}")]
    MissingLabel { degree: i64 },
}

/// Name of one basis vector of a complex: a fiber coordinate carried either
/// on a chain of poset elements or on a single lattice element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Coordinate `vec` of the fiber at the head of `seq` (at the top for the
    /// empty sequence, which spans degree 0).
    Chain { seq: Vec<usize>, vec: usize },
    /// Coordinate `vec` of the fiber at lattice element `elem`.
    Cube { elem: u32, vec: usize },
}

/// A nonnegatively graded chain complex of free modules with a labelled
/// basis in every degree. `diff(n)` maps degree `n` to degree `n - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<R: Ring> {
    ring: R,
    ranks: Vec<usize>,
    diffs: Vec<Matrix<R>>,
    bases: Vec<Vec<BasisLabel>>,
    grades: Option<Vec<Vec<i64>>>,
}

impl<R: Ring> ChainComplex<R> {
    /// Validate shapes, `d . d = 0`, and (when given) preservation of the
    /// internal grading.
    pub fn new(
        ring: R,
        diffs: Vec<Matrix<R>>,
        bases: Vec<Vec<BasisLabel>>,
        grades: Option<Vec<Vec<i64>>>,
    ) -> Result<Self, ComplexError> {
        assert!(!diffs.is_empty(), "a complex has at least degree 0");
        let ranks: Vec<usize> = diffs.iter().map(|d| d.cols()).collect();
        for (n, d) in diffs.iter().enumerate() {
            let want_rows = if n == 0 { 0 } else { ranks[n - 1] };
            if d.rows() != want_rows {
                return Err(ComplexError::DiffShape {
                    degree: n,
                    got_rows: d.rows(),
                    got_cols: d.cols(),
                    want_rows,
                    want_cols: ranks[n],
                });
            }
        }
        if bases.len() != ranks.len() {
            return Err(ComplexError::BasisCount {
                degree: bases.len(),
                got: bases.len(),
                want: ranks.len(),
            });
        }
        for (n, basis) in bases.iter().enumerate() {
            if basis.len() != ranks[n] {
                return Err(ComplexError::BasisCount {
                    degree: n,
                    got: basis.len(),
                    want: ranks[n],
                });
            }
        }
        for n in 1..diffs.len() {
            let square = diffs[n - 1].mul(&diffs[n])?;
            if let Some((row, col)) = square.first_nonzero() {
                return Err(ComplexError::NotAComplex { degree: n, row, col });
            }
        }
        if let Some(grades) = &grades {
            for (n, g) in grades.iter().enumerate() {
                if g.len() != ranks[n] {
                    return Err(ComplexError::BasisCount {
                        degree: n,
                        got: g.len(),
                        want: ranks[n],
                    });
                }
            }
            for n in 1..diffs.len() {
                let d = &diffs[n];
                for row in 0..d.rows() {
                    for col in 0..d.cols() {
                        if !ring.is_zero(d.get(row, col)) && grades[n - 1][row] != grades[n][col] {
                            return Err(ComplexError::GradeMixed { degree: n, row, col });
                        }
                    }
                }
            }
        }
        Ok(ChainComplex { ring, ranks, diffs, bases, grades })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Highest degree carried (possibly of rank zero).
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Rank in any degree; zero outside the carried range.
    pub fn rank(&self, n: i64) -> usize {
        if n < 0 || n as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[n as usize]
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// The differential out of degree `n`, a zero-shaped matrix outside the
    /// carried range.
    pub fn diff(&self, n: i64) -> Matrix<R> {
        if n >= 1 && (n as usize) < self.diffs.len() {
            self.diffs[n as usize].clone()
        } else {
            Matrix::zero(&self.ring, self.rank(n - 1), self.rank(n))
        }
    }

    pub fn basis(&self, n: usize) -> &[BasisLabel] {
        &self.bases[n]
    }

    pub fn grades(&self) -> Option<&Vec<Vec<i64>>> {
        self.grades.as_ref()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Homology in every carried degree, computed by the coefficient ring
    /// (Smith normal form over Z, Gaussian elimination over a field).
    pub fn homology(&self) -> Result<HomologyResult, AlgebraError> {
        let groups = (0..=self.top() as i64)
            .map(|n| self.ring.homology_of_pair(&self.diff(n), &self.diff(n + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HomologyResult { groups })
    }

    /// Cohomology of the dual complex: degree `n` is computed from the
    /// transposed differentials around `n`.
    pub fn cohomology(&self) -> Result<HomologyResult, AlgebraError> {
        let groups = (0..=self.top() as i64)
            .map(|n| {
                self.ring
                    .homology_of_pair(&self.diff(n + 1).transpose(), &self.diff(n).transpose())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HomologyResult { groups })
    }

    /// Ranks split by internal grade: `(degree, grade) -> rank`.
    pub fn graded_ranks(&self) -> Result<BTreeMap<(usize, i64), usize>, ComplexError> {
        let grades = self.grades.as_ref().ok_or(ComplexError::NoGrades)?;
        let mut out = BTreeMap::new();
        for (n, g) in grades.iter().enumerate() {
            for &j in g {
                *out.entry((n, j)).or_insert(0) += 1;
            }
        }
        Ok(out)
    }

    /// Split a graded complex into its grade-homogeneous summands, one per
    /// grade value that occurs.
    pub fn graded_pieces(&self) -> Result<Vec<(i64, ChainComplex<R>)>, ComplexError> {
        let grades = self.grades.clone().ok_or(ComplexError::NoGrades)?;
        let values: BTreeSet<i64> = grades.iter().flatten().copied().collect();
        values
            .into_iter()
            .map(|j| {
                let (piece, _) = subcomplex(self, |n, i, _| grades[n][i] == j)?;
                Ok((j, piece))
            })
            .collect()
    }
}

/// A chain map between complexes, possibly shifting degree: component `n`
/// maps degree `n` of the source to degree `n + shift` of the target.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<R: Ring> {
    ring: R,
    shift: i64,
    maps: Vec<Matrix<R>>,
    src_ranks: Vec<usize>,
    tgt_ranks: Vec<usize>,
}

impl<R: Ring> ChainMap<R> {
    /// Validate component shapes and commutation with both differentials in
    /// every degree.
    pub fn new(
        src: &ChainComplex<R>,
        tgt: &ChainComplex<R>,
        shift: i64,
        maps: Vec<Matrix<R>>,
    ) -> Result<Self, ComplexError> {
        if src.ring != tgt.ring {
            return Err(ComplexError::RingMismatch {
                left: src.ring.name(),
                right: tgt.ring.name(),
            });
        }
        if maps.len() != src.ranks.len() {
            return Err(ComplexError::BasisCount {
                degree: maps.len(),
                got: maps.len(),
                want: src.ranks.len(),
            });
        }
        for (n, m) in maps.iter().enumerate() {
            let want_rows = tgt.rank(n as i64 + shift);
            if m.rows() != want_rows || m.cols() != src.ranks[n] {
                return Err(ComplexError::MapShape {
                    degree: n,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                    want_rows,
                    want_cols: src.ranks[n],
                });
            }
        }
        let cm = ChainMap {
            ring: src.ring.clone(),
            shift,
            maps,
            src_ranks: src.ranks.clone(),
            tgt_ranks: tgt.ranks.clone(),
        };
        for n in 0..=src.top() as i64 {
            let lhs = tgt.diff(n + shift).mul(&cm.map_at(n))?;
            let rhs = cm.map_at(n - 1).mul(&src.diff(n))?;
            if let Some((row, col)) = lhs.sub(&rhs)?.first_nonzero() {
                return Err(ComplexError::NotAChainMap { degree: n, row, col });
            }
        }
        Ok(cm)
    }

    pub fn identity(c: &ChainComplex<R>) -> Self {
        ChainMap {
            ring: c.ring.clone(),
            shift: 0,
            maps: c.ranks.iter().map(|&r| Matrix::identity(&c.ring, r)).collect(),
            src_ranks: c.ranks.clone(),
            tgt_ranks: c.ranks.clone(),
        }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    fn src_rank(&self, n: i64) -> usize {
        if n < 0 || n as usize >= self.src_ranks.len() {
            0
        } else {
            self.src_ranks[n as usize]
        }
    }

    fn tgt_rank(&self, n: i64) -> usize {
        if n < 0 || n as usize >= self.tgt_ranks.len() {
            0
        } else {
            self.tgt_ranks[n as usize]
        }
    }

    /// Component at any degree, zero-shaped outside the carried range.
    pub fn map_at(&self, n: i64) -> Matrix<R> {
        if n >= 0 && (n as usize) < self.maps.len() {
            self.maps[n as usize].clone()
        } else {
            Matrix::zero(&self.ring, self.tgt_rank(n + self.shift), self.src_rank(n))
        }
    }

    /// `self` after `first`. Shifts add; no revalidation is needed since a
    /// composite of chain maps is one.
    pub fn compose(&self, first: &ChainMap<R>) -> Result<Self, ComplexError> {
        if self.src_ranks != first.tgt_ranks {
            return Err(ComplexError::ComposeMismatch { degree: 0 });
        }
        let maps = (0..first.maps.len())
            .map(|n| self.map_at(n as i64 + first.shift).mul(&first.maps[n]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainMap {
            ring: self.ring.clone(),
            shift: self.shift + first.shift,
            maps,
            src_ranks: first.src_ranks.clone(),
            tgt_ranks: self.tgt_ranks.clone(),
        })
    }
}

/// Positions of the degree-0 label and of each chain's first fiber vector;
/// vectors of one chain sit contiguously.
pub(crate) fn chain_offsets(basis: &[BasisLabel]) -> HashMap<Vec<usize>, usize> {
    let mut out = HashMap::new();
    for (i, label) in basis.iter().enumerate() {
        if let BasisLabel::Chain { seq, vec: 0 } = label {
            out.insert(seq.clone(), i);
        }
    }
    out
}

/// Positions of each lattice element's first fiber vector.
pub(crate) fn cube_offsets(basis: &[BasisLabel]) -> HashMap<u32, usize> {
    let mut out = HashMap::new();
    for (i, label) in basis.iter().enumerate() {
        if let BasisLabel::Cube { elem, vec: 0 } = label {
            out.insert(*elem, i);
        }
    }
    out
}

pub(crate) fn has_repeat(seq: &[usize]) -> bool {
    seq.windows(2).any(|w| w[0] == w[1])
}

/// The strict chain complex of a coloured poset. Degree 0 is the top fiber;
/// degree `n >= 1` is spanned by the fibers of chain heads over all strict
/// `n`-chains avoiding the top, in lexicographic chain order. The
/// differential applies the colouring map along the first step and drops
/// interior members with alternating signs.
pub fn poset_complex<R: Ring>(cp: &ColouredPoset<R>) -> Result<ChainComplex<R>, ComplexError> {
    let sequences = |k: usize| cp.poset().strict_chains(k, Some(cp.top()));
    let max_len = cp.poset().longest_chain(Some(cp.top()));
    sequence_complex(cp, max_len, sequences)
}

/// The full multi-sequence complex (weakly increasing chains avoiding the
/// top), truncated: degrees above `max_degree` are cut off, so homology at
/// the truncation edge is not meaningful.
pub fn full_complex<R: Ring>(
    cp: &ColouredPoset<R>,
    max_degree: usize,
) -> Result<ChainComplex<R>, ComplexError> {
    let sequences = |k: usize| cp.poset().multi_sequences(k, Some(cp.top()));
    sequence_complex(cp, max_degree, sequences)
}

fn sequence_complex<R: Ring>(
    cp: &ColouredPoset<R>,
    max_degree: usize,
    sequences: impl Fn(usize) -> Vec<Vec<usize>>,
) -> Result<ChainComplex<R>, ComplexError> {
    let ring = cp.ring().clone();
    let top = cp.top();

    let mut bases: Vec<Vec<BasisLabel>> = Vec::with_capacity(max_degree + 1);
    let mut chain_lists: Vec<Vec<Vec<usize>>> = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let chains = if k == 0 { vec![Vec::new()] } else { sequences(k) };
        let mut basis = Vec::new();
        for c in &chains {
            let head = *c.first().unwrap_or(&top);
            for v in 0..cp.rank(head) {
                basis.push(BasisLabel::Chain { seq: c.clone(), vec: v });
            }
        }
        bases.push(basis);
        chain_lists.push(chains);
    }
    let offsets: Vec<HashMap<Vec<usize>, usize>> =
        bases.iter().map(|b| chain_offsets(b)).collect();

    let mut diffs = Vec::with_capacity(max_degree + 1);
    diffs.push(Matrix::zero(&ring, 0, bases[0].len()));
    for k in 1..=max_degree {
        let mut d = Matrix::zero(&ring, bases[k - 1].len(), bases[k].len());
        for c in &chain_lists[k] {
            // sequences whose head fiber is zero carry no basis vectors
            let Some(&so) = offsets[k].get(c) else { continue };
            let head = c[0];
            // first face: push the coefficient along the colouring
            let (tail, map) = if k == 1 {
                (Vec::new(), cp.map(head, top))
            } else {
                (c[1..].to_vec(), cp.map(c[0], c[1]))
            };
            if let Some(&to) = offsets[k - 1].get(&tail) {
                for i in 0..map.rows() {
                    for j in 0..map.cols() {
                        let v = ring.add(d.get(to + i, so + j), map.get(i, j));
                        d.set(to + i, so + j, v);
                    }
                }
            }
            // interior faces: drop member i (1-based, i >= 2) with sign (-1)^(i-1)
            for i in 2..=k {
                let mut dropped = c.clone();
                dropped.remove(i - 1);
                let to = offsets[k - 1][&dropped];
                let sign = if i % 2 == 0 { ring.neg(&ring.one()) } else { ring.one() };
                for v in 0..cp.rank(head) {
                    let val = ring.add(d.get(to + v, so + v), &sign);
                    d.set(to + v, so + v, val);
                }
            }
        }
        diffs.push(d);
    }

    let grades = cp.grades().map(|g| {
        chain_lists
            .iter()
            .map(|chains| {
                let mut list = Vec::new();
                for c in chains {
                    let head = *c.first().unwrap_or(&top);
                    list.extend(g[head].iter().copied());
                }
                list
            })
            .collect()
    });

    ChainComplex::new(ring, diffs, bases, grades)
}

/// The cube complex of a colouring of a Boolean lattice: degree `k` is the
/// sum of the fibers over all elements with `r - k` atoms, and the
/// differential adds one atom at a time with the cover sign.
pub fn cube_complex<R: Ring>(
    lattice: &BooleanLattice,
    cp: &ColouredPoset<R>,
) -> Result<ChainComplex<R>, ComplexError> {
    if cp.len() != lattice.len() {
        return Err(ComplexError::CarrierMismatch { got: cp.len(), want: lattice.len() });
    }
    let ring = cp.ring().clone();
    let r = lattice.rank();

    let mut bases: Vec<Vec<BasisLabel>> = Vec::with_capacity(r as usize + 1);
    let mut elem_lists: Vec<Vec<u32>> = Vec::with_capacity(r as usize + 1);
    for k in 0..=r {
        let elems = lattice.elements_of_rank(r - k);
        let mut basis = Vec::new();
        for &x in &elems {
            for v in 0..cp.rank(x as usize) {
                basis.push(BasisLabel::Cube { elem: x, vec: v });
            }
        }
        bases.push(basis);
        elem_lists.push(elems);
    }
    let offsets: Vec<HashMap<u32, usize>> = bases.iter().map(|b| cube_offsets(b)).collect();

    let mut diffs = Vec::with_capacity(r as usize + 1);
    diffs.push(Matrix::zero(&ring, 0, bases[0].len()));
    for k in 1..=r as usize {
        let mut d = Matrix::zero(&ring, bases[k - 1].len(), bases[k].len());
        for &x in &elem_lists[k] {
            // summands with a zero fiber carry no basis vectors
            let Some(&so) = offsets[k].get(&x) else { continue };
            for t in 0..r {
                if x & (1 << t) != 0 {
                    continue;
                }
                let y = x | (1 << t);
                let sign = lattice
                    .cover_sign(x, y)
                    .expect("adding one atom is a cover");
                let map = cp.map(x as usize, y as usize);
                let Some(&to) = offsets[k - 1].get(&y) else { continue };
                for i in 0..map.rows() {
                    for j in 0..map.cols() {
                        let term = if sign < 0 {
                            ring.neg(map.get(i, j))
                        } else {
                            map.get(i, j).clone()
                        };
                        let v = ring.add(d.get(to + i, so + j), &term);
                        d.set(to + i, so + j, v);
                    }
                }
            }
        }
        diffs.push(d);
    }

    let grades = cp.grades().map(|g| {
        elem_lists
            .iter()
            .map(|elems| {
                let mut list = Vec::new();
                for &x in elems {
                    list.extend(g[x as usize].iter().copied());
                }
                list
            })
            .collect()
    });

    ChainComplex::new(ring, diffs, bases, grades)
}

/// The subcomplex spanned by the selected basis vectors, with its inclusion.
/// Fails if the selection is not closed under the differential.
pub fn subcomplex<R: Ring>(
    c: &ChainComplex<R>,
    keep: impl Fn(usize, usize, &BasisLabel) -> bool,
) -> Result<(ChainComplex<R>, ChainMap<R>), ComplexError> {
    let kept: Vec<Vec<usize>> = c
        .bases
        .iter()
        .enumerate()
        .map(|(n, basis)| {
            (0..basis.len()).filter(|&i| keep(n, i, &basis[i])).collect()
        })
        .collect();
    split_off(c, &kept, true)
}

/// The quotient by the subcomplex spanned by the killed basis vectors, with
/// its projection. Fails if the killed span is not closed under the
/// differential.
pub fn quotient<R: Ring>(
    c: &ChainComplex<R>,
    kill: impl Fn(usize, usize, &BasisLabel) -> bool,
) -> Result<(ChainComplex<R>, ChainMap<R>), ComplexError> {
    let kept: Vec<Vec<usize>> = c
        .bases
        .iter()
        .enumerate()
        .map(|(n, basis)| {
            (0..basis.len()).filter(|&i| !kill(n, i, &basis[i])).collect()
        })
        .collect();
    split_off(c, &kept, false)
}

/// Common core of [`subcomplex`] and [`quotient`]: restrict the differential
/// to the kept block. For a subcomplex the kept set must be closed under `d`
/// (no entry from kept columns to dropped rows); for a quotient the dropped
/// set must be (no entry from dropped columns to kept rows).
fn split_off<R: Ring>(
    c: &ChainComplex<R>,
    kept: &[Vec<usize>],
    as_subcomplex: bool,
) -> Result<(ChainComplex<R>, ChainMap<R>), ComplexError> {
    let ring = c.ring.clone();
    for n in 1..c.diffs.len() {
        let d = &c.diffs[n];
        let kept_rows: Vec<bool> = {
            let mut mask = vec![false; d.rows()];
            for &i in &kept[n - 1] {
                mask[i] = true;
            }
            mask
        };
        let kept_cols: Vec<bool> = {
            let mut mask = vec![false; d.cols()];
            for &j in &kept[n] {
                mask[j] = true;
            }
            mask
        };
        for row in 0..d.rows() {
            for col in 0..d.cols() {
                if ring.is_zero(d.get(row, col)) {
                    continue;
                }
                let escapes = if as_subcomplex {
                    kept_cols[col] && !kept_rows[row]
                } else {
                    !kept_cols[col] && kept_rows[row]
                };
                if escapes {
                    return Err(ComplexError::NotClosed { degree: n, row, col });
                }
            }
        }
    }

    let diffs: Vec<Matrix<R>> = (0..c.diffs.len())
        .map(|n| {
            let rows = if n == 0 { Vec::new() } else { kept[n - 1].clone() };
            c.diffs[n].select_cols(&kept[n]).select_rows(&rows)
        })
        .collect();
    let bases: Vec<Vec<BasisLabel>> = kept
        .iter()
        .enumerate()
        .map(|(n, idx)| idx.iter().map(|&i| c.bases[n][i].clone()).collect())
        .collect();
    let grades = c
        .grades
        .as_ref()
        .map(|g| kept.iter().enumerate().map(|(n, idx)| idx.iter().map(|&i| g[n][i]).collect()).collect());
    let piece = ChainComplex::new(ring.clone(), diffs, bases, grades)?;

    let maps: Vec<Matrix<R>> = if as_subcomplex {
        kept.iter()
            .enumerate()
            .map(|(n, idx)| {
                let mut m = Matrix::zero(&ring, c.ranks[n], idx.len());
                for (j, &i) in idx.iter().enumerate() {
                    m.set(i, j, ring.one());
                }
                m
            })
            .collect()
    } else {
        kept.iter()
            .enumerate()
            .map(|(n, idx)| {
                let mut m = Matrix::zero(&ring, idx.len(), c.ranks[n]);
                for (j, &i) in idx.iter().enumerate() {
                    m.set(j, i, ring.one());
                }
                m
            })
            .collect()
    };
    let map = if as_subcomplex {
        ChainMap::new(&piece, c, 0, maps)?
    } else {
        ChainMap::new(c, &piece, 0, maps)?
    };
    Ok((piece, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloured::ColouredPoset;
    use crate::poset::FinitePoset;
    use crate::ring::{Integers, Rationals};
    use num::BigInt;

    fn b2_constant() -> (BooleanLattice, ColouredPoset<Integers>) {
        let b = BooleanLattice::new(2).unwrap();
        let cp = ColouredPoset::constant(b.poset(), Integers, 1).unwrap();
        (b, cp)
    }

    #[test]
    fn strict_chain_complex_of_square() {
        let (_, cp) = b2_constant();
        let c = poset_complex(&cp).unwrap();
        assert_eq!(c.top(), 2);
        assert_eq!((c.rank(0), c.rank(1), c.rank(2)), (1, 3, 2));
        // d1 sends each singleton chain to the top fiber
        assert_eq!(c.diff(1), Matrix::from_i64_rows(&Integers, &[vec![1, 1, 1]]).unwrap());
        // d2 on (0,a1): head coefficient moves to (a1), minus the chain (0)
        let d2 = Matrix::from_i64_rows(&Integers, &[vec![-1, -1], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.diff(2), d2);
        let h = c.homology().unwrap();
        assert!(h.groups.iter().all(|g| g.is_trivial()));
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn cube_complex_of_square() {
        let (b, cp) = b2_constant();
        let k = cube_complex(&b, &cp).unwrap();
        assert_eq!((k.rank(0), k.rank(1), k.rank(2)), (1, 2, 1));
        assert_eq!(k.diff(1), Matrix::from_i64_rows(&Integers, &[vec![-1, 1]]).unwrap());
        assert_eq!(k.diff(2), Matrix::from_i64_rows(&Integers, &[vec![1], vec![1]]).unwrap());
        let h = k.homology().unwrap();
        assert!(h.groups.iter().all(|g| g.is_trivial()));
    }

    #[test]
    fn torsion_appears_in_degree_zero() {
        // two-element chain, the colouring map is multiplication by 2
        let p = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let mut edges = std::collections::HashMap::new();
        edges.insert((0, 1), Matrix::from_i64_rows(&Integers, &[vec![2]]).unwrap());
        let cp = ColouredPoset::new(p, Integers, vec![1, 1], edges).unwrap();
        let c = poset_complex(&cp).unwrap();
        let h = c.homology().unwrap();
        assert_eq!(h.groups[0].betti, 0);
        assert_eq!(h.groups[0].torsion, vec![BigInt::from(2)]);
        assert!(h.groups[1].is_trivial());
        // cohomology puts the torsion at the other end
        let ch = c.cohomology().unwrap();
        assert!(ch.groups[0].is_trivial());
        assert_eq!(ch.groups[1].torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn multisequence_complex_of_a_point_under_top() {
        let p = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let cp = ColouredPoset::constant(p, Integers, 1).unwrap();
        let s = full_complex(&cp, 4).unwrap();
        assert_eq!(s.ranks, vec![1, 1, 1, 1, 1]);
        assert_eq!(s.diff(1), Matrix::from_i64_rows(&Integers, &[vec![1]]).unwrap());
        assert_eq!(s.diff(2), Matrix::from_i64_rows(&Integers, &[vec![0]]).unwrap());
        assert_eq!(s.diff(3), Matrix::from_i64_rows(&Integers, &[vec![1]]).unwrap());
        assert_eq!(s.diff(4), Matrix::from_i64_rows(&Integers, &[vec![0]]).unwrap());
    }

    #[test]
    fn degenerate_part_is_closed_and_complements_strict_chains() {
        let p = FinitePoset::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let cp = ColouredPoset::constant(p, Rationals, 1).unwrap();
        let s = full_complex(&cp, 3).unwrap();
        let is_degen = |label: &BasisLabel| match label {
            BasisLabel::Chain { seq, .. } => has_repeat(seq),
            _ => false,
        };
        let (d_part, _incl) = subcomplex(&s, |_, _, l| is_degen(l)).unwrap();
        let (c_part, _incl) = subcomplex(&s, |_, _, l| !is_degen(l)).unwrap();
        for n in 0..=3i64 {
            assert_eq!(
                d_part.rank(n) + c_part.rank(n),
                s.rank(n),
                "block split at degree {n}"
            );
        }
        // degree 2: strict pairs (0,a), (0,b) and repeats (0,0), (a,a), (b,b)
        assert_eq!(c_part.rank(2), 2);
        assert_eq!(d_part.rank(2), 3);
        // the strict block matches the chain complex built directly
        let c_direct = poset_complex(&cp).unwrap();
        for n in 0..=2i64 {
            assert_eq!(c_part.diff(n), c_direct.diff(n));
        }
        // quotient by the degenerate part also recovers the strict block
        let (q, _proj) = quotient(&s, |_, _, l| is_degen(l)).unwrap();
        for n in 0..=3i64 {
            assert_eq!(q.diff(n), c_part.diff(n));
        }
    }

    #[test]
    fn subcomplex_closure_is_checked() {
        let (_, cp) = b2_constant();
        let c = poset_complex(&cp).unwrap();
        // degree-0 alone is not closed under d1's sources... it is closed
        // (nothing maps out of degree 0); dropping degree 0 but keeping
        // degree 1 is not closed.
        let err = subcomplex(&c, |n, _, _| n == 1).unwrap_err();
        assert!(matches!(err, ComplexError::NotClosed { degree: 1, .. }));
        assert!(subcomplex(&c, |n, _, _| n == 0).is_ok());
    }

    #[test]
    fn chain_map_validation_catches_sign_errors() {
        let (b, cp) = b2_constant();
        let k = cube_complex(&b, &cp).unwrap();
        let id = ChainMap::identity(&k);
        assert_eq!(id.map_at(1), Matrix::identity(&Integers, 2));
        // flipping one sign of the identity breaks commutation
        let mut maps: Vec<_> = (0..=2i64).map(|n| id.map_at(n)).collect();
        maps[1].set(0, 0, BigInt::from(-1));
        let err = ChainMap::new(&k, &k, 0, maps).unwrap_err();
        assert!(matches!(err, ComplexError::NotAChainMap { .. }));
    }

    #[test]
    fn compose_shifts_add() {
        let (_, cp) = b2_constant();
        let c = poset_complex(&cp).unwrap();
        let id = ChainMap::identity(&c);
        let twice = id.compose(&id).unwrap();
        assert_eq!(twice.shift(), 0);
        assert_eq!(twice, id);
    }

    #[test]
    fn graded_pieces_split_complexes() {
        let p = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let mut edges = std::collections::HashMap::new();
        edges.insert(
            (0, 1),
            Matrix::from_i64_rows(&Integers, &[vec![1, 0], vec![0, 0]]).unwrap(),
        );
        let cp = ColouredPoset::new(p, Integers, vec![2, 2], edges)
            .unwrap()
            .with_grades(vec![vec![5, 7], vec![5, 7]])
            .unwrap();
        let c = poset_complex(&cp).unwrap();
        let pieces = c.graded_pieces().unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].0, 5);
        assert_eq!(pieces[0].1.rank(0), 1);
        assert_eq!(pieces[1].0, 7);
        let ranks = c.graded_ranks().unwrap();
        assert_eq!(ranks[&(0, 5)], 1);
        assert_eq!(ranks[&(1, 7)], 1);
    }
}
