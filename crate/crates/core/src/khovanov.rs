//! Link homology from planar diagram codes.
//!
//! A diagram is a list of crossings, each a quadruple of edge labels read
//! counterclockwise from the incoming under-strand, together with the counts
//! of positive and negative crossings (orientation data that an unoriented
//! quadruple cannot carry). Resolving every crossing turns the diagram into
//! planar circles; the fibers `V^{⊗circles}` over the Boolean lattice of
//! crossing subsets, connected by merge and split maps of the rank-two
//! Frobenius algebra `V`, form a colouring whose cube homology — after the
//! writhe-dependent shift — is the bigraded link invariant.
//!
//! Smoothing convention: the 0-resolution of `(a, b, c, d)` joins `a~b` and
//! `c~d`, the 1-resolution joins `a~d` and `b~c`. The zero-crossing code is
//! read as the round unknot diagram (a single circle).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::boolean::BooleanLattice;
use crate::coloured::{ColouredPoset, ColouringError};
use crate::complex::{cube_complex, ChainComplex, ComplexError};
use crate::homology::HomologyGroup;
use crate::matrix::Matrix;
use crate::ring::{Integers, Ring};

/// Largest crossing count accepted by the homology table builders.
pub const MAX_TABLE_CROSSINGS: usize = 8;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("edge label {label} appears {count} times; every label must appear exactly twice")]
    EdgeCount { label: usize, count: usize },
    #[error("{n_plus} positive and {n_minus} negative crossings declared, but the diagram has {crossings}")]
    SignCount {
        n_plus: usize,
        n_minus: usize,
        crossings: usize,
    },
    #[error("diagram has {got} crossings; tables are capped at {cap}")]
    TooManyCrossings { got: usize, cap: usize },
    #[error("flipping crossing {crossing} of state {state:#b} changes the circle count by {delta}; the code is not a planar diagram")]
    NotPlanar {
        state: u32,
        crossing: usize,
        delta: i64,
    },
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A link diagram in PD notation plus its crossing-sign counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[usize; 4]>,
    n_plus: usize,
    n_minus: usize,
}

impl PlanarDiagram {
    pub fn new(
        crossings: Vec<[usize; 4]>,
        n_plus: usize,
        n_minus: usize,
    ) -> Result<Self, DiagramError> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for quad in &crossings {
            for &e in quad {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        for (&label, &count) in &counts {
            if count != 2 {
                return Err(DiagramError::EdgeCount { label, count });
            }
        }
        if n_plus + n_minus != crossings.len() {
            return Err(DiagramError::SignCount {
                n_plus,
                n_minus,
                crossings: crossings.len(),
            });
        }
        Ok(PlanarDiagram {
            crossings,
            n_plus,
            n_minus,
        })
    }

    /// The zero-crossing unknot diagram.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            n_plus: 0,
            n_minus: 0,
        }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    /// The mirror image: each quadruple is re-read from the old incoming
    /// over-strand, which swaps the two smoothings, and the sign counts
    /// trade places.
    pub fn mirror(&self) -> Self {
        PlanarDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|&[a, b, c, d]| [d, a, b, c])
                .collect(),
            n_plus: self.n_minus,
            n_minus: self.n_plus,
        }
    }

    /// The complete resolution selected by `state` (bit `i` set means the
    /// 1-smoothing at crossing `i`).
    pub fn resolve(&self, state: u32) -> ResolutionState {
        if self.crossings.is_empty() {
            return ResolutionState {
                state,
                circles: vec![Vec::new()],
            };
        }
        let mut labels: Vec<usize> = self.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let index: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            let pairs = if (state >> i) & 1 == 1 {
                [(a, d), (b, c)]
            } else {
                [(a, b), (c, d)]
            };
            for (x, y) in pairs {
                let rx = find(&mut parent, index[&x]);
                let ry = find(&mut parent, index[&y]);
                parent[rx] = ry;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &labels {
            let root = find(&mut parent, index[&e]);
            groups.entry(root).or_default().push(e);
        }
        let mut circles: Vec<Vec<usize>> = groups.into_values().collect();
        circles.sort_by_key(|c| c.first().copied());
        ResolutionState { state, circles }
    }
}

/// The planar circles of one complete resolution. Circles are listed by
/// their minimal edge label, each as the sorted list of edges it traverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionState {
    pub state: u32,
    pub circles: Vec<Vec<usize>>,
}

impl ResolutionState {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }
}

/// Multiplication of the rank-two Frobenius algebra on the ordered basis
/// `1⊗1, 1⊗X, X⊗1, X⊗X` of the source: `1` is the unit and `X² = 0`.
pub fn frobenius_multiplication<R: Ring>(ring: &R) -> Matrix<R> {
    Matrix::from_i64_rows(&Integers, &[vec![1, 0, 0, 0], vec![0, 1, 1, 0]])
        .unwrap()
        .cast(ring)
}

/// Comultiplication: `1 ↦ 1⊗X + X⊗1` and `X ↦ X⊗X`. Both structure maps
/// lower the internal degree (`deg 1 = +1`, `deg X = −1`) by one.
pub fn frobenius_comultiplication<R: Ring>(ring: &R) -> Matrix<R> {
    Matrix::from_i64_rows(&Integers, &[vec![0, 0], vec![1, 0], vec![1, 0], vec![0, 1]])
        .unwrap()
        .cast(ring)
}

/// The map on fibers induced by flipping `crossing` from the 0- to the
/// 1-smoothing: two circles fuse through the multiplication, or one
/// bifurcates through the comultiplication, identically on the rest.
///
/// Tensor factors are ordered by minimal edge label, the first factor most
/// significant in the basis index.
fn resolution_map(
    src: &ResolutionState,
    tgt: &ResolutionState,
    crossing: usize,
) -> Result<Matrix<Integers>, DiagramError> {
    let cs = &src.circles;
    let ct = &tgt.circles;
    let not_planar = || DiagramError::NotPlanar {
        state: src.state,
        crossing,
        delta: ct.len() as i64 - cs.len() as i64,
    };
    let tgt_index: HashMap<&Vec<usize>, usize> =
        ct.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let src_set: HashMap<&Vec<usize>, usize> =
        cs.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let new_src: Vec<usize> = (0..cs.len())
        .filter(|&i| !tgt_index.contains_key(&cs[i]))
        .collect();
    let new_tgt: Vec<usize> = (0..ct.len())
        .filter(|&i| !src_set.contains_key(&ct[i]))
        .collect();

    let ns = cs.len();
    let nt = ct.len();
    let ring = Integers;
    let mut m = Matrix::zero(&ring, 1 << nt, 1 << ns);
    let src_bit = |w: u32, i: usize| (w >> (ns - 1 - i)) & 1;
    for w in 0..(1u32 << ns) {
        // carry the untouched factors over by matching edge sets
        let mut base: u32 = 0;
        for (i, c) in cs.iter().enumerate() {
            if let Some(&j) = tgt_index.get(c) {
                base |= src_bit(w, i) << (nt - 1 - j);
            }
        }
        match (new_src.as_slice(), new_tgt.as_slice()) {
            (&[a, b], &[c]) => {
                let (la, lb) = (src_bit(w, a), src_bit(w, b));
                if la == 1 && lb == 1 {
                    continue; // X·X = 0
                }
                let word = base | ((la | lb) << (nt - 1 - c));
                m.set(word as usize, w as usize, BigInt::one());
            }
            (&[c], &[a, b]) => {
                if src_bit(w, c) == 1 {
                    let word = base | (1 << (nt - 1 - a)) | (1 << (nt - 1 - b));
                    m.set(word as usize, w as usize, BigInt::one());
                } else {
                    for (la, lb) in [(0u32, 1u32), (1, 0)] {
                        let word = base | (la << (nt - 1 - a)) | (lb << (nt - 1 - b));
                        m.set(word as usize, w as usize, BigInt::one());
                    }
                }
            }
            _ => return Err(not_planar()),
        }
    }
    Ok(m)
}

/// The colouring of the Boolean lattice on the crossing set: the fiber over
/// a state is `V^{⊗circles}` with internal degrees shifted by the state's
/// rank, and cover maps fuse or bifurcate circles. Grading data is attached,
/// so every cover map is checked to preserve internal degree.
pub fn khovanov_colouring<R: Ring>(
    d: &PlanarDiagram,
    ring: &R,
) -> Result<(BooleanLattice, ColouredPoset<R>), DiagramError> {
    let r = d.crossings.len() as u32;
    let lattice = BooleanLattice::new(r).map_err(ColouringError::from)?;
    let states: Vec<ResolutionState> = (0..lattice.len() as u32).map(|s| d.resolve(s)).collect();
    let ranks: Vec<usize> = states.iter().map(|st| 1usize << st.circles.len()).collect();

    let mut edges = HashMap::new();
    for x in 0..lattice.len() as u32 {
        for t in 0..r {
            if x & (1 << t) != 0 {
                continue;
            }
            let y = x | (1 << t);
            let map = resolution_map(&states[x as usize], &states[y as usize], t as usize)?;
            edges.insert((x as usize, y as usize), map.cast(ring));
        }
    }
    let cp = ColouredPoset::new(lattice.poset(), ring.clone(), ranks, edges)?;

    let mut grades = Vec::with_capacity(states.len());
    for st in &states {
        let c = st.circles.len() as i64;
        let shift = st.state.count_ones() as i64;
        let fiber: Vec<i64> = (0..(1u32 << st.circles.len()))
            .map(|w| c - 2 * w.count_ones() as i64 + shift)
            .collect();
        grades.push(fiber);
    }
    Ok((lattice, cp.with_grades(grades)?))
}

/// A homology table indexed by (homological degree, internal degree);
/// trivial groups are omitted.
#[derive(Debug, Clone, PartialEq)]
pub struct BigradedTable {
    pub entries: BTreeMap<(i64, i64), HomologyGroup>,
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), g) in &self.entries {
            writeln!(f, "({i}, {j}): {g}")?;
        }
        Ok(())
    }
}

/// Homology of the cube of resolutions, indexed by (degree, internal grade)
/// before any writhe correction.
pub fn unnormalised_homology<R: Ring>(
    d: &PlanarDiagram,
    ring: &R,
) -> Result<BigradedTable, DiagramError> {
    let (lattice, cp) = khovanov_colouring(d, ring)?;
    let cx = cube_complex(&lattice, &cp)?;
    let mut entries = BTreeMap::new();
    for (grade, piece) in cx.graded_pieces()? {
        let hr = piece.homology().map_err(ComplexError::from)?;
        for (k, g) in hr.groups.iter().enumerate() {
            if !g.is_trivial() {
                entries.insert((k as i64, grade), g.clone());
            }
        }
    }
    Ok(BigradedTable { entries })
}

/// Where the unnormalised entry at (degree `k`, internal grade `q`) lands
/// after the shift by the crossing signs.
pub fn normalise_bidegree(k: i64, q: i64, n_plus: usize, n_minus: usize) -> (i64, i64) {
    let np = n_plus as i64;
    let nm = n_minus as i64;
    (np - k, q + np - 2 * nm)
}

/// Apply the writhe correction to an unnormalised table.
pub fn normalise(table: &BigradedTable, n_plus: usize, n_minus: usize) -> BigradedTable {
    let entries = table
        .entries
        .iter()
        .map(|(&(k, q), g)| (normalise_bidegree(k, q, n_plus, n_minus), g.clone()))
        .collect();
    BigradedTable { entries }
}

/// The bigraded link homology table of a diagram.
pub fn khovanov_table<R: Ring>(
    d: &PlanarDiagram,
    ring: &R,
) -> Result<BigradedTable, DiagramError> {
    if d.crossings.len() > MAX_TABLE_CROSSINGS {
        return Err(DiagramError::TooManyCrossings {
            got: d.crossings.len(),
            cap: MAX_TABLE_CROSSINGS,
        });
    }
    Ok(normalise(
        &unnormalised_homology(d, ring)?,
        d.n_plus,
        d.n_minus,
    ))
}

/// Laurent polynomials in one variable `q` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(1, 0)
    }

    pub fn term(coeff: i64, exp: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, &BigInt::from(coeff));
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{}", if show_coeff { "*" } else { "" }, e)?,
            }
        }
        Ok(())
    }
}

/// The state-sum evaluation `Σ_S (−1)^{|S|} q^{|S|} (q + q^{−1})^{circles(S)}`,
/// computed straight from the resolutions without building any complex.
pub fn kauffman_state_sum(d: &PlanarDiagram) -> LaurentPoly {
    let r = d.crossings.len();
    let loop_value = LaurentPoly::term(1, 1).add(&LaurentPoly::term(1, -1));
    let mut sum = LaurentPoly::zero();
    for state in 0..(1u32 << r) {
        let size = state.count_ones() as i64;
        let circles = d.resolve(state).circle_count();
        let sign = if size % 2 == 0 { 1 } else { -1 };
        sum = sum.add(&LaurentPoly::term(sign, size).mul(&loop_value.pow(circles)));
    }
    sum
}

/// The graded Euler characteristic of a graded complex, read against the
/// top degree: `Σ_{k,j} (−1)^{top−k} q^j dim`. For the cube of resolutions
/// this equals the state sum.
pub fn graded_euler_characteristic<R: Ring>(
    cx: &ChainComplex<R>,
) -> Result<LaurentPoly, ComplexError> {
    let top = cx.top();
    let mut out = LaurentPoly::zero();
    for ((k, j), n) in cx.graded_ranks()? {
        let sign = if (top - k) % 2 == 0 { 1 } else { -1 };
        out.add_term(j, &BigInt::from(sign * n as i64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::poset_complex;
    use crate::ring::Rationals;

    fn pd(crossings: &[[usize; 4]], n_plus: usize, n_minus: usize) -> PlanarDiagram {
        PlanarDiagram::new(crossings.to_vec(), n_plus, n_minus).unwrap()
    }

    fn hopf() -> PlanarDiagram {
        pd(&[[4, 1, 3, 2], [2, 3, 1, 4]], 2, 0)
    }

    fn left_trefoil() -> PlanarDiagram {
        pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0, 3)
    }

    fn assert_table(t: &BigradedTable, expect: &[((i64, i64), usize, &[i64])]) {
        let mut seen = 0;
        for &((i, j), betti, torsion) in expect {
            let g = t
                .entries
                .get(&(i, j))
                .unwrap_or_else(|| panic!("missing entry at ({i}, {j})"));
            assert_eq!(g.betti, betti, "betti at ({i}, {j})");
            let tz: Vec<BigInt> = torsion.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(g.torsion, tz, "torsion at ({i}, {j})");
            seen += 1;
        }
        assert_eq!(t.entries.len(), seen, "unexpected extra entries: {t}");
    }

    #[test]
    fn frobenius_identities() {
        let ring = Integers;
        let m = frobenius_multiplication(&ring);
        let mu = frobenius_comultiplication(&ring);
        let id = Matrix::identity(&ring, 2);
        // associativity and coassociativity
        let left = m.mul(&m.kronecker(&id)).unwrap();
        let right = m.mul(&id.kronecker(&m)).unwrap();
        assert_eq!(left, right);
        let cleft = m.kronecker(&id).mul(&id.kronecker(&mu)).unwrap();
        let cright = id.kronecker(&m).mul(&mu.kronecker(&id)).unwrap();
        assert_eq!(mu.kronecker(&id).mul(&mu).unwrap(), id.kronecker(&mu).mul(&mu).unwrap());
        // Frobenius compatibility: both rewritings of μ∘m
        let centre = mu.mul(&m).unwrap();
        assert_eq!(centre, cleft);
        assert_eq!(centre, cright);
    }

    #[test]
    fn validation_catches_bad_codes() {
        let err = PlanarDiagram::new(vec![[1, 2, 3, 3]], 1, 0).unwrap_err();
        assert!(matches!(err, DiagramError::EdgeCount { label: 1, count: 1 }));
        let err = PlanarDiagram::new(vec![[1, 1, 2, 2]], 1, 1).unwrap_err();
        assert!(matches!(
            err,
            DiagramError::SignCount { n_plus: 1, n_minus: 1, crossings: 1 }
        ));
    }

    #[test]
    fn resolving_standard_diagrams() {
        let unknot = PlanarDiagram::unknot();
        assert_eq!(unknot.resolve(0).circle_count(), 1);

        let counts: Vec<usize> = (0..4).map(|s| hopf().resolve(s).circle_count()).collect();
        assert_eq!(counts, vec![2, 1, 1, 2]);

        let tre = left_trefoil();
        let counts: Vec<usize> = (0..8).map(|s| tre.resolve(s).circle_count()).collect();
        assert_eq!(counts, vec![3, 2, 2, 1, 2, 1, 1, 2]);

        // circles carry their sorted edge lists, ordered by minimum
        let st = hopf().resolve(0);
        assert_eq!(st.circles, vec![vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn mirror_swaps_smoothings() {
        let tre = left_trefoil();
        let mir = tre.mirror();
        assert_eq!(mir.n_plus(), 3);
        for s in 0..8u32 {
            assert_eq!(
                mir.resolve(s).circle_count(),
                tre.resolve(s ^ 0b111).circle_count()
            );
        }
    }

    #[test]
    fn nonplanar_code_rejected() {
        // valid as a labelling, but the flip keeps the circle count fixed
        let d = pd(&[[1, 2, 1, 2]], 1, 0);
        let err = khovanov_colouring(&d, &Integers).unwrap_err();
        assert!(matches!(err, DiagramError::NotPlanar { crossing: 0, delta: 0, .. }));
    }

    #[test]
    fn hopf_fibers_and_grades() {
        let (_, cp) = khovanov_colouring(&hopf(), &Integers).unwrap();
        let ranks: Vec<usize> = (0..4).map(|x| cp.rank(x)).collect();
        assert_eq!(ranks, vec![4, 2, 2, 4]);
        let grades = cp.grades().unwrap();
        assert_eq!(grades[0], vec![2, 0, 0, -2]);
        assert_eq!(grades[3], vec![4, 2, 2, 0]);
    }

    #[test]
    fn state_sum_values() {
        let q = |c: i64, e: i64| LaurentPoly::term(c, e);
        assert_eq!(
            kauffman_state_sum(&PlanarDiagram::unknot()),
            q(1, 1).add(&q(1, -1))
        );
        assert_eq!(
            kauffman_state_sum(&pd(&[[1, 1, 2, 2]], 1, 0)),
            q(1, -2).add(&q(1, 0))
        );
        let hopf_sum = kauffman_state_sum(&hopf());
        assert_eq!(
            hopf_sum,
            q(1, -2).add(&q(1, 0)).add(&q(1, 2)).add(&q(1, 4))
        );
        assert_eq!(hopf_sum.to_string(), "q^-2 + 1 + q^2 + q^4");
        assert_eq!(
            kauffman_state_sum(&left_trefoil()),
            q(1, -3).add(&q(-1, 1)).add(&q(-1, 3)).add(&q(-1, 5))
        );
    }

    #[test]
    fn state_sum_matches_complex_euler() {
        for d in [
            pd(&[[1, 1, 2, 2]], 1, 0),
            pd(&[[1, 2, 2, 1]], 0, 1),
            hopf(),
            left_trefoil(),
        ] {
            let (lattice, cp) = khovanov_colouring(&d, &Integers).unwrap();
            let cx = cube_complex(&lattice, &cp).unwrap();
            assert_eq!(
                graded_euler_characteristic(&cx).unwrap(),
                kauffman_state_sum(&d)
            );
        }
    }

    #[test]
    fn unknot_tables() {
        let flat = khovanov_table(&PlanarDiagram::unknot(), &Integers).unwrap();
        assert_table(&flat, &[((0, -1), 1, &[]), ((0, 1), 1, &[])]);
        let pos_kink = khovanov_table(&pd(&[[1, 1, 2, 2]], 1, 0), &Integers).unwrap();
        let neg_kink = khovanov_table(&pd(&[[1, 2, 2, 1]], 0, 1), &Integers).unwrap();
        assert_eq!(flat, pos_kink);
        assert_eq!(flat, neg_kink);
    }

    #[test]
    fn hopf_table() {
        let t = khovanov_table(&hopf(), &Integers).unwrap();
        assert_table(
            &t,
            &[
                ((0, 0), 1, &[]),
                ((0, 2), 1, &[]),
                ((2, 4), 1, &[]),
                ((2, 6), 1, &[]),
            ],
        );
    }

    #[test]
    fn trefoil_tables() {
        let t = khovanov_table(&left_trefoil(), &Integers).unwrap();
        assert_table(
            &t,
            &[
                ((-3, -9), 1, &[]),
                ((-2, -7), 0, &[2]),
                ((-2, -5), 1, &[]),
                ((0, -3), 1, &[]),
                ((0, -1), 1, &[]),
            ],
        );
        // over the rationals the torsion entry disappears
        let tq = khovanov_table(&left_trefoil(), &Rationals).unwrap();
        assert_table(
            &tq,
            &[
                ((-3, -9), 1, &[]),
                ((-2, -5), 1, &[]),
                ((0, -3), 1, &[]),
                ((0, -1), 1, &[]),
            ],
        );
        // the mirror is the right-handed trefoil
        let tm = khovanov_table(&left_trefoil().mirror(), &Integers).unwrap();
        assert_table(
            &tm,
            &[
                ((0, 1), 1, &[]),
                ((0, 3), 1, &[]),
                ((2, 5), 1, &[]),
                ((3, 7), 0, &[2]),
                ((3, 9), 1, &[]),
            ],
        );
    }

    #[test]
    fn table_agrees_with_chain_complex_route() {
        for d in [pd(&[[1, 1, 2, 2]], 1, 0), hopf(), left_trefoil()] {
            let (_, cp) = khovanov_colouring(&d, &Integers).unwrap();
            let cx = poset_complex(&cp).unwrap();
            let mut entries = BTreeMap::new();
            for (grade, piece) in cx.graded_pieces().unwrap() {
                let hr = piece.homology().unwrap();
                for (k, g) in hr.groups.iter().enumerate() {
                    if !g.is_trivial() {
                        entries.insert(
                            normalise_bidegree(k as i64, grade, d.n_plus(), d.n_minus()),
                            g.clone(),
                        );
                    }
                }
            }
            let via_chains = BigradedTable { entries };
            assert_eq!(via_chains, khovanov_table(&d, &Integers).unwrap());
        }
    }

    #[test]
    fn table_size_cap() {
        let kinks: Vec<[usize; 4]> = (0..9)
            .map(|i| [2 * i + 1, 2 * i + 1, 2 * i + 2, 2 * i + 2])
            .collect();
        let d = PlanarDiagram::new(kinks, 9, 0).unwrap();
        assert!(matches!(
            khovanov_table(&d, &Integers),
            Err(DiagramError::TooManyCrossings { got: 9, cap: 8 })
        ));
    }

    #[test]
    fn laurent_display_handles_signs_and_coefficients() {
        let p = LaurentPoly::term(-2, 0)
            .add(&LaurentPoly::term(1, 1))
            .add(&LaurentPoly::term(-3, 2))
            .add(&LaurentPoly::term(1, -1));
        assert_eq!(p.to_string(), "q^-1 - 2 + q - 3*q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p.coeff(2), BigInt::from(-3));
    }
}
