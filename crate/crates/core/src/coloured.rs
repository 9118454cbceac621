//! Posets coloured by free modules: a finite poset with unique top, a free
//! module attached to every element, and a map along every cover such that
//! all square diagrams commute.
//!
//! Construction computes and stores the composite map for every comparable
//! pair and fails with a witness if two cover paths between the same pair
//! disagree, so a value of [`ColouredPoset`] is always a genuine functor.

use std::collections::HashMap;

use thiserror::Error;

use crate::boolean::{AtomSplit, BooleanLattice};
use crate::matrix::{AlgebraError, Matrix};
use crate::poset::{FinitePoset, PosetError};
use crate::ring::{Integers, Ring};

#[derive(Debug, Error)]
pub enum ColouringError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected {want} fiber ranks, got {got}")]
    RankCount { want: usize, got: usize },
    #[error("missing map for cover {x} < {y}")]
    MissingEdgeMap { x: usize, y: usize },
    #[error("map given for {x}, {y}, which is not a cover")]
    NotACover { x: usize, y: usize },
    #[error("map for cover {x} < {y} is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    EdgeMapShape {
        x: usize,
        y: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("maps from {x} to {y} disagree depending on the first step ({via1} vs {via2})")]
    NotFunctorial { x: usize, y: usize, via1: usize, via2: usize },
    #[error("expected {want} grade lists, got {got}")]
    GradeCount { want: usize, got: usize },
    #[error("grade list for element {elem} has {got} entries, expected {want}")]
    GradeLength { elem: usize, got: usize, want: usize },
    #[error("map for cover {x} < {y} mixes grades at entry ({row}, {col})")]
    GradeViolation { x: usize, y: usize, row: usize, col: usize },
    #[error("carriers are coloured over different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("morphism data has wrong length: {got} images for {want} elements")]
    MorphismLength { got: usize, want: usize },
    #[error("morphism image {fx} of element {x} is out of range")]
    ImageOutOfRange { x: usize, fx: usize },
    #[error("morphism does not preserve order: {x} < {y} but {fx} is not below {fy}")]
    NotMonotone { x: usize, y: usize, fx: usize, fy: usize },
    #[error("morphism must send the top and only the top to the top (fails at {x})")]
    TopCondition { x: usize },
    #[error("component at element {x} is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    ComponentShape {
        x: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("naturality square at cover {x} < {y} does not commute")]
    NotNatural { x: usize, y: usize },
}

/// A finite poset with unique top, a free module of finite rank on every
/// element, and commuting maps along the order.
#[derive(Clone, Debug)]
pub struct ColouredPoset<R: Ring> {
    poset: FinitePoset,
    top: usize,
    ring: R,
    ranks: Vec<usize>,
    edges: HashMap<(usize, usize), Matrix<R>>,
    composites: HashMap<(usize, usize), Matrix<R>>,
    grades: Option<Vec<Vec<i64>>>,
}

impl<R: Ring> ColouredPoset<R> {
    /// Validate and close up a colouring given by one map per cover.
    pub fn new(
        poset: FinitePoset,
        ring: R,
        ranks: Vec<usize>,
        edges: HashMap<(usize, usize), Matrix<R>>,
    ) -> Result<Self, ColouringError> {
        let top = poset.unique_top()?;
        let n = poset.len();
        if ranks.len() != n {
            return Err(ColouringError::RankCount { want: n, got: ranks.len() });
        }
        for &(x, y) in edges.keys() {
            if !poset.covers().contains(&(x, y)) {
                return Err(ColouringError::NotACover { x, y });
            }
        }
        for &(x, y) in poset.covers() {
            let m = edges
                .get(&(x, y))
                .ok_or(ColouringError::MissingEdgeMap { x, y })?;
            if m.rows() != ranks[y] || m.cols() != ranks[x] {
                return Err(ColouringError::EdgeMapShape {
                    x,
                    y,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                    want_rows: ranks[y],
                    want_cols: ranks[x],
                });
            }
        }

        // Composites, built top-down so every map out of an element above is
        // already known. Every cover path out of `x` must give the same map;
        // the first cover below `y` is taken as the reference.
        let mut composites: HashMap<(usize, usize), Matrix<R>> = HashMap::new();
        let mut above = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                if poset.lt(x, y) {
                    above[x] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| above[x]);

        for &x in &order {
            composites.insert((x, x), Matrix::identity(&ring, ranks[x]));
            for y in 0..n {
                if !poset.lt(x, y) {
                    continue;
                }
                let mut reference: Option<(usize, Matrix<R>)> = None;
                for &z in poset.covers_up(x) {
                    if !poset.leq(z, y) {
                        continue;
                    }
                    let tail = composites
                        .get(&(z, y))
                        .expect("element above was processed first");
                    let via_z = tail.mul(&edges[&(x, z)])?;
                    match &reference {
                        None => reference = Some((z, via_z)),
                        Some((z0, m0)) => {
                            if &via_z != m0 {
                                return Err(ColouringError::NotFunctorial {
                                    x,
                                    y,
                                    via1: *z0,
                                    via2: z,
                                });
                            }
                        }
                    }
                }
                let (_, m) = reference.expect("x < y implies a cover of x below y");
                composites.insert((x, y), m);
            }
        }

        Ok(ColouredPoset { poset, top, ring, ranks, edges, composites, grades: None })
    }

    /// Attach an internal grade to every basis vector of every fiber. Every
    /// cover map must be grade-preserving.
    pub fn with_grades(mut self, grades: Vec<Vec<i64>>) -> Result<Self, ColouringError> {
        let n = self.poset.len();
        if grades.len() != n {
            return Err(ColouringError::GradeCount { want: n, got: grades.len() });
        }
        for (elem, g) in grades.iter().enumerate() {
            if g.len() != self.ranks[elem] {
                return Err(ColouringError::GradeLength {
                    elem,
                    got: g.len(),
                    want: self.ranks[elem],
                });
            }
        }
        for &(x, y) in self.poset.covers() {
            let m = &self.edges[&(x, y)];
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    if !self.ring.is_zero(m.get(row, col)) && grades[y][row] != grades[x][col] {
                        return Err(ColouringError::GradeViolation { x, y, row, col });
                    }
                }
            }
        }
        self.grades = Some(grades);
        Ok(self)
    }

    /// The constant colouring: the same rank everywhere, identities along
    /// covers.
    pub fn constant(poset: FinitePoset, ring: R, rank: usize) -> Result<Self, ColouringError> {
        let edges = poset
            .covers()
            .iter()
            .map(|&c| (c, Matrix::identity(&ring, rank)))
            .collect();
        let n = poset.len();
        Self::new(poset, ring, vec![rank; n], edges)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn grades(&self) -> Option<&Vec<Vec<i64>>> {
        self.grades.as_ref()
    }

    /// The map attached to a comparable pair `x <= y` (the composite along
    /// any cover path).
    ///
    /// # Panics
    ///
    /// Panics if `x` is not below `y`.
    pub fn map(&self, x: usize, y: usize) -> &Matrix<R> {
        self.composites
            .get(&(x, y))
            .unwrap_or_else(|| panic!("map requested for incomparable pair {x}, {y}"))
    }

    /// The colouring of the opposite poset: same fibers, transposed maps.
    /// The original poset must have a unique minimum, which becomes the top.
    pub fn dual(&self) -> Result<Self, ColouringError> {
        self.poset.unique_bottom()?;
        let opposite = self.poset.opposite();
        let edges = self
            .edges
            .iter()
            .map(|(&(x, y), m)| ((y, x), m.transpose()))
            .collect();
        Self::new(opposite, self.ring.clone(), self.ranks.clone(), edges)
    }

    /// The colouring induced on a subset of elements (with the induced
    /// order, which must again have a unique top). Maps along new covers are
    /// the composites of the original. Returns the colouring together with
    /// the list of original indices, position `i` of which is the element
    /// that became index `i`.
    pub fn restrict(&self, subset: &[usize]) -> Result<(Self, Vec<usize>), ColouringError> {
        let mut old = subset.to_vec();
        old.sort_unstable();
        old.dedup();
        let names = old.iter().map(|&x| self.poset.name(x).to_string()).collect();
        let mut relations = Vec::new();
        for (i, &x) in old.iter().enumerate() {
            for (j, &y) in old.iter().enumerate() {
                if i != j && self.poset.lt(x, y) {
                    relations.push((i, j));
                }
            }
        }
        let induced = FinitePoset::from_relations(names, relations)?;
        let ranks = old.iter().map(|&x| self.ranks[x]).collect();
        let edges = induced
            .covers()
            .iter()
            .map(|&(i, j)| ((i, j), self.map(old[i], old[j]).clone()))
            .collect();
        let cp = Self::new(induced, self.ring.clone(), ranks, edges)?;
        Ok((cp, old))
    }

    /// Identify the tops of two coloured posets. The top fiber becomes the
    /// direct sum of the two top fibers. Elements of `self` keep their
    /// indices; the returned vector maps each element of `other` to its new
    /// index.
    pub fn union(&self, other: &Self) -> Result<(Self, Vec<usize>), ColouringError> {
        check_rings(&self.ring, &other.ring)?;
        let n1 = self.len();
        let mut map2 = vec![0usize; other.len()];
        let mut names: Vec<String> = self.poset.names().to_vec();
        let mut ranks = self.ranks.clone();
        let mut next = n1;
        for j in 0..other.len() {
            if j == other.top {
                map2[j] = self.top;
            } else {
                map2[j] = next;
                names.push(other.poset.name(j).to_string());
                ranks.push(other.ranks[j]);
                next += 1;
            }
        }
        let top_rank = self.ranks[self.top] + other.ranks[other.top];
        ranks[self.top] = top_rank;

        let mut covers: Vec<(usize, usize)> = self.poset.covers().to_vec();
        for &(x, y) in other.poset.covers() {
            covers.push((map2[x], map2[y]));
        }
        let poset = FinitePoset::from_covers(names, covers)?;

        let mut edges = HashMap::new();
        for (&(x, y), m) in &self.edges {
            let m = if y == self.top {
                m.vstack(&Matrix::zero(&self.ring, other.ranks[other.top], m.cols()))?
            } else {
                m.clone()
            };
            edges.insert((x, y), m);
        }
        for (&(x, y), m) in &other.edges {
            let m = if y == other.top {
                Matrix::zero(&self.ring, self.ranks[self.top], m.cols()).vstack(m)?
            } else {
                m.clone()
            };
            edges.insert((map2[x], map2[y]), m);
        }
        let cp = Self::new(poset, self.ring.clone(), ranks, edges)?;
        Ok((cp, map2))
    }

    /// Product colouring: the product order, with the tensor product of the
    /// fibers over each pair. Element `(i, j)` has index `i * other.len() + j`
    /// and fiber basis ordered first-factor-major.
    pub fn product(&self, other: &Self) -> Result<Self, ColouringError> {
        check_rings(&self.ring, &other.ring)?;
        let poset = self.poset.product(&other.poset);
        let n2 = other.len();
        let mut ranks = Vec::with_capacity(self.len() * n2);
        for i in 0..self.len() {
            for j in 0..n2 {
                ranks.push(self.ranks[i] * other.ranks[j]);
            }
        }
        let mut edges = HashMap::new();
        for i in 0..self.len() {
            for j in 0..n2 {
                for (&(x, y), m) in &self.edges {
                    if x == i {
                        let id = Matrix::identity(&self.ring, other.ranks[j]);
                        edges.insert((i * n2 + j, y * n2 + j), m.kronecker(&id));
                    }
                }
                for (&(x, y), m) in &other.edges {
                    if x == j {
                        let id = Matrix::identity(&self.ring, self.ranks[i]);
                        edges.insert((i * n2 + j, i * n2 + y), id.kronecker(m));
                    }
                }
            }
        }
        Self::new(poset, self.ring.clone(), ranks, edges)
    }
}

fn check_rings<R: Ring>(left: &R, right: &R) -> Result<(), ColouringError> {
    if left == right {
        Ok(())
    } else {
        Err(ColouringError::RingMismatch { left: left.name(), right: right.name() })
    }
}

/// A map of coloured posets: a monotone map of carriers sending exactly the
/// top to the top, plus one component per element commuting with the
/// colouring maps.
#[derive(Clone, Debug)]
pub struct PosetMorphism<R: Ring> {
    f: Vec<usize>,
    taus: Vec<Matrix<R>>,
}

impl<R: Ring> PosetMorphism<R> {
    pub fn new(
        src: &ColouredPoset<R>,
        tgt: &ColouredPoset<R>,
        f: Vec<usize>,
        taus: Vec<Matrix<R>>,
    ) -> Result<Self, ColouringError> {
        check_rings(&src.ring, &tgt.ring)?;
        let n = src.len();
        if f.len() != n {
            return Err(ColouringError::MorphismLength { got: f.len(), want: n });
        }
        if taus.len() != n {
            return Err(ColouringError::MorphismLength { got: taus.len(), want: n });
        }
        for (x, &fx) in f.iter().enumerate() {
            if fx >= tgt.len() {
                return Err(ColouringError::ImageOutOfRange { x, fx });
            }
            if (fx == tgt.top) != (x == src.top) {
                return Err(ColouringError::TopCondition { x });
            }
        }
        for &(x, y) in src.poset.covers() {
            if !tgt.poset.leq(f[x], f[y]) {
                return Err(ColouringError::NotMonotone { x, y, fx: f[x], fy: f[y] });
            }
        }
        for (x, tau) in taus.iter().enumerate() {
            if tau.rows() != tgt.ranks[f[x]] || tau.cols() != src.ranks[x] {
                return Err(ColouringError::ComponentShape {
                    x,
                    got_rows: tau.rows(),
                    got_cols: tau.cols(),
                    want_rows: tgt.ranks[f[x]],
                    want_cols: src.ranks[x],
                });
            }
        }
        for &(x, y) in src.poset.covers() {
            let lhs = tgt.map(f[x], f[y]).mul(&taus[x])?;
            let rhs = taus[y].mul(&src.edges[&(x, y)])?;
            if lhs != rhs {
                return Err(ColouringError::NotNatural { x, y });
            }
        }
        Ok(PosetMorphism { f, taus })
    }

    pub fn identity(cp: &ColouredPoset<R>) -> Self {
        PosetMorphism {
            f: (0..cp.len()).collect(),
            taus: (0..cp.len())
                .map(|x| Matrix::identity(&cp.ring, cp.ranks[x]))
                .collect(),
        }
    }

    /// Compose with another morphism: `self` after `first`. The middle
    /// colouring is needed only for validation of the result.
    pub fn compose(
        &self,
        first: &PosetMorphism<R>,
        src: &ColouredPoset<R>,
        tgt: &ColouredPoset<R>,
    ) -> Result<Self, ColouringError> {
        let f = first.f.iter().map(|&x| self.f[x]).collect();
        let taus = first
            .f
            .iter()
            .zip(&first.taus)
            .map(|(&fx, tau1)| self.taus[fx].mul(tau1))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(src, tgt, f, taus)
    }

    pub fn image_of(&self, x: usize) -> usize {
        self.f[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.f
    }

    pub fn component(&self, x: usize) -> &Matrix<R> {
        &self.taus[x]
    }
}

/// A coloured poset glued onto another along a morphism. Elements `0..first_len`
/// are the source part with unchanged indices; the rest are the target part
/// shifted up by `first_len`. Cross covers `a < b'` carry the composite of
/// the morphism component at `a` with the target colouring from `f(a)` up to
/// `b'`.
pub struct Gluing<R: Ring> {
    pub poset: ColouredPoset<R>,
    pub first_len: usize,
}

pub fn glue<R: Ring>(
    part1: &ColouredPoset<R>,
    part2: &ColouredPoset<R>,
    m: &PosetMorphism<R>,
) -> Result<Gluing<R>, ColouringError> {
    check_rings(&part1.ring, &part2.ring)?;
    let n1 = part1.len();
    let n2 = part2.len();
    let mut names: Vec<String> = part1.poset.names().to_vec();
    names.extend(part2.poset.names().iter().cloned());
    let mut relations = Vec::new();
    for x in 0..n1 {
        for y in 0..n1 {
            if part1.poset.lt(x, y) {
                relations.push((x, y));
            }
        }
    }
    for x in 0..n2 {
        for y in 0..n2 {
            if part2.poset.lt(x, y) {
                relations.push((n1 + x, n1 + y));
            }
        }
    }
    for a in 0..n1 {
        for b in 0..n2 {
            if part2.poset.leq(m.f[a], b) {
                relations.push((a, n1 + b));
            }
        }
    }
    let poset = FinitePoset::from_relations(names, relations)?;
    let mut ranks = part1.ranks.clone();
    ranks.extend(part2.ranks.iter().copied());

    let mut edges = HashMap::new();
    for &(x, y) in poset.covers() {
        let map = if x < n1 && y < n1 {
            part1.edges[&(x, y)].clone()
        } else if x >= n1 && y >= n1 {
            part2.edges[&(x - n1, y - n1)].clone()
        } else {
            part2.map(m.f[x], y - n1).mul(&m.taus[x])?
        };
        edges.insert((x, y), map);
    }
    let poset = ColouredPoset::new(poset, part1.ring.clone(), ranks, edges)?;
    Ok(Gluing { poset, first_len: n1 })
}

/// The decomposition of a colouring of a boolean lattice along one atom:
/// the induced colourings of the two halves and the morphism from the lower
/// half to the upper half (join with the atom, vertical colouring maps).
/// Gluing `lower` onto `upper` along `morphism` recovers the original.
///
/// Both halves are indexed by the bitmasks of [`AtomSplit::half`], so the
/// carrier of each equals `split.half().poset()`.
pub struct BooleanSplitParts<R: Ring> {
    pub split: AtomSplit,
    pub lower: ColouredPoset<R>,
    pub upper: ColouredPoset<R>,
    pub morphism: PosetMorphism<R>,
}

pub fn boolean_split<R: Ring>(
    lattice: &BooleanLattice,
    cp: &ColouredPoset<R>,
    atom: usize,
) -> Result<BooleanSplitParts<R>, ColouringError> {
    let split = lattice.split_at_atom(atom)?;
    let half = split.half();
    let lower_subset: Vec<usize> =
        (0..half.len() as u32).map(|x| split.embed_lower(x) as usize).collect();
    let upper_subset: Vec<usize> =
        (0..half.len() as u32).map(|x| split.embed_upper(x) as usize).collect();
    // the embeddings are strictly increasing, so restriction keeps half-lattice
    // bitmask order and index i of each part is the half-lattice bitmask i
    let (lower, _) = cp.restrict(&lower_subset)?;
    let (upper, _) = cp.restrict(&upper_subset)?;
    let f = (0..half.len()).collect();
    let taus = (0..half.len() as u32)
        .map(|x| cp.map(split.embed_lower(x) as usize, split.embed_upper(x) as usize).clone())
        .collect();
    let morphism = PosetMorphism::new(&lower, &upper, f, taus)?;
    Ok(BooleanSplitParts { split, lower, upper, morphism })
}

/// Ring-independent template for a coloured poset: integer matrices that can
/// be specialised to any coefficient ring.
#[derive(Clone, Debug)]
pub struct ColouredData {
    pub names: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub ranks: Vec<usize>,
    pub edges: Vec<((usize, usize), Matrix<Integers>)>,
}

impl ColouredData {
    pub fn over<R: Ring>(&self, ring: &R) -> Result<ColouredPoset<R>, ColouringError> {
        let poset = FinitePoset::from_covers(self.names.clone(), self.covers.clone())?;
        let edges = self
            .edges
            .iter()
            .map(|(key, m)| (*key, m.cast(ring)))
            .collect();
        ColouredPoset::new(poset, ring.clone(), self.ranks.clone(), edges)
    }
}

/// Ring-independent template for a morphism of coloured posets.
#[derive(Clone, Debug)]
pub struct MorphismData {
    pub f: Vec<usize>,
    pub taus: Vec<Matrix<Integers>>,
}

impl MorphismData {
    pub fn over<R: Ring>(
        &self,
        src: &ColouredPoset<R>,
        tgt: &ColouredPoset<R>,
    ) -> Result<PosetMorphism<R>, ColouringError> {
        let ring = src.ring().clone();
        let taus = self.taus.iter().map(|m| m.cast(&ring)).collect();
        PosetMorphism::new(src, tgt, self.f.clone(), taus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    fn diamond() -> FinitePoset {
        FinitePoset::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix<Integers> {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_i64_rows(&Integers, &rows).unwrap()
    }

    #[test]
    fn constant_colouring_composites() {
        let cp = ColouredPoset::constant(diamond(), Integers, 2).unwrap();
        assert_eq!(cp.top(), 3);
        assert_eq!(cp.map(0, 3), &Matrix::identity(&Integers, 2));
        assert_eq!(cp.rank(1), 2);
    }

    #[test]
    fn functoriality_violation_detected() {
        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[1]]));
        edges.insert((0, 2), m(&[&[1]]));
        edges.insert((1, 3), m(&[&[1]]));
        edges.insert((2, 3), m(&[&[2]]));
        let err = ColouredPoset::new(diamond(), Integers, vec![1; 4], edges).unwrap_err();
        assert!(matches!(err, ColouringError::NotFunctorial { x: 0, y: 3, .. }));
    }

    #[test]
    fn composites_multiply_along_chains() {
        let p = FinitePoset::chain(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[2]]));
        edges.insert((1, 2), m(&[&[3]]));
        let cp = ColouredPoset::new(p, Integers, vec![1; 3], edges).unwrap();
        assert_eq!(cp.map(0, 2), &m(&[&[6]]));
    }

    #[test]
    fn missing_and_extra_edge_maps_rejected() {
        let p = FinitePoset::chain(vec!["x".into(), "y".into()]).unwrap();
        let err = ColouredPoset::new(p.clone(), Integers, vec![1, 1], HashMap::new()).unwrap_err();
        assert!(matches!(err, ColouringError::MissingEdgeMap { x: 0, y: 1 }));

        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[1]]));
        edges.insert((1, 0), m(&[&[1]]));
        let err = ColouredPoset::new(p, Integers, vec![1, 1], edges).unwrap_err();
        assert!(matches!(err, ColouringError::NotACover { .. }));
    }

    #[test]
    fn morphism_validation() {
        let p = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[1], &[0]]));
        let src = ColouredPoset::new(p.clone(), Integers, vec![1, 2], edges).unwrap();
        let tgt = ColouredPoset::constant(p, Integers, 1).unwrap();

        // collapse the rank-2 fiber by projecting onto its first coordinate:
        // natural, because the edge map embeds as that coordinate
        let good = PosetMorphism::new(
            &src,
            &tgt,
            vec![0, 1],
            vec![m(&[&[1]]), m(&[&[1, 0]])],
        );
        assert!(good.is_ok());

        let bad = PosetMorphism::new(
            &src,
            &tgt,
            vec![0, 1],
            vec![m(&[&[1]]), m(&[&[0, 1]])],
        );
        assert!(matches!(bad.unwrap_err(), ColouringError::NotNatural { x: 0, y: 1 }));

        let not_top = PosetMorphism::new(
            &src,
            &tgt,
            vec![0, 0],
            vec![m(&[&[1]]), m(&[&[1, 0]])],
        );
        assert!(matches!(not_top.unwrap_err(), ColouringError::TopCondition { x: 1 }));
    }

    #[test]
    fn gluing_two_points_gives_a_chain() {
        let point = FinitePoset::from_covers(vec!["1".into()], vec![]).unwrap();
        let src = ColouredPoset::constant(point.clone(), Integers, 2).unwrap();
        let tgt = ColouredPoset::constant(point, Integers, 3).unwrap();
        let tau = m(&[&[1, 2], &[3, 4], &[5, 6]]);
        let morphism = PosetMorphism::new(&src, &tgt, vec![0], vec![tau.clone()]).unwrap();
        let glued = glue(&src, &tgt, &morphism).unwrap();
        assert_eq!(glued.first_len, 1);
        assert_eq!(glued.poset.len(), 2);
        assert_eq!(glued.poset.top(), 1);
        assert_eq!(glued.poset.map(0, 1), &tau);
    }

    #[test]
    fn union_stacks_top_fibers() {
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let cp1 = ColouredPoset::constant(chain.clone(), Integers, 1).unwrap();
        let cp2 = ColouredPoset::constant(chain, Integers, 2).unwrap();
        let (u, map2) = cp1.union(&cp2).unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(map2, vec![2, 1]);
        assert_eq!(u.rank(u.top()), 3);
        assert_eq!(u.map(0, 1), &m(&[&[1], &[0], &[0]]));
        assert_eq!(u.map(2, 1), &m(&[&[0, 0], &[1, 0], &[0, 1]]));
    }

    #[test]
    fn product_uses_tensor_maps() {
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[1, 2]]));
        let cp1 = ColouredPoset::new(chain.clone(), Integers, vec![2, 1], edges).unwrap();
        let cp2 = cp1.clone();
        let prod = cp1.product(&cp2).unwrap();
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.rank(0), 4);
        assert_eq!(prod.rank(3), 1);
        // map from (x,x) to (1,1) factors as the tensor square
        assert_eq!(prod.map(0, 3), &m(&[&[1, 2, 2, 4]]));
    }

    #[test]
    fn dual_transposes() {
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let mut edges = HashMap::new();
        edges.insert((0, 1), m(&[&[1], &[2]]));
        let cp = ColouredPoset::new(chain, Integers, vec![1, 2], edges).unwrap();
        let dual = cp.dual().unwrap();
        assert_eq!(dual.top(), 0);
        assert_eq!(dual.map(1, 0), &m(&[&[1, 2]]));
    }

    #[test]
    fn restriction_composes_maps() {
        let b = crate::boolean::BooleanLattice::new(2).unwrap();
        let mut edges = HashMap::new();
        edges.insert((0b00, 0b01), m(&[&[2]]));
        edges.insert((0b00, 0b10), m(&[&[3]]));
        edges.insert((0b01, 0b11), m(&[&[3]]));
        edges.insert((0b10, 0b11), m(&[&[2]]));
        let cp = ColouredPoset::new(b.poset(), Integers, vec![1; 4], edges).unwrap();
        // keep 0 < a2 < 1: the map 0 -> 1 is the composite 6
        let (r, old) = cp.restrict(&[0b00, 0b10, 0b11]).unwrap();
        assert_eq!(old, vec![0, 2, 3]);
        assert_eq!(r.len(), 3);
        assert_eq!(r.map(0, 2), &m(&[&[6]]));
    }

    #[test]
    fn boolean_split_halves_are_half_lattices() {
        let b = crate::boolean::BooleanLattice::new(2).unwrap();
        let cp = ColouredPoset::constant(b.poset(), Rationals, 1).unwrap();
        let parts = boolean_split(&b, &cp, 0).unwrap();
        assert_eq!(parts.lower.len(), 2);
        assert_eq!(parts.upper.len(), 2);
        // lower is {0, a2}, upper is {a1, a1a2}, f is the identity on indices
        assert_eq!(parts.lower.poset().name(0), "0");
        assert_eq!(parts.lower.poset().name(1), "a2");
        assert_eq!(parts.upper.poset().name(0), "a1");
        assert_eq!(parts.upper.poset().name(1), "a1a2");
        assert_eq!(parts.morphism.images(), &[0, 1]);
    }

    #[test]
    fn grades_must_be_preserved() {
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let cp = ColouredPoset::constant(chain, Integers, 1).unwrap();
        assert!(cp.clone().with_grades(vec![vec![2], vec![2]]).is_ok());
        let err = cp.with_grades(vec![vec![2], vec![4]]).unwrap_err();
        assert!(matches!(err, ColouringError::GradeViolation { .. }));
    }
}
