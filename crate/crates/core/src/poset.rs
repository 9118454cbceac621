//! Finite posets presented by their Hasse diagrams.
//!
//! Elements are indices `0..len`. A poset is constructed either from an
//! explicit cover list ([`FinitePoset::from_covers`]) or from an arbitrary
//! generating relation ([`FinitePoset::from_relations`]); in both cases the
//! order closure and the cover lists are precomputed and the input is
//! validated (acyclicity, irredundancy of covers).

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("element index {index} out of range for poset with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cover relation contains a cycle through element {0}")]
    Cyclic(usize),
    #[error("redundant cover {x} < {y}: already implied through {via}")]
    RedundantCover { x: usize, y: usize, via: usize },
    #[error("cover {x} < {y} relates an element to itself")]
    ReflexiveCover { x: usize, y: usize },
    #[error("poset has no unique maximal element (maximal elements: {0:?})")]
    NoUniqueTop(Vec<usize>),
    #[error("poset has no unique minimal element (minimal elements: {0:?})")]
    NoUniqueBottom(Vec<usize>),
    #[error("poset is not graded: element {0} sits on maximal chains of different lengths")]
    NotGraded(usize),
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("atom index {atom} out of range for boolean lattice of rank {rank}")]
    AtomOutOfRange { atom: usize, rank: u32 },
    #[error("boolean lattice rank {0} is too large (maximum 16)")]
    RankTooLarge(u32),
    #[error("elements {x} and {y} are not comparable")]
    NotComparable { x: usize, y: usize },
}

/// A finite poset with precomputed order closure and cover lists.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    leq: Vec<Vec<bool>>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Build a poset from its Hasse diagram. Each pair `(x, y)` asserts that
    /// `y` covers `x`. Fails if the graph has a cycle or if some listed cover
    /// is already implied by a longer path (i.e. is not a cover at all).
    pub fn from_covers(
        names: Vec<String>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        let n = names.len();
        for &(x, y) in &covers {
            let bad = if x >= n { Some(x) } else if y >= n { Some(y) } else { None };
            if let Some(index) = bad {
                return Err(PosetError::IndexOutOfRange { index, len: n });
            }
            if x == y {
                return Err(PosetError::ReflexiveCover { x, y });
            }
        }

        let mut covers_up = vec![Vec::new(); n];
        let mut covers_down = vec![Vec::new(); n];
        for &(x, y) in &covers {
            if !covers_up[x].contains(&y) {
                covers_up[x].push(y);
                covers_down[y].push(x);
            }
        }
        for list in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            list.sort_unstable();
        }

        let order = topological_order(n, &covers_up)?;

        // Strict reachability by walking elements from the top of the order down.
        let mut lt = vec![vec![false; n]; n];
        for &x in order.iter().rev() {
            for &y in &covers_up[x] {
                lt[x][y] = true;
                for z in 0..n {
                    if lt[y][z] {
                        lt[x][z] = true;
                    }
                }
            }
        }

        // A listed cover must not be implied through an intermediate element.
        for &(x, y) in &covers {
            for via in 0..n {
                if lt[x][via] && lt[via][y] {
                    return Err(PosetError::RedundantCover { x, y, via });
                }
            }
        }

        let mut leq = lt;
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }

        let mut covers_sorted = covers;
        covers_sorted.sort_unstable();
        covers_sorted.dedup();

        Ok(FinitePoset { names, covers: covers_sorted, leq, covers_up, covers_down })
    }

    /// Build a poset from an arbitrary set of strict relations `x < y`.
    /// The transitive closure is taken and then reduced to covers.
    pub fn from_relations(
        names: Vec<String>,
        relations: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        let n = names.len();
        for &(x, y) in &relations {
            let bad = if x >= n { Some(x) } else if y >= n { Some(y) } else { None };
            if let Some(index) = bad {
                return Err(PosetError::IndexOutOfRange { index, len: n });
            }
            if x == y {
                return Err(PosetError::ReflexiveCover { x, y });
            }
        }
        let mut lt = vec![vec![false; n]; n];
        for &(x, y) in &relations {
            lt[x][y] = true;
        }
        // Floyd–Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        for (x, row) in lt.iter().enumerate() {
            if row[x] {
                return Err(PosetError::Cyclic(x));
            }
        }
        // Transitive reduction: x < y is a cover iff nothing sits strictly between.
        let mut covers = Vec::new();
        for x in 0..n {
            'pair: for y in 0..n {
                if !lt[x][y] {
                    continue;
                }
                for z in 0..n {
                    if lt[x][z] && lt[z][y] {
                        continue 'pair;
                    }
                }
                covers.push((x, y));
            }
        }
        Self::from_covers(names, covers)
    }

    /// A chain `0 < 1 < ... < n-1` with the given names.
    pub fn chain(names: Vec<String>) -> Result<Self, PosetError> {
        let covers = (1..names.len()).map(|i| (i - 1, i)).collect();
        Self::from_covers(names, covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Non-strict order relation.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// Strict order relation.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    /// All covers `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.covers_up[x]
    }

    pub fn covers_down(&self, y: usize) -> &[usize] {
        &self.covers_down[y]
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.covers_up[x].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.covers_down[x].is_empty()).collect()
    }

    pub fn unique_top(&self) -> Result<usize, PosetError> {
        let maxs = self.maximal_elements();
        if maxs.len() == 1 {
            Ok(maxs[0])
        } else {
            Err(PosetError::NoUniqueTop(maxs))
        }
    }

    pub fn unique_bottom(&self) -> Result<usize, PosetError> {
        let mins = self.minimal_elements();
        if mins.len() == 1 {
            Ok(mins[0])
        } else {
            Err(PosetError::NoUniqueBottom(mins))
        }
    }

    /// All strictly increasing sequences `x_1 < ... < x_k` avoiding the
    /// excluded element, in lexicographic order. For `k = 0` this is the
    /// single empty sequence.
    pub fn strict_chains(&self, k: usize, exclude: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.extend_chains(k, exclude, true, &mut current, &mut out);
        out
    }

    /// All weakly increasing sequences `x_1 <= ... <= x_k` (consecutive
    /// members comparable, repeats allowed) avoiding the excluded element,
    /// in lexicographic order.
    pub fn multi_sequences(&self, k: usize, exclude: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.extend_chains(k, exclude, false, &mut current, &mut out);
        out
    }

    fn extend_chains(
        &self,
        k: usize,
        exclude: Option<usize>,
        strict: bool,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for x in 0..self.len() {
            if exclude == Some(x) {
                continue;
            }
            if let Some(&last) = current.last() {
                let ok = if strict { self.lt(last, x) } else { self.leq(last, x) };
                if !ok {
                    continue;
                }
            }
            current.push(x);
            self.extend_chains(k, exclude, strict, current, out);
            current.pop();
        }
    }

    /// Length (number of elements) of the longest strict chain avoiding the
    /// excluded element.
    pub fn longest_chain(&self, exclude: Option<usize>) -> usize {
        let mut memo = vec![0usize; self.len()];
        let order = topological_order(self.len(), &self.covers_up).expect("stored poset is acyclic");
        let mut best = 0;
        for &x in order.iter().rev() {
            if exclude == Some(x) {
                continue;
            }
            let mut m = 1;
            for y in 0..self.len() {
                if self.lt(x, y) && exclude != Some(y) && memo[y] + 1 > m {
                    m = memo[y] + 1;
                }
            }
            memo[x] = m;
            best = best.max(m);
        }
        best
    }

    /// All saturated chains `x = z_0 <c z_1 <c ... <c z_m = y` from `x` to
    /// `y`, each step a cover.
    pub fn saturated_chains_between(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if !self.leq(x, y) {
            return out;
        }
        let mut current = vec![x];
        self.extend_saturated(y, &mut current, &mut out);
        out
    }

    fn extend_saturated(&self, y: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *current.last().expect("chain is nonempty");
        if last == y {
            out.push(current.clone());
            return;
        }
        for &z in &self.covers_up[last] {
            if self.leq(z, y) {
                current.push(z);
                self.extend_saturated(y, current, out);
                current.pop();
            }
        }
    }

    /// The rank function of a graded poset: every minimal element has rank 0
    /// and ranks increase by exactly one along covers. Fails with a witness
    /// element if no such function exists.
    pub fn rank_function(&self) -> Result<Vec<usize>, PosetError> {
        let order = topological_order(self.len(), &self.covers_up).expect("stored poset is acyclic");
        let mut rank = vec![0usize; self.len()];
        for &x in &order {
            if self.covers_down[x].is_empty() {
                rank[x] = 0;
                continue;
            }
            let expected = rank[self.covers_down[x][0]] + 1;
            for &z in &self.covers_down[x] {
                if rank[z] + 1 != expected {
                    return Err(PosetError::NotGraded(x));
                }
            }
            rank[x] = expected;
        }
        Ok(rank)
    }

    /// The same elements with the order reversed.
    pub fn opposite(&self) -> Self {
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        Self::from_covers(self.names.clone(), covers).expect("reversed covers stay irredundant")
    }

    /// Cartesian product order. Element `(i, j)` gets index `i * other.len() + j`;
    /// covers change exactly one coordinate by a cover.
    pub fn product(&self, other: &FinitePoset) -> Self {
        let n2 = other.len();
        let mut names = Vec::with_capacity(self.len() * n2);
        for i in 0..self.len() {
            for j in 0..n2 {
                names.push(format!("({},{})", self.names[i], other.names[j]));
            }
        }
        let mut covers = Vec::new();
        for i in 0..self.len() {
            for j in 0..n2 {
                for &i2 in &self.covers_up[i] {
                    covers.push((i * n2 + j, i2 * n2 + j));
                }
                for &j2 in &other.covers_up[j] {
                    covers.push((i * n2 + j, i * n2 + j2));
                }
            }
        }
        Self::from_covers(names, covers).expect("product of covers is a Hasse diagram")
    }
}

/// A linear extension: every element appears after everything below it.
/// Fails if the cover graph has a cycle.
fn topological_order(n: usize, covers_up: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let mut indegree = vec![0usize; n];
    for ups in covers_up {
        for &y in ups {
            indegree[y] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &covers_up[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                order.push(y);
            }
        }
    }
    if order.len() != n {
        let stuck = (0..n).find(|&x| indegree[x] > 0).unwrap_or(0);
        return Err(PosetError::Cyclic(stuck));
    }
    Ok(order)
}
