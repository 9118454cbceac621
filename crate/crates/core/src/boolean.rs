//! Boolean lattices of subsets, with the sign conventions used by the cube
//! complex.
//!
//! An element of `BooleanLattice::new(r)` is a bitmask `x < 2^r`; bit `t`
//! means the subset contains atom `t` (displayed 1-based as `a1`, .., `ar`).
//! The element's index in the carrier poset equals its bitmask, so rank-`k`
//! elements are exactly the masks with `k` bits set.

use crate::poset::{FinitePoset, PosetError};

/// The lattice of subsets of `{a1, .., ar}` ordered by inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BooleanLattice {
    rank: u32,
}

impl BooleanLattice {
    /// Ranks above 16 are rejected: the carrier poset stores its full order
    /// relation, which grows quadratically in `2^r`.
    pub fn new(rank: u32) -> Result<Self, PosetError> {
        if rank > 16 {
            return Err(PosetError::RankTooLarge(rank));
        }
        Ok(BooleanLattice { rank })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        1usize << self.rank
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> u32 {
        ((1u64 << self.rank) - 1) as u32
    }

    pub fn rank_of(&self, x: u32) -> u32 {
        x.count_ones()
    }

    pub fn contains(&self, x: u32) -> bool {
        u64::from(x) < (1u64 << self.rank)
    }

    /// Subset name: `0` for the empty set, otherwise the atoms in order,
    /// e.g. `a1a3`.
    pub fn name(&self, x: u32) -> String {
        if x == 0 {
            return "0".to_string();
        }
        let mut s = String::new();
        for t in 0..self.rank {
            if x & (1 << t) != 0 {
                s.push_str(&format!("a{}", t + 1));
            }
        }
        s
    }

    /// All elements of the given rank, ascending as bitmasks.
    pub fn elements_of_rank(&self, k: u32) -> Vec<u32> {
        (0..self.len() as u32).filter(|&x| x.count_ones() == k).collect()
    }

    /// The carrier poset: element `i` is the bitmask `i`.
    pub fn poset(&self) -> FinitePoset {
        let names = (0..self.len() as u32).map(|x| self.name(x)).collect();
        let mut covers = Vec::new();
        for x in 0..self.len() as u32 {
            for t in 0..self.rank {
                if x & (1 << t) == 0 {
                    covers.push((x as usize, (x | (1 << t)) as usize));
                }
            }
        }
        FinitePoset::from_covers(names, covers).expect("subset covers form a Hasse diagram")
    }

    /// The sign attached to the cover `x < y` where `y = x + atom t`:
    /// `(-1)^j` with `j` the number of atoms of `x` below `t`.
    pub fn cover_sign(&self, x: u32, y: u32) -> Result<i64, PosetError> {
        let diff = x ^ y;
        if !self.contains(y) || (x & y) != x || diff.count_ones() != 1 {
            return Err(PosetError::NotComparable { x: x as usize, y: y as usize });
        }
        let t = diff.trailing_zeros();
        let below = x & ((1u32 << t) - 1);
        Ok(if below.count_ones() % 2 == 0 { 1 } else { -1 })
    }

    /// Product of the cover signs along a saturated chain.
    pub fn chain_sign(&self, chain: &[u32]) -> Result<i64, PosetError> {
        let mut sign = 1;
        for pair in chain.windows(2) {
            sign *= self.cover_sign(pair[0], pair[1])?;
        }
        Ok(sign)
    }

    /// All saturated chains from `x` up to the full set, each step adding one
    /// atom.
    pub fn saturated_chains_to_top(&self, x: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![x];
        self.extend_to_top(&mut current, &mut out);
        out
    }

    fn extend_to_top(&self, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let last = *current.last().expect("chain is nonempty");
        if last == self.top() {
            out.push(current.clone());
            return;
        }
        for t in 0..self.rank {
            if last & (1 << t) == 0 {
                current.push(last | (1 << t));
                self.extend_to_top(current, out);
                current.pop();
            }
        }
    }

    /// Split along one atom (0-based): the sublattice of subsets avoiding it,
    /// the sublattice of subsets containing it, and the embeddings back into
    /// this lattice.
    pub fn split_at_atom(&self, atom: usize) -> Result<AtomSplit, PosetError> {
        if atom as u32 >= self.rank {
            return Err(PosetError::AtomOutOfRange { atom, rank: self.rank });
        }
        let half = BooleanLattice::new(self.rank - 1)?;
        Ok(AtomSplit { ambient: *self, half, atom: atom as u32 })
    }
}

/// The decomposition of a boolean lattice along one atom. Both halves are
/// boolean lattices of one rank lower, on the remaining atoms in order.
#[derive(Clone, Copy, Debug)]
pub struct AtomSplit {
    ambient: BooleanLattice,
    half: BooleanLattice,
    atom: u32,
}

impl AtomSplit {
    pub fn atom(&self) -> u32 {
        self.atom
    }

    /// The lattice both halves are copies of (rank one lower).
    pub fn half(&self) -> BooleanLattice {
        self.half
    }

    pub fn ambient(&self) -> BooleanLattice {
        self.ambient
    }

    /// Embed a subset of the remaining atoms as a subset avoiding the split
    /// atom.
    pub fn embed_lower(&self, x: u32) -> u32 {
        self.insert_bit(x, 0)
    }

    /// Embed a subset of the remaining atoms as a subset containing the split
    /// atom.
    pub fn embed_upper(&self, x: u32) -> u32 {
        self.insert_bit(x, 1)
    }

    /// Inverse of the embeddings: strip the split atom's bit.
    pub fn project(&self, y: u32) -> u32 {
        let low = y & ((1 << self.atom) - 1);
        let high = y >> (self.atom + 1);
        (high << self.atom) | low
    }

    /// Does the ambient element contain the split atom?
    pub fn in_upper(&self, y: u32) -> bool {
        y & (1 << self.atom) != 0
    }

    fn insert_bit(&self, x: u32, bit: u32) -> u32 {
        let low = x & ((1 << self.atom) - 1);
        let high = x >> self.atom;
        (high << (self.atom + 1)) | (bit << self.atom) | low
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let b = BooleanLattice::new(3).unwrap();
        assert_eq!(b.name(0), "0");
        assert_eq!(b.name(0b101), "a1a3");
        assert_eq!(b.name(b.top()), "a1a2a3");
    }

    #[test]
    fn carrier_poset_matches_inclusion() {
        let b = BooleanLattice::new(2).unwrap();
        let p = b.poset();
        assert_eq!(p.len(), 4);
        assert!(p.lt(0, 3));
        assert!(!p.leq(1, 2));
        assert_eq!(p.unique_top().unwrap(), 3);
        assert_eq!(p.rank_function().unwrap(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn cover_signs_in_rank_three() {
        let b = BooleanLattice::new(3).unwrap();
        // adding the lowest atom never passes an existing one
        assert_eq!(b.cover_sign(0, 0b001).unwrap(), 1);
        assert_eq!(b.cover_sign(0b010, 0b011).unwrap(), 1);
        // adding a2 to {a1}: one atom below -> -1
        assert_eq!(b.cover_sign(0b001, 0b011).unwrap(), -1);
        // adding a3 to {a1,a2}: two atoms below -> +1
        assert_eq!(b.cover_sign(0b011, 0b111).unwrap(), 1);
        // adding a2 to {a1,a3}: one atom below -> -1
        assert_eq!(b.cover_sign(0b101, 0b111).unwrap(), -1);
        assert!(b.cover_sign(0b011, 0b101).is_err());
    }

    #[test]
    fn chain_sign_multiplies() {
        let b = BooleanLattice::new(3).unwrap();
        // 0 < a1 < a1a2 < a1a2a3: signs +1, -1, +1
        assert_eq!(b.chain_sign(&[0b000, 0b001, 0b011, 0b111]).unwrap(), -1);
        assert_eq!(b.chain_sign(&[0b001, 0b011, 0b111]).unwrap(), -1);
    }

    #[test]
    fn saturated_chain_count_is_factorial() {
        let b = BooleanLattice::new(3).unwrap();
        assert_eq!(b.saturated_chains_to_top(0).len(), 6);
        assert_eq!(b.saturated_chains_to_top(0b010).len(), 2);
        assert_eq!(b.saturated_chains_to_top(b.top()), vec![vec![0b111]]);
    }

    #[test]
    fn split_embeddings() {
        let b = BooleanLattice::new(3).unwrap();
        let s = b.split_at_atom(1).unwrap(); // split along a2
        // lower copy: subsets of {a1, a3}
        assert_eq!(s.embed_lower(0b00), 0b000);
        assert_eq!(s.embed_lower(0b01), 0b001);
        assert_eq!(s.embed_lower(0b10), 0b100);
        assert_eq!(s.embed_lower(0b11), 0b101);
        // upper copy: same plus a2
        assert_eq!(s.embed_upper(0b00), 0b010);
        assert_eq!(s.embed_upper(0b11), 0b111);
        assert_eq!(s.project(0b111), 0b11);
        assert!(s.in_upper(0b010));
        assert!(!s.in_upper(0b101));
    }

    #[test]
    fn rank_enumeration() {
        let b = BooleanLattice::new(4).unwrap();
        assert_eq!(b.elements_of_rank(2).len(), 6);
        assert_eq!(b.elements_of_rank(0), vec![0]);
        assert_eq!(b.elements_of_rank(4), vec![0b1111]);
    }
}
