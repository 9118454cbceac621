//! The chain maps connecting the complexes of coloured posets: maps induced
//! by morphisms, the contracting homotopy of the degenerate part, the
//! comparison from the cube complex to the strict chain complex, its relative
//! version into a quotient, and the degree-dropping retraction of a gluing
//! quotient.
//!
//! Everything returned as a [`ChainMap`] is validated against both
//! differentials at construction time, so sign conventions are checked on
//! every instance these functions touch.

use crate::boolean::{AtomSplit, BooleanLattice};
use crate::coloured::{ColouredPoset, PosetMorphism};
use crate::complex::{
    chain_offsets, cube_offsets, has_repeat, BasisLabel, ChainComplex, ChainMap, ComplexError,
};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// The chain map induced by a morphism of coloured posets between their
/// strict chain complexes. A chain maps to its image chain carrying the
/// component at the head, or to zero when members collide.
pub fn chain_map_of_morphism<R: Ring>(
    m: &PosetMorphism<R>,
    src_cp: &ColouredPoset<R>,
    src_cx: &ChainComplex<R>,
    tgt_cx: &ChainComplex<R>,
) -> Result<ChainMap<R>, ComplexError> {
    let ring = src_cx.ring().clone();
    let mut maps = Vec::with_capacity(src_cx.top() + 1);
    for n in 0..=src_cx.top() {
        let mut out = Matrix::zero(&ring, tgt_cx.rank(n as i64), src_cx.rank(n as i64));
        if n > tgt_cx.top() {
            maps.push(out);
            continue;
        }
        let tgt_offsets = chain_offsets(tgt_cx.basis(n));
        for (col, label) in src_cx.basis(n).iter().enumerate() {
            let BasisLabel::Chain { seq, vec: 0 } = label else { continue };
            let image: Vec<usize> = seq.iter().map(|&x| m.image_of(x)).collect();
            if has_repeat(&image) {
                continue;
            }
            let Some(&to) = tgt_offsets.get(&image) else { continue };
            let head = *seq.first().unwrap_or(&src_cp.top());
            let tau = m.component(head);
            for i in 0..tau.rows() {
                for j in 0..tau.cols() {
                    let v = ring.add(out.get(to + i, col + j), tau.get(i, j));
                    out.set(to + i, col + j, v);
                }
            }
        }
        maps.push(out);
    }
    ChainMap::new(src_cx, tgt_cx, 0, maps)
}

/// The degree-raising contraction of the degenerate complex: a basis chain
/// whose first repeated member runs an even number of times gains one more
/// copy of it, with sign alternating in the position of the run; odd runs map
/// to zero. Returns one matrix per degree below the top (the top of a
/// truncation has no room above).
pub fn contracting_homotopy<R: Ring>(
    d_cx: &ChainComplex<R>,
) -> Result<Vec<Matrix<R>>, ComplexError> {
    let ring = d_cx.ring().clone();
    let mut out = Vec::new();
    for n in 0..d_cx.top() {
        let up_offsets = chain_offsets(d_cx.basis(n + 1));
        let mut h = Matrix::zero(&ring, d_cx.rank(n as i64 + 1), d_cx.rank(n as i64));
        for (idx, label) in d_cx.basis(n).iter().enumerate() {
            let BasisLabel::Chain { seq, vec } = label else { continue };
            let Some(p) = seq.windows(2).position(|w| w[0] == w[1]) else { continue };
            let run = seq[p..].iter().take_while(|&&x| x == seq[p]).count();
            if run % 2 != 0 {
                continue;
            }
            let mut extended = seq.clone();
            extended.insert(p, seq[p]);
            let to = up_offsets
                .get(&extended)
                .ok_or(ComplexError::MissingLabel { degree: n as i64 + 1 })?;
            let one = if p % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
            h.set(to + vec, idx, one);
        }
        out.push(h);
    }
    Ok(out)
}

/// Check `id = h d + d h` in every degree where both sides are defined
/// (all degrees strictly below the truncation top).
pub fn homotopy_gives_identity<R: Ring>(
    d_cx: &ChainComplex<R>,
    h: &[Matrix<R>],
) -> Result<bool, ComplexError> {
    let ring = d_cx.ring().clone();
    let h_at = |n: i64| -> Matrix<R> {
        if n >= 0 && (n as usize) < h.len() {
            h[n as usize].clone()
        } else {
            Matrix::zero(&ring, d_cx.rank(n + 1), d_cx.rank(n))
        }
    };
    for n in 0..d_cx.top() as i64 {
        let hd = h_at(n - 1).mul(&d_cx.diff(n))?;
        let dh = d_cx.diff(n + 1).mul(&h_at(n))?;
        let sum = hd.add(&dh)?;
        if sum != Matrix::identity(&ring, d_cx.rank(n)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The comparison from the cube complex to the strict chain complex of the
/// same coloured Boolean lattice: a fiber vector at `x` is sent along every
/// saturated chain from `x` to the top, weighted by the product of cover
/// signs, landing on the chain with its final top removed.
pub fn cube_comparison<R: Ring>(
    lattice: &BooleanLattice,
    k_cx: &ChainComplex<R>,
    c_cx: &ChainComplex<R>,
) -> Result<ChainMap<R>, ComplexError> {
    let ring = k_cx.ring().clone();
    let mut maps = Vec::with_capacity(k_cx.top() + 1);
    for n in 0..=k_cx.top() {
        let c_offsets = chain_offsets(c_cx.basis(n));
        let k_offsets = cube_offsets(k_cx.basis(n));
        let mut out = Matrix::zero(&ring, c_cx.rank(n as i64), k_cx.rank(n as i64));
        for (&x, &from) in &k_offsets {
            let fiber = count_fiber(k_cx.basis(n), from);
            for chain in lattice.saturated_chains_to_top(x) {
                let sign = lattice.chain_sign(&chain).expect("saturated chain of covers");
                let seq: Vec<usize> = chain[..chain.len() - 1].iter().map(|&e| e as usize).collect();
                let to = *c_offsets
                    .get(&seq)
                    .ok_or(ComplexError::MissingLabel { degree: n as i64 })?;
                let term = if sign < 0 { ring.neg(&ring.one()) } else { ring.one() };
                for v in 0..fiber {
                    let val = ring.add(out.get(to + v, from + v), &term);
                    out.set(to + v, from + v, val);
                }
            }
        }
        maps.push(out);
    }
    ChainMap::new(k_cx, c_cx, 0, maps)
}

/// The relative comparison: from the cube complex of the half-lattice
/// avoiding the split atom into the quotient of the ambient strict chain
/// complex by the chains lying in the other half. Same chain sum as
/// [`cube_comparison`], one degree up, with chains through the upper half
/// killed by the quotient.
pub fn relative_cube_comparison<R: Ring>(
    split: &AtomSplit,
    k0_cx: &ChainComplex<R>,
    q_cx: &ChainComplex<R>,
) -> Result<ChainMap<R>, ComplexError> {
    let lattice = split.ambient();
    let ring = k0_cx.ring().clone();
    let mut maps = Vec::with_capacity(k0_cx.top() + 1);
    for n in 0..=k0_cx.top() {
        let q_offsets = chain_offsets(q_cx.basis(n + 1));
        let k_offsets = cube_offsets(k0_cx.basis(n));
        let mut out = Matrix::zero(&ring, q_cx.rank(n as i64 + 1), k0_cx.rank(n as i64));
        for (&x0, &from) in &k_offsets {
            let fiber = count_fiber(k0_cx.basis(n), from);
            let x = split.embed_lower(x0);
            for chain in lattice.saturated_chains_to_top(x) {
                let sign = lattice.chain_sign(&chain).expect("saturated chain of covers");
                let seq: Vec<usize> = chain[..chain.len() - 1].iter().map(|&e| e as usize).collect();
                let Some(&to) = q_offsets.get(&seq) else { continue };
                let term = if sign < 0 { ring.neg(&ring.one()) } else { ring.one() };
                for v in 0..fiber {
                    let val = ring.add(out.get(to + v, from + v), &term);
                    out.set(to + v, from + v, val);
                }
            }
        }
        maps.push(out);
    }
    ChainMap::new(k0_cx, q_cx, 1, maps)
}

/// The degree-dropping retraction out of a gluing quotient: a chain lying
/// wholly in the first part and ending at that part's top loses its final
/// member; everything else dies. `part\_of[e]` translates a glued element to
/// its index in the first part, `part_top` is the glued index of that part's
/// top, and the target is the strict chain complex of the first part.
pub fn quotient_retraction<R: Ring>(
    q_cx: &ChainComplex<R>,
    c1_cx: &ChainComplex<R>,
    part_of: &[Option<usize>],
    part_top: usize,
) -> Result<ChainMap<R>, ComplexError> {
    let ring = q_cx.ring().clone();
    let mut maps = Vec::with_capacity(q_cx.top() + 1);
    for n in 0..=q_cx.top() {
        let mut out = Matrix::zero(&ring, c1_cx.rank(n as i64 - 1), q_cx.rank(n as i64));
        if n == 0 || n - 1 > c1_cx.top() {
            maps.push(out);
            continue;
        }
        let c1_offsets = chain_offsets(c1_cx.basis(n - 1));
        for (idx, label) in q_cx.basis(n).iter().enumerate() {
            let BasisLabel::Chain { seq, vec } = label else { continue };
            if seq.last() != Some(&part_top) {
                continue;
            }
            let translated: Option<Vec<usize>> =
                seq[..seq.len() - 1].iter().map(|&e| part_of[e]).collect();
            let Some(translated) = translated else { continue };
            let to = *c1_offsets
                .get(&translated)
                .ok_or(ComplexError::MissingLabel { degree: n as i64 - 1 })?;
            out.set(to + vec, idx, ring.one());
        }
        maps.push(out);
    }
    ChainMap::new(q_cx, c1_cx, -1, maps)
}

/// Number of consecutive labels at `from` sharing the carrier of the label
/// at `from` (the fiber rank it enumerates).
fn count_fiber(basis: &[BasisLabel], from: usize) -> usize {
    let key = |l: &BasisLabel| match l {
        BasisLabel::Chain { seq, .. } => (Some(seq.clone()), None),
        BasisLabel::Cube { elem, .. } => (None, Some(*elem)),
    };
    let anchor = key(&basis[from]);
    basis[from..].iter().take_while(|l| key(l) == anchor).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloured::{boolean_split, glue, ColouredPoset, PosetMorphism};
    use crate::complex::{cube_complex, full_complex, poset_complex, quotient, subcomplex};
    use crate::poset::FinitePoset;
    use crate::ring::{Integers, Rationals};

    fn constant_square() -> (BooleanLattice, ColouredPoset<Integers>) {
        let b = BooleanLattice::new(2).unwrap();
        let cp = ColouredPoset::constant(b.poset(), Integers, 1).unwrap();
        (b, cp)
    }

    #[test]
    fn morphism_collapse_kills_degenerate_chains() {
        let diamond = FinitePoset::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let src_cp = ColouredPoset::constant(diamond, Integers, 1).unwrap();
        let tgt_cp = ColouredPoset::constant(chain, Integers, 1).unwrap();
        let taus = (0..4).map(|_| Matrix::identity(&Integers, 1)).collect();
        let m = PosetMorphism::new(&src_cp, &tgt_cp, vec![0, 0, 0, 1], taus).unwrap();
        let src_cx = poset_complex(&src_cp).unwrap();
        let tgt_cx = poset_complex(&tgt_cp).unwrap();
        let f = chain_map_of_morphism(&m, &src_cp, &src_cx, &tgt_cx).unwrap();
        assert_eq!(f.map_at(0), Matrix::from_i64_rows(&Integers, &[vec![1]]).unwrap());
        assert_eq!(f.map_at(1), Matrix::from_i64_rows(&Integers, &[vec![1, 1, 1]]).unwrap());
        // both 2-chains collide in the image and die
        assert!(f.map_at(2).is_zero());
    }

    #[test]
    fn homotopy_contracts_degenerate_part() {
        let chain = FinitePoset::chain(vec!["x".into(), "1".into()]).unwrap();
        let cp = ColouredPoset::constant(chain, Rationals, 1).unwrap();
        let s = full_complex(&cp, 5).unwrap();
        let (d_part, _) = subcomplex(&s, |_, _, l| match l {
            BasisLabel::Chain { seq, .. } => has_repeat(seq),
            _ => false,
        })
        .unwrap();
        assert_eq!(
            (0..=5).map(|n| d_part.rank(n)).collect::<Vec<_>>(),
            vec![0, 0, 1, 1, 1, 1]
        );
        let h = contracting_homotopy(&d_part).unwrap();
        assert!(homotopy_gives_identity(&d_part, &h).unwrap());
        // x^2 has an even run at position 0: h adds one copy with sign +1
        assert_eq!(h[2], Matrix::from_i64_rows(&Rationals, &[vec![1]]).unwrap());
    }

    #[test]
    fn comparison_map_on_the_square() {
        let (b, cp) = constant_square();
        let k = cube_complex(&b, &cp).unwrap();
        let c = poset_complex(&cp).unwrap();
        let phi = cube_comparison(&b, &k, &c).unwrap();
        assert_eq!(phi.map_at(0), Matrix::identity(&Integers, 1));
        assert_eq!(
            phi.map_at(1),
            Matrix::from_i64_rows(&Integers, &[vec![0, 0], vec![-1, 0], vec![0, 1]]).unwrap()
        );
        assert_eq!(
            phi.map_at(2),
            Matrix::from_i64_rows(&Integers, &[vec![-1], vec![1]]).unwrap()
        );
    }

    #[test]
    fn retraction_and_relative_comparison_factor_the_absolute_one() {
        let (b, cp) = constant_square();
        let parts = boolean_split(&b, &cp, 0).unwrap();
        let c_ambient = poset_complex(&cp).unwrap();
        let in_upper = |l: &BasisLabel| match l {
            BasisLabel::Chain { seq, .. } => {
                seq.iter().all(|&e| parts.split.in_upper(e as u32))
            }
            _ => false,
        };
        let (q_cx, _proj) = quotient(&c_ambient, |_, _, l| in_upper(l)).unwrap();
        assert_eq!((q_cx.rank(0), q_cx.rank(1), q_cx.rank(2)), (0, 2, 2));

        let c_lower = poset_complex(&parts.lower).unwrap();
        let part_of: Vec<Option<usize>> = (0..4u32)
            .map(|e| {
                if parts.split.in_upper(e) {
                    None
                } else {
                    Some(parts.split.project(e) as usize)
                }
            })
            .collect();
        let part_top = parts.split.embed_lower(1) as usize;
        let pi = quotient_retraction(&q_cx, &c_lower, &part_of, part_top).unwrap();
        assert_eq!(pi.shift(), -1);
        assert_eq!(pi.map_at(1), Matrix::from_i64_rows(&Integers, &[vec![0, 1]]).unwrap());
        assert_eq!(pi.map_at(2), Matrix::from_i64_rows(&Integers, &[vec![0, 1]]).unwrap());

        let k0 = cube_complex(&parts.split.half(), &parts.lower).unwrap();
        let phi_rel = relative_cube_comparison(&parts.split, &k0, &q_cx).unwrap();
        assert_eq!(phi_rel.shift(), 1);
        assert_eq!(
            phi_rel.map_at(0),
            Matrix::from_i64_rows(&Integers, &[vec![0], vec![1]]).unwrap()
        );
        assert_eq!(
            phi_rel.map_at(1),
            Matrix::from_i64_rows(&Integers, &[vec![-1], vec![1]]).unwrap()
        );

        // the retraction undoes the relative comparison, giving the
        // comparison of the lower half on the nose
        let composite = pi.compose(&phi_rel).unwrap();
        let phi_lower = cube_comparison(&parts.split.half(), &k0, &c_lower).unwrap();
        assert_eq!(composite, phi_lower);
    }

    #[test]
    fn gluing_two_points_retraction() {
        // two one-point posets glued along tau = (2): glued is a 2-chain
        let point = FinitePoset::from_covers(vec!["1".into()], vec![]).unwrap();
        let p1 = ColouredPoset::constant(point.clone(), Integers, 1).unwrap();
        let p2 = ColouredPoset::constant(point, Integers, 1).unwrap();
        let tau = Matrix::from_i64_rows(&Integers, &[vec![2]]).unwrap();
        let m = PosetMorphism::new(&p1, &p2, vec![0], vec![tau]).unwrap();
        let glued = glue(&p1, &p2, &m).unwrap();
        let c_glued = poset_complex(&glued.poset).unwrap();
        assert_eq!((c_glued.rank(0), c_glued.rank(1)), (1, 1));
        let (q_cx, _) = quotient(&c_glued, |_, _, l| match l {
            BasisLabel::Chain { seq, .. } => seq.iter().all(|&e| e >= glued.first_len),
            _ => false,
        })
        .unwrap();
        // Q keeps only the chain at the first part's point
        assert_eq!((q_cx.rank(0), q_cx.rank(1)), (0, 1));
        let c1 = poset_complex(&p1).unwrap();
        let part_of: Vec<Option<usize>> = vec![Some(0), None];
        let pi = quotient_retraction(&q_cx, &c1, &part_of, 0).unwrap();
        assert_eq!(pi.map_at(1), Matrix::identity(&Integers, 1));
    }
}
