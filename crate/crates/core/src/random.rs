//! Seeded random posets, colourings, and morphisms.
//!
//! Colourings are generated constructively rather than by rejection: the
//! elements are processed from the top of the poset downwards, and at each
//! element the outgoing cover maps are drawn jointly from the integer
//! solution lattice of the commutativity constraints against the part of
//! the functor already fixed above. Sampling over the integers means one
//! template instantiates over Z, Q, and every F_p alike. Natural
//! transformations between two colourings are drawn the same way, from the
//! joint integer kernel of the naturality constraints over all covers.

use std::collections::HashMap;

use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boolean::BooleanLattice;
use crate::coloured::{ColouredData, ColouredPoset, MorphismData};
use crate::matrix::Matrix;
use crate::poset::FinitePoset;
use crate::ring::Integers;
use crate::snf::integer_kernel;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset on `n` elements with a unique maximal element, and a
/// unique minimal one when requested. Element indices form a linear
/// extension, so acyclicity is automatic.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, require_bottom: bool) -> FinitePoset {
    assert!(n >= 1, "a poset needs at least one element");
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let top = n - 1;
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if j == top || (require_bottom && i == 0) || rng.gen_bool(0.4) {
                relations.push((i, j));
            }
        }
    }
    FinitePoset::from_relations(names, relations).expect("generated relations are acyclic")
}

/// Minimal elements of the set of common upper bounds of `a` and `b`.
fn minimal_common_upper_bounds(poset: &FinitePoset, a: usize, b: usize) -> Vec<usize> {
    let ups: Vec<usize> = (0..poset.len())
        .filter(|&u| poset.leq(a, u) && poset.leq(b, u))
        .collect();
    ups.iter()
        .copied()
        .filter(|&u| !ups.iter().any(|&v| v != u && poset.leq(v, u)))
        .collect()
}

/// A random small integer vector from the solution lattice of
/// `constraints . v = 0`, preferring a nonzero one when the lattice allows.
fn kernel_sample(rng: &mut ChaCha8Rng, constraints: &Matrix<Integers>) -> Vec<BigInt> {
    let unknowns = constraints.cols();
    let basis = integer_kernel(constraints);
    let mut v = vec![BigInt::from(0); unknowns];
    for _ in 0..4 {
        for x in v.iter_mut() {
            *x = BigInt::from(0);
        }
        for j in 0..basis.cols() {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 {
                let c = BigInt::from(c);
                for (i, x) in v.iter_mut().enumerate() {
                    *x += basis.get(i, j) * &c;
                }
            }
        }
        if v.iter().any(|x| *x != BigInt::from(0)) {
            break;
        }
    }
    v
}

/// Offsets into the stacked-column flattening of a list of matrix shapes.
fn offsets(shapes: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(shapes.len());
    let mut total = 0;
    for &(r, c) in shapes {
        offs.push(total);
        total += r * c;
    }
    (offs, total)
}

/// Read a `rows x cols` matrix out of a flat vector of stacked columns.
fn unflatten(v: &[BigInt], offset: usize, rows: usize, cols: usize) -> Matrix<Integers> {
    let mut m = Matrix::zero(&Integers, rows, cols);
    for c in 0..cols {
        for r in 0..rows {
            m.set(r, c, v[offset + c * rows + r].clone());
        }
    }
    m
}

/// Copy `block` (negated on request) into the constraint rows starting at
/// `(row_offset, col_offset)`.
fn place_block(
    rows: &mut [Vec<BigInt>],
    row_offset: usize,
    col_offset: usize,
    block: &Matrix<Integers>,
    negate: bool,
) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let val = block.get(i, j).clone();
            rows[row_offset + i][col_offset + j] = if negate { -val } else { val };
        }
    }
}

fn constraint_matrix(rows: Vec<Vec<BigInt>>, width: usize) -> Matrix<Integers> {
    if rows.is_empty() {
        Matrix::zero(&Integers, 0, width)
    } else {
        Matrix::from_bigint_rows(rows).expect("constraint rows share one width")
    }
}

/// A random colouring of `poset` with fiber ranks at most `max_rank`
/// (occasionally zero). For each element the outgoing cover maps are solved
/// jointly: for every pair of covers and every minimal common upper bound
/// the two composites into it must agree, which is a homogeneous integer
/// linear system in the unknown entries. The result always validates.
pub fn random_colouring(
    rng: &mut ChaCha8Rng,
    poset: &FinitePoset,
    max_rank: usize,
) -> ColouredData {
    assert!(max_rank >= 1, "max_rank must be positive");
    let n = poset.len();
    let ranks: Vec<usize> = (0..n)
        .map(|_| {
            if rng.gen_ratio(1, 12) {
                0
            } else {
                rng.gen_range(1..=max_rank)
            }
        })
        .collect();

    // Process every element after everything above it: sort by the number
    // of elements weakly above, which strictly decreases going up.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| poset.leq(x, y)).count());

    let mut comp: HashMap<(usize, usize), Matrix<Integers>> = HashMap::new();
    let mut edges: Vec<((usize, usize), Matrix<Integers>)> = Vec::new();

    for &x in &order {
        let covers = poset.covers_up(x).to_vec();
        if covers.is_empty() {
            continue; // the top
        }
        let shapes: Vec<(usize, usize)> = covers.iter().map(|&z| (ranks[z], ranks[x])).collect();
        let (offs, total) = offsets(&shapes);

        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..covers.len() {
            for j in i + 1..covers.len() {
                for u in minimal_common_upper_bounds(poset, covers[i], covers[j]) {
                    // distinct covers of x are incomparable, so u sits
                    // strictly above both and their composites are known
                    let via_i = comp[&(covers[i], u)].clone();
                    let via_j = comp[&(covers[j], u)].clone();
                    let base = rows.len();
                    for _ in 0..ranks[u] * ranks[x] {
                        rows.push(vec![BigInt::from(0); total]);
                    }
                    let left = Matrix::identity(&Integers, ranks[x]).kronecker(&via_i);
                    place_block(&mut rows, base, offs[i], &left, false);
                    let right = Matrix::identity(&Integers, ranks[x]).kronecker(&via_j);
                    place_block(&mut rows, base, offs[j], &right, true);
                }
            }
        }
        let v = kernel_sample(rng, &constraint_matrix(rows, total));
        for (i, &z) in covers.iter().enumerate() {
            let m = unflatten(&v, offs[i], ranks[z], ranks[x]);
            comp.insert((x, z), m.clone());
            edges.push(((x, z), m));
        }
        for y in 0..n {
            if poset.lt(x, y) && !comp.contains_key(&(x, y)) {
                let z = covers
                    .iter()
                    .copied()
                    .find(|&z| poset.leq(z, y))
                    .expect("some cover lies below any strict upper bound");
                let m = comp[&(z, y)].mul(&comp[&(x, z)]).expect("composable shapes");
                comp.insert((x, y), m);
            }
        }
    }

    ColouredData {
        names: (0..n).map(|x| poset.name(x).to_string()).collect(),
        covers: poset.covers().to_vec(),
        ranks,
        edges,
    }
}

/// A seeded random colouring of the Boolean lattice of the given rank.
/// Identical seeds produce identical instances.
pub fn random_instance(seed: u64, rank: u32, max_rank: usize) -> (BooleanLattice, ColouredData) {
    assert!(rank <= 6, "instance generation is sized for rank <= 6");
    let lattice = BooleanLattice::new(rank).expect("rank was checked");
    let mut rng = rng_from_seed(seed);
    let data = random_colouring(&mut rng, &lattice.poset(), max_rank);
    (lattice, data)
}

/// A random natural transformation filling the carrier map `f`, drawn from
/// the joint integer kernel of the naturality constraints over all covers
/// of the source poset. The zero transformation is always available, so
/// this never fails; a nonzero one is preferred when the lattice allows.
pub fn random_natural_map(
    rng: &mut ChaCha8Rng,
    src: &ColouredPoset<Integers>,
    tgt: &ColouredPoset<Integers>,
    f: &[usize],
) -> MorphismData {
    let poset = src.poset();
    let n = poset.len();
    assert_eq!(f.len(), n, "carrier map must cover the source poset");
    let shapes: Vec<(usize, usize)> = (0..n).map(|x| (tgt.rank(f[x]), src.rank(x))).collect();
    let (offs, total) = offsets(&shapes);

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for &(x, z) in poset.covers() {
        let after = if f[x] == f[z] {
            Matrix::identity(&Integers, tgt.rank(f[x]))
        } else {
            tgt.map(f[x], f[z]).clone()
        };
        let before = src.map(x, z);
        let base = rows.len();
        for _ in 0..tgt.rank(f[z]) * src.rank(x) {
            rows.push(vec![BigInt::from(0); total]);
        }
        let left = Matrix::identity(&Integers, src.rank(x)).kronecker(&after);
        place_block(&mut rows, base, offs[x], &left, false);
        let right = before
            .transpose()
            .kronecker(&Matrix::identity(&Integers, tgt.rank(f[z])));
        place_block(&mut rows, base, offs[z], &right, true);
    }

    let v = kernel_sample(rng, &constraint_matrix(rows, total));
    let taus = (0..n)
        .map(|x| unflatten(&v, offs[x], shapes[x].0, shapes[x].1))
        .collect();
    MorphismData { f: f.to_vec(), taus }
}

/// Length (in covers) of the longest chain ending at each element.
pub fn heights(poset: &FinitePoset) -> Vec<usize> {
    let n = poset.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| poset.leq(y, x)).count());
    let mut h = vec![0usize; n];
    for &x in &order {
        for y in 0..n {
            if poset.lt(y, x) {
                h[x] = h[x].max(h[y] + 1);
            }
        }
    }
    h
}

/// Collapse a coloured poset onto a chain by height, with a freshly drawn
/// chain colouring and a random compatible natural transformation. Returns
/// the chain colouring template and the morphism data.
pub fn random_chain_collapse(
    rng: &mut ChaCha8Rng,
    src: &ColouredPoset<Integers>,
    max_rank: usize,
) -> (ColouredData, MorphismData) {
    let h = heights(src.poset());
    let top_h = h[src.top()];
    let names = (0..=top_h).map(|i| format!("c{i}")).collect();
    let chain = FinitePoset::chain(names).expect("chain names are distinct");
    let tgt_data = random_colouring(rng, &chain, max_rank);
    let tgt = tgt_data.over(&Integers).expect("generated colouring validates");
    let morphism = random_natural_map(rng, src, &tgt, &h);
    (tgt_data, morphism)
}

/// A random morphism from `src` to `tgt` whose carrier sends each element
/// to a rung of a random maximal chain of the target, scaled by height.
/// The target must not be a single point unless the source is.
pub fn random_morphism_between(
    rng: &mut ChaCha8Rng,
    src: &ColouredPoset<Integers>,
    tgt: &ColouredPoset<Integers>,
) -> MorphismData {
    let tp = tgt.poset();
    let minimals = tp.minimal_elements();
    let mut rung = minimals[rng.gen_range(0..minimals.len())];
    let mut chain = vec![rung];
    loop {
        let ups = tp.covers_up(rung);
        if ups.is_empty() {
            break;
        }
        rung = ups[rng.gen_range(0..ups.len())];
        chain.push(rung);
    }
    let l = chain.len();
    assert!(
        l > 1 || src.len() == 1,
        "cannot map a nontrivial poset onto a single point"
    );
    let h = heights(src.poset());
    let top_h = h[src.top()];
    let f: Vec<usize> = (0..src.len())
        .map(|x| {
            if top_h == 0 {
                chain[l - 1]
            } else {
                chain[h[x] * (l - 1) / top_h]
            }
        })
        .collect();
    random_natural_map(rng, src, tgt, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn posets_have_required_extrema() {
        let mut rng = rng_from_seed(11);
        for n in 2..=6 {
            for _ in 0..5 {
                let p = random_poset(&mut rng, n, false);
                assert_eq!(p.len(), n);
                assert!(p.unique_top().is_ok());
                let q = random_poset(&mut rng, n, true);
                assert!(q.unique_top().is_ok());
                assert!(q.unique_bottom().is_ok());
            }
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let (_, a) = random_instance(7, 3, 3);
        let (_, b) = random_instance(7, 3, 3);
        assert_eq!(a.ranks, b.ranks);
        assert_eq!(a.covers, b.covers);
        assert_eq!(a.edges, b.edges);
        let (_, c) = random_instance(8, 3, 3);
        assert!(a.ranks != c.ranks || a.edges != c.edges);
    }

    #[test]
    fn instances_validate_over_every_ring() {
        let mut zero_fibers = 0;
        let mut nonzero_maps = 0;
        for seed in 0..12 {
            let (_, data) = random_instance(seed, 3, 3);
            data.over(&Integers).unwrap();
            data.over(&Rationals).unwrap();
            data.over(&PrimeField::new(2).unwrap()).unwrap();
            zero_fibers += data.ranks.iter().filter(|&&r| r == 0).count();
            nonzero_maps += data.edges.iter().filter(|(_, m)| !m.is_zero()).count();
        }
        assert!(zero_fibers > 0, "rank-0 fibers should occur across seeds");
        assert!(nonzero_maps > 50, "most cover maps should be nonzero");
    }

    #[test]
    fn colourings_on_general_posets_validate() {
        let mut rng = rng_from_seed(3);
        for _ in 0..10 {
            let p = random_poset(&mut rng, 6, false);
            let data = random_colouring(&mut rng, &p, 3);
            data.over(&Integers).unwrap();
            data.over(&PrimeField::new(3).unwrap()).unwrap();
        }
    }

    #[test]
    fn natural_maps_validate() {
        let mut rng = rng_from_seed(5);
        let mut nonzero = 0;
        for _ in 0..8 {
            let p = random_poset(&mut rng, 5, false);
            let src = random_colouring(&mut rng, &p, 3).over(&Integers).unwrap();
            let tgt = random_colouring(&mut rng, &p, 3).over(&Integers).unwrap();
            let f: Vec<usize> = (0..p.len()).collect();
            let m = random_natural_map(&mut rng, &src, &tgt, &f);
            m.over(&src, &tgt).unwrap();
            nonzero += m.taus.iter().filter(|t| !t.is_zero()).count();
        }
        assert!(nonzero > 0, "some transformations should be nonzero");
    }

    #[test]
    fn chain_collapses_validate() {
        let mut rng = rng_from_seed(9);
        for _ in 0..6 {
            let p = random_poset(&mut rng, 6, false);
            let src = random_colouring(&mut rng, &p, 2).over(&Integers).unwrap();
            let (tgt_data, morphism) = random_chain_collapse(&mut rng, &src, 2);
            let tgt = tgt_data.over(&Integers).unwrap();
            morphism.over(&src, &tgt).unwrap();
        }
    }

    #[test]
    fn cross_poset_morphisms_validate() {
        let mut rng = rng_from_seed(13);
        for _ in 0..6 {
            let p = random_poset(&mut rng, 5, false);
            let q = random_poset(&mut rng, 4, false);
            let src = random_colouring(&mut rng, &p, 2).over(&Integers).unwrap();
            let tgt = random_colouring(&mut rng, &q, 2).over(&Integers).unwrap();
            let m = random_morphism_between(&mut rng, &src, &tgt);
            m.over(&src, &tgt).unwrap();
        }
    }

    #[test]
    fn heights_are_strictly_monotone() {
        let mut rng = rng_from_seed(21);
        let p = random_poset(&mut rng, 6, true);
        let h = heights(&p);
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.lt(x, y) {
                    assert!(h[x] < h[y]);
                }
            }
        }
        assert_eq!(h[p.unique_bottom().unwrap()], 0);
    }
}
