//! Exact-arithmetic homology of coloured posets.
//!
//! A coloured poset is a finite poset with a unique maximal element together
//! with a covariant functor into free modules. This crate builds the strict
//! chain complex of such a colouring, the cube complex when the carrier is a
//! Boolean lattice, the comparison map between them, and the gluing /
//! long-exact-sequence machinery relating the two. On top of that sit the two
//! standard specialisations: Khovanov homology of link diagrams and chromatic
//! graph homology.
//!
//! All computations are exact, over Z (with torsion via Smith normal form),
//! Q, or a prime field F_p selected at runtime.

pub mod boolean;
pub mod chromatic;
pub mod cli;
pub mod coloured;
pub mod format;
pub mod complex;
pub mod gauss;
pub mod homology;
pub mod khovanov;
pub mod maps;
pub mod matrix;
pub mod poset;
pub mod random;
pub mod ring;
pub mod snf;
pub mod verify;

pub use homology::{HomologyGroup, HomologyResult};
pub use matrix::Matrix;
pub use ring::{Integers, PrimeField, Rationals, Ring, RingSpec};
