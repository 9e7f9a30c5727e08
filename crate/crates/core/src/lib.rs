//! Maximal chains of the non-crossing partition lattice `NC(n)`, represented as
//! minimal factorizations of the long cycle `(1, 2, …, n)` into transpositions.
//!
//! The crate covers the Hurwitz graph on these factorizations, the weak order
//! rooted at `e = ((1,2), (2,3), …, (n-1,n))`, the 0-Hecke action by down
//! operators, the map `φ` to `S_{n-1}` with its inversion taxonomy, Catalan and
//! `(q,t)`-Catalan enumeration, radius/diameter computations, and a type-B
//! analogue of the Hurwitz graph.
//!
//! Permutations compose right to left; see [`perm`] for the convention.

pub mod catalan;
pub mod chain;
pub mod error;
pub mod factor;
pub mod graph;
pub mod hurwitz;
pub mod metrics;
pub mod perm;
pub mod typeb;
pub mod verify;
pub mod weak;

pub use chain::{inversion_table, phi, rank, InversionKind, InversionTable};
pub use error::{Error, Result};
pub use graph::Csr;
pub use factor::{is_valid_chain, product, t, FactorWord, GeometricTree, Transposition, MAX_N};
pub use hurwitz::{HurwitzWord, Move, Reflection};
pub use perm::Permutation;
