//! Homological and combinatorial invariants of moment-angle complexes `Z_K` and
//! real moment-angle complexes `R_K`.
//!
//! Spaces are never built. Everything goes through full subcomplexes `K_J`:
//! `H_k(R_K) = ⊕_J H̃_{k-1}(K_J)` and `H_{-i,2j}(Z_K) = ⊕_{|J|=j} H̃_{j-i-1}(K_J)`.
//! On top of that the crate decides the one-relator conditions for the commutator
//! subgroup of the right-angled Coxeter group and for `H_*(ΩZ_K)` (flag `K`),
//! enumerates the nested-commutator generating sets, computes loop-space
//! Poincaré series of connected sums of sphere products, and sweeps all flag
//! complexes on few vertices to cross-check the combinatorial and homological
//! criteria against each other.

pub mod bits;
pub mod classifier;
pub mod complex;
pub mod enumeration;
mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod loop_algebra;
pub mod star;

/// Largest supported vertex count; subsets are `u32` bitmasks and the full-subcomplex
/// loops visit all `2^m` subsets.
pub const MAX_VERTICES: usize = 24;

pub use bits::Mask;
pub use classifier::{classify, ClassificationReport, RelatorWord};
pub use complex::{FlagCheck, SimplicialComplex, VertexSet};
pub use error::{Error, Result};
pub use generators::{CommutatorWord, GeneratorSet, WordKind};
pub use graph::{ChordalCheck, Graph};
pub use homology::{BigradedTable, HochsterTable, HomologyGroup, HomologyReport};
pub use loop_algebra::{FreeDGAlgebra, GradedSeries, SphereProductSum};
pub use star::{classify_star_condition, Mismatch, StarClassification};
