//! Occurrence graphs of permutation patterns.
//!
//! A pattern `p` occurring in a permutation π defines a graph: one vertex
//! per occurrence (as its set of positions), with edges between occurrences
//! that differ in exactly one position. This crate builds those graphs,
//! decides graph properties of them, enumerates the permutation classes the
//! properties carve out, mines minimal forbidden patterns, and checks the
//! closed-form counts exhaustively at small lengths.

pub mod error;
pub mod explorer;
pub mod graph;
pub mod mesh;
pub mod occurrence;
pub mod oeis;
pub mod perm;
pub mod props;
pub mod series;

pub use error::{Error, Result};
pub use graph::{
    are_isomorphic, are_isomorphic_with_cap, phi_embedding, OccurrenceGraph, SimpleGraph,
    ISOMORPHISM_CAP,
};
pub use mesh::MeshPattern;
pub use occurrence::{occurrences, IndexInjection, IndexSet};
pub use perm::{factorial, iterate_permutations, lex_range, Permutation};
pub use props::{
    count_cliques_of_size, count_triangles, girth, girth_class, is_bipartite, is_chordal,
    is_clique, is_connected, is_forest, is_tree, GirthClass, GraphProperty,
};
pub use series::{connected_class_gf, factorial_series, skew_indecomposable_gf, PowerSeries};
