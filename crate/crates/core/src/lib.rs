//! Combinatorial rigidity toolkit.
//!
//! Builds banana bunches and hyperbananas, checks Maxwell counting conditions
//! by exhaustive subset enumeration, and estimates generic rigidity-matrix
//! ranks with randomized modular elimination backed by an exact
//! fraction-free oracle.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod graphfile;
pub mod linalg;
pub mod maxwell;
pub mod report;
pub mod rigidity;

pub use constructions::{
    banana_bunch, even_hyperbanana, even_hyperbanana_with, henneberg0, hyperbanana, BunchLabels,
    ExtraEdgeLayout, Family, HyperbananaLabels,
};
pub use error::{Error, Result};
pub use graph::{complete_bipartite, complete_graph, Edge, Graph, VertexSubset};
pub use graphfile::GraphFile;
pub use linalg::{rank_exact, rank_mod_p, Field, ScalarMatrix};
pub use maxwell::{check_condition1, check_condition2, check_maxwell, EnumOptions, MaxwellReport};
pub use rigidity::{
    check_row_space_dependence, classify, generic_rank, implied_edges, random_embedding,
    rigidity_matrix, Classification, Embedding, RankMode, RankOptions, RigidityVerdict,
};

/// `C(k, 2)`.
pub const fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Dimension of the space of trivial (rigid-body) motions of `R^d`: `C(d+1, 2)`.
pub const fn trivial_motions(d: usize) -> usize {
    binom2(d + 1)
}
