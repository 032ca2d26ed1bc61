//! Graph representation, elementary operations, counting invariants and isomorphism.

mod graph;
pub mod graph6;
mod invariants;
mod iso;
pub mod tables;
mod vertex_set;

pub use graph::{pair_at, pair_index, Graph, Permutation, MAX_ORDER};
pub use invariants::{
    classify_bipartite_kernel, degree_product_sum, h3_within, homogeneous_triples, invariants,
    is_claw_free, is_complete_bipartite, triangle_counts, BipartiteKind, InvariantBundle,
};
pub use iso::{
    canonical_form_utc, canonical_labeling, is_self_complementary, is_vertex_transitive,
    isomorphic, isomorphic_up_to_complementation, isomorphism_mapping, min_code, orbit, UtcCode,
    UtcKind, UtcVerdict, LEX_SEARCH_MAX, MAX_EXACT_ORDER, MIN_CODE_MAX,
};
pub use vertex_set::{subsets, Bits, Subsets, VertexSet};

use crate::error::Result;

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn boolean_sum(g: &Graph, h: &Graph) -> Result<Graph> {
    g.boolean_sum(h)
}

pub fn induced(g: &Graph, set: VertexSet) -> Result<Graph> {
    g.induced(set)
}

pub fn degree(g: &Graph, x: usize) -> usize {
    g.degree(x)
}

pub fn is_regular(g: &Graph) -> bool {
    g.is_regular()
}

/// The cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}
