use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::vertex_set::{subsets, VertexSet};

/// Single-graph counts over {edge, non-edge} pairs and homogeneous triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub n: usize,
    /// `e(G)`
    pub e: u64,
    /// `e(complement G)`
    pub e_bar: u64,
    /// {edge, non-edge} pairs with disjoint members
    pub a0: u64,
    /// {edge, non-edge} pairs sharing a vertex
    pub a1: u64,
    /// all {edge, non-edge} pairs
    pub a2: u64,
    /// triangles of `G`
    pub t: u64,
    /// triples that are triangles of `G` or of its complement
    pub h3: u64,
}

/// Computes every count by direct enumeration: `a0`/`a1` walk all
/// {edge, non-edge} pairs, `t`/`h3` walk all triples.
pub fn invariants(g: &Graph) -> InvariantBundle {
    let edges = g.edges();
    let non_edges = g.complement().edges();
    let mut a0 = 0u64;
    let mut a1 = 0u64;
    for &(a, b) in &edges {
        for &(c, d) in &non_edges {
            if a == c || a == d || b == c || b == d {
                a1 += 1;
            } else {
                a0 += 1;
            }
        }
    }
    let (t, h3) = triangle_counts(g);
    InvariantBundle {
        n: g.order(),
        e: edges.len() as u64,
        e_bar: non_edges.len() as u64,
        a0,
        a1,
        a2: a0 + a1,
        t,
        h3,
    }
}

/// `(t(G), h3(G))` by walking all triples.
pub fn triangle_counts(g: &Graph) -> (u64, u64) {
    let n = g.order();
    let mut t = 0u64;
    let mut h3 = 0u64;
    for z in 2..n {
        for y in 1..z {
            for x in 0..y {
                let s = g.has_edge(x, y) as u8 + g.has_edge(x, z) as u8 + g.has_edge(y, z) as u8;
                if s == 3 {
                    t += 1;
                    h3 += 1;
                } else if s == 0 {
                    h3 += 1;
                }
            }
        }
    }
    (t, h3)
}

/// Number of 3-homogeneous subsets of the restriction to `set`.
pub fn h3_within(g: &Graph, set: VertexSet) -> u64 {
    let mut count = 0u64;
    for x in set {
        let hi = set.0 & !(2u64 << x).wrapping_sub(1);
        for y in VertexSet(hi) {
            let both = hi & !(2u64 << y).wrapping_sub(1);
            let xy = g.has_edge(x, y);
            let common = if xy {
                g.row(x) & g.row(y)
            } else {
                !g.row(x) & !g.row(y)
            };
            count += (common & both).count_ones() as u64;
        }
    }
    count
}

/// The set of 3-homogeneous triples as colex-ordered masks.
pub fn homogeneous_triples(g: &Graph) -> Vec<VertexSet> {
    subsets(g.order(), 3)
        .filter(|&t| {
            let e = g.edges_within(t);
            e == 0 || e == 3
        })
        .collect()
}

/// `sum_x d_G(x) * d_{complement G}(x)`.
pub fn degree_product_sum(g: &Graph) -> u64 {
    let n = g.order() as u64;
    (0..g.order())
        .map(|x| {
            let d = g.degree(x) as u64;
            d * (n - 1 - d)
        })
        .sum()
}

/// True iff no four vertices induce a star `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    for centre in 0..g.order() {
        let nb = g.row(centre);
        // a claw at `centre` is an independent triple inside its neighbourhood
        for a in VertexSet(nb) {
            let rest = nb & !g.row(a) & !(2u64 << a).wrapping_sub(1);
            for b in VertexSet(rest) {
                let third = rest & !g.row(b) & !(2u64 << b).wrapping_sub(1);
                if third != 0 {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BipartiteKind {
    CompleteBipartite,
    ComplementOfCompleteBipartite,
    Both,
    Neither,
}

/// True iff the vertex set splits into two parts (one possibly empty) with
/// every cross pair an edge and no edge inside a part.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    let n = g.order();
    // the part containing vertex 0 is its non-neighbourhood
    let full = VertexSet::full(n).0;
    let side = !g.row(0) & full;
    let other = full & !side;
    (0..n).all(|x| {
        let expected = if side >> x & 1 == 1 { other } else { side };
        g.row(x) == expected
    })
}

/// Classifies a graph as complete bipartite, complement of complete bipartite, both, or neither.
/// The two conditions are tested independently, except that the empty and
/// complete graphs are boundary members of both families and report `Both`.
pub fn classify_bipartite_kernel(g: &Graph) -> BipartiteKind {
    if g.is_empty_graph() || g.is_complete_graph() {
        return BipartiteKind::Both;
    }
    match (is_complete_bipartite(g), is_complete_bipartite(&g.complement())) {
        (true, true) => BipartiteKind::Both,
        (true, false) => BipartiteKind::CompleteBipartite,
        (false, true) => BipartiteKind::ComplementOfCompleteBipartite,
        (false, false) => BipartiteKind::Neither,
    }
}
