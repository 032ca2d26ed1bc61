use std::fmt;

use serde::{Deserialize, Serialize};

use super::vertex_set::{low_bits, VertexSet};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A labeled simple graph on `0..n`, one adjacency word per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Index of the pair `{i, j}` (`i < j`) in colex order of 2-subsets.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_at(index: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    (index - j * (j - 1) / 2, j)
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = low_bits(n);
        let adj = (0..n).map(|i| full & !(1u64 << i)).collect();
        Ok(Graph { n, adj })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {a}")));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry, the zero
    /// diagonal and the absence of bits at or above `n`.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let full = low_bits(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !full != 0 {
                return Err(Error::InvalidAdjacency(format!("row {i} has bits beyond n")));
            }
            if r >> i & 1 == 1 {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {i}")));
            }
            for j in VertexSet(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidAdjacency(format!("asymmetric pair {{{i},{j}}}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Graph whose edge `{i,j}` is present iff bit `pair_index(i,j)` of `code` is set.
    /// Only orders up to 11 fit in one word.
    pub fn from_pair_code(n: usize, code: u64) -> Result<Self> {
        check_order(n)?;
        if n > 11 {
            return Err(Error::OrderTooLarge { n, max: 11 });
        }
        let mut adj = vec![0u64; n];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> idx & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                idx += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    /// Inverse of [`Graph::from_pair_code`] (the characteristic vector of the edge set).
    pub fn pair_code(&self) -> u64 {
        assert!(self.n <= 11, "pair code needs n <= 11");
        let mut code = 0u64;
        let mut idx = 0;
        for j in 1..self.n {
            let row = self.adj[j];
            for i in 0..j {
                code |= (row >> i & 1) << idx;
                idx += 1;
            }
        }
        code
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, x: usize) -> u64 {
        self.adj[x]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn set_edge(&mut self, a: usize, b: usize, present: bool) {
        assert!(a != b && a < self.n && b < self.n);
        if present {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
        } else {
            self.adj[a] &= !(1 << b);
            self.adj[b] &= !(1 << a);
        }
    }

    pub fn neighbors(&self, x: usize) -> VertexSet {
        VertexSet(self.adj[x])
    }

    #[inline]
    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.degree(x)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Number of edges of the restriction to `set`, without materializing it.
    #[inline]
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|x| (self.adj[x] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(i, j)` with `i < j`, ordered by `j` then `i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in VertexSet(self.adj[j] & low_bits(j)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = low_bits(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, r)| !r & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Edges lying in exactly one of the two graphs.
    pub fn boolean_sum(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        let adj = self.adj.iter().zip(&other.adj).map(|(a, b)| a ^ b).collect();
        Ok(Graph { n: self.n, adj })
    }

    pub fn intersection(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        let adj = self.adj.iter().zip(&other.adj).map(|(a, b)| a & b).collect();
        Ok(Graph { n: self.n, adj })
    }

    /// The restriction to `set`, relabeled `0..|set|` by increasing original label.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        if set.0 & !low_bits(self.n) != 0 {
            let vertex = 63 - set.0.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let members = set.to_vec();
        let adj = members
            .iter()
            .map(|&x| compress(self.adj[x] & set.0, &members))
            .collect();
        Ok(Graph { n: members.len(), adj })
    }

    /// `G - x`.
    pub fn delete_vertex(&self, x: usize) -> Result<Graph> {
        self.induced(self.vertices().without(x))
    }

    /// Image of the graph under `perm`: edge `{i,j}` becomes `{perm(i), perm(j)}`.
    pub fn permuted(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for i in 0..self.n {
            let pi = perm.apply(i);
            for j in VertexSet(self.adj[i]) {
                adj[pi] |= 1 << perm.apply(j);
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|x| self.degree(x) == d)
    }

    pub fn is_empty_graph(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn is_complete_graph(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub(crate) fn same_order(&self, other: &Graph) -> Result<()> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// Maps the bits of `word` at the positions listed in `members` onto `0..members.len()`.
#[inline]
fn compress(word: u64, members: &[usize]) -> u64 {
    let mut out = 0u64;
    for (k, &m) in members.iter().enumerate() {
        out |= (word >> m & 1) << k;
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A bijection of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Domain(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// True iff this maps `g` edge-for-edge onto `h`.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.order() == h.order() && self.len() == g.order() && g.permuted(self) == *h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn complement_of_empty_three_is_triangle() {
        let k3 = Graph::empty(3).unwrap().complement();
        assert_eq!(k3, Graph::complete(3).unwrap());
    }

    #[test]
    fn complement_of_c5_is_the_pentagram() {
        let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5().complement(), pentagram);
        assert_eq!(c5().complement().edge_count(), 5);
    }

    #[test]
    fn boolean_sum_identities() {
        let g = c5();
        assert!(g.boolean_sum(&g).unwrap().is_empty_graph());
        assert!(g.boolean_sum(&g.complement()).unwrap().is_complete_graph());
        assert!(matches!(
            g.boolean_sum(&Graph::empty(4).unwrap()),
            Err(Error::OrderMismatch { left: 5, right: 4 })
        ));
    }

    #[test]
    fn induced_relabels_in_increasing_order() {
        let p = c5().induced(VertexSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            k5.induced(VertexSet::from_iter([1, 3, 4])).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(c5().induced(VertexSet::full(5)).unwrap(), c5());
        assert_eq!(c5().induced(VertexSet::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn pair_code_round_trip_and_index() {
        for idx in 0..45 {
            let (i, j) = pair_at(idx);
            assert!(i < j);
            assert_eq!(pair_index(i, j), idx);
        }
        let g = c5();
        assert_eq!(Graph::from_pair_code(5, g.pair_code()).unwrap(), g);
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0b000]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert_eq!(Graph::empty(0), Err(Error::InvalidOrder(0)));
        assert_eq!(Graph::empty(65), Err(Error::InvalidOrder(65)));
    }

    #[test]
    fn order_64_complement() {
        let g = Graph::empty(64).unwrap().complement();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert!(g.complement().is_empty_graph());
    }
}
