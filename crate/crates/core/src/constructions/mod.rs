//! Explicit graphs and graph pairs, Paley graphs, and the class of graphs
//! whose vertex-deleted subgraphs are all self-complementary.
//!
//! Printed constructions label vertices from 1; here vertex `i` of the text is
//! stored as `i - 1`. Constructions that extend a base graph `P` on `m`
//! vertices keep `P` on `0..m` and store the new vertices `1, 2, ...` as
//! `m, m + 1, ...`.

mod class_g;
mod field;

pub use class_g::*;
pub use field::{FiniteField, MAX_FIELD_ORDER};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::graphkit::{cycle, graph6, isomorphic_up_to_complementation, Graph, UtcKind, VertexSet};
use crate::hypomorphy::{
    equal_up_to_complementation, k_hypomorphic, k_hypomorphic_utc, same_edge_counts_utc, same_parity_utc, theta,
};

/// A property a constructed pair is claimed to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Hypomorphic(usize),
    HypomorphicUtc(usize),
    EdgeCountsUtc(usize),
    ParityUtc(usize),
    NotIsoUtc,
    NotEqualUtc,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Hypomorphic(k) => write!(f, "{k}-hypo"),
            Property::HypomorphicUtc(k) => write!(f, "{k}-hypo-utc"),
            Property::EdgeCountsUtc(k) => write!(f, "{k}-edges-utc"),
            Property::ParityUtc(k) => write!(f, "{k}-parity-utc"),
            Property::NotIsoUtc => f.write_str("not-iso-utc"),
            Property::NotEqualUtc => f.write_str("not-equal-utc"),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Property {
    pub fn holds(&self, g: &Graph, h: &Graph) -> Result<bool> {
        Ok(match *self {
            Property::Hypomorphic(k) => k_hypomorphic(g, h, k)?.holds,
            Property::HypomorphicUtc(k) => k_hypomorphic_utc(g, h, k)?.holds,
            Property::EdgeCountsUtc(k) => same_edge_counts_utc(g, h, k)?.holds,
            Property::ParityUtc(k) => same_parity_utc(g, h, k)?.holds,
            Property::NotIsoUtc => isomorphic_up_to_complementation(g, h)?.kind == UtcKind::Neither,
            Property::NotEqualUtc => !equal_up_to_complementation(g, h)?,
        })
    }
}

/// Name and parameters of the construction that produced a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub construction: &'static str,
    pub params: BTreeMap<&'static str, usize>,
}

impl Provenance {
    fn new(construction: &'static str, params: &[(&'static str, usize)]) -> Self {
        Provenance {
            construction,
            params: params.iter().copied().collect(),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.construction, params.join(","))
    }
}

/// Two graphs on one vertex set, with properties checked when built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedPair {
    pub g: Graph,
    pub g_prime: Graph,
    pub provenance: Provenance,
    pub claimed_properties: Vec<Property>,
}

#[derive(Serialize)]
struct PairJson<'a> {
    g: String,
    g_prime: String,
    provenance: &'a Provenance,
    verified: &'a [Property],
}

impl ConstructedPair {
    /// Fails with [`Error::ClaimFailed`] unless every claim holds.
    pub fn new(g: Graph, g_prime: Graph, provenance: Provenance, claimed_properties: Vec<Property>) -> Result<Self> {
        for p in &claimed_properties {
            if !p.holds(&g, &g_prime)? {
                return Err(Error::ClaimFailed(format!("{provenance}: {p}")));
            }
        }
        Ok(ConstructedPair {
            g,
            g_prime,
            provenance,
            claimed_properties,
        })
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PairJson {
            g: graph6::encode(&self.g),
            g_prime: graph6::encode(&self.g_prime),
            provenance: &self.provenance,
            verified: &self.claimed_properties,
        })
        .expect("serializable")
    }
}

fn clique(g: &mut Graph, members: std::ops::Range<usize>) {
    for i in members.clone() {
        for j in members.clone().filter(|&j| j > i) {
            g.set_edge(i, j, true);
        }
    }
}

/// Two disjoint cliques on `{1..p}` and `{p+1..v}`; `G'` adds `{1, p+1}`.
pub fn clique_pair_counterexample(v: usize) -> Result<ConstructedPair> {
    if v < 4 {
        return domain(format!("clique pair needs v >= 4, got {v}"));
    }
    let p = v / 2;
    let mut g = Graph::empty(v)?;
    clique(&mut g, 0..p);
    clique(&mut g, p..v);
    let mut h = g.clone();
    h.set_edge(0, p, true);
    ConstructedPair::new(
        g,
        h,
        Provenance::new("clique_pair", &[("v", v)]),
        vec![Property::HypomorphicUtc(3), Property::NotIsoUtc],
    )
}

/// The `v`-cycle `0, 1, ..., v-1` and the cycle obtained by exchanging 0 and 1.
pub fn cycle_swap_pair(v: usize) -> Result<ConstructedPair> {
    if v < 4 {
        return domain(format!("cycle swap needs v >= 4, got {v}"));
    }
    let g = cycle(v)?;
    let mut h = g.clone();
    h.set_edge(0, v - 1, false);
    h.set_edge(1, 2, false);
    h.set_edge(1, v - 1, true);
    h.set_edge(0, 2, true);
    ConstructedPair::new(
        g,
        h,
        Provenance::new("cycle_swap", &[("v", v)]),
        vec![Property::Hypomorphic(v - 1), Property::Hypomorphic(v), Property::NotEqualUtc],
    )
}

/// The 5-cycle swap pair and its restrictions to `{0,1,2,4}` and `{0,1,2}`.
///
/// Both graphs of each pair are isomorphic and the pair is hypomorphic up to
/// complementation at every size; at size 2 the two edge sets differ, so
/// plain hypomorphy fails there.
pub fn lemma_five_pairs() -> Result<Vec<ConstructedPair>> {
    let base = cycle_swap_pair(5)?;
    let mut out = Vec::new();
    for (deleted, keep) in [(0usize, VertexSet::full(5)), (1, VertexSet(0b10111)), (2, VertexSet(0b00111))] {
        let g = base.g.induced(keep)?;
        let h = base.g_prime.induced(keep)?;
        let v = g.order();
        let mut claims: Vec<Property> = (1..=v).map(Property::HypomorphicUtc).collect();
        claims.extend([Property::Hypomorphic(v), Property::NotEqualUtc]);
        out.push(ConstructedPair::new(
            g,
            h,
            Provenance::new("lemma_five", &[("v", v), ("deleted", deleted)]),
            claims,
        )?);
    }
    Ok(out)
}

/// A clique on `{1..v-2}` in both graphs; `G'` adds the edge `{v-1, v}`.
pub fn k7_counterexample(v: usize) -> Result<ConstructedPair> {
    if v < 9 {
        return domain(format!("the k=7 example needs v >= 9, got {v}"));
    }
    let mut g = Graph::empty(v)?;
    clique(&mut g, 0..v - 2);
    let mut h = g.clone();
    h.set_edge(v - 2, v - 1, true);
    ConstructedPair::new(
        g,
        h,
        Provenance::new("k7", &[("v", v)]),
        vec![Property::EdgeCountsUtc(7), Property::NotEqualUtc],
    )
}

/// `G'` is the star at vertex 1; `G` is empty for `k = 1, 3 (mod 4)` and
/// complete for `k = 2 (mod 4)`.
pub fn remark_example(k: usize, v: usize) -> Result<ConstructedPair> {
    if k.is_multiple_of(4) || v < k + 2 {
        return domain(format!("need k != 0 mod 4 and v >= k + 2, got k={k}, v={v}"));
    }
    let g = if k % 4 == 2 { Graph::complete(v)? } else { Graph::empty(v)? };
    ConstructedPair::new(
        g,
        star_graph(v)?,
        Provenance::new("remark", &[("k", k), ("v", v)]),
        vec![Property::ParityUtc(k), Property::NotIsoUtc],
    )
}

/// A class-𝒢 graph of order `m` built as a Paley graph.
fn base_for_nonn3(m: usize) -> Result<Graph> {
    paley_graph(m as u64).map_err(|_| Error::Domain(format!("no class-G base graph of order {m} available")))
}

/// The pair extending a class-𝒢 graph `P` of order `m` by `r` new vertices.
///
/// * `r = 4`: new vertices 1..4; `G` adds `{1,2},{2,3},{3,4}`, `G'` adds
///   `{1,3},{2,3},{2,4}`, both join 2 and 3 to all of `P`.
/// * `r = 3`: the `r = 4` pair with vertex 1 deleted.
/// * `r = 2`: new vertices 1, 2; `G` joins 2 to all of `P`, `G'` joins 1.
pub fn nonn3_pair(m: usize, r: usize) -> Result<ConstructedPair> {
    if !(2..=4).contains(&r) || m + r > 30 {
        return domain(format!("need r in 2..=4 and m + r <= 30, got m={m}, r={r}"));
    }
    let p = base_for_nonn3(m)?;
    let v = m + r;
    let embed = |extra: usize| -> Result<Graph> {
        let mut rows = p.rows().to_vec();
        rows.resize(m + extra, 0);
        Graph::from_rows(rows)
    };
    let (g, h) = if r == 2 {
        let (mut g, mut h) = (embed(2)?, embed(2)?);
        for x in 0..m {
            g.set_edge(m + 1, x, true);
            h.set_edge(m, x, true);
        }
        (g, h)
    } else {
        let (mut g, mut h) = (embed(4)?, embed(4)?);
        let n = |i: usize| m + i - 1;
        for (a, b) in [(1, 2), (2, 3), (3, 4)] {
            g.set_edge(n(a), n(b), true);
        }
        for (a, b) in [(1, 3), (2, 3), (2, 4)] {
            h.set_edge(n(a), n(b), true);
        }
        for x in 0..m {
            for y in [n(2), n(3)] {
                g.set_edge(x, y, true);
                h.set_edge(x, y, true);
            }
        }
        if r == 3 {
            (g.delete_vertex(n(1))?, h.delete_vertex(n(1))?)
        } else {
            (g, h)
        }
    };
    let mut claims: Vec<Property> = (theta(v)? + 1..=v).map(Property::HypomorphicUtc).collect();
    claims.push(Property::NotEqualUtc);
    ConstructedPair::new(g, h, Provenance::new("nonn3", &[("m", m), ("r", r)]), claims)
}

/// Vertex 0 joined to every other vertex.
pub fn star_graph(v: usize) -> Result<Graph> {
    if v < 2 {
        return domain(format!("a star needs v >= 2, got {v}"));
    }
    Graph::from_edges(v, (1..v).map(|i| (0, i)))
}

pub fn claw() -> Graph {
    star_graph(4).expect("order 4")
}
