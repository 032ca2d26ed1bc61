//! Paley graphs, lexicographic products and membership in the class of graphs
//! (of order other than 2) whose vertex-deleted subgraphs are all
//! self-complementary.
//!
//! A certificate for vertex `x` is either a complementing isomorphism of the
//! whole graph fixing `x`, which restricts to one of `G - x`, or an explicit
//! complementing isomorphism of `G - x` found by search.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::field::FiniteField;
use crate::algebra::binom_u64;
use crate::atlas::enumerate_graphs;
use crate::error::{domain, Error, Result};
use crate::graphkit::{
    canonical_labeling, graph6, is_self_complementary, is_vertex_transitive, isomorphic, Graph, Permutation,
    VertexSet,
};
use crate::hypomorphy::{k_hypomorphic, same_parity_utc, Check};

/// Largest order on which membership is decided by isomorphism search alone.
pub const MAX_SEARCH_ORDER: usize = 16;
/// Largest order accepted by [`search_class_g`].
pub const MAX_CIRCULANT_SEARCH: usize = 29;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "map", rename_all = "lowercase")]
pub enum Certificate {
    /// `G -> complement(G)` fixing the vertex
    Fixing(Permutation),
    /// `G - x -> complement(G - x)`, in the labels of `G - x`
    Deleted(Permutation),
}

impl Certificate {
    pub fn verify(&self, g: &Graph, x: usize) -> Result<bool> {
        Ok(match self {
            Certificate::Fixing(p) => p.apply(x) == x && p.is_isomorphism(g, &g.complement()),
            Certificate::Deleted(p) => {
                let h = g.delete_vertex(x)?;
                p.is_isomorphism(&h, &h.complement())
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGVerdict {
    pub member: bool,
    /// one per vertex when `member`; the certified prefix otherwise
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_vertex: Option<usize>,
}

fn check_not_two(g: &Graph) -> Result<()> {
    if g.order() == 2 {
        return domain("order 2 is excluded from the class");
    }
    Ok(())
}

fn search_vertex(g: &Graph, x: usize) -> Result<Option<Certificate>> {
    if g.order() == 1 {
        return Ok(Some(Certificate::Fixing(Permutation::identity(1))));
    }
    let h = g.delete_vertex(x)?;
    Ok(isomorphic(&h, &h.complement())?.map(Certificate::Deleted))
}

/// Decides membership by an isomorphism search on each `G - x`.
pub fn class_g_member(g: &Graph) -> Result<ClassGVerdict> {
    check_not_two(g)?;
    if g.order() > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: MAX_SEARCH_ORDER,
        });
    }
    let mut certificates = Vec::new();
    for x in 0..g.order() {
        match search_vertex(g, x)? {
            Some(c) => certificates.push(c),
            None => {
                return Ok(ClassGVerdict {
                    member: false,
                    certificates,
                    failing_vertex: Some(x),
                })
            }
        }
    }
    Ok(ClassGVerdict {
        member: true,
        certificates,
        failing_vertex: None,
    })
}

/// Checks membership from complementing isomorphisms, `maps[x]` fixing `x`.
/// A map that does not verify falls back to search when the order allows it.
pub fn class_g_member_certified(g: &Graph, maps: &[Permutation]) -> Result<ClassGVerdict> {
    check_not_two(g)?;
    if maps.len() != g.order() {
        return domain(format!("expected {} certificates, got {}", g.order(), maps.len()));
    }
    let mut certificates = Vec::new();
    for (x, p) in maps.iter().enumerate() {
        let c = Certificate::Fixing(p.clone());
        if p.len() == g.order() && c.verify(g, x)? {
            certificates.push(c);
            continue;
        }
        if g.order() > MAX_SEARCH_ORDER {
            return domain(format!("certificate for vertex {x} does not verify"));
        }
        match search_vertex(g, x)? {
            Some(c) => certificates.push(c),
            None => {
                return Ok(ClassGVerdict {
                    member: false,
                    certificates,
                    failing_vertex: Some(x),
                })
            }
        }
    }
    Ok(ClassGVerdict {
        member: true,
        certificates,
        failing_vertex: None,
    })
}

/// Vertices are field elements; `x ~ y` iff `x - y` is a nonzero square.
pub fn paley_graph(q: u64) -> Result<Graph> {
    let f = FiniteField::new(q)?;
    let sq = f.squares();
    let mut g = Graph::empty(f.q)?;
    for x in 0..f.q {
        for y in x + 1..f.q {
            if sq[f.sub(x, y)] {
                g.set_edge(x, y, true);
            }
        }
    }
    Ok(g)
}

/// For each `x`, the map `y -> a(y - x) + x` with `a` a non-square.
pub fn paley_certificates(q: u64) -> Result<Vec<Permutation>> {
    let f = FiniteField::new(q)?;
    let a = f.non_square();
    (0..f.q)
        .map(|x| Permutation::from_images((0..f.q).map(|y| f.add(f.mul(a, f.sub(y, x)), x)).collect()))
        .collect()
}

/// Lexicographic product: a copy of `g` for each vertex of `h`, vertex
/// `(u, v)` stored at `u + v * g.order()`.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    let n = gn * hn;
    if n > crate::graphkit::MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: crate::graphkit::MAX_ORDER,
        });
    }
    let mut out = Graph::empty(n)?;
    for a in 0..n {
        for b in a + 1..n {
            let ((u, v), (u2, v2)) = ((a % gn, a / gn), (b % gn, b / gn));
            if (v == v2 && g.has_edge(u, u2)) || (v != v2 && h.has_edge(v, v2)) {
                out.set_edge(a, b, true);
            }
        }
    }
    Ok(out)
}

/// Composes per-vertex complementing isomorphisms of the factors into maps
/// `(u', v') -> (phi_u(u'), theta_v(v'))` on the product, one per vertex.
pub fn lex_product_certificates(g_maps: &[Permutation], h_maps: &[Permutation]) -> Result<Vec<Permutation>> {
    let (gn, hn) = (g_maps.len(), h_maps.len());
    let mut out = Vec::with_capacity(gn * hn);
    for x in 0..gn * hn {
        let (phi, theta) = (&g_maps[x % gn], &h_maps[x / gn]);
        let images = (0..gn * hn).map(|y| phi.apply(y % gn) + theta.apply(y / gn) * gn).collect();
        out.push(Permutation::from_images(images)?);
    }
    Ok(out)
}

/// Circulant graph on `Z_n` with connection set `s` (closed under negation).
pub fn circulant(n: usize, s: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &d in s {
        if d == 0 || d >= n {
            return domain(format!("connection element {d} out of range 1..{n}"));
        }
        for x in 0..n {
            g.set_edge(x, (x + d) % n, true);
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub n: usize,
    /// which isomorphism classes were examined
    pub scope: &'static str,
    pub classes_examined: usize,
    /// graph6 of the canonical representatives in the class
    pub members: Vec<String>,
    /// graph6 of those that are self-complementary and vertex-transitive
    pub sc_vt: Vec<String>,
    pub holds: bool,
}

/// Canonical representatives of the `d`-regular graphs of order `n`.
fn regular_classes(n: usize, d: usize) -> Result<Vec<Graph>> {
    fn extend(g: &mut Graph, n: usize, d: usize, i: usize, j: usize, out: &mut BTreeMap<Vec<u64>, Graph>) -> Result<()> {
        if i == n {
            let (_, c) = canonical_labeling(g)?;
            out.entry(c.rows().to_vec()).or_insert(c);
            return Ok(());
        }
        if j == n {
            if g.degree(i) == d {
                return extend(g, n, d, i + 1, i + 2, out);
            }
            return Ok(());
        }
        // remaining slots for i must still be able to reach degree d
        if g.degree(i) + (n - j) < d {
            return Ok(());
        }
        if g.degree(i) < d && g.degree(j) < d {
            g.set_edge(i, j, true);
            extend(g, n, d, i, j + 1, out)?;
            g.set_edge(i, j, false);
        }
        extend(g, n, d, i, j + 1, out)
    }
    if d >= n {
        return Ok(Vec::new());
    }
    // vertex 0 may be taken adjacent to exactly 1..=d
    let mut g = Graph::from_edges(n, (1..=d).map(|j| (0, j)))?;
    let mut out = BTreeMap::new();
    extend(&mut g, n, d, 1, 2, &mut out)?;
    Ok(out.into_values().collect())
}

/// Checks that membership coincides with being self-complementary and
/// vertex-transitive over every isomorphism class of order `n <= 8`. At
/// `n = 9` only the 4-regular classes are examined: members are regular of
/// degree `(n-1)/2`, and so are self-complementary regular graphs.
pub fn verify_class_g_characterization(n: usize) -> Result<CharacterizationReport> {
    let (classes, scope) = match n {
        1..=8 => (enumerate_graphs(n)?.graphs.clone(), "all classes"),
        9 => (regular_classes(9, 4)?, "4-regular classes"),
        _ => return Err(Error::OrderTooLarge { n, max: 9 }),
    };
    let mut members = Vec::new();
    let mut sc_vt = Vec::new();
    let mut holds = true;
    for g in &classes {
        let m = n != 2 && class_g_member(g)?.member;
        let s = is_self_complementary(g)? && is_vertex_transitive(g)?;
        if m {
            members.push(graph6::encode(g));
        }
        if s {
            sc_vt.push(graph6::encode(g));
        }
        holds &= m == s;
    }
    Ok(CharacterizationReport {
        n,
        scope,
        classes_examined: classes.len(),
        members,
        sc_vt,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub family: &'static str,
    /// how self-complementarity of a candidate is established
    pub sc_test: &'static str,
    pub candidates_total: u64,
    pub examined: u64,
    pub exhaustive: bool,
    /// graph6 of canonical forms, sorted
    pub members: Vec<String>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A complementing map `y -> phi(y)` of the circulant, if one is found.
fn complementing_map(n: usize, s: VertexSet, g: &Graph) -> Result<Option<Vec<usize>>> {
    let non = VertexSet::full(n).without(0).difference(s);
    for a in (2..n).filter(|&a| gcd(a, n) == 1) {
        if s.iter().all(|d| non.contains(a * d % n)) {
            return Ok(Some((0..n).map(|y| a * y % n).collect()));
        }
    }
    if n <= MAX_SEARCH_ORDER + 1 {
        return Ok(isomorphic(g, &g.complement())?.map(|p| p.images().to_vec()));
    }
    Ok(None)
}

/// Explores circulants of order `n` whose connection set has `(n-1)/2`
/// elements. Self-complementary circulants are vertex-transitive, so each one
/// found is confirmed with certificates `y -> phi(y) + x - phi(x)`.
/// Finding nothing proves nothing beyond the examined candidates.
pub fn search_class_g(n: usize, budget: u64) -> Result<SearchReport> {
    if n % 4 != 1 || n > MAX_CIRCULANT_SEARCH {
        return domain(format!("need n = 1 mod 4 and n <= {MAX_CIRCULANT_SEARCH}, got {n}"));
    }
    let m = (n - 1) / 2;
    let total = binom_u64(m as u64, (m / 2) as u64);
    let examined = total.min(budget);
    let found: Vec<Option<(String, Graph)>> = (0..examined)
        .into_par_iter()
        .map(|index| -> Result<Option<(String, Graph)>> {
            let pick = VertexSet::colex_unrank(index, m / 2, m)?;
            let mut s = VertexSet::EMPTY;
            for i in pick {
                s.insert(i + 1);
                s.insert(n - i - 1);
            }
            let g = circulant(n, &s.to_vec())?;
            let Some(phi) = complementing_map(n, s, &g)? else {
                return Ok(None);
            };
            let maps = (0..n)
                .map(|x| Permutation::from_images((0..n).map(|y| (phi[y] + x + n - phi[x]) % n).collect()))
                .collect::<Result<Vec<_>>>()?;
            if !class_g_member_certified(&g, &maps)?.member {
                return Ok(None);
            }
            let (_, c) = canonical_labeling(&g)?;
            Ok(Some((graph6::encode(&c), c)))
        })
        .collect::<Result<_>>()?;
    let mut members: Vec<String> = found.into_iter().flatten().map(|(code, _)| code).collect();
    members.sort();
    members.dedup();
    Ok(SearchReport {
        n,
        family: "circulant",
        sc_test: if n <= MAX_SEARCH_ORDER + 1 { "multiplier+isomorphism" } else { "multiplier" },
        candidates_total: total,
        examined,
        exhaustive: examined == total,
        members,
    })
}

/// If `g, g'` are `(v-1)`-hypomorphic with the parity condition up to
/// complementation at `k = 0 mod 4`, then `g = g'` or `g` is in the class.
pub fn evaluate_remark_corfin(g: &Graph, h: &Graph, k: usize) -> Result<Check> {
    g.same_order(h)?;
    let v = g.order();
    if k == 0 || !k.is_multiple_of(4) || k + 2 > v {
        return domain(format!("need 1 <= k <= v-2 and k = 0 mod 4, got k={k}, v={v}"));
    }
    let mut c = Check::new("corfin", v, Some(k));
    let hyp_a = c.cond("hyp_v_minus_1_hypomorphic", k_hypomorphic(g, h, v - 1)?.holds);
    let parity = same_parity_utc(g, h, k)?;
    let hyp_b = c.cond("hyp_parity_utc", parity.holds);
    c.hypothesis = hyp_a && hyp_b;
    let equal = c.cond("equal", g == h);
    let member = if equal { false } else { class_g_member(g)?.member };
    c.cond("class_member", member);
    c.holds = equal || member;
    c.witness = parity.witness;
    Ok(c)
}

pub fn verify_remark_corfin(g: &Graph, h: &Graph, k: usize) -> Result<Check> {
    evaluate_remark_corfin(g, h, k)?.require_hypothesis()
}
