//! Pairwise decision procedures on graphs sharing a vertex set, and checks of
//! the reconstruction statements built from them.
//!
//! Every procedure scans the `k`-subsets in colex order and reports the first
//! subset on which its condition fails.

mod verify;

pub use verify::*;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graphkit::tables::{restriction_code, table, MAX_TABLE_K};
use crate::graphkit::{canonical_form_utc, h3_within, isomorphic, subsets, Graph, UtcCode, VertexSet, MAX_EXACT_ORDER};

/// Outcome of a per-subset condition; `witness` is the first failing subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypoVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
}

impl HypoVerdict {
    pub const TRUE: HypoVerdict = HypoVerdict {
        holds: true,
        witness: None,
    };

    fn fail(at: VertexSet) -> Self {
        HypoVerdict {
            holds: false,
            witness: Some(at),
        }
    }
}

/// First `k`-subset (colex order) failing `ok`.
fn scan(v: usize, k: usize, mut ok: impl FnMut(VertexSet) -> bool) -> HypoVerdict {
    subsets(v, k)
        .find(|&s| !ok(s))
        .map_or(HypoVerdict::TRUE, HypoVerdict::fail)
}

fn check_k(g: &Graph, h: &Graph, k: usize) -> Result<usize> {
    g.same_order(h)?;
    let v = g.order();
    if k == 0 || k > v {
        return domain(format!("subset size k={k} must lie in 1..={v}"));
    }
    Ok(v)
}

fn check_exact_k(k: usize) -> Result<()> {
    if k > MAX_EXACT_ORDER {
        return Err(Error::KTooLarge {
            k,
            max: MAX_EXACT_ORDER,
        });
    }
    Ok(())
}

/// Every `k`-restriction of `g` is isomorphic to the same restriction of `h`.
pub fn k_hypomorphic(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    check_exact_k(k)?;
    if let Some(t) = table(k) {
        return Ok(scan(v, k, |s| t.iso_class(restriction_code(g, s)) == t.iso_class(restriction_code(h, s))));
    }
    let mut err = None;
    let verdict = scan(v, k, |s| {
        match isomorphic(&g.induced(s).expect("nonempty"), &h.induced(s).expect("nonempty")) {
            Ok(p) => p.is_some(),
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    err.map_or(Ok(verdict), Err)
}

/// Every `k`-restriction of `h` is isomorphic to the same restriction of `g`
/// or to its complement.
pub fn k_hypomorphic_utc(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    check_exact_k(k)?;
    if let Some(t) = table(k) {
        return Ok(scan(v, k, |s| t.utc_class(restriction_code(g, s)) == t.utc_class(restriction_code(h, s))));
    }
    let mut err = None;
    let verdict = scan(v, k, |s| {
        let (a, b) = (g.induced(s).expect("nonempty"), h.induced(s).expect("nonempty"));
        let same = isomorphic(&a, &b).and_then(|p| match p {
            Some(_) => Ok(true),
            None => Ok(isomorphic(&a, &b.complement())?.is_some()),
        });
        same.unwrap_or_else(|e| {
            err = Some(e);
            false
        })
    });
    err.map_or(Ok(verdict), Err)
}

#[inline]
fn pairs(k: usize) -> usize {
    k * (k - 1) / 2
}

/// `e(h|K)` equals `e(g|K)` or `C(k,2) - e(g|K)` for every `k`-subset `K`.
pub fn same_edge_counts_utc(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    let m = pairs(k);
    Ok(scan(v, k, |s| {
        let (a, b) = (g.edges_within(s), h.edges_within(s));
        b == a || b == m - a
    }))
}

/// `e(g|K)` and `e(h|K)` have the same parity for every `k`-subset `K`.
pub fn same_parity(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    Ok(scan(v, k, |s| (g.edges_within(s) + h.edges_within(s)).is_multiple_of(2)))
}

/// `e(g|K)` has the parity of `e(h|K)` or of `C(k,2) - e(h|K)` for every `k`-subset `K`.
pub fn same_parity_utc(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    let m = pairs(k);
    Ok(scan(v, k, |s| {
        let (a, b) = (g.edges_within(s), h.edges_within(s));
        (a + b) % 2 == 0 || (a + m - b).is_multiple_of(2)
    }))
}

/// `h3(g|K) = h3(h|K)` for every `k`-subset `K`.
pub fn same_h3_counts(g: &Graph, h: &Graph, k: usize) -> Result<HypoVerdict> {
    let v = check_k(g, h, k)?;
    Ok(scan(v, k, |s| h3_within(g, s) == h3_within(h, s)))
}

#[inline]
fn homogeneous(g: &Graph, triple: VertexSet) -> bool {
    let e = g.edges_within(triple);
    e == 0 || e == 3
}

/// The two graphs have the same 3-homogeneous subsets.
pub fn same_3_homogeneous(g: &Graph, h: &Graph) -> Result<HypoVerdict> {
    g.same_order(h)?;
    Ok(scan(g.order(), 3, |s| homogeneous(g, s) == homogeneous(h, s)))
}

/// `h = g` or `h` is the complement of `g`, as labelled graphs.
pub fn equal_up_to_complementation(g: &Graph, h: &Graph) -> Result<bool> {
    g.same_order(h)?;
    Ok(g == h || *h == g.complement())
}

/// Per-subset data of a pair, in colex order of the subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairProfile {
    pub k: usize,
    pub entries: Vec<ProfileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub subset: VertexSet,
    pub e: usize,
    pub e_prime: usize,
    pub utc: UtcCode,
    pub utc_prime: UtcCode,
    pub h3: u64,
    pub h3_prime: u64,
}

/// Largest subset size for which a profile (with canonical codes) is built.
pub const MAX_PROFILE_K: usize = 8;

pub fn pair_profile(g: &Graph, h: &Graph, k: usize) -> Result<PairProfile> {
    let v = check_k(g, h, k)?;
    if k > MAX_PROFILE_K {
        return Err(Error::KTooLarge {
            k,
            max: MAX_PROFILE_K,
        });
    }
    let entries = subsets(v, k)
        .map(|s| {
            Ok(ProfileEntry {
                subset: s,
                e: g.edges_within(s),
                e_prime: h.edges_within(s),
                utc: canonical_form_utc(&g.induced(s)?)?,
                utc_prime: canonical_form_utc(&h.induced(s)?)?,
                h3: h3_within(g, s),
                h3_prime: h3_within(h, s),
            })
        })
        .collect::<Result<_>>()?;
    Ok(PairProfile { k, entries })
}

/// Whether restriction lookups at size `k` are served from precomputed tables.
pub fn uses_tables(k: usize) -> bool {
    (1..=MAX_TABLE_K).contains(&k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_against_empty() {
        let e = Graph::empty(4).unwrap();
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let v = k_hypomorphic(&e, &g, 2).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(VertexSet(0b11)));
        // any two graphs on two vertices agree up to complementation
        assert!(same_edge_counts_utc(&g, &e, 2).unwrap().holds);
        let v3 = same_edge_counts_utc(&g, &e, 3).unwrap();
        assert_eq!(v3.witness, Some(VertexSet(0b111)));
        assert!(!same_parity(&e, &g, 3).unwrap().holds);
    }

    #[test]
    fn table_and_search_paths_agree() {
        let g = Graph::from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0)]).unwrap();
        let mut h = g.clone();
        h.set_edge(0, 1, false);
        h.set_edge(0, 2, true);
        for k in [7, 8, 9] {
            assert_eq!(
                k_hypomorphic(&g, &g, k).unwrap(),
                HypoVerdict::TRUE,
            );
            let a = k_hypomorphic_utc(&g, &h, k).unwrap();
            assert!(!a.holds);
        }
        assert!(k_hypomorphic_utc(&g, &g.complement(), 8).unwrap().holds);
    }

    #[test]
    fn parity_survives_complement_on_four() {
        let g = Graph::from_edges(7, [(0, 1), (2, 5), (3, 4), (1, 6)]).unwrap();
        assert!(same_parity(&g, &g.complement(), 4).unwrap().holds);
        assert!(same_3_homogeneous(&g, &g.complement()).unwrap().holds);
        let k4 = Graph::complete(4).unwrap();
        assert!(same_3_homogeneous(&k4, &Graph::empty(4).unwrap()).unwrap().holds);
    }

    #[test]
    fn bad_k_is_rejected() {
        let g = Graph::empty(5).unwrap();
        assert!(k_hypomorphic(&g, &g, 0).is_err());
        assert!(k_hypomorphic(&g, &g, 6).is_err());
        assert!(k_hypomorphic(&g, &Graph::empty(4).unwrap(), 2).is_err());
    }
}
