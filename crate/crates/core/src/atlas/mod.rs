//! Catalogues of graphs up to isomorphism and exhaustive sweeps over pairs.
//!
//! A sweep pairs every catalogue representative `g` of order `v` with every
//! labelled graph `g'` on the same vertex set. Both the hypotheses and the
//! conclusions checked here are invariant under relabelling `g` and `g'`
//! together, so fixing `g` up to isomorphism loses nothing.

mod log;
mod sweep;

pub use log::*;
pub use sweep::*;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphkit::{min_code, Graph};

/// Largest order with a catalogue.
pub const MAX_CATALOG_ORDER: usize = 8;
/// Largest order enumerated by filtering all labelled graphs.
const FILTER_MAX: usize = 6;

/// One representative per isomorphism class, sorted by canonical code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphCatalog {
    pub n: usize,
    /// canonical codes, increasing
    pub codes: Vec<u64>,
    #[serde(skip)]
    pub graphs: Vec<Graph>,
}

/// The graph whose graph6 bit string, read as a binary number, is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    let m = n * n.saturating_sub(1) / 2;
    let pair_code = if m == 0 { 0 } else { code.reverse_bits() >> (64 - m) };
    Graph::from_pair_code(n, pair_code)
}

fn catalog_from_codes(n: usize, codes: BTreeSet<u64>) -> Result<GraphCatalog> {
    let codes: Vec<u64> = codes.into_iter().collect();
    let graphs = codes.iter().map(|&c| graph_from_code(n, c)).collect::<Result<_>>()?;
    Ok(GraphCatalog { n, codes, graphs })
}

fn build_catalog(n: usize) -> Result<GraphCatalog> {
    if n <= FILTER_MAX {
        let m = n * (n - 1) / 2;
        let codes = (0u64..1 << m)
            .into_par_iter()
            .filter_map(|pc| {
                let g = Graph::from_pair_code(n, pc).expect("valid code");
                let c = min_code(&g).expect("small order");
                (graph_from_code(n, c).expect("valid code") == g).then_some(c)
            })
            .collect::<Vec<_>>();
        return catalog_from_codes(n, codes.into_iter().collect());
    }
    // every graph on n vertices extends a representative on n - 1
    let base = enumerate_graphs(n - 1)?;
    let codes: Vec<Vec<u64>> = base
        .graphs
        .par_iter()
        .map(|h| {
            let mut rows = h.rows().to_vec();
            rows.push(0);
            let start = Graph::from_rows(rows).expect("valid rows");
            (0u64..1 << (n - 1))
                .map(|nbrs| {
                    let mut g = start.clone();
                    for x in (0..n - 1).filter(|&x| nbrs >> x & 1 == 1) {
                        g.set_edge(x, n - 1, true);
                    }
                    min_code(&g).expect("small order")
                })
                .collect()
        })
        .collect();
    catalog_from_codes(n, codes.into_iter().flatten().collect())
}

/// Isomorphism classes of order `n`: all labelled graphs filtered by
/// canonical code for `n <= 6`, one-vertex extensions of the order `n - 1`
/// catalogue for `n = 7, 8`. Results are cached.
pub fn enumerate_graphs(n: usize) -> Result<&'static GraphCatalog> {
    static CACHE: [OnceLock<GraphCatalog>; MAX_CATALOG_ORDER + 1] = [const { OnceLock::new() }; MAX_CATALOG_ORDER + 1];
    if n > MAX_CATALOG_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_CATALOG_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if let Some(c) = CACHE[n].get() {
        return Ok(c);
    }
    let built = build_catalog(n)?;
    Ok(CACHE[n].get_or_init(|| built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphkit::isomorphic;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).unwrap().graphs.len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn representatives_carry_their_code() {
        let c = enumerate_graphs(4).unwrap();
        for (g, &code) in c.graphs.iter().zip(&c.codes) {
            assert_eq!(min_code(g).unwrap(), code);
        }
        assert!(c.codes.windows(2).all(|w| w[0] < w[1]));
        for (i, a) in c.graphs.iter().enumerate() {
            for b in &c.graphs[i + 1..] {
                assert!(isomorphic(a, b).unwrap().is_none());
            }
        }
    }

    #[test]
    fn code_decoding() {
        // graph6 order: x01 x02 x12; code 0b001 sets x12
        assert_eq!(graph_from_code(3, 0b001).unwrap(), Graph::from_edges(3, [(1, 2)]).unwrap());
        assert_eq!(graph_from_code(1, 0).unwrap(), Graph::empty(1).unwrap());
        assert!(enumerate_graphs(9).is_err());
    }
}
