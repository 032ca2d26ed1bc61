//! Lookup tables indexed by the pair code of a small restriction.
//!
//! For `k <= MAX_TABLE_K` every labelled graph on `k` vertices is assigned
//! its isomorphism-class id and its class id up to complementation. Ids are
//! handed out by orbit enumeration in increasing code order, so they are
//! reproducible.

use std::sync::OnceLock;

use super::graph::{pair_index, Graph};
use super::vertex_set::VertexSet;

pub const MAX_TABLE_K: usize = 7;

pub struct RestrictionTable {
    pub k: usize,
    iso: Vec<u16>,
    utc: Vec<u16>,
    iso_classes: usize,
}

impl RestrictionTable {
    #[inline]
    pub fn iso_class(&self, code: u32) -> u16 {
        self.iso[code as usize]
    }

    #[inline]
    pub fn utc_class(&self, code: u32) -> u16 {
        self.utc[code as usize]
    }

    pub fn iso_class_count(&self) -> usize {
        self.iso_classes
    }

    pub fn utc_class_count(&self) -> usize {
        let mut ids: Vec<u16> = self.utc.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    fn build(k: usize) -> Self {
        let m = k * k.saturating_sub(1) / 2;
        let size = 1usize << m;
        let full = (size - 1) as u32;
        let perms = pair_permutations(k);
        let mut iso = vec![u16::MAX; size];
        let mut next = 0u16;
        for code in 0..size {
            if iso[code] != u16::MAX {
                continue;
            }
            for p in &perms {
                iso[apply_pair_map(p, code as u32) as usize] = next;
            }
            next += 1;
        }
        let utc = (0..size)
            .map(|c| iso[c].min(iso[(!(c as u32) & full) as usize]))
            .collect();
        RestrictionTable {
            k,
            iso,
            utc,
            iso_classes: next as usize,
        }
    }
}

/// The table for restrictions of size `k`, built on first use.
pub fn table(k: usize) -> Option<&'static RestrictionTable> {
    static TABLES: [OnceLock<RestrictionTable>; MAX_TABLE_K + 1] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    (1..=MAX_TABLE_K)
        .contains(&k)
        .then(|| TABLES[k].get_or_init(|| RestrictionTable::build(k)))
}

/// For each permutation of `0..k`, the induced map on pair indices.
fn pair_permutations(k: usize) -> Vec<Vec<u8>> {
    let m = k * k.saturating_sub(1) / 2;
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut map = vec![0u8; m];
        for j in 1..k {
            for i in 0..j {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                map[pair_index(i, j)] = pair_index(a, b) as u8;
            }
        }
        out.push(map);
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn apply_pair_map(map: &[u8], code: u32) -> u32 {
    VertexSet(code as u64)
        .iter()
        .fold(0u32, |acc, b| acc | 1 << map[b])
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Pair code of the restriction of `g` to `set`, relabelled by increasing label.
#[inline]
pub fn restriction_code(g: &Graph, set: VertexSet) -> u32 {
    let mut code = 0u32;
    let mut shift = 0;
    let mut below = 0u64;
    for v in set {
        let row = g.row(v) & below;
        // bits for (earlier member, v) in increasing order of the earlier member
        let mut b = below;
        while b != 0 {
            let u = b.trailing_zeros();
            code |= ((row >> u & 1) as u32) << shift;
            shift += 1;
            b &= b - 1;
        }
        below |= 1 << v;
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphkit::iso::canonical_form_utc;

    #[test]
    fn class_counts() {
        let iso: Vec<usize> = (1..=MAX_TABLE_K).map(|k| table(k).unwrap().iso_class_count()).collect();
        assert_eq!(iso, vec![1, 2, 4, 11, 34, 156, 1044]);
        assert_eq!(table(4).unwrap().utc_class_count(), 6);
        assert!(table(0).is_none());
        assert!(table(8).is_none());
    }

    #[test]
    fn restriction_code_matches_induced_pair_code() {
        let g = Graph::from_edges(7, [(0, 3), (3, 5), (5, 6), (1, 2), (2, 6), (0, 6)]).unwrap();
        for mask in 1u64..128 {
            let set = VertexSet(mask);
            let induced = g.induced(set).unwrap();
            if induced.order() <= 7 {
                assert_eq!(restriction_code(&g, set) as u64, induced.pair_code());
            }
        }
    }

    #[test]
    fn utc_ids_agree_with_canonical_codes() {
        let t = table(5).unwrap();
        for a in (0..1024u32).step_by(7) {
            for b in (0..1024u32).step_by(13) {
                let ga = Graph::from_pair_code(5, a as u64).unwrap();
                let gb = Graph::from_pair_code(5, b as u64).unwrap();
                let same = canonical_form_utc(&ga).unwrap() == canonical_form_utc(&gb).unwrap();
                assert_eq!(t.utc_class(a) == t.utc_class(b), same);
            }
        }
    }
}
