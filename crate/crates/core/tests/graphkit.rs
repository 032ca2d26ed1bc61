use proptest::prelude::*;
use recomp::graphkit::tables::{restriction_code, table};
use recomp::graphkit::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            for (idx, b) in bits.into_iter().enumerate() {
                if b {
                    let (i, j) = pair_at(idx);
                    g.set_edge(i, j, true);
                }
            }
            g
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, p)| (g, Permutation::from_images(p).unwrap()))
    })
}

/// Isomorphism by trying every permutation.
fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if Permutation::from_images(p.clone()).unwrap().is_isomorphism(g, h) {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

proptest! {
    #[test]
    fn relabelled_graphs_are_found_isomorphic((g, p) in graph_with_perm(14)) {
        let h = g.permuted(&p);
        let found = isomorphic(&g, &h).unwrap();
        prop_assert!(found.is_some_and(|q| q.is_isomorphism(&g, &h)));
        prop_assert_eq!(canonical_labeling(&g).unwrap().1, canonical_labeling(&h).unwrap().1);
        prop_assert_eq!(invariants(&g), invariants(&h));
    }

    #[test]
    fn isomorphism_agrees_with_brute_force((g, h) in graph(6).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), graph(n).prop_filter("same order", move |h| h.order() == n))
    })) {
        let fast = isomorphic(&g, &h).unwrap();
        prop_assert_eq!(fast.is_some(), brute_isomorphic(&g, &h));
        if let Some(p) = fast {
            prop_assert!(p.is_isomorphism(&g, &h));
        }
        prop_assert_eq!(min_code(&g).unwrap() == min_code(&h).unwrap(), brute_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_labeling_maps_onto_its_form(g in graph(16)) {
        let (p, c) = canonical_labeling(&g).unwrap();
        prop_assert!(p.is_isomorphism(&g, &c));
    }

    #[test]
    fn min_code_is_a_relabelling_invariant((g, p) in graph_with_perm(7)) {
        prop_assert_eq!(min_code(&g).unwrap(), min_code(&g.permuted(&p)).unwrap());
        let utc = canonical_form_utc(&g).unwrap();
        prop_assert_eq!(utc, canonical_form_utc(&g.complement().permuted(&p)).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(64)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert!(g.intersection(&c).unwrap().is_empty_graph());
        prop_assert!(g.boolean_sum(&c).unwrap().is_complete_graph());
    }

    #[test]
    fn counting_identities(g in graph(12)) {
        let a = invariants(&g);
        let b = invariants(&g.complement());
        prop_assert_eq!((a.a0, a.a1, a.a2, a.h3), (b.a0, b.a1, b.a2, b.h3));
        prop_assert_eq!(a.a2, a.e * a.e_bar);
        prop_assert_eq!(a.a1, degree_product_sum(&g));
        let n = g.order() as u64;
        prop_assert_eq!(6 * a.h3 + 3 * a.a1, n * n.saturating_sub(1) * n.saturating_sub(2));
        prop_assert_eq!(a.h3 as usize, homogeneous_triples(&g).len());
    }

    #[test]
    fn restriction_tables_agree_with_canonical_forms(g in graph(7).prop_filter("order 7", |g| g.order() == 7), set in 0u64..128) {
        let s = VertexSet(set);
        prop_assume!(s.len() >= 2);
        let t = table(s.len()).unwrap();
        let code = restriction_code(&g, s);
        let induced = g.induced(s).unwrap();
        prop_assert_eq!(code as u64, induced.pair_code());
        // two codes share a class exactly when the graphs are isomorphic
        let other = Graph::from_pair_code(s.len(), (code as u64).reverse_bits() >> (64 - s.len() * (s.len() - 1) / 2)).unwrap();
        prop_assert_eq!(
            t.iso_class(code) == t.iso_class(other.pair_code() as u32),
            isomorphic(&induced, &other).unwrap().is_some()
        );
        prop_assert_eq!(
            t.utc_class(code) == t.utc_class(other.pair_code() as u32),
            isomorphic_up_to_complementation(&induced, &other).unwrap().holds()
        );
    }

    #[test]
    fn colex_rank_round_trip(n in 1usize..=20, k in 0usize..=20, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let total = (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1));
        let idx = seed % total;
        let s = VertexSet::colex_unrank(idx, k, n).unwrap();
        prop_assert_eq!(s.len(), k);
        prop_assert!(s.is_subset(VertexSet::full(n)));
        prop_assert_eq!(s.colex_rank(), idx);
    }

    #[test]
    fn permutation_algebra((g, p) in graph_with_perm(12)) {
        let q = p.inverse();
        prop_assert_eq!(p.compose(&q), Permutation::identity(p.len()));
        prop_assert_eq!(g.permuted(&p).permuted(&q), g);
    }
}

#[test]
fn subsets_count_and_order() {
    let all: Vec<VertexSet> = subsets(7, 3).collect();
    assert_eq!(all.len(), 35);
    assert!(all.windows(2).all(|w| w[0].colex_rank() + 1 == w[1].colex_rank()));
}

#[test]
fn orbits_and_transitivity() {
    let c7 = cycle(7).unwrap();
    assert!(is_vertex_transitive(&c7).unwrap());
    let p5 = path(5).unwrap();
    assert!(!is_vertex_transitive(&p5).unwrap());
    assert_eq!(orbit(&p5, 0).unwrap().to_vec(), vec![0, 4]);
    assert_eq!(orbit(&p5, 2).unwrap().to_vec(), vec![2]);
    assert!(is_self_complementary(&path(4).unwrap()).unwrap());
    assert!(!is_self_complementary(&cycle(4).unwrap()).unwrap());
}

#[test]
fn utc_verdict_kinds() {
    let p4 = path(4).unwrap();
    assert_eq!(isomorphic_up_to_complementation(&p4, &p4).unwrap().kind, UtcKind::Both);
    let c4 = cycle(4).unwrap();
    let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(isomorphic_up_to_complementation(&c4, &two_edges).unwrap().kind, UtcKind::IsoToComplement);
    assert_eq!(isomorphic_up_to_complementation(&c4, &c4).unwrap().kind, UtcKind::Iso);
    assert_eq!(isomorphic_up_to_complementation(&c4, &p4).unwrap().kind, UtcKind::Neither);
}
