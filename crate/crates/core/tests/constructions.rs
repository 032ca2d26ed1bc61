use recomp::constructions::*;
use recomp::graphkit::{cycle, graph6, is_self_complementary, isomorphic, Graph};
use recomp::hypomorphy::{k_hypomorphic, k_hypomorphic_utc, same_edge_counts_utc, theta};
use recomp::Error;

#[test]
fn clique_pairs_up_to_nine() {
    for v in 4..=9 {
        let p = clique_pair_counterexample(v).unwrap();
        let q = v / 2;
        let (gbar, e) = (p.g.complement().edge_count(), p.g_prime.edge_count());
        if v % 2 == 0 {
            assert_eq!((gbar, e), (q * q, q * (q - 1) + 1));
        } else {
            assert_eq!((gbar, e), (q * (q + 1), q * q + 1));
        }
        assert!(k_hypomorphic_utc(&p.g, &p.g_prime, 3).unwrap().holds);
    }
}

#[test]
fn cycle_swaps_up_to_nine() {
    for v in 4..=9 {
        let p = cycle_swap_pair(v).unwrap();
        assert_eq!((p.g.edge_count(), p.g_prime.edge_count()), (v, v));
        assert!(isomorphic(&p.g_prime, &cycle(v).unwrap()).unwrap().is_some());
    }
    let p6 = cycle_swap_pair(6).unwrap();
    assert!(k_hypomorphic(&p6.g, &p6.g_prime, 5).unwrap().holds);
    assert!(!k_hypomorphic(&p6.g, &p6.g_prime, 4).unwrap().holds);
}

#[test]
fn lemma_five_family() {
    let pairs = lemma_five_pairs().unwrap();
    assert_eq!(pairs.iter().map(|p| p.order()).collect::<Vec<_>>(), vec![5, 4, 3]);
    assert_eq!(pairs[0].g, cycle_swap_pair(5).unwrap().g);
    for p in &pairs {
        let v = p.order();
        // up to complementation every size works (checked at construction);
        // plain hypomorphy holds only at these sizes
        let sizes: Vec<usize> = (1..=v).filter(|&k| k_hypomorphic(&p.g, &p.g_prime, k).unwrap().holds).collect();
        let expected = match v {
            5 => vec![1, 4, 5],
            4 => vec![1, 3, 4],
            _ => vec![1, 3],
        };
        assert_eq!(sizes, expected, "v={v}");
    }
}

#[test]
fn k7_example() {
    for v in [9, 10] {
        let p = k7_counterexample(v).unwrap();
        assert!(same_edge_counts_utc(&p.g, &p.g_prime, 7).unwrap().holds);
        assert!(!same_edge_counts_utc(&p.g, &p.g_prime, 6).unwrap().holds);
    }
    assert!(k7_counterexample(8).is_err());
}

#[test]
fn remark_examples() {
    let p = remark_example(3, 6).unwrap();
    assert!(p.g.is_empty_graph());
    assert_eq!(p.g_prime, star_graph(6).unwrap());
    assert!(remark_example(6, 8).unwrap().g.is_complete_graph());
    assert!(remark_example(5, 7).unwrap().g.is_empty_graph());
    assert!(remark_example(4, 8).is_err());
    assert!(remark_example(3, 4).is_err());
}

#[test]
fn nonn3_with_pentagon() {
    for (r, v) in [(2, 7), (3, 8), (4, 9)] {
        let p = nonn3_pair(5, r).unwrap();
        assert_eq!(p.order(), v);
        let t = theta(v).unwrap();
        assert_eq!(p.claimed_properties.len(), v - t + 1);
        // one size below the range the pair separates
        assert!(!k_hypomorphic_utc(&p.g, &p.g_prime, t).unwrap().holds, "r={r}");
    }
    assert!(nonn3_pair(6, 2).is_err());
    assert!(nonn3_pair(5, 5).is_err());
}

#[test]
fn nonn3_with_paley_nine() {
    let p = nonn3_pair(9, 2).unwrap();
    assert_eq!(p.order(), 11);
}

#[test]
fn paley_examples() {
    let p5 = paley_graph(5).unwrap();
    assert!(isomorphic(&p5, &cycle(5).unwrap()).unwrap().is_some());
    assert_eq!(graph6::encode(&p5), "Dhc");
    let p9 = paley_graph(9).unwrap();
    assert!(p9.is_regular() && p9.degree(0) == 4);
    assert!(is_self_complementary(&p9).unwrap());
    for q in [5, 9, 13] {
        let g = paley_graph(q).unwrap();
        assert!(class_g_member_certified(&g, &paley_certificates(q).unwrap()).unwrap().member);
        assert!(class_g_member(&g).unwrap().member);
    }
    assert_eq!(paley_graph(21), Err(Error::NotPrimePowerOneMod4(21)));
}

#[test]
fn lex_product_of_pentagons() {
    let p5 = paley_graph(5).unwrap();
    let g = lex_product(&p5, &p5).unwrap();
    assert_eq!(g.order(), 25);
    assert_eq!(g.edge_count(), 5 * 5 + 5 * 25);
    let c = paley_certificates(5).unwrap();
    let maps = lex_product_certificates(&c, &c).unwrap();
    for (x, m) in maps.iter().enumerate() {
        assert_eq!(m.apply(x), x);
        assert!(m.is_isomorphism(&g, &g.complement()));
    }
    let v = class_g_member_certified(&g, &maps).unwrap();
    assert!(v.member);
    assert!(v.certificates.iter().all(|c| matches!(c, Certificate::Fixing(_))));
}

#[test]
fn characterization_small_orders() {
    let r5 = verify_class_g_characterization(5).unwrap();
    assert!(r5.holds);
    assert_eq!(r5.classes_examined, 34);
    assert_eq!(r5.members, vec![graph6::encode(&recomp::atlas::enumerate_graphs(5).unwrap().graphs[r5_index()])]);
    assert_eq!(r5.members, r5.sc_vt);
    for n in [1, 2, 3, 4, 6] {
        let r = verify_class_g_characterization(n).unwrap();
        assert!(r.holds, "n={n}");
        assert_eq!(r.members.is_empty(), n != 1, "n={n}");
    }
}

fn r5_index() -> usize {
    let c5 = cycle(5).unwrap();
    let cat = recomp::atlas::enumerate_graphs(5).unwrap();
    cat.graphs.iter().position(|g| isomorphic(g, &c5).unwrap().is_some()).unwrap()
}

#[test]
fn characterization_order_nine() {
    let r = verify_class_g_characterization(9).unwrap();
    assert!(r.holds);
    assert_eq!(r.classes_examined, 16);
    assert_eq!(r.members.len(), 1);
    let p9 = paley_graph(9).unwrap();
    let member = graph6::decode(&r.members[0]).unwrap();
    assert!(isomorphic(&member, &p9).unwrap().is_some());
}

#[test]
fn circulant_search() {
    let r5 = search_class_g(5, u64::MAX).unwrap();
    assert!(r5.exhaustive);
    assert_eq!(r5.members.len(), 1);
    let c5 = graph6::decode(&r5.members[0]).unwrap();
    assert!(isomorphic(&c5, &cycle(5).unwrap()).unwrap().is_some());
    let r13 = search_class_g(13, u64::MAX).unwrap();
    let p13 = paley_graph(13).unwrap();
    assert!(r13
        .members
        .iter()
        .any(|m| isomorphic(&graph6::decode(m).unwrap(), &p13).unwrap().is_some()));
    let r = search_class_g(13, 3).unwrap();
    assert_eq!((r.examined, r.exhaustive), (3, false));
    assert!(search_class_g(15, 10).is_err());
}

#[test]
fn corfin_remark() {
    let p9 = paley_graph(9).unwrap();
    let c = verify_remark_corfin(&p9, &p9.complement(), 4).unwrap();
    assert!(c.holds && c.condition("class_member") == Some(true));
    let same = verify_remark_corfin(&p9, &p9, 4).unwrap();
    assert!(same.holds);
    let g = Graph::from_edges(9, [(0, 1)]).unwrap();
    assert!(matches!(
        verify_remark_corfin(&g, &Graph::empty(9).unwrap(), 4),
        Err(Error::HypothesisNotMet(_))
    ));
    assert!(verify_remark_corfin(&p9, &p9, 3).is_err());
}

#[test]
fn pair_json_round_trips() {
    let p = nonn3_pair(5, 4).unwrap();
    let j = p.to_json();
    for key in ["g", "g_prime"] {
        let s = j[key].as_str().unwrap();
        assert_eq!(graph6::encode(&graph6::decode(s).unwrap()), s);
    }
    assert_eq!(j["verified"].as_array().unwrap().len(), 5);
}
