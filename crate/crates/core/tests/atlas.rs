use std::time::Instant;

use recomp::atlas::*;
use recomp::graphkit::{graph6, isomorphic, Graph};

#[test]
fn catalogue_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n).unwrap().graphs.len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn catalogue_eight() {
    let t = Instant::now();
    assert_eq!(enumerate_graphs(8).unwrap().graphs.len(), 12346);
    eprintln!("order 8 catalogue: {:?}", t.elapsed());
}

#[test]
fn catalogue_covers_labelled_graphs() {
    // brute-force oracle: pairwise isomorphism over a sample of labelled graphs
    let cat = enumerate_graphs(5).unwrap();
    for code in (0u64..1 << 10).step_by(7) {
        let g = Graph::from_pair_code(5, code).unwrap();
        let hits = cat.graphs.iter().filter(|r| isomorphic(r, &g).unwrap().is_some()).count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn s_row_at_six() {
    for k in 1..=6 {
        let t = Instant::now();
        let r = s_membership(6, k).unwrap();
        eprintln!("S(6,{k}): {:?} in {:?}", r.verdict, t.elapsed());
        let expected = if k == 4 { Verdict::Member } else { Verdict::NonMember };
        assert_eq!(r.verdict, expected, "k={k}");
        assert!(r.verify_witness().unwrap());
    }
}

#[test]
fn r_rows() {
    let r = r_membership(4, 3).unwrap();
    assert_eq!(r.verdict, Verdict::NonMember);
    let (a, b) = r.witness.clone().unwrap();
    let (g, h) = (graph6::decode(&a).unwrap(), graph6::decode(&b).unwrap());
    assert_eq!((g.order(), h.order()), (4, 4));
    let r54 = r_membership(5, 4).unwrap();
    eprintln!("R(5,4): {:?}", r54.verdict);
    assert!(r54.verify_witness().unwrap());
    assert_eq!(r_membership(6, 4).unwrap().verdict, Verdict::Member);
}

#[test]
fn sweeps_without_violations() {
    let t = Instant::now();
    let r = sweep_theorem(TheoremId::Clawfree, 5, None, SweepOptions::default()).unwrap();
    eprintln!("clawfree v=5: {:?}", t.elapsed());
    assert_eq!(r.pairs, 1 << 20);
    assert_eq!(r.violation_count, 0);
    assert!(r.hypothesis_satisfied > 0);
    for (th, v, k) in [
        (TheoremId::Down, 5, 3),
        (TheoremId::Corkk1, 5, 4),
        (TheoremId::Kaplus, 6, 3),
        (TheoremId::Principal, 6, 4),
    ] {
        let t = Instant::now();
        let r = sweep_theorem(th, v, Some(k), SweepOptions::default()).unwrap();
        eprintln!("{} v={v} k={k}: {:?}", th.name(), t.elapsed());
        assert_eq!(r.violation_count, 0, "{}", th.name());
        assert!(r.hypothesis_satisfied > 0, "{}", th.name());
    }
}

#[test]
fn sweep_preconditions() {
    assert!(sweep_theorem(TheoremId::K0mod4, 6, Some(3), SweepOptions::default()).is_err());
    assert!(sweep_theorem(TheoremId::K0mod4, 6, None, SweepOptions::default()).is_err());
    assert!(sweep_theorem(TheoremId::K1mod4, 7, Some(5), SweepOptions::default()).is_err());
    assert!(sweep_theorem(TheoremId::Principal, 6, Some(5), SweepOptions::default()).is_err());
}
