mod common;

use common::*;
use graphsym::graph::{enumerate_graphs, parse_graph, DirectedMultigraph, EnumerationBudget};
use graphsym::symmetry::{
    admissible_permutation, aut_f_report, classify, maximal_perm_sym_bruteforce, CheckKind,
    EdgePermutation, ObstructionKind,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn small_graphs() -> Vec<DirectedMultigraph> {
    enumerate_graphs(3, 3, true, EnumerationBudget::default())
        .unwrap()
        .collect()
}

fn small_graph() -> impl Strategy<Value = DirectedMultigraph> {
    prop::sample::select(small_graphs())
}

fn admissible(g: &DirectedMultigraph, p: &EdgePermutation) -> bool {
    admissible_permutation(g, p).unwrap().admissible
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classification_is_isomorphism_invariant(g in small_graph(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut vp: Vec<usize> = (0..g.vertex_count()).collect();
        let mut ep: Vec<usize> = (0..g.edge_count()).collect();
        vp.shuffle(&mut r);
        ep.shuffle(&mut r);
        let h = g.permuted(&vp, &ep);
        let (a, b) = (classify(&g).unwrap(), classify(&h).unwrap());
        prop_assert_eq!(a.family, b.family);
        prop_assert_eq!(a.group, b.group);
        prop_assert_eq!(a.connected, b.connected);
        prop_assert_eq!(a.f_scalar, b.f_scalar);
        prop_assert_eq!(a.obstruction.map(|o| o.kind), b.obstruction.map(|o| o.kind));
    }

    #[test]
    fn obstruction_transposition_is_inadmissible(g in small_graph()) {
        let v = classify(&g).unwrap();
        if let Some(o) = v.obstruction {
            let (a, b) = o.refuting;
            prop_assert_eq!([g.edge_name(a), g.edge_name(b)], [o.transposition[0].as_str(), o.transposition[1].as_str()]);
            let t = EdgePermutation::transposition(g.edge_count(), a, b);
            prop_assert!(!admissible(&g, &t), "{} survives {}", o.kind, t.to_cycles(&g));
        } else {
            prop_assert!(v.group.is_maximal());
        }
    }

    #[test]
    fn admissible_set_is_a_group(g in small_graph()) {
        let good: Vec<_> = EdgePermutation::all(g.edge_count()).filter(|p| admissible(&g, p)).collect();
        prop_assert!(good.iter().any(EdgePermutation::is_identity));
        for p in &good {
            prop_assert!(admissible(&g, &p.inverse()));
            for q in &good {
                prop_assert!(admissible(&g, &p.compose(q)));
            }
        }
    }

    #[test]
    fn autf_possible_needs_scalar(g in small_graph()) {
        let r = aut_f_report(&g).unwrap();
        if r.possible {
            prop_assert!(r.scalar);
        }
        prop_assert_eq!(r.witness.is_some(), !r.scalar);
        let brute = maximal_perm_sym_bruteforce(&g, 6).unwrap();
        prop_assert_eq!(brute.maximal, classify(&g).unwrap().group.is_maximal());
    }
}

#[test]
fn obstruction_kinds_on_named_graphs() {
    let cases = [
        (
            "v w ; l: v -> v ; e: v -> w",
            ObstructionKind::LoopWithNonLoop,
        ),
        (
            "v w ; e1: v -> v ; e2: v -> v ; f1: w -> w",
            ObstructionKind::UnevenLoops,
        ),
        (
            "a b c d ; e1: a -> b ; e2: b -> c ; e: b -> d",
            ObstructionKind::IntermediateVertex,
        ),
        (
            "a b c ; e1: a -> c ; e: b -> c ; f: a -> b",
            ObstructionKind::IntermediateVertex,
        ),
        (
            "v1 v2 v3 ; e12: v1 -> v2 ; e23: v2 -> v3",
            ObstructionKind::P2Shaped,
        ),
    ];
    for (text, kind) in cases {
        let g = parse_graph(text).unwrap();
        let o = classify(&g)
            .unwrap()
            .obstruction
            .unwrap_or_else(|| panic!("{text}"));
        assert_eq!(o.kind, kind, "{text}");
    }
}

#[test]
fn cycle_swap_of_c2_passes_every_check() {
    let g = parse_graph("v1 v2 ; e12: v1 -> v2 ; e21: v2 -> v1").unwrap();
    let p = EdgePermutation::parse(&g, "(e12 e21)").unwrap();
    let cert = admissible_permutation(&g, &p).unwrap();
    assert!(cert.admissible && cert.failure.is_none());
    let p2 = parse_graph("v1 v2 v3 ; e12: v1 -> v2 ; e23: v2 -> v3").unwrap();
    let swap = EdgePermutation::parse(&p2, "(e12 e23)").unwrap();
    let cert = admissible_permutation(&p2, &swap).unwrap();
    assert_eq!(cert.failure.unwrap().check, CheckKind::Ck2Image);
}
