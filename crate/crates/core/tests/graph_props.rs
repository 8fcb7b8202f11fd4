mod common;

use common::*;
use graphsym::graph::{
    enumerate_graphs, enumerate_graphs_exact, parse_graph, DirectedMultigraph, EnumerationBudget,
};
use proptest::prelude::*;

/// A path of length two, by brute force over edge pairs.
fn has_two_path_naive(g: &DirectedMultigraph) -> bool {
    g.edges()
        .any(|e| g.edges().any(|f| g.range(e) == g.source(f)))
}

#[test]
fn two_paths_are_exactly_intermediate_vertices() {
    for g in enumerate_graphs(3, 3, false, EnumerationBudget::default()).unwrap() {
        let intermediate = g
            .vertices()
            .any(|v| g.indegree(v) > 0 && g.outdegree(v) > 0);
        assert_eq!(g.has_path_of_length_two(), intermediate, "{}", g.to_text());
        assert_eq!(
            g.has_path_of_length_two(),
            has_two_path_naive(&g),
            "{}",
            g.to_text()
        );
    }
}

#[test]
fn exact_counts() {
    // (n^2)^m assignments of m labeled edges to ordered vertex pairs
    for (nv, ne) in [(1usize, 3usize), (2, 2), (3, 2)] {
        let all = enumerate_graphs_exact(nv, ne, false, EnumerationBudget::default())
            .unwrap()
            .count();
        assert_eq!(all, (nv * nv).pow(ne as u32));
    }
    // two vertices, one edge: only v1 -> v2 and v2 -> v1 avoid isolation
    let n = enumerate_graphs_exact(2, 1, true, EnumerationBudget::default())
        .unwrap()
        .count();
    assert_eq!(n, 2);
}

#[test]
fn budget_is_enforced() {
    assert!(enumerate_graphs(9, 9, true, EnumerationBudget::default()).is_err());
}

fn arb_graph() -> impl Strategy<Value = DirectedMultigraph> {
    (
        1usize..=4,
        proptest::collection::vec((0usize..4, 0usize..4), 1..=6),
    )
        .prop_map(|(nv, pairs)| {
            let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (a % nv, b % nv)).collect();
            DirectedMultigraph::from_index_pairs(nv, &pairs)
        })
}

proptest! {
    #[test]
    fn adjacency_sums_are_degrees(g in arb_graph()) {
        let a = g.adjacency_matrix();
        for v in g.vertices() {
            let row: u64 = a[v.index()].iter().sum();
            let col: u64 = a.iter().map(|r| r[v.index()]).sum();
            prop_assert_eq!(row as usize, g.outdegree(v));
            prop_assert_eq!(col as usize, g.indegree(v));
        }
        let total: u64 = a.iter().flatten().sum();
        prop_assert_eq!(total as usize, g.edge_count());
    }

    #[test]
    fn text_and_json_round_trip(g in arb_graph()) {
        let back = parse_graph(&g.to_text()).unwrap();
        prop_assert_eq!(&back, &g);
        let back = parse_graph(&g.to_json()).unwrap();
        prop_assert_eq!(&back, &g);
    }

    #[test]
    fn predicates_survive_relabeling(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let mut vp: Vec<usize> = (0..g.vertex_count()).collect();
        let mut ep: Vec<usize> = (0..g.edge_count()).collect();
        vp.shuffle(&mut r);
        ep.shuffle(&mut r);
        let h = g.permuted(&vp, &ep);
        prop_assert_eq!(g.is_connected(), h.is_connected());
        prop_assert_eq!(g.has_path_of_length_two(), h.has_path_of_length_two());
        prop_assert_eq!(g.is_acyclic(), h.is_acyclic());
        prop_assert_eq!(g.isolated_vertices().len(), h.isolated_vertices().len());
        let mut a: Vec<_> = g.vertices().map(|v| (g.indegree(v), g.outdegree(v))).collect();
        let mut b: Vec<_> = h.vertices().map(|v| (h.indegree(v), h.outdegree(v))).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn random_acyclic_graphs_are_acyclic(seed in any::<u64>()) {
        let g = random_acyclic(&mut rng(seed), 5);
        prop_assert!(g.is_acyclic());
        prop_assert!(g.isolated_vertices().is_empty());
        prop_assert!(g.edge_count() <= 5);
    }
}
