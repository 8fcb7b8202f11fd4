use graphsym::qaut::{factorial, verify_prop31, SimpleDigraph};
use proptest::prelude::*;

fn arb_digraph() -> impl Strategy<Value = SimpleDigraph> {
    (1usize..=5)
        .prop_flat_map(|n| {
            let bits = n * (n - 1);
            (Just(n), 0u64..(1u64 << bits))
        })
        .prop_map(|(n, code)| SimpleDigraph::from_code(n, code))
}

proptest! {
    #[test]
    fn automorphism_count_divides_factorial(g in arb_digraph()) {
        let c = g.automorphism_count().unwrap();
        prop_assert!(c >= 1);
        prop_assert_eq!(factorial(g.n()) % c, 0);
        prop_assert_eq!(g.fully_symmetric().unwrap(), c == factorial(g.n()));
    }

    #[test]
    fn relabeling_preserves_the_count(g in arb_digraph(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut pi: Vec<usize> = (0..g.n()).collect();
        pi.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabeled(&pi);
        prop_assert_eq!(h.automorphism_count().unwrap(), g.automorphism_count().unwrap());
        prop_assert_eq!(h.is_complete(), g.is_complete());
    }
}

#[test]
fn exactly_two_fully_symmetric_digraphs() {
    for (n, total) in [(2, 4), (3, 64), (4, 4096)] {
        let r = verify_prop31(n).unwrap();
        assert_eq!(r.digraphs, total);
        assert_eq!(r.full_symmetry, 2, "n = {n}");
        assert!(r.ok());
        let mut found = r.full_symmetry_graphs.clone();
        found.sort();
        let mut want = vec![
            SimpleDigraph::complete(n).matrix(),
            SimpleDigraph::empty(n).matrix(),
        ];
        want.sort();
        assert_eq!(found, want);
    }
}
