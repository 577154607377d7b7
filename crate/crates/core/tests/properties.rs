use proptest::prelude::*;
use updom_core::domination::is_minimal_by_removal;
use updom_core::pathdecomp::heuristic_decomposition;
use updom_core::{approximate_uds, brute_force_uds, check_minimal, solve_pathwidth_dp, Graph};

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dp_equals_oracle(g in graph()) {
        let s = solve_pathwidth_dp(&g, &heuristic_decomposition(&g)).unwrap();
        prop_assert_eq!(s.size(), brute_force_uds(&g, 20).unwrap().size());
        prop_assert!(s.verify(&g).is_ok());
    }

    #[test]
    fn check_minimal_matches_definition(g in graph(), mask in any::<u16>()) {
        let d: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(check_minimal(&g, &d).is_ok(), is_minimal_by_removal(&g, &d));
    }

    #[test]
    fn approximation_is_valid_and_within_ratio(g in graph(), r in 2u32..=6, seed in any::<u64>()) {
        let s = approximate_uds(&g, r as f64, seed).unwrap();
        prop_assert!(s.verify(&g).is_ok());
        prop_assert!(r as usize * s.size() >= brute_force_uds(&g, 20).unwrap().size());
    }
}
