//! Cross-module invariants over random connected graphs.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zgrundy::graph::graph6;
use zgrundy::heuristics::{constructive_sequence, greedy_min_footprint};
use zgrundy::sequences::{footprints, Witness};
use zgrundy::solvers::{brute_force_grundy, grundy_number, is_zero_forcing_set, zero_forcing_direct};
use zgrundy::{Graph, Variant};

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_filter_map("disconnected", |(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            let g = Graph::new(n, edges).ok()?;
            g.is_connected().then_some(g)
        })
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn duality_with_direct_forcing_search(g in connected_graph(9)) {
        let z = grundy_number(&g, Variant::Z).unwrap().value;
        prop_assert_eq!(z + zero_forcing_direct(&g).unwrap(), g.order());
    }

    #[test]
    fn closed_variant_dominates_z(g in connected_graph(10)) {
        let closed = grundy_number(&g, Variant::Closed).unwrap().value;
        let z = grundy_number(&g, Variant::Z).unwrap().value;
        prop_assert!(closed >= z);
    }

    #[test]
    fn solver_agrees_with_brute_force(g in connected_graph(7)) {
        for variant in [Variant::Closed, Variant::Z] {
            prop_assert_eq!(grundy_number(&g, variant).unwrap().value, brute_force_grundy(&g, variant).unwrap());
        }
    }

    #[test]
    fn values_invariant_under_relabeling(g in connected_graph(10), seed in any::<u64>()) {
        let h = shuffled(&g, seed);
        for variant in [Variant::Closed, Variant::Z] {
            prop_assert_eq!(grundy_number(&g, variant).unwrap().value, grundy_number(&h, variant).unwrap().value);
        }
    }

    #[test]
    fn witnesses_revalidate(g in connected_graph(10)) {
        for variant in [Variant::Closed, Variant::Z] {
            let r = grundy_number(&g, variant).unwrap();
            prop_assert_eq!(r.witness.len(), r.value);
            let w = Witness::new(&g, r.witness.order(), variant).unwrap();
            prop_assert_eq!(w.verify().unwrap(), r.value);
        }
    }

    #[test]
    fn complement_of_z_witness_forces(g in connected_graph(10)) {
        let r = grundy_number(&g, Variant::Z).unwrap();
        let mut seed = g.full_set();
        for &v in r.witness.order() {
            seed.remove(v);
        }
        prop_assert!(is_zero_forcing_set(&g, &seed));
    }

    #[test]
    fn heuristics_are_valid_lower_bounds(g in connected_graph(10)) {
        for variant in [Variant::Closed, Variant::Z] {
            let opt = grundy_number(&g, variant).unwrap().value;
            for seq in [greedy_min_footprint(&g, variant, None).unwrap(), constructive_sequence(&g, variant).unwrap()] {
                prop_assert!(seq.is_valid(variant) && seq.is_dominating());
                prop_assert!(seq.len() <= opt);
            }
        }
    }

    #[test]
    fn graph6_round_trip_preserves_footprints(g in connected_graph(12)) {
        let h = graph6::decode(&graph6::encode(&g).unwrap()).unwrap();
        let order: Vec<usize> = g.vertices().collect();
        let a = footprints(&g, &order).unwrap();
        let b = footprints(&h, &order).unwrap();
        prop_assert_eq!(a.footprints(), b.footprints());
    }
}
