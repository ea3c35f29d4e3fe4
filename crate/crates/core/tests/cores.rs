mod common;

use cubic_cores::cores::{
    core_properties, find_witness, make_cover_triple, min_cyclic_weak_core_k, mu3, mu3_prime, validate_witness,
    weak_core, ConjectureId, CoreSearch, WitnessOutcome,
};
use cubic_cores::factors::{enumerate_joins, enumerate_perfect_matchings, Join};
use cubic_cores::{Budget, CubicGraph, Error};
use proptest::prelude::*;

use common::*;

fn small_bridgeless(max_n: usize) -> Vec<CubicGraph> {
    small_cubic()
        .into_iter()
        .filter(|g| g.vertex_count() <= max_n && g.is_bridgeless())
        .collect()
}

#[test]
fn mu3_matches_naive_triple_loop() {
    for g in small_bridgeless(10) {
        let naive = naive_min_l2(&g, &brute_matchings(&g));
        let r = mu3(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), Some(naive), "{g:?}");
        let t = r.witness().unwrap();
        assert_eq!(t.k(), 0);
        let masks = t.joins().each_ref().map(|j| subset_to_mask(j.edges()));
        assert_eq!(naive_l2(&g, masks), naive);
    }
}

#[test]
fn mu3_prime_matches_naive_triple_loop() {
    for g in small_bridgeless(10) {
        let naive = naive_min_l2(&g, &brute_joins(&g));
        let r = mu3_prime(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), Some(naive), "{g:?}");
        assert!(naive <= mu3(&g, &Budget::unlimited()).unwrap().value().unwrap());
    }
}

#[test]
fn cyclic_k_matches_naive_triple_loop() {
    for g in small_bridgeless(10) {
        let r = min_cyclic_weak_core_k(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), naive_cyclic_k(&g), "{g:?}");
        if let Some(t) = r.witness() {
            assert!(core_properties(t).is_cyclic);
            assert!(t.e(3).is_empty());
        }
    }
}

#[test]
fn colorable_iff_mu3_zero() {
    for g in small_bridgeless(12) {
        let zero = mu3(&g, &Budget::unlimited()).unwrap().value() == Some(0);
        assert_eq!(zero, three_edge_colorable(&g), "{g:?}");
    }
}

#[test]
fn identities_hold_for_every_join_triple_of_small_graphs() {
    for g in small_bridgeless(8) {
        let joins: Vec<Join<'_>> = enumerate_joins(&g).collect();
        for a in &joins {
            for b in &joins {
                for c in &joins {
                    let t = make_cover_triple(a.clone(), b.clone(), c.clone()).unwrap();
                    assert!(t.counting_identity_holds());
                    assert!(t.type_relations_hold());
                    let even = t.e(0).union(t.e(2));
                    for v in 0..g.vertex_count() {
                        assert!(matches!(g.degree_in(&even, v), 0 | 2));
                    }
                    let masks = [a, b, c].map(|j| subset_to_mask(j.edges()));
                    assert_eq!(t.l2(), naive_l2(&g, masks));
                    assert_eq!(t.type_counts().total(), g.vertex_count());
                }
            }
        }
    }
}

#[test]
fn weak_core_is_core_edges() {
    let g = CubicGraph::petersen();
    let ms: Vec<Join<'_>> = enumerate_perfect_matchings(&g).map(Join::from).collect();
    let t = make_cover_triple(ms[0].clone(), ms[1].clone(), ms[2].clone()).unwrap();
    let core = weak_core(&t);
    let masks = t.joins().each_ref().map(|j| subset_to_mask(j.edges()));
    assert_eq!(subset_to_mask(&core.edges), core_mask(&g, masks));
    assert_eq!(core.k, 0);
    assert_eq!(core.l2, 6);
    assert_eq!(core.l(), 3.0);
}

#[test]
fn triples_from_different_graphs_are_rejected() {
    let p = CubicGraph::petersen();
    let q = CubicGraph::k33();
    let a = Join::all_edges(&p);
    let b = Join::all_edges(&q);
    assert!(matches!(make_cover_triple(a.clone(), a, b), Err(Error::MixedGraphs)));
}

#[test]
fn witnesses_on_small_bridgeless_graphs() {
    for g in small_bridgeless(12) {
        for id in ConjectureId::ALL {
            match find_witness(&g, id, &Budget::unlimited()).unwrap() {
                WitnessOutcome::Witness(w) => assert!(validate_witness(&g, id, &w.sets).unwrap(), "{id} {g:?}"),
                other => panic!("{id} on {g:?}: {other:?}"),
            }
        }
    }
}

#[test]
fn acyclic_pair_witness_has_no_circuit() {
    let g = CubicGraph::petersen();
    let WitnessOutcome::Witness(w) = find_witness(&g, ConjectureId::AcyclicTwoMatchings, &Budget::unlimited()).unwrap()
    else {
        panic!("Petersen has an acyclic pair");
    };
    let rest = full_mask(&g) & !(subset_to_mask(&w.sets[0]) | subset_to_mask(&w.sets[1]));
    assert!(!has_circuit(&g, rest));
}

#[test]
fn budget_exhaustion_is_not_refutation() {
    let g = CubicGraph::petersen();
    let r = find_witness(&g, ConjectureId::OneMatchingTwoJoins, &Budget::nodes(0)).unwrap();
    assert!(matches!(r, WitnessOutcome::BudgetExceeded));
    let r = mu3_prime(&g, &Budget::nodes(1)).unwrap();
    assert!(matches!(r, CoreSearch::BudgetExceeded { .. }));
}

#[test]
fn bridges_are_preconditions() {
    let g = small_cubic().into_iter().find(|g| !g.is_bridgeless()).unwrap();
    assert!(matches!(mu3(&g, &Budget::unlimited()), Err(Error::NotBridgeless { .. })));
    assert!(matches!(
        find_witness(&g, ConjectureId::FanRaspaud, &Budget::unlimited()),
        Err(Error::NotBridgeless { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identities_on_random_petersen_triples(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let g = CubicGraph::petersen();
        let joins: Vec<Join<'_>> = enumerate_joins(&g).collect();
        let t = make_cover_triple(joins[a].clone(), joins[b].clone(), joins[c].clone()).unwrap();
        prop_assert!(t.counting_identity_holds());
        prop_assert!(t.type_relations_hold());
        let props = core_properties(&t);
        prop_assert_eq!(props.is_cyclic, t.e(3).is_empty());
    }
}
