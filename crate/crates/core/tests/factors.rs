mod common;

use std::collections::BTreeSet;

use cubic_cores::factors::{
    enumerate_joins, enumerate_perfect_matchings, is_simple_join, odd_components_spanning, CycleSpace, Join,
    PerfectMatching,
};
use cubic_cores::{CubicGraph, Error};

use common::*;

#[test]
fn joins_match_degree_filter_up_to_ten_vertices() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 10) {
        let ours: BTreeSet<u64> = enumerate_joins(g).map(|j| subset_to_mask(j.edges())).collect();
        let brute: BTreeSet<u64> = brute_joins(g).into_iter().collect();
        assert_eq!(ours, brute, "{g:?}");
    }
}

#[test]
fn matchings_match_degree_filter() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 12) {
        let ours: Vec<u64> = enumerate_perfect_matchings(g).map(|m| subset_to_mask(m.edges())).collect();
        let set: BTreeSet<u64> = ours.iter().copied().collect();
        assert_eq!(set.len(), ours.len(), "duplicates for {g:?}");
        let brute: BTreeSet<u64> = brute_matchings(g).into_iter().collect();
        assert_eq!(set, brute, "{g:?}");
    }
}

#[test]
fn join_count_is_two_to_the_cycle_rank() {
    let mut graphs = small_cubic();
    graphs.extend(class1().into_iter().filter(|g| g.vertex_count() <= 14));
    for g in &graphs {
        let expected = 1usize << (g.edge_count() - g.vertex_count() + 1);
        assert_eq!(enumerate_joins(g).count(), expected, "{g:?}");
    }
}

#[test]
fn join_complements_are_disjoint_circuits() {
    let mut graphs = small_cubic();
    graphs.extend(snarks().into_iter().take(3));
    for g in &graphs {
        for j in enumerate_joins(g).take(4096) {
            let c = subset_to_mask(&j.complement());
            let mut deg = vec![0; g.vertex_count()];
            for e in 0..g.edge_count() {
                if c >> e & 1 == 1 {
                    let (a, b) = g.edge(e);
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
            assert!(deg.iter().all(|&d| d == 0 || d == 2));
            // isolated vertices and circuits only: every non-trivial
            // component has as many edges as vertices
            let comps = component_sizes(g, c);
            let nontrivial: usize = comps.iter().filter(|&&s| s > 1).sum();
            assert_eq!(nontrivial, c.count_ones() as usize);
        }
    }
}

#[test]
fn matchings_are_simple_joins_without_j_vertices() {
    for g in small_cubic().iter().filter(|g| g.is_bridgeless()) {
        for m in enumerate_perfect_matchings(g) {
            assert_eq!(m.as_join().n_j(), 0);
            assert!(is_simple_join(m.as_join()));
        }
    }
}

#[test]
fn simple_join_definition() {
    let g = CubicGraph::complete_k4();
    // all edges: every vertex is a J-vertex and K4 has circuits
    assert!(!is_simple_join(&Join::all_edges(&g)));
    // a star at vertex 0 plus the matching edge opposite is a join with one J-vertex
    let star = g
        .subset_from_indices([g.edge_index(0, 1).unwrap(), g.edge_index(0, 2).unwrap(), g.edge_index(0, 3).unwrap()])
        .unwrap();
    let j = Join::new(&g, star).unwrap();
    assert_eq!(j.j_vertices(), &[0]);
    assert!(is_simple_join(&j));
}

#[test]
fn invalid_sets_are_rejected() {
    let g = CubicGraph::petersen();
    let one = g.subset_from_indices([0]).unwrap();
    assert!(matches!(Join::new(&g, one.clone()), Err(Error::Parity { .. })));
    assert!(matches!(PerfectMatching::new(&g, one), Err(Error::Parity { .. })));
    let k4 = CubicGraph::complete_k4();
    assert!(matches!(Join::new(&g, k4.full_subset()), Err(Error::WidthMismatch { .. })));
    assert!(matches!(
        PerfectMatching::new(&g, g.full_subset()),
        Err(Error::Parity { expected: _, .. })
    ));
}

#[test]
fn cycle_space_basis_spans_even_subgraphs() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 10) {
        let cs = CycleSpace::new(g);
        assert_eq!(cs.dimension(), g.cycle_rank());
        let ours: BTreeSet<u64> = cs.iter().map(|c| subset_to_mask(&c)).collect();
        let brute: BTreeSet<u64> = brute_even(g).into_iter().collect();
        assert_eq!(ours, brute);
    }
}

#[test]
fn odd_components_match_dfs() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 10) {
        for j in enumerate_joins(g) {
            let c = j.complement();
            assert_eq!(odd_components_spanning(g, &c), odd_count(g, subset_to_mask(&c)));
        }
    }
}

#[test]
fn petersen_counts() {
    let p = CubicGraph::petersen();
    assert_eq!(enumerate_perfect_matchings(&p).count(), 6);
    assert_eq!(enumerate_joins(&p).count(), 64);
    let first = enumerate_joins(&p).next().unwrap();
    assert_eq!(first.edges().count(), 15);
}
