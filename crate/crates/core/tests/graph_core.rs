mod common;

use cubic_cores::graph6::{read_graph6, write_graph6};
use cubic_cores::{parse_graph6, CubicGraph, Error};
use proptest::prelude::*;

use common::*;

fn all_fixtures() -> Vec<CubicGraph> {
    let mut v = small_cubic();
    v.extend(snarks());
    v.extend(class1());
    v
}

#[test]
fn small_census_counts() {
    let g = small_cubic();
    let by_n = |n| g.iter().filter(|x| x.vertex_count() == n).count();
    assert_eq!([by_n(4), by_n(6), by_n(8), by_n(10), by_n(12)], [1, 2, 5, 19, 85]);
}

#[test]
fn graph6_round_trips_on_fixture_lines() {
    for name in ["small_cubic.g6", "snarks.g6", "class1.g6"] {
        let text = std::fs::read_to_string(data_path(name)).unwrap();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let g = parse_graph6(line.as_bytes()).unwrap();
            assert_eq!(write_graph6(&g), line.trim().as_bytes(), "{name}: {line}");
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn bridge_detection_matches_deletion_oracle() {
    let mut bridged = 0;
    for g in all_fixtures().iter().filter(|g| g.vertex_count() <= 14) {
        let oracle = bridgeless_oracle(g);
        assert_eq!(g.is_bridgeless(), oracle, "{g:?}");
        if let Some(e) = g.find_bridge() {
            let rest = full_mask(g) & !(1 << e);
            assert!(component_sizes(g, rest).len() > 1);
            bridged += 1;
        }
    }
    // the small census contains cubic graphs with bridges from n = 10 on
    assert!(bridged > 0);
}

#[test]
fn named_graphs() {
    let k4 = CubicGraph::complete_k4();
    assert_eq!((k4.vertex_count(), k4.edge_count(), k4.cycle_rank()), (4, 6, 3));
    let p = CubicGraph::petersen();
    assert_eq!((p.vertex_count(), p.edge_count(), p.cycle_rank()), (10, 15, 6));
    assert!(p.is_bridgeless());
    assert!(!three_edge_colorable(&p));
    assert!(three_edge_colorable(&CubicGraph::k33()));
    assert_eq!(cubic_cores::build_named("K3_3").unwrap(), CubicGraph::k33());
    assert!(matches!(cubic_cores::build_named("heawood"), Err(Error::UnknownName(_))));
}

#[test]
fn parse_errors_are_precise() {
    assert!(matches!(parse_graph6(b"C\x20"), Err(Error::Parse { offset: 1, .. })));
    assert!(matches!(parse_graph6(b"C}"), Err(Error::NotCubic { vertex: 2, .. })));
    assert!(parse_graph6(b"EEw_").is_err());
    // two disjoint K4s are cubic but disconnected
    let mut edges = Vec::new();
    for off in [0, 4] {
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a + off, b + off));
            }
        }
    }
    assert!(matches!(CubicGraph::from_edges(8, &edges), Err(Error::Disconnected { .. })));
    assert!(matches!(CubicGraph::from_edges(5, &[]), Err(Error::VertexCount(5))));
}

#[test]
fn reader_keeps_going_after_bad_lines() {
    let input = b">>graph6<<C~\n\nC}\nC~\n";
    let recs = read_graph6(&input[..]).unwrap();
    assert_eq!(recs.len(), 3);
    assert!(recs[0].graph.is_ok());
    assert!(recs[1].graph.is_err());
    assert_eq!(recs[1].line_number, 3);
    assert_eq!(recs[2].index, 2);
}

#[test]
fn subsets_reject_foreign_indices() {
    let g = CubicGraph::complete_k4();
    assert!(matches!(g.subset_from_indices([6]), Err(Error::EdgeOutOfRange { index: 6, edges: 6 })));
}

fn relabel(g: &CubicGraph, perm: &[usize]) -> CubicGraph {
    let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    CubicGraph::from_edges(g.vertex_count(), &edges).unwrap()
}

proptest! {
    #[test]
    fn relabelling_preserves_invariants(idx in 0usize..112, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let gs = small_cubic();
        let g = &gs[idx % gs.len()];
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = relabel(g, &perm);
        prop_assert_eq!(h.is_bridgeless(), g.is_bridgeless());
        prop_assert_eq!(parse_graph6(&write_graph6(&h)).unwrap(), h.clone());
        let mut dg: Vec<usize> = component_sizes(g, full_mask(g)).into_iter().collect();
        let mut dh: Vec<usize> = component_sizes(&h, full_mask(&h)).into_iter().collect();
        dg.sort_unstable();
        dh.sort_unstable();
        prop_assert_eq!(dg, dh);
    }
}
