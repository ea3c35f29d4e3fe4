mod common;

use cubic_cores::cores::make_cover_triple;
use cubic_cores::factors::{enumerate_joins, Join};
use cubic_cores::parity::{check_theorem4, oddness, parity_report, weak_oddness};
use cubic_cores::{Budget, CubicGraph};

use common::*;

#[test]
fn oddness_and_weak_oddness_match_brute_force() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 10 && g.is_bridgeless()) {
        assert_eq!(oddness(g).unwrap().0, brute_oddness(g), "{g:?}");
        assert_eq!(weak_oddness(g).unwrap().0, brute_weak_oddness(g), "{g:?}");
    }
}

#[test]
fn weak_oddness_never_exceeds_oddness() {
    let mut graphs: Vec<CubicGraph> = small_cubic().into_iter().filter(|g| g.is_bridgeless()).collect();
    graphs.extend(snarks().into_iter().filter(|g| g.vertex_count() <= 22));
    graphs.extend(class1().into_iter().filter(|g| g.cycle_rank() <= 20));
    for g in &graphs {
        let r = parity_report(g, &Budget::unlimited()).unwrap().unwrap();
        assert!(r.weak_oddness <= r.oddness, "{g:?}");
        assert_eq!(r.oddness == 0, three_edge_colorable(g));
        if g.vertex_count() <= 14 {
            assert_eq!(r.weak_oddness == 2, r.oddness == 2, "{g:?}");
        }
        let _ = r.omega_equal();
    }
}

#[test]
fn theorem4_bound_on_all_petersen_matching_triples_and_sampled_joins() {
    let g = CubicGraph::petersen();
    let joins: Vec<Join<'_>> = enumerate_joins(&g).collect();
    for (i, a) in joins.iter().enumerate() {
        for b in joins.iter().skip(i % 7).step_by(7) {
            for c in joins.iter().skip(i % 5).step_by(5) {
                let t = make_cover_triple(a.clone(), b.clone(), c.clone()).unwrap();
                let chk = check_theorem4(&t);
                assert!(chk.holds, "{chk:?}");
                let lhs: usize = [a, b, c]
                    .iter()
                    .map(|j| odd_count(&g, full_mask(&g) & !subset_to_mask(j.edges())))
                    .sum();
                assert_eq!(chk.lhs, lhs);
            }
        }
    }
}

#[test]
fn theorem4_bound_over_small_census() {
    for g in small_cubic().iter().filter(|g| g.vertex_count() <= 8 && g.is_bridgeless()) {
        let joins: Vec<Join<'_>> = enumerate_joins(g).collect();
        for a in &joins {
            for b in &joins {
                for c in &joins {
                    let t = make_cover_triple(a.clone(), b.clone(), c.clone()).unwrap();
                    assert!(check_theorem4(&t).holds);
                }
            }
        }
    }
}
