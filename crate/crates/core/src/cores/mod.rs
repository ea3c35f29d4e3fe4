//! Cover triples of joins, their weak cores, and exact core minimization.
//!
//! For joins `J1, J2, J3` of a cubic graph, `E_i` is the set of edges lying
//! in exactly `i` of them. The weak core is `G[E0 ∪ E2 ∪ E3]`; it is a
//! `k`-weak core when exactly `k` of the joins are not perfect matchings,
//! and its size parameter is `l = |E0| + 3/2 · Σ n(J_i)`. Since `l` can be
//! half-integral, it is carried everywhere as the integer `l2 = 2l`.

mod search;
mod witness;

pub use search::{
    min_cyclic_weak_core_k, minimize_core, mu3, mu3_prime, CoreObjective, CoreSearch,
};
pub use witness::{find_witness, validate_witness, ConjectureId, Witness, WitnessOutcome};

use crate::edges::EdgeSubset;
use crate::error::{Error, Result};
use crate::factors::Join;
use crate::graph::CubicGraph;

/// Number of vertices of each type, where a vertex has type `(x, y, z)` when
/// its three edges are covered `x`, `y` and `z` times by the triple.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VertexTypeCounts {
    pub t333: usize,
    pub t322: usize,
    pub t311: usize,
    pub t221: usize,
    pub t111: usize,
    pub t210: usize,
    pub t300: usize,
}

impl VertexTypeCounts {
    pub fn total(&self) -> usize {
        self.t333 + self.t322 + self.t311 + self.t221 + self.t111 + self.t210 + self.t300
    }
}

/// Three joins of one graph with the induced partition `E0..E3`.
#[derive(Debug, Clone)]
pub struct CoverTriple<'g> {
    joins: [Join<'g>; 3],
    partition: [EdgeSubset; 4],
    type_counts: VertexTypeCounts,
}

/// Coverage multiplicity per edge.
fn coverage(g: &CubicGraph, joins: &[Join<'_>; 3]) -> Vec<u8> {
    (0..g.edge_count())
        .map(|e| joins.iter().filter(|j| j.edges().contains(e)).count() as u8)
        .collect()
}

/// Builds the cover triple of `j1, j2, j3` (repetition allowed).
pub fn make_cover_triple<'g>(j1: Join<'g>, j2: Join<'g>, j3: Join<'g>) -> Result<CoverTriple<'g>> {
    let g = j1.graph();
    for j in [&j2, &j3] {
        if !(std::ptr::eq(g, j.graph()) || g == j.graph()) {
            return Err(Error::MixedGraphs);
        }
    }
    let joins = [j1, j2, j3];
    let cover = coverage(g, &joins);
    let mut partition: [EdgeSubset; 4] = std::array::from_fn(|_| g.empty_subset());
    for (e, &c) in cover.iter().enumerate() {
        partition[c as usize].insert(e);
    }
    let mut counts = VertexTypeCounts::default();
    for v in 0..g.vertex_count() {
        let mut t = g.incident(v).map(|e| cover[e]);
        t.sort_unstable_by(|a, b| b.cmp(a));
        match t {
            [3, 3, 3] => counts.t333 += 1,
            [3, 2, 2] => counts.t322 += 1,
            [3, 1, 1] => counts.t311 += 1,
            [2, 2, 1] => counts.t221 += 1,
            [1, 1, 1] => counts.t111 += 1,
            [2, 1, 0] => counts.t210 += 1,
            [3, 0, 0] => counts.t300 += 1,
            other => panic!("vertex {v} has impossible type {other:?} for a triple of joins"),
        }
    }
    let t = CoverTriple {
        joins,
        partition,
        type_counts: counts,
    };
    assert!(t.counting_identity_holds(), "counting identity violated: {t:?}");
    assert!(t.type_relations_hold(), "vertex type relations violated: {t:?}");
    Ok(t)
}

impl<'g> CoverTriple<'g> {
    pub fn graph(&self) -> &'g CubicGraph {
        self.joins[0].graph()
    }

    pub fn joins(&self) -> &[Join<'g>; 3] {
        &self.joins
    }

    /// `E_i` for `i` in `0..=3`.
    pub fn e(&self, i: usize) -> &EdgeSubset {
        &self.partition[i]
    }

    pub fn partition(&self) -> &[EdgeSubset; 4] {
        &self.partition
    }

    pub fn type_counts(&self) -> VertexTypeCounts {
        self.type_counts
    }

    pub fn sum_n_j(&self) -> usize {
        self.joins.iter().map(Join::n_j).sum()
    }

    /// Number of members that are not perfect matchings.
    pub fn k(&self) -> usize {
        self.joins.iter().filter(|j| !j.is_perfect_matching()).count()
    }

    /// `2l = 2|E0| + 3 Σ n(J_i)`.
    pub fn l2(&self) -> usize {
        2 * self.partition[0].count() + 3 * self.sum_n_j()
    }

    /// `|E0| + Σ n(J_i) = |E2| + 2|E3|`.
    pub fn counting_identity_holds(&self) -> bool {
        let [e0, _, e2, e3] = self.partition.each_ref().map(EdgeSubset::count);
        e0 + self.sum_n_j() == e2 + 2 * e3
    }

    /// The linear relations between edge classes and vertex type counts.
    pub fn type_relations_hold(&self) -> bool {
        let c = self.type_counts;
        let [e0, _, e2, e3] = self.partition.each_ref().map(EdgeSubset::count);
        let n = self.graph().vertex_count();
        self.sum_n_j() == 3 * c.t333 + 2 * c.t322 + c.t311 + c.t221
            && 2 * e0 == c.t210 + 2 * c.t300
            && 2 * e2 == 2 * c.t322 + 2 * c.t221 + c.t210
            && 2 * e3 == 3 * c.t333 + c.t322 + c.t311 + c.t300
            && c.total() == n
    }
}

/// The weak core of a cover triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakCore {
    pub edges: EdgeSubset,
    pub k: usize,
    pub l2: usize,
}

impl WeakCore {
    /// `l` as a float, for display.
    pub fn l(&self) -> f64 {
        self.l2 as f64 / 2.0
    }
}

pub fn weak_core(t: &CoverTriple<'_>) -> WeakCore {
    let edges = t.partition[0].union(&t.partition[2]).union(&t.partition[3]);
    WeakCore {
        edges,
        k: t.k(),
        l2: t.l2(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CoreProperties {
    pub is_cyclic: bool,
    pub is_bipartite: bool,
    pub is_triangle_free: bool,
    pub is_simple: bool,
}

pub fn core_properties(t: &CoverTriple<'_>) -> CoreProperties {
    let g = t.graph();
    let core = weak_core(t).edges;
    let is_cyclic = (0..g.vertex_count()).all(|v| matches!(g.degree_in(&core, v), 0 | 2));
    CoreProperties {
        is_cyclic,
        is_bipartite: g.is_bipartite_subgraph(&core),
        is_triangle_free: is_triangle_free(g, &core),
        is_simple: t.joins.iter().all(Join::is_simple),
    }
}

pub(crate) fn is_triangle_free(g: &CubicGraph, s: &EdgeSubset) -> bool {
    s.iter().all(|e| {
        let (u, v) = g.edge(e);
        g.incident(u).iter().filter(|&&f| f != e && s.contains(f)).all(|&f| {
            let w = g.other_end(f, u);
            match g.edge_index(v, w) {
                Some(h) => !s.contains(h),
                None => true,
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::{enumerate_joins, enumerate_perfect_matchings};

    fn k4_color_classes(g: &CubicGraph) -> Vec<Join<'_>> {
        enumerate_perfect_matchings(g).map(Join::from).collect()
    }

    #[test]
    fn k4_color_classes_partition() {
        let g = CubicGraph::complete_k4();
        let [a, b, c]: [Join; 3] = k4_color_classes(&g).try_into().unwrap();
        let t = make_cover_triple(a, b, c).unwrap();
        assert_eq!(t.e(1).count(), 6);
        assert_eq!(t.type_counts().t111, 4);
        let core = weak_core(&t);
        assert_eq!((core.edges.count(), core.k, core.l2), (0, 0, 0));
        let p = core_properties(&t);
        assert!(p.is_cyclic && p.is_bipartite && p.is_triangle_free && p.is_simple);
    }

    #[test]
    fn k4_repeated_matching() {
        let g = CubicGraph::complete_k4();
        let m = k4_color_classes(&g).remove(0);
        let t = make_cover_triple(m.clone(), m.clone(), m).unwrap();
        assert_eq!((t.e(3).count(), t.e(0).count()), (2, 4));
        assert_eq!(t.type_counts().t300, 4);
        assert_eq!(weak_core(&t).l2, 8);
        assert!(!core_properties(&t).is_cyclic);
    }

    #[test]
    fn k4_with_all_edges_join() {
        let g = CubicGraph::complete_k4();
        let ms = k4_color_classes(&g);
        let t = make_cover_triple(ms[0].clone(), ms[1].clone(), Join::all_edges(&g)).unwrap();
        let core = weak_core(&t);
        assert_eq!(core.k, 1);
        assert_eq!(core.l2, 2 * t.e(0).count() + 12);
    }

    #[test]
    fn mixed_graphs_rejected() {
        let k4 = CubicGraph::complete_k4();
        let p = CubicGraph::petersen();
        let a = enumerate_joins(&k4).next().unwrap();
        let b = enumerate_joins(&p).next().unwrap();
        assert!(matches!(
            make_cover_triple(a.clone(), b, a),
            Err(Error::MixedGraphs)
        ));
    }
}
