//! The 2-cut connection, K4-expansion, the projection of joins back to the
//! base graph, and the Petersen K4-expansion that refutes the
//! two-matching acyclicity statement.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded};
use crate::edges::EdgeSubset;
use crate::error::{Error, Result};
use crate::factors::{enumerate_perfect_matchings, Join};
use crate::graph::CubicGraph;

/// Which endpoints the two new edges join. With `e1 = u1 v1` and
/// `e2 = u2 v2` (each with `u < v`), `Straight` adds `u1 u2, v1 v2` and
/// `Crossed` adds `u1 v2, v1 u2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pairing {
    #[default]
    Straight,
    Crossed,
}

/// Deletes `e1` from `g1` and `e2` from `g2` and reconnects the four loose
/// endpoints by two new edges. Vertices of `g2` are shifted by `|V(g1)|`.
pub fn two_cut_connection(
    g1: &CubicGraph,
    e1: usize,
    g2: &CubicGraph,
    e2: usize,
    pairing: Pairing,
) -> Result<CubicGraph> {
    for (g, e) in [(g1, e1), (g2, e2)] {
        if e >= g.edge_count() {
            return Err(Error::EdgeOutOfRange {
                index: e,
                edges: g.edge_count(),
            });
        }
    }
    let shift = g1.vertex_count();
    let mut edges = Vec::with_capacity(g1.edge_count() + g2.edge_count());
    edges.extend(
        g1.edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e1)
            .map(|(_, &p)| p),
    );
    edges.extend(
        g2.edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e2)
            .map(|(_, &(a, b))| (a + shift, b + shift)),
    );
    let (u1, v1) = g1.edge(e1);
    let (u2, v2) = g2.edge(e2);
    let (u2, v2) = (u2 + shift, v2 + shift);
    match pairing {
        Pairing::Straight => edges.extend([(u1, u2), (v1, v2)]),
        Pairing::Crossed => edges.extend([(u1, v2), (v1, u2)]),
    }
    CubicGraph::from_edges(shift + g2.vertex_count(), &edges)
}

/// A K4-expansion together with the bookkeeping needed to project joins.
#[derive(Debug, Clone)]
pub struct ExpansionMap {
    pub base: CubicGraph,
    pub expanded: CubicGraph,
    /// For base edge `i = uv`: the expanded indices of `u a_i` and `v b_i`.
    pub connector_pairs: Vec<(usize, usize)>,
    /// For base edge `i`: the K4 copy's vertices `[a_i, b_i, c_i, d_i]`,
    /// where `a_i b_i` is the K4 edge that was removed.
    pub gadget_vertices: Vec<[usize; 4]>,
}

impl ExpansionMap {
    /// The five edges of gadget `i` that remain inside its K4 copy.
    pub fn internal_edges(&self, i: usize) -> [usize; 5] {
        let [a, b, c, d] = self.gadget_vertices[i];
        [(a, c), (a, d), (b, c), (b, d), (c, d)].map(|(x, y)| {
            self.expanded
                .edge_index(x, y)
                .expect("gadget edge present in the expansion")
        })
    }
}

/// Applies the 2-cut connection between every base edge `e_i = uv` (in
/// index order) and the edge `ab` of a fresh K4 on `{a, b, c, d}`, joining
/// `u` to `a` and `v` to `b`. The result has `n + 4m` vertices and `7m` edges.
pub fn k4_expand(g: &CubicGraph) -> ExpansionMap {
    let k4 = CubicGraph::complete_k4();
    let n = g.vertex_count();
    let mut current = g.clone();
    for i in 0..g.edge_count() {
        let (u, v) = g.edge(i);
        let at = current.edge_index(u, v).expect("base edge still present");
        // K4 edge 0 is (0, 1): a = offset, b = offset + 1
        current = two_cut_connection(&current, at, &k4, 0, Pairing::Straight)
            .expect("2-cut connection of cubic graphs");
    }
    let mut connector_pairs = Vec::with_capacity(g.edge_count());
    let mut gadget_vertices = Vec::with_capacity(g.edge_count());
    for i in 0..g.edge_count() {
        let (u, v) = g.edge(i);
        let a = n + 4 * i;
        let gv = [a, a + 1, a + 2, a + 3];
        let eu = current.edge_index(u, gv[0]).expect("connector u-a");
        let ev = current.edge_index(v, gv[1]).expect("connector v-b");
        connector_pairs.push((eu, ev));
        gadget_vertices.push(gv);
    }
    ExpansionMap {
        base: g.clone(),
        expanded: current,
        connector_pairs,
        gadget_vertices,
    }
}

/// `con(F)`: the base edges whose two connectors both lie in `f`.
///
/// Every join of the expansion contains both connectors of a gadget or
/// neither; a split pair is reported as [`Error::SplitConnector`].
pub fn project_con<'x>(x: &'x ExpansionMap, f: &Join<'_>) -> Result<Join<'x>> {
    if !(std::ptr::eq(f.graph(), &x.expanded) || f.graph() == &x.expanded) {
        return Err(Error::MixedGraphs);
    }
    let mut out = x.base.empty_subset();
    for (i, &(p, q)) in x.connector_pairs.iter().enumerate() {
        match (f.edges().contains(p), f.edges().contains(q)) {
            (true, true) => out.insert(i),
            (false, false) => {}
            _ => return Err(Error::SplitConnector { gadget: i }),
        }
    }
    Join::new(&x.base, out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    /// Every unordered pair, cycle search over the whole complement.
    Full,
    /// Every unordered pair, looking only inside the gadgets of the base
    /// edges shared by the two projections; falls back to the full check
    /// when those gadgets show no circuit.
    Structured,
}

impl std::str::FromStr for VerifyMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(VerifyMode::Full),
            "structured" => Ok(VerifyMode::Structured),
            _ => Err(format!("unknown mode `{s}` (full|structured)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub mode: VerifyMode,
    pub vertices: usize,
    pub edges: usize,
    pub bridgeless: bool,
    pub petersen_pm_count: usize,
    pub petersen_pairs: usize,
    pub petersen_pairs_sharing_one_edge: usize,
    pub petersen_pair_property: bool,
    pub pm_count: usize,
    pub pairs_checked: u64,
    /// Pairs settled inside a gadget (structured mode only).
    pub pairs_settled_locally: u64,
    pub all_pairs_cyclic: bool,
    /// First pair (in enumeration order) whose complement is acyclic.
    pub first_acyclic_pair: Option<(usize, usize)>,
}

impl CounterexampleReport {
    pub fn refuted(&self) -> bool {
        self.pm_count > 0 && self.all_pairs_cyclic
    }
}

fn has_cycle(g: &CubicGraph, s: &EdgeSubset, parent: &mut [usize]) -> bool {
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i;
    }
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in s.iter() {
        let (a, b) = g.edge(e);
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

/// Builds the K4-expansion of the Petersen graph and checks that the
/// complement of the union of every pair of its perfect matchings contains
/// a circuit.
pub fn verify_counterexample(mode: VerifyMode, budget: &Budget) -> std::result::Result<CounterexampleReport, BudgetExceeded> {
    let petersen = CubicGraph::petersen();
    let base_ms = enumerate_perfect_matchings(&petersen).edge_sets();
    let mut sharing_one = 0;
    let mut base_pairs = 0;
    for i in 0..base_ms.len() {
        for j in i + 1..base_ms.len() {
            base_pairs += 1;
            if base_ms[i].intersection(&base_ms[j]).count() == 1 {
                sharing_one += 1;
            }
        }
    }

    let x = k4_expand(&petersen);
    let g = &x.expanded;
    let meter = budget.meter();
    let ms: Vec<EdgeSubset> = {
        let mut out = Vec::new();
        for m in enumerate_perfect_matchings(g) {
            meter.tick()?;
            out.push(m.edges().clone());
        }
        out
    };
    let projections: Vec<EdgeSubset> = ms
        .iter()
        .map(|m| {
            let j = Join::new(g, m.clone()).expect("matching is a join");
            project_con(&x, &j).expect("matchings keep connector pairs").into_edges()
        })
        .collect();
    let gadget_masks: Vec<EdgeSubset> = (0..x.base.edge_count())
        .map(|i| g.subset_from_indices(x.internal_edges(i)).expect("in range"))
        .collect();

    let complements: Vec<EdgeSubset> = ms.iter().map(EdgeSubset::complement).collect();
    let n = g.vertex_count();
    let rows: Vec<std::result::Result<(u64, u64, Option<usize>), BudgetExceeded>> = (0..ms.len())
        .into_par_iter()
        .map_init(
            || vec![0usize; n],
            |parent, i| {
                let row = (ms.len() - i - 1) as u64;
                meter.tick_n(row.max(1))?;
                let mut local = 0u64;
                for j in i + 1..ms.len() {
                    let rest = complements[i].intersection(&complements[j]);
                    let cyclic = match mode {
                        VerifyMode::Full => has_cycle(g, &rest, parent),
                        VerifyMode::Structured => {
                            let shared = projections[i].intersection(&projections[j]);
                            let local_hit = shared.iter().any(|b| {
                                has_cycle(g, &rest.intersection(&gadget_masks[b]), parent)
                            });
                            if local_hit {
                                local += 1;
                                true
                            } else {
                                has_cycle(g, &rest, parent)
                            }
                        }
                    };
                    if !cyclic {
                        return Ok(((j - i) as u64, local, Some(j)));
                    }
                }
                Ok((row, local, None))
            },
        )
        .collect();

    let mut pairs_checked = 0;
    let mut settled = 0;
    let mut first_acyclic = None;
    for (i, r) in rows.into_iter().enumerate() {
        let (row, local, bad) = r?;
        pairs_checked += row;
        settled += local;
        if first_acyclic.is_none() {
            first_acyclic = bad.map(|j| (i, j));
        }
    }

    Ok(CounterexampleReport {
        mode,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        bridgeless: g.is_bridgeless(),
        petersen_pm_count: base_ms.len(),
        petersen_pairs: base_pairs,
        petersen_pairs_sharing_one_edge: sharing_one,
        petersen_pair_property: base_pairs > 0 && sharing_one == base_pairs,
        pm_count: ms.len(),
        pairs_checked,
        pairs_settled_locally: settled,
        all_pairs_cyclic: first_acyclic.is_none(),
        first_acyclic_pair: first_acyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_sum_k4() {
        let k4 = CubicGraph::complete_k4();
        let g = two_cut_connection(&k4, 0, &k4, 0, Pairing::Straight).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert!(g.is_bridgeless());
        let h = two_cut_connection(&k4, 2, &k4, 5, Pairing::Crossed).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (8, 12));
        assert!(h.is_bridgeless());
    }

    #[test]
    fn out_of_range_edge() {
        let k4 = CubicGraph::complete_k4();
        assert!(matches!(
            two_cut_connection(&k4, 6, &k4, 0, Pairing::Straight),
            Err(Error::EdgeOutOfRange { index: 6, edges: 6 })
        ));
    }

    #[test]
    fn expansion_bookkeeping() {
        let k4 = CubicGraph::complete_k4();
        let x = k4_expand(&k4);
        assert_eq!((x.expanded.vertex_count(), x.expanded.edge_count()), (28, 42));
        for (i, &(p, q)) in x.connector_pairs.iter().enumerate() {
            let (u, v) = k4.edge(i);
            let [a, b, ..] = x.gadget_vertices[i];
            assert_eq!(x.expanded.edge(p), (u, a));
            assert_eq!(x.expanded.edge(q), (v, b));
        }
        let all = Join::all_edges(&x.expanded);
        assert_eq!(project_con(&x, &all).unwrap().edges(), &k4.full_subset());
    }

    #[test]
    fn foreign_join_rejected() {
        let k4 = CubicGraph::complete_k4();
        let x = k4_expand(&k4);
        let other = CubicGraph::petersen();
        assert!(matches!(
            project_con(&x, &Join::all_edges(&other)),
            Err(Error::MixedGraphs)
        ));
    }
}
