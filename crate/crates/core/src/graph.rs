//! The cubic graph model: construction, validation, bridge search and the
//! canonical named graphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::edges::EdgeSubset;
use crate::error::{Error, Result};

/// An immutable connected simple 3-regular graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, and
/// identified by their position in that order. Every enumeration in this
/// crate is deterministic relative to these indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 3]>,
}

impl CubicGraph {
    /// Builds a graph from an arbitrary list of vertex pairs.
    ///
    /// Rejects loops, parallel edges, degree violations and disconnected
    /// input. Edges are re-sorted into canonical order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::VertexCount(n));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::NotSimple {
                    vertex: a.max(b),
                    message: format!("endpoint out of range 0..{n}"),
                });
            }
            if a == b {
                return Err(Error::NotSimple {
                    vertex: a,
                    message: "loop".into(),
                });
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotSimple {
                vertex: w[0].0,
                message: format!("parallel edges {}-{}", w[0].0, w[0].1),
            });
        }

        let mut degree = vec![0usize; n];
        for &(a, b) in &sorted {
            degree[a] += 1;
            degree[b] += 1;
        }
        if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::NotCubic { vertex, degree });
        }

        let mut incidence = vec![[usize::MAX; 3]; n];
        let mut fill = vec![0usize; n];
        for (i, &(a, b)) in sorted.iter().enumerate() {
            incidence[a][fill[a]] = i;
            fill[a] += 1;
            incidence[b][fill[b]] = i;
            fill[b] += 1;
        }

        let g = CubicGraph {
            n,
            edges: sorted,
            incidence,
        };
        if let Some(vertex) = g.first_unreachable() {
            return Err(Error::Disconnected { vertex });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Dimension of the cycle space, `m - n + 1`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + 1 - self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The three incident edge indices of `v`, ascending.
    #[inline]
    pub fn incident(&self, v: usize) -> [usize; 3] {
        self.incidence[v]
    }

    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn empty_subset(&self) -> EdgeSubset {
        EdgeSubset::empty(self.edge_count())
    }

    pub fn full_subset(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    pub fn subset_from_indices<I: IntoIterator<Item = usize>>(&self, idx: I) -> Result<EdgeSubset> {
        EdgeSubset::from_indices(self.edge_count(), idx)
    }

    pub(crate) fn check_width(&self, s: &EdgeSubset) -> Result<()> {
        if s.width() != self.edge_count() {
            return Err(Error::WidthMismatch {
                expected: self.edge_count(),
                found: s.width(),
            });
        }
        Ok(())
    }

    /// Degree of `v` in the spanning subgraph with edge set `s`.
    #[inline]
    pub fn degree_in(&self, s: &EdgeSubset, v: usize) -> usize {
        self.incidence[v].iter().filter(|&&e| s.contains(e)).count()
    }

    /// Edges in breadth-first discovery order from vertex 0. Every vertex
    /// after the first is entered through an already listed edge, so
    /// backtracking searches complete vertices early.
    pub fn bfs_edge_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.edge_count());
        let mut listed = vec![false; self.edge_count()];
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for e in self.incidence[v] {
                if !listed[e] {
                    listed[e] = true;
                    order.push(e);
                }
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// True iff no edge is a cut edge (iterative lowpoint DFS).
    pub fn is_bridgeless(&self) -> bool {
        self.find_bridge().is_none()
    }

    /// The lowest-index bridge, if any.
    pub fn find_bridge(&self) -> Option<usize> {
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        // (vertex, parent edge, next incidence slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        order[0] = 0;
        low[0] = 0;
        let mut clock = 1;
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, slot) = *top;
            if slot < 3 {
                top.2 += 1;
                let e = self.incidence[v][slot];
                if e == parent_edge {
                    continue;
                }
                let w = self.other_end(e, v);
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > order[p] {
                        bridges.push(parent_edge);
                    }
                }
            }
        }
        bridges.into_iter().min()
    }

    /// Fails with [`Error::NotBridgeless`] when the graph has a bridge.
    pub fn require_bridgeless(&self) -> Result<()> {
        match self.find_bridge() {
            Some(edge) => Err(Error::NotBridgeless { edge }),
            None => Ok(()),
        }
    }

    pub fn complete_k4() -> Self {
        Self::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4")
    }

    pub fn k33() -> Self {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Self::from_edges(6, &e).expect("K3,3")
    }

    /// Outer 5-circuit on 0..4, inner pentagram on 5..9, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &e).expect("Petersen")
    }

    pub fn named(name: NamedGraph) -> Self {
        match name {
            NamedGraph::K4 => Self::complete_k4(),
            NamedGraph::K33 => Self::k33(),
            NamedGraph::Petersen => Self::petersen(),
        }
    }

    /// Two-coloring of the subgraph induced by `s`, if it is bipartite.
    pub(crate) fn is_bipartite_subgraph(&self, s: &EdgeSubset) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for e in self.incidence[v] {
                    if !s.contains(e) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if side[w] == u8::MAX {
                        side[w] = side[v] ^ 1;
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the spanning subgraph with edge set `s` is a forest.
    pub fn is_acyclic_subgraph(&self, s: &EdgeSubset) -> bool {
        let mut uf = UnionFind::new(self.n);
        s.iter().all(|e| {
            let (a, b) = self.edges[e];
            uf.union(a, b)
        })
    }
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Graphs available through [`CubicGraph::named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    K4,
    K33,
    Petersen,
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k4" => Ok(NamedGraph::K4),
            "k3_3" | "k33" | "k3,3" => Ok(NamedGraph::K33),
            "petersen" => Ok(NamedGraph::Petersen),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// `build_named` by string, e.g. `"petersen"`.
pub fn build_named(name: &str) -> Result<CubicGraph> {
    Ok(CubicGraph::named(name.parse()?))
}

/// Minimal union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_counts() {
        let p = CubicGraph::petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        let k = CubicGraph::complete_k4();
        assert_eq!((k.vertex_count(), k.edge_count()), (4, 6));
        let b = CubicGraph::k33();
        assert_eq!((b.vertex_count(), b.edge_count()), (6, 9));
        assert!(b.is_bipartite_subgraph(&b.full_subset()));
        assert!(!p.is_bipartite_subgraph(&p.full_subset()));
    }

    #[test]
    fn petersen_labeling() {
        let p = CubicGraph::petersen();
        for i in 0..5 {
            assert!(p.edge_index(i, (i + 1) % 5).is_some());
            assert!(p.edge_index(i, i + 5).is_some());
            assert!(p.edge_index(i + 5, (i + 2) % 5 + 5).is_some());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 2)]),
            Err(Error::NotSimple { vertex: 2, .. })
        ));
        assert!(matches!(
            CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 3)]),
            Err(Error::NotSimple { .. })
        ));
        assert!(matches!(
            CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            Err(Error::NotCubic { vertex: 2, degree: 2 })
        ));
        assert!(matches!(CubicGraph::from_edges(5, &[]), Err(Error::VertexCount(5))));
        let mut two_k4 = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        two_k4.extend([(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]);
        assert!(matches!(
            CubicGraph::from_edges(8, &two_k4),
            Err(Error::Disconnected { vertex: 4 })
        ));
        assert!(matches!(build_named("heawood"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn bridge_between_subdivided_k4s() {
        // K4 on {0,1,2,3} with 0-1 subdivided by 4; same on 5..9; bridge 4-9.
        let mut e = vec![(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        e.extend([(5, 9), (9, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]);
        e.push((4, 9));
        let g = CubicGraph::from_edges(10, &e).unwrap();
        assert!(!g.is_bridgeless());
        assert_eq!(g.find_bridge(), g.edge_index(4, 9));
        assert!(matches!(g.require_bridgeless(), Err(Error::NotBridgeless { .. })));
    }

    #[test]
    fn bfs_order_is_a_permutation() {
        let p = CubicGraph::petersen();
        let mut o = p.bfs_edge_order();
        o.sort_unstable();
        assert_eq!(o, (0..15).collect::<Vec<_>>());
    }
}
