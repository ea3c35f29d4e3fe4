//! Perfect matchings, joins, and their enumeration.
//!
//! In a cubic graph a join is an edge set in which every vertex has degree 1
//! or 3; its complement is an even subgraph (all degrees 0 or 2). Joins are
//! enumerated as complements of the cycle space, perfect matchings by
//! backtracking on the lowest uncovered vertex.

use std::collections::VecDeque;

use crate::edges::EdgeSubset;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, UnionFind};

/// A join of a cubic graph together with its J-vertices (degree 3 in the join).
#[derive(Clone, PartialEq, Eq)]
pub struct Join<'g> {
    graph: &'g CubicGraph,
    edges: EdgeSubset,
    j_vertices: Vec<usize>,
}

impl<'g> Join<'g> {
    pub fn new(graph: &'g CubicGraph, edges: EdgeSubset) -> Result<Self> {
        graph.check_width(&edges)?;
        let mut j_vertices = Vec::new();
        for v in 0..graph.vertex_count() {
            match graph.degree_in(&edges, v) {
                1 => {}
                3 => j_vertices.push(v),
                degree => {
                    return Err(Error::Parity {
                        vertex: v,
                        degree,
                        expected: "a join needs degree 1 or 3",
                    })
                }
            }
        }
        Ok(Join {
            graph,
            edges,
            j_vertices,
        })
    }

    /// The join `E(G)`: every vertex is a J-vertex.
    pub fn all_edges(graph: &'g CubicGraph) -> Self {
        Join {
            graph,
            edges: graph.full_subset(),
            j_vertices: (0..graph.vertex_count()).collect(),
        }
    }

    pub fn graph(&self) -> &'g CubicGraph {
        self.graph
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    pub fn j_vertices(&self) -> &[usize] {
        &self.j_vertices
    }

    /// `n(J)`, the number of J-vertices.
    pub fn n_j(&self) -> usize {
        self.j_vertices.len()
    }

    pub fn is_perfect_matching(&self) -> bool {
        self.j_vertices.is_empty()
    }

    /// The complement, an even subgraph.
    pub fn complement(&self) -> EdgeSubset {
        self.edges.complement()
    }

    pub fn into_edges(self) -> EdgeSubset {
        self.edges
    }

    /// True iff the subgraph induced by the J-vertices has no circuit.
    pub fn is_simple(&self) -> bool {
        is_simple_join(self)
    }

    pub fn as_matching(&self) -> Option<PerfectMatching<'g>> {
        self.is_perfect_matching().then(|| PerfectMatching(self.clone()))
    }
}

impl std::fmt::Debug for Join<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Join")
            .field("edges", &self.edges)
            .field("j_vertices", &self.j_vertices)
            .finish()
    }
}

/// A join without J-vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerfectMatching<'g>(Join<'g>);

impl<'g> PerfectMatching<'g> {
    pub fn new(graph: &'g CubicGraph, edges: EdgeSubset) -> Result<Self> {
        graph.check_width(&edges)?;
        for v in 0..graph.vertex_count() {
            let degree = graph.degree_in(&edges, v);
            if degree != 1 {
                return Err(Error::Parity {
                    vertex: v,
                    degree,
                    expected: "a perfect matching needs degree 1",
                });
            }
        }
        Ok(PerfectMatching(Join {
            graph,
            edges,
            j_vertices: Vec::new(),
        }))
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.0.edges
    }

    pub fn as_join(&self) -> &Join<'g> {
        &self.0
    }

    pub fn into_join(self) -> Join<'g> {
        self.0
    }

    /// The complementary 2-factor.
    pub fn two_factor(&self) -> EdgeSubset {
        self.0.edges.complement()
    }
}

impl<'g> From<PerfectMatching<'g>> for Join<'g> {
    fn from(m: PerfectMatching<'g>) -> Self {
        m.0
    }
}

/// Streams every perfect matching of `g` exactly once.
///
/// Always matches the lowest uncovered vertex next, trying its incident edges
/// in index order; the stream order is a pure function of the graph.
pub fn enumerate_perfect_matchings(g: &CubicGraph) -> PerfectMatchings<'_> {
    PerfectMatchings {
        g,
        covered: vec![false; g.vertex_count()],
        current: g.empty_subset(),
        stack: Vec::new(),
        started: false,
    }
}

struct Frame {
    vertex: usize,
    slot: usize,
    chosen: Option<usize>,
}

pub struct PerfectMatchings<'g> {
    g: &'g CubicGraph,
    covered: Vec<bool>,
    current: EdgeSubset,
    stack: Vec<Frame>,
    started: bool,
}

impl<'g> PerfectMatchings<'g> {
    fn lowest_uncovered(&self, from: usize) -> Option<usize> {
        (from..self.g.vertex_count()).find(|&v| !self.covered[v])
    }

    /// Collects the raw edge sets only.
    pub fn edge_sets(self) -> Vec<EdgeSubset> {
        self.map(|m| m.0.edges).collect()
    }
}

impl<'g> Iterator for PerfectMatchings<'g> {
    type Item = PerfectMatching<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            self.stack.push(Frame {
                vertex: 0,
                slot: 0,
                chosen: None,
            });
        }
        let g = self.g;
        loop {
            let frame = self.stack.last_mut()?;
            let v = frame.vertex;
            if let Some(e) = frame.chosen.take() {
                self.covered[v] = false;
                self.covered[g.other_end(e, v)] = false;
                self.current.remove(e);
            }
            let mut found = None;
            while frame.slot < 3 {
                let e = g.incident(v)[frame.slot];
                frame.slot += 1;
                if !self.covered[g.other_end(e, v)] {
                    found = Some(e);
                    break;
                }
            }
            let Some(e) = found else {
                self.stack.pop();
                continue;
            };
            frame.chosen = Some(e);
            self.covered[v] = true;
            self.covered[g.other_end(e, v)] = true;
            self.current.insert(e);
            match self.lowest_uncovered(v + 1) {
                None => {
                    return Some(PerfectMatching(Join {
                        graph: g,
                        edges: self.current.clone(),
                        j_vertices: Vec::new(),
                    }))
                }
                Some(u) => self.stack.push(Frame {
                    vertex: u,
                    slot: 0,
                    chosen: None,
                }),
            }
        }
    }
}

/// Fundamental cycle basis of a BFS spanning tree rooted at vertex 0.
///
/// Basis element `i` is the fundamental circuit of the `i`-th non-tree edge
/// in index order. Member `c` of the cycle space is the sum of the basis
/// elements selected by the bits of `c`.
#[derive(Debug, Clone)]
pub struct CycleSpace {
    basis: Vec<EdgeSubset>,
    prefix: Vec<EdgeSubset>,
    width: usize,
}

impl CycleSpace {
    pub fn new(g: &CubicGraph) -> Self {
        let n = g.vertex_count();
        let mut parent_edge = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut tree = g.empty_subset();
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for e in g.incident(v) {
                let w = g.other_end(e, v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    tree.insert(e);
                    queue.push_back(w);
                }
            }
        }
        let mut basis = Vec::with_capacity(g.cycle_rank());
        for f in 0..g.edge_count() {
            if tree.contains(f) {
                continue;
            }
            let mut c = g.empty_subset();
            c.insert(f);
            let (mut a, mut b) = g.edge(f);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let e = parent_edge[a];
                c.insert(e);
                a = g.other_end(e, a);
            }
            basis.push(c);
        }
        let mut prefix = Vec::with_capacity(basis.len());
        let mut acc = g.empty_subset();
        for b in &basis {
            acc.xor_assign(b);
            prefix.push(acc.clone());
        }
        CycleSpace {
            basis,
            prefix,
            width: g.edge_count(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[EdgeSubset] {
        &self.basis
    }

    /// Number of members, `2^dimension`, when it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        1u64.checked_shl(self.basis.len() as u32)
    }

    pub fn member(&self, c: u64) -> EdgeSubset {
        let mut out = EdgeSubset::empty(self.width);
        let mut bits = c;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out.xor_assign(&self.basis[i]);
            bits &= bits - 1;
        }
        out
    }

    /// All members in coefficient order. Consecutive members differ by a
    /// prefix sum of the basis, so each step is a single xor.
    pub fn iter(&self) -> CycleSpaceIter<'_> {
        CycleSpaceIter {
            space: self,
            next: 0,
            current: EdgeSubset::empty(self.width),
        }
    }

    /// Every member, materialized. Panics above dimension 30.
    pub fn members(&self) -> Vec<EdgeSubset> {
        assert!(self.dimension() <= 30, "cycle space of dimension {} is too large to materialize", self.dimension());
        self.iter().collect()
    }
}

pub struct CycleSpaceIter<'a> {
    space: &'a CycleSpace,
    next: u128,
    current: EdgeSubset,
}

impl Iterator for CycleSpaceIter<'_> {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        let c = self.next;
        if c >> self.space.dimension() != 0 {
            return None;
        }
        if c > 0 {
            let t = c.trailing_zeros() as usize;
            self.current.xor_assign(&self.space.prefix[t]);
        }
        self.next += 1;
        Some(self.current.clone())
    }
}

/// Streams all `2^(m-n+1)` joins of `g`, as complements of the cycle space
/// members in coefficient order. The first join is `E(G)`.
pub fn enumerate_joins(g: &CubicGraph) -> Joins<'_> {
    let space = CycleSpace::new(g);
    Joins {
        g,
        inner: CycleSpaceIterOwned {
            current: g.empty_subset(),
            space,
            next: 0,
        },
    }
}

struct CycleSpaceIterOwned {
    space: CycleSpace,
    next: u128,
    current: EdgeSubset,
}

pub struct Joins<'g> {
    g: &'g CubicGraph,
    inner: CycleSpaceIterOwned,
}

impl<'g> Iterator for Joins<'g> {
    type Item = Join<'g>;

    fn next(&mut self) -> Option<Join<'g>> {
        let it = &mut self.inner;
        let c = it.next;
        if c >> it.space.dimension() != 0 {
            return None;
        }
        if c > 0 {
            let t = c.trailing_zeros() as usize;
            it.current.xor_assign(&it.space.prefix[t]);
        }
        it.next += 1;
        Some(join_from_even(self.g, &it.current))
    }
}

/// The join complementary to an even subgraph. J-vertices are the vertices
/// the even subgraph does not touch.
pub(crate) fn join_from_even<'g>(g: &'g CubicGraph, even: &EdgeSubset) -> Join<'g> {
    let j_vertices = (0..g.vertex_count())
        .filter(|&v| g.incident(v).iter().all(|&e| !even.contains(e)))
        .collect();
    Join {
        graph: g,
        edges: even.complement(),
        j_vertices,
    }
}

/// True iff the subgraph induced by the J-vertices of `j` is acyclic.
pub fn is_simple_join(j: &Join<'_>) -> bool {
    let g = j.graph;
    let mut is_j = vec![false; g.vertex_count()];
    for &v in &j.j_vertices {
        is_j[v] = true;
    }
    let mut uf = UnionFind::new(g.vertex_count());
    g.edges()
        .iter()
        .filter(|&&(a, b)| is_j[a] && is_j[b])
        .all(|&(a, b)| uf.union(a, b))
}

/// Number of odd components of the subgraph with vertex set `vertices` and
/// the edges of `edges` having both ends in it. Isolated vertices count.
pub fn odd_components<I>(g: &CubicGraph, edges: &EdgeSubset, vertices: I) -> usize
where
    I: IntoIterator<Item = usize>,
{
    let mut keep = vec![false; g.vertex_count()];
    for v in vertices {
        keep[v] = true;
    }
    let mut uf = UnionFind::new(g.vertex_count());
    for e in edges.iter() {
        let (a, b) = g.edge(e);
        if keep[a] && keep[b] {
            uf.union(a, b);
        }
    }
    let mut size = vec![0usize; g.vertex_count()];
    for v in (0..g.vertex_count()).filter(|&v| keep[v]) {
        size[uf.find(v)] += 1;
    }
    size.iter().filter(|&&s| s % 2 == 1).count()
}

/// `|H|_odd` for the spanning subgraph `H = (V(g), edges)`.
pub fn odd_components_spanning(g: &CubicGraph, edges: &EdgeSubset) -> usize {
    odd_components(g, edges, 0..g.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_counts() {
        let g = CubicGraph::complete_k4();
        assert_eq!(enumerate_perfect_matchings(&g).count(), 3);
        assert_eq!(enumerate_joins(&g).count(), 8);
    }

    #[test]
    fn first_join_is_everything() {
        let g = CubicGraph::petersen();
        let first = enumerate_joins(&g).next().unwrap();
        assert_eq!(first.edges(), &g.full_subset());
        assert_eq!(first.n_j(), 10);
        assert!(!first.is_simple());
    }

    #[test]
    fn join_rejects_degree_two() {
        let g = CubicGraph::complete_k4();
        let e = g.subset_from_indices([0, 1]).unwrap();
        assert!(matches!(Join::new(&g, e), Err(Error::Parity { vertex: 0, degree: 2, .. })));
    }

    #[test]
    fn k4_odd_components() {
        let g = CubicGraph::complete_k4();
        let m = enumerate_perfect_matchings(&g).next().unwrap();
        assert_eq!(odd_components_spanning(&g, &m.two_factor()), 0);
        assert_eq!(odd_components_spanning(&g, &g.empty_subset()), 4);
        assert_eq!(odd_components(&g, &g.empty_subset(), [0, 1, 2]), 3);
    }

    #[test]
    fn cycle_space_members_are_even() {
        let g = CubicGraph::petersen();
        let cs = CycleSpace::new(&g);
        assert_eq!(cs.dimension(), 6);
        for (c, s) in cs.iter().enumerate() {
            assert_eq!(s, cs.member(c as u64));
            for v in 0..10 {
                assert_eq!(g.degree_in(&s, v) % 2, 0);
            }
        }
    }
}
