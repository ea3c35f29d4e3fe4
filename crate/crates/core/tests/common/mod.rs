//! Brute-force oracles and fixture loading shared by the integration tests.
//!
//! Oracles work on raw edge lists and `u64` edge masks and do not call the
//! library's search code.

#![allow(dead_code)]

use std::path::PathBuf;

use cubic_cores::graph6::read_graph6;
use cubic_cores::{CubicGraph, EdgeSubset};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// Every graph of a fixture file that parses as a connected cubic graph.
pub fn fixture(name: &str) -> Vec<CubicGraph> {
    let file = std::fs::File::open(data_path(name)).expect("fixture present");
    read_graph6(std::io::BufReader::new(file))
        .expect("fixture readable")
        .into_iter()
        .map(|r| r.graph.expect("fixture graphs are cubic"))
        .collect()
}

pub fn small_cubic() -> Vec<CubicGraph> {
    fixture("small_cubic.g6")
}

pub fn snarks() -> Vec<CubicGraph> {
    fixture("snarks.g6")
}

pub fn class1() -> Vec<CubicGraph> {
    fixture("class1.g6")
}

pub fn mask_to_subset(g: &CubicGraph, mask: u64) -> EdgeSubset {
    g.subset_from_indices((0..g.edge_count()).filter(|&e| mask >> e & 1 == 1))
        .unwrap()
}

pub fn subset_to_mask(s: &EdgeSubset) -> u64 {
    s.iter().fold(0, |acc, e| acc | 1 << e)
}

fn degrees(g: &CubicGraph, mask: u64) -> Vec<usize> {
    let mut d = vec![0; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            d[a] += 1;
            d[b] += 1;
        }
    }
    d
}

/// All `2^m` edge subsets whose degrees all lie in `allowed`.
fn degree_filter(g: &CubicGraph, allowed: &[usize]) -> Vec<u64> {
    let m = g.edge_count();
    assert!(m <= 24, "degree filter is exponential in m");
    (0..1u64 << m)
        .filter(|&mask| degrees(g, mask).iter().all(|d| allowed.contains(d)))
        .collect()
}

pub fn brute_joins(g: &CubicGraph) -> Vec<u64> {
    degree_filter(g, &[1, 3])
}

pub fn brute_matchings(g: &CubicGraph) -> Vec<u64> {
    degree_filter(g, &[1])
}

pub fn brute_even(g: &CubicGraph) -> Vec<u64> {
    degree_filter(g, &[0, 2])
}

/// Component sizes of `(V, mask)` by DFS.
pub fn component_sizes(g: &CubicGraph, mask: u64) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

pub fn odd_count(g: &CubicGraph, mask: u64) -> usize {
    component_sizes(g, mask).iter().filter(|&&s| s % 2 == 1).count()
}

pub fn full_mask(g: &CubicGraph) -> u64 {
    (1u64 << g.edge_count()) - 1
}

pub fn brute_oddness(g: &CubicGraph) -> usize {
    let full = full_mask(g);
    brute_matchings(g)
        .into_iter()
        .map(|m| odd_count(g, full & !m))
        .min()
        .expect("has a perfect matching")
}

pub fn brute_weak_oddness(g: &CubicGraph) -> usize {
    let full = full_mask(g);
    brute_joins(g)
        .into_iter()
        .map(|j| odd_count(g, full & !j))
        .min()
        .expect("has a join")
}

/// A subgraph contains a circuit iff some component has at least as many
/// edges as vertices.
pub fn has_circuit(g: &CubicGraph, mask: u64) -> bool {
    let edges = mask.count_ones() as usize;
    let comps = component_sizes(g, mask).len();
    edges + comps > g.vertex_count()
}

/// Connectivity after deleting each edge in turn.
pub fn bridgeless_oracle(g: &CubicGraph) -> bool {
    let full = full_mask(g);
    (0..g.edge_count()).all(|e| component_sizes(g, full & !(1 << e)).len() == 1)
}

/// Backtracking 3-edge-coloring in edge-index order.
pub fn three_edge_colorable(g: &CubicGraph) -> bool {
    fn go(g: &CubicGraph, e: usize, color: &mut Vec<u8>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (a, b) = g.edge(e);
        let used: Vec<u8> = g
            .incident(a)
            .into_iter()
            .chain(g.incident(b))
            .filter(|&f| f < e)
            .map(|f| color[f])
            .collect();
        for c in 0..3u8 {
            if (e > 0 || c == 0) && !used.contains(&c) {
                color[e] = c;
                if go(g, e + 1, color) {
                    return true;
                }
            }
        }
        false
    }
    go(g, 0, &mut vec![0; g.edge_count()])
}

/// `l2 = 2|E0| + 3 Σ n(J_i)` straight from the definitions.
pub fn naive_l2(g: &CubicGraph, t: [u64; 3]) -> usize {
    let full = full_mask(g);
    let e0 = full & !(t[0] | t[1] | t[2]);
    let jv: usize = t
        .iter()
        .map(|&j| degrees(g, j).iter().filter(|&&d| d == 3).count())
        .sum();
    2 * e0.count_ones() as usize + 3 * jv
}

pub fn is_matching_mask(g: &CubicGraph, mask: u64) -> bool {
    degrees(g, mask).iter().all(|&d| d == 1)
}

/// Minimum `l2` over unordered triples drawn from `sets`.
pub fn naive_min_l2(g: &CubicGraph, sets: &[u64]) -> usize {
    let mut best = usize::MAX;
    for i in 0..sets.len() {
        for j in i..sets.len() {
            for k in j..sets.len() {
                best = best.min(naive_l2(g, [sets[i], sets[j], sets[k]]));
            }
        }
    }
    best
}

/// Core edges `E0 ∪ E2 ∪ E3` of a triple.
pub fn core_mask(g: &CubicGraph, t: [u64; 3]) -> u64 {
    let full = full_mask(g);
    let [a, b, c] = t;
    let e1 = (a & !b & !c) | (!a & b & !c) | (!a & !b & c);
    full & !e1
}

/// Least `k` such that some triple with at most `k` non-matching joins has a
/// core whose degrees are all even; `None` if there is none with `k <= 3`.
pub fn naive_cyclic_k(g: &CubicGraph) -> Option<usize> {
    let joins = brute_joins(g);
    let mut best: Option<usize> = None;
    for i in 0..joins.len() {
        for j in i..joins.len() {
            for k in j..joins.len() {
                let t = [joins[i], joins[j], joins[k]];
                let core = core_mask(g, t);
                if degrees(g, core).iter().all(|d| d % 2 == 0) {
                    let nk = t.iter().filter(|&&x| !is_matching_mask(g, x)).count();
                    best = Some(best.map_or(nk, |b| b.min(nk)));
                }
            }
        }
    }
    best
}

/// Minimum number of Fano lines over all nowhere-zero `Z_2^3` flows, built
/// as triples of even subgraphs covering every edge.
pub fn naive_fano_lines(g: &CubicGraph) -> usize {
    let even = brute_even(g);
    let full = full_mask(g);
    let mut best = usize::MAX;
    for &a in &even {
        for &b in &even {
            for &c in &even {
                if a | b | c != full {
                    continue;
                }
                let value = |e: usize| {
                    ((a >> e & 1) | (b >> e & 1) << 1 | (c >> e & 1) << 2) as u8
                };
                let mut lines = std::collections::BTreeSet::new();
                for v in 0..g.vertex_count() {
                    let mut l = g.incident(v).map(value);
                    l.sort_unstable();
                    lines.insert(l);
                }
                best = best.min(lines.len());
            }
        }
    }
    best
}
