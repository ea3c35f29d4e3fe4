//! Branch and bound over per-edge coverage labels.
//!
//! A label is the 3-bit mask of the joins containing an edge. Three edge
//! sets form joins exactly when, at every vertex, each bit is present on one
//! or all three incident edges, i.e. the three labels xor to `0b111`. So once
//! two edges at a vertex are labelled the third is forced.
//!
//! The committed cost is `2·#(label 0 edges) + 3·#(vertex, bit) pairs where
//! the bit is on all three edges`, which is exactly the contribution to `l2`
//! and never decreases along a branch. The joins are kept lexicographically
//! ordered along the labelling order, which removes the 3! relabellings.

use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::error::Result;
use crate::factors::Join;
use crate::graph::CubicGraph;

use super::{make_cover_triple, CoverTriple};

const UNSET: u8 = 0xFF;
const FULL: u8 = 0b111;
/// Single-join labels first: they extend colorings and cost nothing.
const CANDIDATES: [u8; 8] = [4, 2, 1, 6, 5, 3, 0, 7];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreObjective {
    /// Minimize `l2` over weak cores with at most `k_max` non-matching joins.
    MinL,
    /// Least `k <= k_max` such that some weak core with at most `k`
    /// non-matching joins is cyclic.
    CyclicFeasibility,
}

#[derive(Debug, Clone)]
pub enum CoreSearch<'g> {
    /// `value` is `l2` for [`CoreObjective::MinL`] and `k` for
    /// [`CoreObjective::CyclicFeasibility`].
    Optimal { value: usize, witness: CoverTriple<'g> },
    /// The search completed and no admissible triple exists.
    Exhausted,
    BudgetExceeded {
        best: Option<(usize, CoverTriple<'g>)>,
    },
}

impl<'g> CoreSearch<'g> {
    pub fn value(&self) -> Option<usize> {
        match self {
            CoreSearch::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&CoverTriple<'g>> {
        match self {
            CoreSearch::Optimal { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

struct Snapshot {
    trail: usize,
    cost: u32,
    jcount: [u32; 3],
    ties: (bool, bool),
}

struct LabelSearch<'a> {
    g: &'a CubicGraph,
    order: Vec<usize>,
    label: Vec<u8>,
    count: Vec<u8>,
    xor: Vec<u8>,
    cost: u32,
    jcount: [u32; 3],
    ties: (bool, bool),
    trail: Vec<usize>,
    queue: Vec<(usize, u8)>,
    k_max: usize,
    forbid_full: bool,
    bound: u32,
    best: Option<(u32, Vec<u8>)>,
    stop_at_first: bool,
    done: bool,
    meter: &'a Meter,
}

impl<'a> LabelSearch<'a> {
    fn new(g: &'a CubicGraph, k_max: usize, forbid_full: bool, meter: &'a Meter) -> Self {
        LabelSearch {
            g,
            order: g.bfs_edge_order(),
            label: vec![UNSET; g.edge_count()],
            count: vec![0; g.vertex_count()],
            xor: vec![0; g.vertex_count()],
            cost: 0,
            jcount: [0; 3],
            ties: (true, true),
            trail: Vec::with_capacity(g.edge_count()),
            queue: Vec::new(),
            k_max,
            forbid_full,
            bound: u32::MAX,
            best: None,
            stop_at_first: false,
            done: false,
            meter,
        }
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            trail: self.trail.len(),
            cost: self.cost,
            jcount: self.jcount,
            ties: self.ties,
        }
    }

    fn restore(&mut self, s: &Snapshot) {
        while self.trail.len() > s.trail {
            let e = self.trail.pop().unwrap();
            let l = self.label[e];
            let (a, b) = self.g.edge(e);
            for v in [a, b] {
                self.count[v] -= 1;
                self.xor[v] ^= l;
            }
            self.label[e] = UNSET;
        }
        self.cost = s.cost;
        self.jcount = s.jcount;
        self.ties = s.ties;
        self.queue.clear();
    }

    fn nonmatching_joins(&self) -> usize {
        self.jcount.iter().filter(|&&c| c > 0).count()
    }

    /// Sets one label and updates vertex state; forced labels go to the queue.
    fn set(&mut self, e: usize, l: u8) -> bool {
        if self.label[e] != UNSET {
            return self.label[e] == l;
        }
        if self.forbid_full && l == FULL {
            return false;
        }
        let bit = |i: u8| (l >> i) & 1;
        if self.ties.0 {
            match bit(0).cmp(&bit(1)) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => self.ties.0 = false,
                std::cmp::Ordering::Equal => {}
            }
        }
        if self.ties.1 {
            match bit(1).cmp(&bit(2)) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => self.ties.1 = false,
                std::cmp::Ordering::Equal => {}
            }
        }
        self.label[e] = l;
        self.trail.push(e);
        if l == 0 {
            self.cost += 2;
        }
        let (a, b) = self.g.edge(e);
        let mut ok = true;
        for v in [a, b] {
            self.count[v] += 1;
            self.xor[v] ^= l;
            match self.count[v] {
                2 => {
                    let f = self
                        .g
                        .incident(v)
                        .into_iter()
                        .find(|&f| self.label[f] == UNSET)
                        .expect("vertex with two labels has a free edge");
                    self.queue.push((f, self.xor[v] ^ FULL));
                }
                3 => {
                    if self.xor[v] != FULL {
                        ok = false;
                        continue;
                    }
                    let common = self
                        .g
                        .incident(v)
                        .iter()
                        .fold(FULL, |acc, &f| acc & self.label[f]);
                    self.cost += 3 * common.count_ones();
                    for i in 0..3 {
                        if common >> i & 1 == 1 {
                            self.jcount[i] += 1;
                        }
                    }
                }
                _ => {}
            }
        }
        ok && self.nonmatching_joins() <= self.k_max && self.cost < self.bound
    }

    fn assign(&mut self, e: usize, l: u8) -> bool {
        if !self.set(e, l) {
            return false;
        }
        while let Some((f, m)) = self.queue.pop() {
            if !self.set(f, m) {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, mut pos: usize) -> std::result::Result<(), BudgetExceeded> {
        while pos < self.order.len() && self.label[self.order[pos]] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            self.bound = self.cost;
            self.best = Some((self.cost, self.label.clone()));
            if self.stop_at_first || self.cost == 0 {
                self.done = true;
            }
            return Ok(());
        }
        self.meter.tick()?;
        let e = self.order[pos];
        for l in CANDIDATES {
            let snap = self.snapshot();
            if self.assign(e, l) {
                self.dfs(pos + 1)?;
            }
            self.restore(&snap);
            if self.done {
                break;
            }
        }
        Ok(())
    }
}

fn triple_from_labels<'g>(g: &'g CubicGraph, labels: &[u8]) -> CoverTriple<'g> {
    let joins: [Join<'g>; 3] = std::array::from_fn(|i| {
        let edges = g
            .subset_from_indices((0..labels.len()).filter(|&e| labels[e] >> i & 1 == 1))
            .expect("labels sized to the graph");
        Join::new(g, edges).expect("labels encode joins")
    });
    let [a, b, c] = joins;
    make_cover_triple(a, b, c).expect("joins of one graph")
}

fn run<'g>(
    g: &'g CubicGraph,
    k_max: usize,
    forbid_full: bool,
    stop_at_first: bool,
    meter: &Meter,
) -> std::result::Result<Option<CoverTriple<'g>>, Option<CoverTriple<'g>>> {
    let mut s = LabelSearch::new(g, k_max, forbid_full, meter);
    s.stop_at_first = stop_at_first;
    let status = s.dfs(0);
    let best = s.best.map(|(_, labels)| triple_from_labels(g, &labels));
    match status {
        Ok(()) => Ok(best),
        Err(BudgetExceeded) => Err(best),
    }
}

/// Exact weak-core minimization. `k_max = 0` yields `μ3` (as `l2`),
/// `k_max = 3` yields `μ3'`.
pub fn minimize_core<'g>(
    g: &'g CubicGraph,
    k_max: usize,
    objective: CoreObjective,
    budget: &Budget,
) -> Result<CoreSearch<'g>> {
    g.require_bridgeless()?;
    let k_max = k_max.min(3);
    let meter = budget.meter();
    Ok(match objective {
        CoreObjective::MinL => match run(g, k_max, false, false, &meter) {
            Ok(Some(t)) => CoreSearch::Optimal {
                value: t.l2(),
                witness: t,
            },
            Ok(None) => CoreSearch::Exhausted,
            Err(best) => CoreSearch::BudgetExceeded {
                best: best.map(|t| (t.l2(), t)),
            },
        },
        CoreObjective::CyclicFeasibility => {
            for k in 0..=k_max {
                match run(g, k, true, true, &meter) {
                    Ok(Some(t)) => return Ok(CoreSearch::Optimal { value: k, witness: t }),
                    Ok(None) => {}
                    Err(_) => return Ok(CoreSearch::BudgetExceeded { best: None }),
                }
            }
            CoreSearch::Exhausted
        }
    })
}

/// `μ3` as `l2`, with a witness triple of perfect matchings.
pub fn mu3<'g>(g: &'g CubicGraph, budget: &Budget) -> Result<CoreSearch<'g>> {
    minimize_core(g, 0, CoreObjective::MinL, budget)
}

/// `μ3'` as `l2`, with a witness triple of joins.
pub fn mu3_prime<'g>(g: &'g CubicGraph, budget: &Budget) -> Result<CoreSearch<'g>> {
    minimize_core(g, 3, CoreObjective::MinL, budget)
}

/// Least `k` admitting a cyclic weak core with at most `k` non-matching joins.
pub fn min_cyclic_weak_core_k<'g>(g: &'g CubicGraph, budget: &Budget) -> Result<CoreSearch<'g>> {
    minimize_core(g, 3, CoreObjective::CyclicFeasibility, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::core_properties;

    #[test]
    fn k4_is_free() {
        let g = CubicGraph::complete_k4();
        let r = mu3(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), Some(0));
        assert_eq!(mu3_prime(&g, &Budget::unlimited()).unwrap().value(), Some(0));
    }

    #[test]
    fn petersen_mu3() {
        let g = CubicGraph::petersen();
        let r = mu3(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), Some(6));
        let t = r.witness().unwrap();
        assert_eq!(t.k(), 0);
        assert_eq!(t.l2(), 6);
    }

    #[test]
    fn petersen_cyclic_k() {
        let g = CubicGraph::petersen();
        let r = min_cyclic_weak_core_k(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.value(), Some(0));
        assert!(core_properties(r.witness().unwrap()).is_cyclic);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let g = CubicGraph::petersen();
        let r = mu3_prime(&g, &Budget::nodes(3)).unwrap();
        assert!(matches!(r, CoreSearch::BudgetExceeded { .. }));
    }
}
