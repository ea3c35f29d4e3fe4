//! Fano-flows: edge labellings by the seven nonzero vectors of `Z_2^3` such
//! that the three values at every vertex are distinct and sum to zero, i.e.
//! form a line of the Fano plane.
//!
//! Points are the integers `1..=7` read as bit vectors. Lines are the seven
//! xor-closed triples `{x, y, x ^ y}`. No orientation is needed since every
//! element is its own inverse.

use std::fmt;

use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::cores::CoverTriple;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;

/// A point of the Fano plane, a nonzero element of `Z_2^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FanoPoint(u8);

impl FanoPoint {
    pub fn new(v: u8) -> Option<Self> {
        (1..=7).contains(&v).then_some(FanoPoint(v))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// A line, stored as its three points in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FanoLine(pub [u8; 3]);

impl fmt::Display for FanoLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// The seven lines in lexicographic order.
pub const LINES: [FanoLine; 7] = [
    FanoLine([1, 2, 3]),
    FanoLine([1, 4, 5]),
    FanoLine([1, 6, 7]),
    FanoLine([2, 4, 6]),
    FanoLine([2, 5, 7]),
    FanoLine([3, 4, 7]),
    FanoLine([3, 5, 6]),
];

/// Index into [`LINES`] of the line through two distinct points.
pub fn line_through(x: u8, y: u8) -> usize {
    debug_assert!(x != y && (1..=7).contains(&x) && (1..=7).contains(&y));
    let mut p = [x, y, x ^ y];
    p.sort_unstable();
    LINES.iter().position(|l| l.0 == p).expect("xor-closed triple")
}

const LINE_OF: [[u8; 8]; 8] = {
    let mut t = [[u8::MAX; 8]; 8];
    let mut i = 0;
    while i < 7 {
        let [a, b, c] = LINES[i].0;
        t[a as usize][b as usize] = i as u8;
        t[b as usize][a as usize] = i as u8;
        t[a as usize][c as usize] = i as u8;
        t[c as usize][a as usize] = i as u8;
        t[b as usize][c as usize] = i as u8;
        t[c as usize][b as usize] = i as u8;
        i += 1;
    }
    t
};

/// A validated Fano-flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoFlow {
    values: Vec<u8>,
    lines_used: u8,
}

impl FanoFlow {
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn line_count(&self) -> usize {
        self.lines_used.count_ones() as usize
    }

    pub fn lines(&self) -> Vec<FanoLine> {
        (0..7)
            .filter(|i| self.lines_used >> i & 1 == 1)
            .map(|i| LINES[i])
            .collect()
    }

    /// Bitmask over `1..=7` of the points that occur as edge values.
    pub fn points_used(&self) -> u8 {
        self.values.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }
}

pub fn validate_fano_flow(g: &CubicGraph, values: &[u8]) -> Result<FanoFlow> {
    if values.len() != g.edge_count() {
        return Err(Error::InvalidFlow {
            location: "input".into(),
            message: format!("{} values for {} edges", values.len(), g.edge_count()),
        });
    }
    if let Some(e) = values.iter().position(|v| !(1..=7).contains(v)) {
        return Err(Error::InvalidFlow {
            location: format!("edge {e}"),
            message: format!("value {} is not a nonzero element of Z2^3", values[e]),
        });
    }
    let mut lines_used = 0u8;
    for v in 0..g.vertex_count() {
        let [a, b, c] = g.incident(v).map(|e| values[e]);
        if a ^ b ^ c != 0 {
            return Err(Error::InvalidFlow {
                location: format!("vertex {v}"),
                message: format!("values {a},{b},{c} do not sum to zero"),
            });
        }
        lines_used |= 1 << line_through(a, b);
    }
    Ok(FanoFlow {
        values: values.to_vec(),
        lines_used,
    })
}

/// The flow of a triple with empty `E3`: coordinate `i` of `value(e)` is set
/// iff `e` is not in `J_i`.
pub fn triple_to_flow(t: &CoverTriple<'_>) -> Result<FanoFlow> {
    if let Some(edge) = t.e(3).iter().next() {
        return Err(Error::NonEmptyIntersection { edge });
    }
    let g = t.graph();
    let values: Vec<u8> = (0..g.edge_count())
        .map(|e| {
            (0..3).fold(0u8, |acc, i| {
                acc | (u8::from(!t.joins()[i].edges().contains(e)) << i)
            })
        })
        .collect();
    validate_fano_flow(g, &values)
}

#[derive(Debug, Clone)]
pub enum FanoSearch {
    Optimal { lines: usize, flow: FanoFlow },
    /// Completed without finding any flow (impossible for bridgeless graphs).
    Exhausted,
    BudgetExceeded { best: Option<FanoFlow> },
}

impl FanoSearch {
    pub fn lines(&self) -> Option<usize> {
        match self {
            FanoSearch::Optimal { lines, .. } => Some(*lines),
            _ => None,
        }
    }
}

struct FlowSearch<'a> {
    g: &'a CubicGraph,
    order: Vec<usize>,
    value: Vec<u8>,
    count: Vec<u8>,
    xor: Vec<u8>,
    lines: u8,
    trail: Vec<usize>,
    queue: Vec<(usize, u8)>,
    bound: u32,
    best: Option<Vec<u8>>,
    done: bool,
    meter: &'a Meter,
}

impl<'a> FlowSearch<'a> {
    fn set(&mut self, e: usize, x: u8) -> bool {
        if self.value[e] != 0 {
            return self.value[e] == x;
        }
        if x == 0 {
            return false;
        }
        self.value[e] = x;
        self.trail.push(e);
        let (a, b) = self.g.edge(e);
        let mut ok = true;
        for v in [a, b] {
            self.count[v] += 1;
            self.xor[v] ^= x;
            match self.count[v] {
                2 => {
                    let f = self
                        .g
                        .incident(v)
                        .into_iter()
                        .find(|&f| self.value[f] == 0)
                        .expect("free edge");
                    // zero when the two values coincide; rejected on set
                    self.queue.push((f, self.xor[v]));
                }
                3 => {
                    if self.xor[v] != 0 {
                        ok = false;
                        continue;
                    }
                    let [p, q, _] = self.g.incident(v).map(|f| self.value[f]);
                    self.lines |= 1 << LINE_OF[p as usize][q as usize];
                }
                _ => {}
            }
        }
        ok && self.lines.count_ones() < self.bound
    }

    fn assign(&mut self, e: usize, x: u8) -> bool {
        if !self.set(e, x) {
            return false;
        }
        while let Some((f, y)) = self.queue.pop() {
            if !self.set(f, y) {
                return false;
            }
        }
        true
    }

    fn restore(&mut self, trail: usize, lines: u8) {
        while self.trail.len() > trail {
            let e = self.trail.pop().unwrap();
            let x = self.value[e];
            let (a, b) = self.g.edge(e);
            for v in [a, b] {
                self.count[v] -= 1;
                self.xor[v] ^= x;
            }
            self.value[e] = 0;
        }
        self.lines = lines;
        self.queue.clear();
    }

    fn dfs(&mut self, mut pos: usize) -> std::result::Result<(), BudgetExceeded> {
        while pos < self.order.len() && self.value[self.order[pos]] != 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            self.bound = self.lines.count_ones();
            self.best = Some(self.value.clone());
            if self.bound == 1 {
                self.done = true;
            }
            return Ok(());
        }
        self.meter.tick()?;
        let e = self.order[pos];
        for x in 1..=7 {
            let (trail, lines) = (self.trail.len(), self.lines);
            if self.assign(e, x) {
                self.dfs(pos + 1)?;
            }
            self.restore(trail, lines);
            if self.done {
                break;
            }
        }
        Ok(())
    }
}

/// Exact minimum number of lines over all Fano-flows of `g`.
///
/// Edges are labelled in BFS order from vertex 0, so the first two labelled
/// edges share vertex 0. The linear automorphisms of `Z_2^3` act
/// transitively on ordered pairs of distinct points, so those two edges are
/// fixed to 1 and 2 without loss of generality.
pub fn min_line_fano_flow(g: &CubicGraph, budget: &Budget) -> Result<FanoSearch> {
    g.require_bridgeless()?;
    let meter = budget.meter();
    let mut s = FlowSearch {
        g,
        order: g.bfs_edge_order(),
        value: vec![0; g.edge_count()],
        count: vec![0; g.vertex_count()],
        xor: vec![0; g.vertex_count()],
        lines: 0,
        trail: Vec::new(),
        queue: Vec::new(),
        bound: u32::MAX,
        best: None,
        done: false,
        meter: &meter,
    };
    let (e0, e1) = (s.order[0], s.order[1]);
    let status = if s.assign(e0, 1) && s.assign(e1, 2) {
        s.dfs(2)
    } else {
        unreachable!("two edges at vertex 0 accept distinct values")
    };
    let best = s
        .best
        .map(|v| validate_fano_flow(g, &v).expect("search only emits valid flows"));
    Ok(match (status, best) {
        (Ok(()), Some(flow)) => FanoSearch::Optimal {
            lines: flow.line_count(),
            flow,
        },
        (Ok(()), None) => FanoSearch::Exhausted,
        (Err(BudgetExceeded), best) => FanoSearch::BudgetExceeded { best },
    })
}
