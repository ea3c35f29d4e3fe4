//! Oddness, weak oddness, and the odd-component bound for cover triples.

use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded};
use crate::cores::CoverTriple;
use crate::error::{Error, Result};
use crate::factors::{
    enumerate_joins, enumerate_perfect_matchings, odd_components_spanning, Join, PerfectMatching,
};
use crate::graph::CubicGraph;

/// Minimum number of odd circuits over all 2-factors, with the first
/// perfect matching (in enumeration order) whose 2-factor attains it.
pub fn oddness(g: &CubicGraph) -> Result<(usize, PerfectMatching<'_>)> {
    g.require_bridgeless()?;
    let mut best: Option<(usize, PerfectMatching<'_>)> = None;
    for m in enumerate_perfect_matchings(g) {
        let odd = odd_components_spanning(g, &m.two_factor());
        if best.as_ref().map_or(true, |(b, _)| odd < *b) {
            let stop = odd == 0;
            best = Some((odd, m));
            if stop {
                break;
            }
        }
    }
    Ok(best.expect("bridgeless cubic graphs have a perfect matching"))
}

/// Minimum number of odd components of a join complement, with a minimizing
/// join. The perfect matching attaining `ω` seeds the search; after that all
/// `2^(m-n+1)` joins are walked unless a zero is found or the budget stops it.
pub fn weak_oddness_with_budget<'g>(g: &'g CubicGraph, budget: &Budget) -> Result<Option<(usize, Join<'g>)>> {
    let (omega, m) = oddness(g)?;
    let mut best = Some((omega, m.into_join()));
    if omega == 0 {
        return Ok(best);
    }
    let meter = budget.meter();
    for j in enumerate_joins(g) {
        if meter.tick().is_err() {
            return Ok(None);
        }
        let odd = odd_components_spanning(g, &j.complement());
        if best.as_ref().map_or(true, |(b, _)| odd < *b) {
            let stop = odd == 0;
            best = Some((odd, j));
            if stop {
                break;
            }
        }
    }
    Ok(best)
}

pub fn weak_oddness(g: &CubicGraph) -> Result<(usize, Join<'_>)> {
    if g.cycle_rank() > 40 {
        return Err(Error::TooLarge(format!(
            "2^{} joins; use weak_oddness_with_budget",
            g.cycle_rank()
        )));
    }
    Ok(weak_oddness_with_budget(g, &Budget::unlimited())?.expect("unlimited budget"))
}

#[derive(Debug, Clone)]
pub struct ParityReport<'g> {
    pub oddness: usize,
    pub weak_oddness: usize,
    pub matching: PerfectMatching<'g>,
    pub join: Join<'g>,
}

impl ParityReport<'_> {
    /// Whether oddness and weak oddness agree on this graph. Reported only.
    pub fn omega_equal(&self) -> bool {
        self.oddness == self.weak_oddness
    }
}

pub fn parity_report<'g>(g: &'g CubicGraph, budget: &Budget) -> Result<std::result::Result<ParityReport<'g>, BudgetExceeded>> {
    let (oddness, matching) = oddness(g)?;
    Ok(match weak_oddness_with_budget(g, budget)? {
        Some((weak_oddness, join)) => Ok(ParityReport {
            oddness,
            weak_oddness,
            matching,
            join,
        }),
        None => Err(BudgetExceeded),
    })
}

/// Both sides of `Σ |complement(J_i)|_odd <= 2|E0| + 3 Σ n(J_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem4Check {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

pub fn check_theorem4(t: &CoverTriple<'_>) -> Theorem4Check {
    let g = t.graph();
    let lhs = t
        .joins()
        .iter()
        .map(|j| odd_components_spanning(g, &j.complement()))
        .sum();
    let rhs = t.l2();
    Theorem4Check {
        lhs,
        rhs,
        holds: lhs <= rhs,
    }
}
