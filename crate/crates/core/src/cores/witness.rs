//! Per-graph checkers for the matching and core conjectures.
//!
//! Each checker walks its search space in a fixed order (matching lists in
//! enumeration order, joins in cycle-space coefficient order, unordered
//! tuples as non-decreasing index sequences) and returns the first witness.
//! "Refuted" means the whole space was exhausted.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::edges::EdgeSubset;
use crate::error::Result;
use crate::factors::{enumerate_perfect_matchings, CycleSpace, Join, PerfectMatching};
use crate::graph::CubicGraph;

use super::{core_properties, make_cover_triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureId {
    /// Three perfect matchings with empty intersection.
    FanRaspaud,
    /// Two perfect matchings and a join with empty intersection.
    TwoMatchingsJoin,
    /// One perfect matching and two joins with empty intersection.
    OneMatchingTwoJoins,
    /// A cyclic weak core with at most one non-matching join.
    Cyclic1Weak,
    /// A bipartite core (three perfect matchings).
    BipartiteCore,
    /// A triangle-free core.
    TriangleFreeCore,
    /// Three perfect matchings whose union has an acyclic complement.
    AcyclicE0ThreeMatchings,
    /// Two perfect matchings whose union has an acyclic complement.
    AcyclicTwoMatchings,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 8] = [
        ConjectureId::FanRaspaud,
        ConjectureId::TwoMatchingsJoin,
        ConjectureId::OneMatchingTwoJoins,
        ConjectureId::Cyclic1Weak,
        ConjectureId::BipartiteCore,
        ConjectureId::TriangleFreeCore,
        ConjectureId::AcyclicE0ThreeMatchings,
        ConjectureId::AcyclicTwoMatchings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::FanRaspaud => "fan-raspaud",
            ConjectureId::TwoMatchingsJoin => "2pm-join",
            ConjectureId::OneMatchingTwoJoins => "1pm-2joins",
            ConjectureId::Cyclic1Weak => "cyclic-1-weak",
            ConjectureId::BipartiteCore => "bipartite-core",
            ConjectureId::TriangleFreeCore => "triangle-free-core",
            ConjectureId::AcyclicE0ThreeMatchings => "acyclic-e0-3pm",
            ConjectureId::AcyclicTwoMatchings => "acyclic-2pm",
        }
    }

    /// How many members of the witness must be perfect matchings, and how
    /// many sets the witness has.
    fn shape(self) -> (usize, usize) {
        match self {
            ConjectureId::FanRaspaud
            | ConjectureId::BipartiteCore
            | ConjectureId::TriangleFreeCore
            | ConjectureId::AcyclicE0ThreeMatchings => (3, 3),
            ConjectureId::TwoMatchingsJoin | ConjectureId::Cyclic1Weak => (2, 3),
            ConjectureId::OneMatchingTwoJoins => (1, 3),
            ConjectureId::AcyclicTwoMatchings => (2, 2),
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        let alias = match s.as_str() {
            "fr" => "fan-raspaud",
            "2pm+join" => "2pm-join",
            "1pm+2joins" => "1pm-2joins",
            other => other,
        };
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == alias)
            .ok_or_else(|| format!("unknown conjecture id `{s}`"))
    }
}

/// Witness sets: perfect matchings first, then joins, as edge subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub id: ConjectureId,
    pub sets: Vec<EdgeSubset>,
}

impl Witness {
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(EdgeSubset::to_vec).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Witness(Witness),
    Refuted,
    BudgetExceeded,
}

/// Searches for a witness of `id` on `g`.
pub fn find_witness(g: &CubicGraph, id: ConjectureId, budget: &Budget) -> Result<WitnessOutcome> {
    g.require_bridgeless()?;
    let meter = budget.meter();
    let matchings = enumerate_perfect_matchings(g).edge_sets();
    let found = match id {
        ConjectureId::FanRaspaud => {
            search_matching_triples(&matchings, &meter, |a, b, c| EdgeSubset::triple_disjoint(a, b, c))
        }
        ConjectureId::BipartiteCore
        | ConjectureId::TriangleFreeCore
        | ConjectureId::AcyclicE0ThreeMatchings => search_matching_triples(&matchings, &meter, |a, b, c| {
            triple_predicate(g, id, [a, b, c])
        }),
        ConjectureId::AcyclicTwoMatchings => search_matching_pairs(&matchings, &meter, |a, b| {
            g.is_acyclic_subgraph(&a.union(b).complement())
        }),
        ConjectureId::TwoMatchingsJoin | ConjectureId::Cyclic1Weak => {
            search_pairs_and_join(g, id, &matchings, &meter)
        }
        ConjectureId::OneMatchingTwoJoins => search_matching_and_two_joins(g, &matchings, &meter),
    };
    Ok(match found {
        Ok(Some(sets)) => WitnessOutcome::Witness(Witness { id, sets }),
        Ok(None) => WitnessOutcome::Refuted,
        Err(BudgetExceeded) => WitnessOutcome::BudgetExceeded,
    })
}

type Found = std::result::Result<Option<Vec<EdgeSubset>>, BudgetExceeded>;

fn search_matching_triples(
    ms: &[EdgeSubset],
    meter: &Meter,
    pred: impl Fn(&EdgeSubset, &EdgeSubset, &EdgeSubset) -> bool,
) -> Found {
    for i in 0..ms.len() {
        for j in i..ms.len() {
            for k in j..ms.len() {
                meter.tick()?;
                if pred(&ms[i], &ms[j], &ms[k]) {
                    return Ok(Some(vec![ms[i].clone(), ms[j].clone(), ms[k].clone()]));
                }
            }
        }
    }
    Ok(None)
}

/// Rows `i` run in parallel; the first hit in row order is returned. One
/// node is charged per 64 pairs.
fn search_matching_pairs(
    ms: &[EdgeSubset],
    meter: &Meter,
    pred: impl Fn(&EdgeSubset, &EdgeSubset) -> bool + Sync,
) -> Found {
    let hit = (0..ms.len()).into_par_iter().find_map_first(|i| {
        if meter.tick_n((ms.len() - i) as u64 / 64 + 1).is_err() {
            return Some(Err(BudgetExceeded));
        }
        (i..ms.len())
            .find(|&j| pred(&ms[i], &ms[j]))
            .map(|j| Ok((i, j)))
    });
    match hit {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok((i, j))) => Ok(Some(vec![ms[i].clone(), ms[j].clone()])),
    }
}

fn triple_predicate(g: &CubicGraph, id: ConjectureId, sets: [&EdgeSubset; 3]) -> bool {
    match id {
        ConjectureId::FanRaspaud | ConjectureId::TwoMatchingsJoin | ConjectureId::OneMatchingTwoJoins => {
            EdgeSubset::triple_disjoint(sets[0], sets[1], sets[2])
        }
        ConjectureId::AcyclicE0ThreeMatchings => {
            g.is_acyclic_subgraph(&sets[0].union(sets[1]).union(sets[2]).complement())
        }
        ConjectureId::Cyclic1Weak | ConjectureId::BipartiteCore | ConjectureId::TriangleFreeCore => {
            let Ok([a, b, c]) = sets.try_map_joins(g) else {
                return false;
            };
            let Ok(t) = make_cover_triple(a, b, c) else {
                return false;
            };
            let p = core_properties(&t);
            match id {
                ConjectureId::Cyclic1Weak => p.is_cyclic,
                ConjectureId::BipartiteCore => p.is_bipartite,
                _ => p.is_triangle_free,
            }
        }
        ConjectureId::AcyclicTwoMatchings => unreachable!("pair predicate"),
    }
}

trait TryMapJoins {
    fn try_map_joins<'g>(self, g: &'g CubicGraph) -> Result<[Join<'g>; 3]>;
}

impl TryMapJoins for [&EdgeSubset; 3] {
    fn try_map_joins<'g>(self, g: &'g CubicGraph) -> Result<[Join<'g>; 3]> {
        let [a, b, c] = self;
        Ok([
            Join::new(g, a.clone())?,
            Join::new(g, b.clone())?,
            Join::new(g, c.clone())?,
        ])
    }
}

fn cycle_space_members(g: &CubicGraph) -> std::result::Result<Vec<EdgeSubset>, BudgetExceeded> {
    let cs = CycleSpace::new(g);
    if cs.dimension() > 30 {
        return Err(BudgetExceeded);
    }
    Ok(cs.members())
}

/// Pairs `i <= j` of matchings, then joins in coefficient order. A join is
/// the complement of an even subgraph `C`, so `M_i ∩ M_j ∩ J = ∅` iff
/// `M_i ∩ M_j ⊆ C`.
fn search_pairs_and_join(g: &CubicGraph, id: ConjectureId, ms: &[EdgeSubset], meter: &Meter) -> Found {
    let evens = cycle_space_members(g)?;
    for i in 0..ms.len() {
        for j in i..ms.len() {
            let shared = ms[i].intersection(&ms[j]);
            for c in &evens {
                meter.tick()?;
                if !shared.is_subset(c) {
                    continue;
                }
                let join = c.complement();
                if id == ConjectureId::Cyclic1Weak
                    && !triple_predicate(g, id, [&ms[i], &ms[j], &join])
                {
                    continue;
                }
                return Ok(Some(vec![ms[i].clone(), ms[j].clone(), join]));
            }
        }
    }
    Ok(None)
}

/// Matchings in order, then pairs `a <= b` of joins in coefficient order;
/// `M ∩ J_a ∩ J_b = ∅` iff `M ⊆ C_a ∪ C_b`.
fn search_matching_and_two_joins(g: &CubicGraph, ms: &[EdgeSubset], meter: &Meter) -> Found {
    let evens = cycle_space_members(g)?;
    for m in ms {
        for a in 0..evens.len() {
            let rest = m.difference(&evens[a]);
            meter.tick()?;
            for b in a..evens.len() {
                if rest.is_subset(&evens[b]) {
                    return Ok(Some(vec![
                        m.clone(),
                        evens[a].complement(),
                        evens[b].complement(),
                    ]));
                }
            }
            meter.tick_n((evens.len() - a) as u64 / 64)?;
        }
    }
    Ok(None)
}

/// Re-checks a witness against its predicate from scratch.
pub fn validate_witness(g: &CubicGraph, id: ConjectureId, sets: &[EdgeSubset]) -> Result<bool> {
    let (matchings, len) = id.shape();
    if sets.len() != len {
        return Ok(false);
    }
    for (i, s) in sets.iter().enumerate() {
        g.check_width(s)?;
        let ok = if i < matchings {
            PerfectMatching::new(g, s.clone()).is_ok()
        } else {
            Join::new(g, s.clone()).is_ok()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(match id {
        ConjectureId::AcyclicTwoMatchings => g.is_acyclic_subgraph(&sets[0].union(&sets[1]).complement()),
        _ => triple_predicate(g, id, [&sets[0], &sets[1], &sets[2]]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in ConjectureId::ALL {
            assert_eq!(id.name().parse::<ConjectureId>().unwrap(), id);
        }
        assert_eq!("FR".parse::<ConjectureId>().unwrap(), ConjectureId::FanRaspaud);
        assert!("conj-11".parse::<ConjectureId>().is_err());
    }

    #[test]
    fn k4_everything_witnessed() {
        let g = CubicGraph::complete_k4();
        for id in ConjectureId::ALL {
            let out = find_witness(&g, id, &Budget::unlimited()).unwrap();
            let WitnessOutcome::Witness(w) = out else {
                panic!("{id}: {out:?}");
            };
            assert!(validate_witness(&g, id, &w.sets).unwrap(), "{id}");
        }
    }

    #[test]
    fn validate_rejects_wrong_shape() {
        let g = CubicGraph::complete_k4();
        let m = enumerate_perfect_matchings(&g).next().unwrap().edges().clone();
        assert!(!validate_witness(&g, ConjectureId::FanRaspaud, &[m.clone(), m.clone()]).unwrap());
        assert!(!validate_witness(&g, ConjectureId::FanRaspaud, &[m.clone(), m.clone(), m]).unwrap());
    }
}
