//! Property suite run per graph by the `invariants` subcommand.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::cores::{make_cover_triple, minimize_core, CoreObjective, CoverTriple};
use crate::factors::{enumerate_joins, enumerate_perfect_matchings, is_simple_join, CycleSpace, Join};
use crate::fano::{min_line_fano_flow, FanoSearch};
use crate::graph::CubicGraph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::parity::{check_theorem4, oddness, weak_oddness_with_budget};

use super::batch::GraphSource;
use super::{EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_REFUTED};

const MAX_MATCHING_TRIPLES: usize = 20_000;
const JOIN_TRIPLE_SAMPLES: usize = 2_000;
const MAX_JOIN_RANK: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvariantStatus {
    Holds,
    Violated,
    Skipped,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantOutcome {
    pub status: InvariantStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl InvariantOutcome {
    fn from_bool(ok: bool, detail: impl Into<String>) -> Self {
        InvariantOutcome {
            status: if ok { InvariantStatus::Holds } else { InvariantStatus::Violated },
            detail: Some(detail.into()).filter(|d: &String| !d.is_empty()),
        }
    }

    fn status(status: InvariantStatus, detail: impl Into<String>) -> Self {
        InvariantOutcome {
            status,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub invariants: BTreeMap<String, InvariantOutcome>,
}

/// Single-edge deletion test for bridges, independent of the DFS.
fn bridgeless_by_deletion(g: &CubicGraph) -> bool {
    (0..g.edge_count()).all(|skip| {
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in g.incident(v) {
                let w = g.other_end(e, v);
                if e != skip && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    })
}

fn complement_is_even(g: &CubicGraph, j: &Join<'_>) -> bool {
    let c = j.complement();
    (0..g.vertex_count()).all(|v| matches!(g.degree_in(&c, v), 0 | 2))
}

/// Identity, type relations, `G[E0 ∪ E2]` even, and the odd-component bound.
fn triple_violation(t: &CoverTriple<'_>) -> Option<String> {
    let g = t.graph();
    if !t.counting_identity_holds() {
        return Some("counting identity".into());
    }
    if !t.type_relations_hold() {
        return Some("type relations".into());
    }
    let even = t.e(0).union(t.e(2));
    if (0..g.vertex_count()).any(|v| !matches!(g.degree_in(&even, v), 0 | 2)) {
        return Some("G[E0 ∪ E2] has a vertex of odd degree".into());
    }
    let b = check_theorem4(t);
    if !b.holds {
        return Some(format!("odd components {} > l2 {}", b.lhs, b.rhs));
    }
    None
}

fn cover_triples(g: &CubicGraph, rng: &mut StdRng) -> InvariantOutcome {
    let ms: Vec<Join<'_>> = enumerate_perfect_matchings(g).map(Join::from).collect();
    let mut checked = 0usize;
    'outer: for i in 0..ms.len() {
        for j in i..ms.len() {
            for k in j..ms.len() {
                if checked == MAX_MATCHING_TRIPLES {
                    break 'outer;
                }
                let t = make_cover_triple(ms[i].clone(), ms[j].clone(), ms[k].clone())
                    .expect("joins of one graph");
                if let Some(why) = triple_violation(&t) {
                    return InvariantOutcome::from_bool(false, format!("matchings {i},{j},{k}: {why}"));
                }
                checked += 1;
            }
        }
    }
    let cs = CycleSpace::new(g);
    let mut sampled = 0;
    if cs.dimension() <= 62 {
        let size = 1u64 << cs.dimension();
        let join = |c: u64| Join::new(g, cs.member(c).complement()).expect("even complement");
        for _ in 0..JOIN_TRIPLE_SAMPLES {
            let c = [0; 3].map(|_: u8| rng.gen_range(0..size));
            let t = make_cover_triple(join(c[0]), join(c[1]), join(c[2])).expect("joins of one graph");
            if let Some(why) = triple_violation(&t) {
                return InvariantOutcome::from_bool(false, format!("joins {c:?}: {why}"));
            }
            sampled += 1;
        }
    }
    InvariantOutcome::from_bool(true, format!("{checked} matching triples, {sampled} sampled join triples"))
}

fn check_graph(g: &CubicGraph, budget: &Budget, seed: u64) -> BTreeMap<String, InvariantOutcome> {
    let mut out = BTreeMap::new();
    let mut put = |name: &str, o: InvariantOutcome| {
        out.insert(name.to_string(), o);
    };
    let text = write_graph6(g);
    put(
        "graph6-round-trip",
        InvariantOutcome::from_bool(parse_graph6(&text).map_or(false, |h| &h == g), ""),
    );
    let degree_sum = 2 * g.edge_count() == 3 * g.vertex_count();
    put("degree-sum", InvariantOutcome::from_bool(degree_sum, ""));
    if g.vertex_count() <= 14 {
        let oracle = bridgeless_by_deletion(g);
        put(
            "bridgeless-oracle",
            InvariantOutcome::from_bool(oracle == g.is_bridgeless(), ""),
        );
    } else {
        put("bridgeless-oracle", InvariantOutcome::status(InvariantStatus::Skipped, "n > 14"));
    }

    if g.cycle_rank() <= MAX_JOIN_RANK {
        let mut count = 0u64;
        let mut even = true;
        for j in enumerate_joins(g) {
            count += 1;
            even &= complement_is_even(g, &j);
        }
        let expected = 1u64 << g.cycle_rank();
        put(
            "join-count",
            InvariantOutcome::from_bool(count == expected, format!("{count} joins, expected {expected}")),
        );
        put("join-complements-even", InvariantOutcome::from_bool(even, ""));
    } else {
        for name in ["join-count", "join-complements-even"] {
            put(name, InvariantOutcome::status(InvariantStatus::Skipped, "cycle rank > 20"));
        }
    }

    let mut simple = true;
    let mut matchings = 0;
    for m in enumerate_perfect_matchings(g) {
        matchings += 1;
        simple &= m.as_join().n_j() == 0 && is_simple_join(m.as_join());
    }
    put(
        "matchings-simple-joins",
        InvariantOutcome::from_bool(simple && matchings > 0 || !g.is_bridgeless(), format!("{matchings} perfect matchings")),
    );

    if !g.is_bridgeless() {
        put(
            "bridgeless",
            InvariantOutcome::status(InvariantStatus::Skipped, "graph has a bridge; remaining suites skipped"),
        );
        return out;
    }

    let mut rng = StdRng::seed_from_u64(seed);
    put("cover-triples", cover_triples(g, &mut rng));

    let omega = oddness(g).expect("bridgeless").0;
    let weak = weak_oddness_with_budget(g, budget).expect("bridgeless").map(|(w, _)| w);
    match weak {
        Some(wp) => {
            put(
                "weak-oddness-le-oddness",
                InvariantOutcome::from_bool(wp <= omega, format!("ω' = {wp}, ω = {omega}")),
            );
            put(
                "weak-oddness-two-iff-oddness-two",
                InvariantOutcome::from_bool((wp == 2) == (omega == 2), format!("ω' = {wp}, ω = {omega}")),
            );
        }
        None => {
            for name in ["weak-oddness-le-oddness", "weak-oddness-two-iff-oddness-two"] {
                put(name, InvariantOutcome::status(InvariantStatus::BudgetExceeded, "weak oddness"));
            }
        }
    }

    let mu3 = minimize_core(g, 0, CoreObjective::MinL, budget).expect("bridgeless").value();
    let mu3p = minimize_core(g, 3, CoreObjective::MinL, budget).expect("bridgeless").value();
    let pending = |what: &str| InvariantOutcome::status(InvariantStatus::BudgetExceeded, what);
    put(
        "oddness-le-two-thirds-mu3",
        match mu3 {
            Some(l2) => InvariantOutcome::from_bool(3 * omega <= l2, format!("3ω = {}, 2μ3 = {l2}", 3 * omega)),
            None => pending("μ3"),
        },
    );
    put(
        "weak-oddness-le-two-thirds-mu3-prime",
        match (mu3p, weak) {
            (Some(l2), Some(wp)) => {
                InvariantOutcome::from_bool(3 * wp <= l2, format!("3ω' = {}, 2μ3' = {l2}", 3 * wp))
            }
            _ => pending("μ3' or ω'"),
        },
    );
    put(
        "mu3-prime-le-mu3",
        match (mu3p, mu3) {
            (Some(a), Some(b)) => InvariantOutcome::from_bool(a <= b, format!("2μ3' = {a}, 2μ3 = {b}")),
            _ => pending("μ3 or μ3'"),
        },
    );

    put(
        "fano-range",
        match (min_line_fano_flow(g, budget).expect("bridgeless"), mu3) {
            (FanoSearch::Optimal { lines, flow }, Some(l2)) => {
                let colorable = l2 == 0;
                let all_points = flow.points_used() == 0x7f;
                let ok = matches!(lines, 1 | 4 | 5 | 6)
                    && (lines == 1) == colorable
                    && (colorable || all_points);
                InvariantOutcome::from_bool(ok, format!("{lines} lines, 3-edge-colorable: {colorable}"))
            }
            (FanoSearch::Exhausted, _) => InvariantOutcome::from_bool(false, "no Fano-flow found"),
            _ => pending("Fano lines or μ3"),
        },
    );
    out
}

/// Runs the property suite over every graph of `source`. Returns the reports
/// and the exit code (1 on any violation, 3 on budget, 2 on bad input).
pub fn run_invariants(source: &GraphSource, budget: &Budget, workers: usize) -> std::io::Result<(Vec<InvariantReport>, i32)> {
    use rayon::prelude::*;
    let records = source.load()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(std::io::Error::other)?;
    let reports: Vec<InvariantReport> = pool.install(|| {
        records
            .par_iter()
            .map(|rec| match &rec.graph {
                Ok(g) => InvariantReport {
                    index: rec.index,
                    graph6: rec.text.clone(),
                    error: None,
                    invariants: check_graph(g, budget, rec.index as u64),
                },
                Err(e) => InvariantReport {
                    index: rec.index,
                    graph6: rec.text.clone(),
                    error: Some(format!("line {}: {e}", rec.line_number)),
                    invariants: BTreeMap::new(),
                },
            })
            .collect()
    });
    let statuses = || reports.iter().flat_map(|r| r.invariants.values().map(|o| o.status));
    let code = if statuses().any(|s| s == InvariantStatus::Violated) {
        EXIT_REFUTED
    } else if statuses().any(|s| s == InvariantStatus::BudgetExceeded) {
        EXIT_BUDGET
    } else if reports.iter().any(|r| r.error.is_some()) {
        EXIT_INPUT
    } else {
        EXIT_OK
    };
    Ok((reports, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_suite_holds() {
        let g = CubicGraph::petersen();
        let out = check_graph(&g, &Budget::default(), 7);
        for (name, o) in &out {
            assert_eq!(o.status, InvariantStatus::Holds, "{name}: {:?}", o.detail);
        }
        assert!(out.contains_key("fano-range"));
    }
}
