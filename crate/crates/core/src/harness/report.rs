use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::cores::{
    core_properties, find_witness, make_cover_triple, minimize_core, validate_witness,
    ConjectureId, CoreObjective, CoreSearch, CoverTriple, WitnessOutcome,
};
use crate::edges::EdgeSubset;
use crate::error::{Error, Result};
use crate::factors::{odd_components_spanning, Join, PerfectMatching};
use crate::fano::{min_line_fano_flow, validate_fano_flow, FanoSearch};
use crate::graph::CubicGraph;
use crate::parity::{oddness, weak_oddness_with_budget};

/// Numeric invariants computed per graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// `μ3` reported as `l2 = 2·μ3`.
    Mu3,
    /// `μ3'` reported as `l2`.
    Mu3Prime,
    Oddness,
    WeakOddness,
    FanoLines,
    CyclicWeakCoreK,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Mu3,
        Metric::Mu3Prime,
        Metric::Oddness,
        Metric::WeakOddness,
        Metric::FanoLines,
        Metric::CyclicWeakCoreK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Mu3 => "mu3",
            Metric::Mu3Prime => "mu3-prime",
            Metric::Oddness => "oddness",
            Metric::WeakOddness => "weak-oddness",
            Metric::FanoLines => "fano-lines",
            Metric::CyclicWeakCoreK => "cyclic-weak-core-k",
        }
    }
}

/// A conjecture checker or a metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Conjecture(ConjectureId),
    Metric(Metric),
}

impl CheckKind {
    pub fn all() -> Vec<CheckKind> {
        ConjectureId::ALL
            .into_iter()
            .map(CheckKind::Conjecture)
            .chain(Metric::ALL.into_iter().map(CheckKind::Metric))
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Conjecture(id) => id.name(),
            CheckKind::Metric(m) => m.name(),
        }
    }

    /// Comma-separated names; `all` selects everything, `metrics` and
    /// `conjectures` select one family.
    pub fn parse_list(s: &str) -> Result<Vec<CheckKind>> {
        let mut out: Vec<CheckKind> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let add: Vec<CheckKind> = match part {
                "all" => CheckKind::all(),
                "metrics" => Metric::ALL.into_iter().map(CheckKind::Metric).collect(),
                "conjectures" => ConjectureId::ALL.into_iter().map(CheckKind::Conjecture).collect(),
                _ => vec![part.parse()?],
            };
            for k in add {
                if !out.contains(&k) {
                    out.push(k);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let metric = match lower.as_str() {
            "mu3" => Some(Metric::Mu3),
            "mu3-prime" | "mu3'" | "mu3prime" => Some(Metric::Mu3Prime),
            "oddness" | "omega" => Some(Metric::Oddness),
            "weak-oddness" | "omega-prime" => Some(Metric::WeakOddness),
            "fano-lines" | "fano-min-lines" => Some(Metric::FanoLines),
            "cyclic-weak-core-k" => Some(Metric::CyclicWeakCoreK),
            _ => None,
        };
        if let Some(m) = metric {
            return Ok(CheckKind::Metric(m));
        }
        lower
            .parse::<ConjectureId>()
            .map(CheckKind::Conjecture)
            .map_err(|_| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckOutcome {
    /// A witness (or, for metrics, an optimal value with its witness).
    Witness,
    /// An exhaustive search found nothing.
    Refuted,
    BudgetExceeded,
    /// The graph is outside the check's domain (for example, it has a bridge).
    PreconditionFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub outcome: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<u64>,
    /// Edge-index lists; for `fano-lines`, list `p - 1` holds the edges with
    /// value `p`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Vec<usize>>>,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// One line of NDJSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Zero-based position among the non-blank input lines.
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub checks: BTreeMap<String, CheckResult>,
    /// `ω = ω'`, when both were computed. Informational only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega_equal: Option<bool>,
}

fn lists(sets: &[&EdgeSubset]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn triple_lists(t: &CoverTriple<'_>) -> Vec<Vec<usize>> {
    t.joins().iter().map(|j| j.edges().to_vec()).collect()
}

fn precondition(e: Error) -> (CheckOutcome, Option<u64>, Option<Vec<Vec<usize>>>, Option<String>) {
    (CheckOutcome::PreconditionFailed, None, None, Some(e.to_string()))
}

/// Runs one check on one graph. Library errors become
/// [`CheckOutcome::PreconditionFailed`].
pub fn run_check(g: &CubicGraph, kind: CheckKind, budget: &Budget) -> CheckResult {
    let start = Instant::now();
    let (outcome, value, witness, detail) = match run_inner(g, kind, budget) {
        Ok(r) => r,
        Err(e) => precondition(e),
    };
    CheckResult {
        outcome,
        value,
        witness,
        millis: start.elapsed().as_millis() as u64,
        detail,
    }
}

type Inner = (CheckOutcome, Option<u64>, Option<Vec<Vec<usize>>>, Option<String>);

fn core_result(r: CoreSearch<'_>) -> Inner {
    match r {
        CoreSearch::Optimal { value, witness } => (
            CheckOutcome::Witness,
            Some(value as u64),
            Some(triple_lists(&witness)),
            None,
        ),
        CoreSearch::Exhausted => (CheckOutcome::Refuted, None, None, None),
        CoreSearch::BudgetExceeded { best } => (
            CheckOutcome::BudgetExceeded,
            None,
            None,
            best.map(|(v, _)| format!("best found: {v}")),
        ),
    }
}

fn run_inner(g: &CubicGraph, kind: CheckKind, budget: &Budget) -> Result<Inner> {
    Ok(match kind {
        CheckKind::Conjecture(id) => match find_witness(g, id, budget)? {
            WitnessOutcome::Witness(w) => (CheckOutcome::Witness, None, Some(w.edge_lists()), None),
            WitnessOutcome::Refuted => (CheckOutcome::Refuted, None, None, None),
            WitnessOutcome::BudgetExceeded => (CheckOutcome::BudgetExceeded, None, None, None),
        },
        CheckKind::Metric(Metric::Mu3) => core_result(minimize_core(g, 0, CoreObjective::MinL, budget)?),
        CheckKind::Metric(Metric::Mu3Prime) => {
            core_result(minimize_core(g, 3, CoreObjective::MinL, budget)?)
        }
        CheckKind::Metric(Metric::CyclicWeakCoreK) => {
            core_result(minimize_core(g, 3, CoreObjective::CyclicFeasibility, budget)?)
        }
        CheckKind::Metric(Metric::Oddness) => {
            let (w, m) = oddness(g)?;
            (CheckOutcome::Witness, Some(w as u64), Some(lists(&[m.edges()])), None)
        }
        CheckKind::Metric(Metric::WeakOddness) => match weak_oddness_with_budget(g, budget)? {
            Some((w, j)) => (CheckOutcome::Witness, Some(w as u64), Some(lists(&[j.edges()])), None),
            None => (CheckOutcome::BudgetExceeded, None, None, None),
        },
        CheckKind::Metric(Metric::FanoLines) => match min_line_fano_flow(g, budget)? {
            FanoSearch::Optimal { lines, flow } => {
                let mut by_point = vec![Vec::new(); 7];
                for (e, &v) in flow.values().iter().enumerate() {
                    by_point[v as usize - 1].push(e);
                }
                (CheckOutcome::Witness, Some(lines as u64), Some(by_point), None)
            }
            FanoSearch::Exhausted => (CheckOutcome::Refuted, None, None, None),
            FanoSearch::BudgetExceeded { best } => (
                CheckOutcome::BudgetExceeded,
                None,
                None,
                best.map(|f| format!("best found: {}", f.line_count())),
            ),
        },
    })
}

fn subsets(g: &CubicGraph, lists: &[Vec<usize>]) -> Result<Vec<EdgeSubset>> {
    lists
        .iter()
        .map(|l| g.subset_from_indices(l.iter().copied()))
        .collect()
}

fn triple_from<'g>(g: &'g CubicGraph, sets: Vec<EdgeSubset>, matchings: bool) -> Result<CoverTriple<'g>> {
    let mut joins = Vec::with_capacity(3);
    for s in sets {
        joins.push(if matchings {
            PerfectMatching::new(g, s)?.into_join()
        } else {
            Join::new(g, s)?
        });
    }
    let [a, b, c]: [Join<'g>; 3] = joins.try_into().map_err(|_| Error::MixedGraphs)?;
    make_cover_triple(a, b, c)
}

/// Re-checks a serialized witness against its predicate and value. Results
/// without a witness validate trivially.
pub fn validate_check(g: &CubicGraph, kind: CheckKind, r: &CheckResult) -> bool {
    let Some(w) = &r.witness else {
        return r.outcome != CheckOutcome::Witness;
    };
    validate_inner(g, kind, r.value, w).unwrap_or(false)
}

fn validate_inner(g: &CubicGraph, kind: CheckKind, value: Option<u64>, w: &[Vec<usize>]) -> Result<bool> {
    let value = value.map(|v| v as usize);
    let Some(v) = value else {
        return match kind {
            CheckKind::Conjecture(id) => validate_witness(g, id, &subsets(g, w)?),
            CheckKind::Metric(_) => Ok(false),
        };
    };
    let sets = subsets(g, w)?;
    Ok(match kind {
        CheckKind::Conjecture(_) => false,
        CheckKind::Metric(Metric::Mu3) => sets.len() == 3 && triple_from(g, sets, true)?.l2() == v,
        CheckKind::Metric(Metric::Mu3Prime) => sets.len() == 3 && triple_from(g, sets, false)?.l2() == v,
        CheckKind::Metric(Metric::CyclicWeakCoreK) => {
            sets.len() == 3 && {
                let t = triple_from(g, sets, false)?;
                t.k() <= v && core_properties(&t).is_cyclic
            }
        }
        CheckKind::Metric(Metric::Oddness) => {
            let [m] = <[EdgeSubset; 1]>::try_from(sets).map_err(|_| Error::MixedGraphs)?;
            let m = PerfectMatching::new(g, m)?;
            odd_components_spanning(g, &m.two_factor()) == v
        }
        CheckKind::Metric(Metric::WeakOddness) => {
            let [j] = <[EdgeSubset; 1]>::try_from(sets).map_err(|_| Error::MixedGraphs)?;
            let j = Join::new(g, j)?;
            odd_components_spanning(g, &j.complement()) == v
        }
        CheckKind::Metric(Metric::FanoLines) => {
            let mut values = vec![0u8; g.edge_count()];
            for (p, s) in sets.iter().enumerate().take(7) {
                for e in s.iter() {
                    if values[e] != 0 {
                        return Ok(false);
                    }
                    values[e] = p as u8 + 1;
                }
            }
            sets.len() == 7 && validate_fano_flow(g, &values)?.line_count() == v
        }
    })
}
