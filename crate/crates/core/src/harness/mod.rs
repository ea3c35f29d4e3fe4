//! Batch orchestration: graph sources, per-graph checks, NDJSON reports and
//! exit codes.

mod batch;
mod counterexample;
mod invariants;
mod report;

pub use batch::{exit_code, run_batch, BatchConfig, BatchOutcome, GraphSource};
pub use counterexample::{counterexample_transcript, expanded_petersen_graph6};
pub use invariants::{run_invariants, InvariantOutcome, InvariantReport, InvariantStatus};
pub use report::{
    run_check, validate_check, CheckKind, CheckOutcome, CheckReport, CheckResult, Metric,
};

use crate::error::Result;
use crate::gadgets::k4_expand;
use crate::graph::{build_named, CubicGraph};

/// Exit status: every check witnessed or computed.
pub const EXIT_OK: i32 = 0;
/// Exit status: an exhaustive search found no witness.
pub const EXIT_REFUTED: i32 = 1;
/// Exit status: I/O failure, or some input line failed to parse or violated
/// a precondition.
pub const EXIT_INPUT: i32 = 2;
/// Exit status: some check ran out of budget and nothing was refuted.
pub const EXIT_BUDGET: i32 = 3;

/// `k4`, `k33`, `petersen`, or `petersen-k4` (alias `counterexample`) for the
/// K4-expansion of the Petersen graph.
pub fn builtin_graph(name: &str) -> Result<CubicGraph> {
    match name.to_ascii_lowercase().as_str() {
        "petersen-k4" | "counterexample" => Ok(k4_expand(&CubicGraph::petersen()).expanded),
        _ => build_named(name),
    }
}
