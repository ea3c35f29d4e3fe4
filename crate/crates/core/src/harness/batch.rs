use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::graph6::{read_graph6, write_graph6, Graph6Record};

use super::report::{run_check, CheckKind, CheckOutcome, CheckReport, Metric};
use super::{builtin_graph, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_REFUTED};

/// Where the graphs of a batch come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    /// A built-in graph, see [`builtin_graph`].
    Builtin(String),
}

impl GraphSource {
    /// Loads the records. A missing file is an I/O error; a bad built-in
    /// name becomes a single failed record.
    pub fn load(&self) -> io::Result<Vec<Graph6Record>> {
        match self {
            GraphSource::File(p) => read_graph6(BufReader::new(File::open(p)?)),
            GraphSource::Builtin(name) => {
                let graph = builtin_graph(name);
                let text = match &graph {
                    Ok(g) => String::from_utf8(write_graph6(g)).expect("graph6 is ASCII"),
                    Err(_) => name.clone(),
                };
                Ok(vec![Graph6Record {
                    index: 0,
                    line_number: 1,
                    text,
                    graph,
                }])
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct BatchConfig {
    pub source: GraphSource,
    pub checks: Vec<CheckKind>,
    pub budget: Budget,
    /// Worker threads; `0` uses the rayon default.
    pub workers: usize,
    /// NDJSON destination; `None` writes nothing.
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub reports: Vec<CheckReport>,
    pub exit_code: i32,
}

/// Refutation beats budget exhaustion, which beats input problems.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    let outcomes = || reports.iter().flat_map(|r| r.checks.values().map(|c| c.outcome));
    if outcomes().any(|o| o == CheckOutcome::Refuted) {
        EXIT_REFUTED
    } else if outcomes().any(|o| o == CheckOutcome::BudgetExceeded) {
        EXIT_BUDGET
    } else if reports.iter().any(|r| r.error.is_some())
        || outcomes().any(|o| o == CheckOutcome::PreconditionFailed)
    {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}

fn check_one(rec: &Graph6Record, checks: &[CheckKind], budget: &Budget) -> CheckReport {
    let mut report = CheckReport {
        index: rec.index,
        graph6: rec.text.clone(),
        error: None,
        checks: BTreeMap::new(),
        omega_equal: None,
    };
    let g = match &rec.graph {
        Ok(g) => g,
        Err(e) => {
            report.error = Some(format!("line {}: {e}", rec.line_number));
            return report;
        }
    };
    for &k in checks {
        report.checks.insert(k.name().to_string(), run_check(g, k, budget));
    }
    let value = |m: Metric| {
        report
            .checks
            .get(m.name())
            .filter(|c| c.outcome == CheckOutcome::Witness)
            .and_then(|c| c.value)
    };
    if let (Some(w), Some(wp)) = (value(Metric::Oddness), value(Metric::WeakOddness)) {
        report.omega_equal = Some(w == wp);
    }
    report
}

/// Runs every selected check on every input graph. Reports come back in
/// input order for any worker count and are written as NDJSON when an
/// output path is set.
pub fn run_batch(config: &BatchConfig) -> io::Result<BatchOutcome> {
    if config.checks.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "no checks selected"));
    }
    let records = config.source.load()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(io::Error::other)?;
    let reports: Vec<CheckReport> = pool.install(|| {
        records
            .par_iter()
            .map(|rec| check_one(rec, &config.checks, &config.budget))
            .collect()
    });
    if let Some(path) = &config.output {
        let mut w = BufWriter::new(File::create(path)?);
        write_ndjson(&mut w, &reports)?;
        w.flush()?;
    }
    Ok(BatchOutcome {
        exit_code: exit_code(&reports),
        reports,
    })
}

pub(crate) fn write_ndjson<W: Write, T: serde::Serialize>(w: &mut W, items: &[T]) -> io::Result<()> {
    for item in items {
        serde_json::to_writer(&mut *w, item)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}
