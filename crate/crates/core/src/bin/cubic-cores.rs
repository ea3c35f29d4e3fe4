use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use cubic_cores::gadgets::{verify_counterexample, VerifyMode};
use cubic_cores::harness::{
    counterexample_transcript, expanded_petersen_graph6, run_batch, run_invariants, BatchConfig,
    CheckKind, GraphSource, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_REFUTED,
};
use cubic_cores::Budget;

#[derive(Parser)]
#[command(name = "cubic-cores", version, about = "Joins, weak cores, oddness and Fano-flows of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run conjecture checkers and metrics; one JSON line per graph.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated check names, or `all`, `conjectures`, `metrics`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run the property suites over every input graph.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Verify the K4-expansion of the Petersen graph.
    Counterexample {
        #[arg(long, default_value = "structured")]
        mode: VerifyMode,
        /// Write the 70-vertex graph here as graph6.
        #[arg(long)]
        emit_g6: Option<PathBuf>,
        /// Print the report as JSON instead of the transcript.
        #[arg(long)]
        json: bool,
    },
    /// Compute metrics (mu3, mu3-prime, oddness, weak-oddness, fano-lines,
    /// cyclic-weak-core-k).
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "metrics")]
        metrics: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// graph6 file, one graph per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in graph: k4, k33, petersen, petersen-k4.
    #[arg(long)]
    graph: Option<String>,
}

impl InputArgs {
    fn source(&self) -> GraphSource {
        match (&self.input, &self.graph) {
            (Some(p), _) => GraphSource::File(p.clone()),
            (None, Some(name)) => GraphSource::Builtin(name.clone()),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Search-node cap per check; 0 means unlimited.
    #[arg(long, default_value_t = cubic_cores::budget::DEFAULT_NODE_LIMIT)]
    budget: u64,
    /// Wall-clock cap per check, in seconds.
    #[arg(long)]
    time_limit: Option<u64>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// NDJSON output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl RunArgs {
    fn budget(&self) -> Budget {
        let b = if self.budget == 0 { Budget::unlimited() } else { Budget::nodes(self.budget) };
        match self.time_limit {
            Some(s) => b.with_time(Duration::from_secs(s)),
            None => b,
        }
    }
}

fn emit<T: serde::Serialize>(items: &[T], output: &Option<PathBuf>) -> anyhow::Result<()> {
    let mut buf = Vec::new();
    for item in items {
        serde_json::to_writer(&mut buf, item)?;
        buf.push(b'\n');
    }
    match output {
        Some(p) => std::fs::write(p, buf).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

fn batch(input: &InputArgs, checks: &str, run: &RunArgs) -> anyhow::Result<i32> {
    let checks = CheckKind::parse_list(checks)?;
    if checks.is_empty() {
        bail!("no checks selected");
    }
    let config = BatchConfig {
        source: input.source(),
        checks,
        budget: run.budget(),
        workers: run.workers,
        output: None,
    };
    let out = run_batch(&config).context("reading input")?;
    emit(&out.reports, &run.output)?;
    Ok(out.exit_code)
}

fn main_inner(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Check { input, checks, run } => batch(&input, &checks, &run),
        Command::Compute { input, metrics, run } => batch(&input, &metrics, &run),
        Command::Invariants { input, run } => {
            let (reports, code) = run_invariants(&input.source(), &run.budget(), run.workers)
                .context("reading input")?;
            emit(&reports, &run.output)?;
            Ok(code)
        }
        Command::Counterexample { mode, emit_g6, json } => {
            if let Some(path) = &emit_g6 {
                std::fs::write(path, expanded_petersen_graph6() + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let Ok(report) = verify_counterexample(mode, &Budget::unlimited()) else {
                return Ok(EXIT_BUDGET);
            };
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print!("{}", counterexample_transcript(&report));
            }
            // success means the refutation was reproduced
            Ok(if report.refuted() { EXIT_OK } else { EXIT_REFUTED })
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
