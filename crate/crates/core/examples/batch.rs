//! Run checks over a graph6 file and summarize the outcomes.
//!
//! ```text
//! $ cargo run --release --example batch -- crates/core/data/snarks.g6 fan-raspaud,mu3-prime
//! ```

use std::collections::BTreeMap;

use cubic_cores::harness::{run_batch, BatchConfig, CheckKind, GraphSource};
use cubic_cores::Budget;

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/class1.g6").into());
    let checks = args.next().unwrap_or_else(|| "conjectures,oddness,weak-oddness".into());
    let config = BatchConfig {
        source: GraphSource::File(path.into()),
        checks: CheckKind::parse_list(&checks).expect("known check names"),
        budget: Budget::default(),
        workers: 0,
        output: None,
    };
    let out = run_batch(&config).expect("readable input");
    let mut tally: BTreeMap<(String, String), usize> = BTreeMap::new();
    for r in &out.reports {
        for (name, c) in &r.checks {
            let outcome = serde_json::to_value(c.outcome).unwrap().as_str().unwrap().to_string();
            *tally.entry((name.clone(), outcome)).or_default() += 1;
        }
    }
    println!("{} graphs", out.reports.len());
    for ((name, outcome), n) in tally {
        println!("  {name:<20} {outcome:<20} {n}");
    }
    let unequal = out.reports.iter().filter(|r| r.omega_equal == Some(false)).count();
    println!("graphs with ω ≠ ω': {unequal}");
    println!("exit code {}", out.exit_code);
}
