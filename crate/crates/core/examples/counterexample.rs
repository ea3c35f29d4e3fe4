//! Build the K4-expansion of the Petersen graph and check that the
//! complement of the union of any two perfect matchings contains a circuit.
//!
//! ```text
//! $ cargo run --release --example counterexample -- full
//! ```

use cubic_cores::factors::enumerate_perfect_matchings;
use cubic_cores::gadgets::{k4_expand, project_con, verify_counterexample, VerifyMode};
use cubic_cores::harness::{counterexample_transcript, expanded_petersen_graph6};
use cubic_cores::{Budget, CubicGraph};

fn main() {
    let mode: VerifyMode = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "structured".into())
        .parse()
        .expect("full or structured");

    let x = k4_expand(&CubicGraph::petersen());
    println!("gadget of base edge 0: vertices {:?}, connectors {:?}", x.gadget_vertices[0], x.connector_pairs[0]);
    let m = enumerate_perfect_matchings(&x.expanded).next().unwrap();
    let base = project_con(&x, m.as_join()).unwrap();
    println!("first matching projects to {:?}", base.edges());

    let report = verify_counterexample(mode, &Budget::unlimited()).expect("unlimited budget");
    print!("{}", counterexample_transcript(&report));
    println!("graph6: {}", expanded_petersen_graph6());
}
