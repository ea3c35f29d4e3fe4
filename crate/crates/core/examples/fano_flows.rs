//! Minimum-line Fano-flows, and the flow encoded by a cyclic cover triple.

use cubic_cores::cores::min_cyclic_weak_core_k;
use cubic_cores::fano::{min_line_fano_flow, triple_to_flow, FanoSearch};
use cubic_cores::{build_named, parse_graph6, Budget, CubicGraph};

fn run(label: &str, g: &CubicGraph) {
    match min_line_fano_flow(g, &Budget::default()).expect("bridgeless input") {
        FanoSearch::Optimal { lines, flow } => {
            let names: Vec<String> = flow.lines().iter().map(|l| l.to_string()).collect();
            println!("{label}: {lines} lines {}", names.join(" "));
            println!("  values {:?}", flow.values());
        }
        other => println!("{label}: {other:?}"),
    }
    if let Some(t) = min_cyclic_weak_core_k(g, &Budget::default()).unwrap().witness() {
        let f = triple_to_flow(t).unwrap();
        println!("  from a cyclic weak core: {} lines", f.line_count());
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        run("K4", &CubicGraph::complete_k4());
        run("K3,3", &CubicGraph::k33());
        run("Petersen", &CubicGraph::petersen());
    }
    for a in args {
        let g = build_named(&a).or_else(|_| parse_graph6(a.as_bytes())).expect("graph name or graph6 line");
        run(&a, &g);
    }
}
