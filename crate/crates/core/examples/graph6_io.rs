//! Parse graph6 lines, inspect the graph, and write it back.
//!
//! ```text
//! $ cargo run --example graph6_io -- 'IheA@GUAo'
//! ```

use cubic_cores::graph6::write_graph6;
use cubic_cores::{parse_graph6, CubicGraph};

fn describe(label: &str, g: &CubicGraph) {
    println!(
        "{label}: n = {}, m = {}, cycle rank = {}, bridgeless = {}",
        g.vertex_count(),
        g.edge_count(),
        g.cycle_rank(),
        g.is_bridgeless()
    );
    println!("  edges: {:?}", g.edges());
    println!("  graph6: {}", String::from_utf8_lossy(&write_graph6(g)));
}

fn main() {
    let lines: Vec<String> = std::env::args().skip(1).collect();
    if lines.is_empty() {
        describe("K4", &CubicGraph::complete_k4());
        describe("Petersen", &CubicGraph::petersen());
        // a bad byte and a non-cubic graph, both reported with their position
        for bad in ["C\x20", "C}"] {
            println!("{bad:?}: {}", parse_graph6(bad.as_bytes()).unwrap_err());
        }
        return;
    }
    for line in lines {
        match parse_graph6(line.as_bytes()) {
            Ok(g) => {
                describe(&line, &g);
                if let Some(e) = g.find_bridge() {
                    println!("  bridge: edge {e} = {:?}", g.edge(e));
                }
            }
            Err(e) => println!("{line}: {e}"),
        }
    }
}
