//! Run every conjecture checker on a graph and re-validate the witnesses.
//!
//! ```text
//! $ cargo run --release --example conjectures -- petersen
//! ```

use cubic_cores::cores::{find_witness, validate_witness, ConjectureId, WitnessOutcome};
use cubic_cores::{build_named, parse_graph6, Budget};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "petersen".into());
    let g = build_named(&arg).or_else(|_| parse_graph6(arg.as_bytes())).expect("graph name or graph6 line");
    for id in ConjectureId::ALL {
        let out = find_witness(&g, id, &Budget::default()).expect("bridgeless input");
        match out {
            WitnessOutcome::Witness(w) => {
                let ok = validate_witness(&g, id, &w.sets).unwrap();
                println!("{id:<20} witness {:?} (valid: {ok})", w.edge_lists());
            }
            other => println!("{id:<20} {other:?}"),
        }
    }
}
