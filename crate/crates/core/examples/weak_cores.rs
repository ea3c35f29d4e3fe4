//! Cover triples, μ3, μ3' and the cyclic weak core of a graph.
//!
//! ```text
//! $ cargo run --release --example weak_cores -- petersen
//! ```

use cubic_cores::cores::{
    core_properties, make_cover_triple, min_cyclic_weak_core_k, mu3, mu3_prime, weak_core, CoverTriple,
};
use cubic_cores::factors::{enumerate_perfect_matchings, Join};
use cubic_cores::{build_named, parse_graph6, Budget};

fn show(label: &str, t: &CoverTriple<'_>) {
    let c = t.type_counts();
    println!(
        "{label}: k = {}, l2 = {}, |E0| = {}, |E2| = {}, |E3| = {}",
        t.k(),
        t.l2(),
        t.e(0).count(),
        t.e(2).count(),
        t.e(3).count()
    );
    println!(
        "  vertex types 333:{} 322:{} 311:{} 221:{} 111:{} 210:{} 300:{}",
        c.t333, c.t322, c.t311, c.t221, c.t111, c.t210, c.t300
    );
    println!("  core {:?}, {:?}", weak_core(t).edges, core_properties(t));
}

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "petersen".into());
    let g = build_named(&arg).or_else(|_| parse_graph6(arg.as_bytes())).expect("graph name or graph6 line");
    let budget = Budget::default();

    let ms: Vec<Join<'_>> = enumerate_perfect_matchings(&g).map(Join::from).collect();
    if ms.len() >= 3 {
        let t = make_cover_triple(ms[0].clone(), ms[1].clone(), ms[2].clone()).unwrap();
        show("first three matchings", &t);
    }

    for (name, r) in [
        ("μ3", mu3(&g, &budget).unwrap()),
        ("μ3'", mu3_prime(&g, &budget).unwrap()),
    ] {
        match r.witness() {
            Some(t) => show(&format!("{name} = {}/2", r.value().unwrap()), t),
            None => println!("{name}: {r:?}"),
        }
    }
    let r = min_cyclic_weak_core_k(&g, &budget).unwrap();
    match r.witness() {
        Some(t) => show(&format!("cyclic weak core with k = {}", r.value().unwrap()), t),
        None => println!("no cyclic weak core found: {r:?}"),
    }
}
