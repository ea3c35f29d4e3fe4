//! Oddness, weak oddness and the odd-component bound of cover triples.

use cubic_cores::cores::{make_cover_triple, mu3};
use cubic_cores::factors::{enumerate_perfect_matchings, Join};
use cubic_cores::parity::{check_theorem4, parity_report};
use cubic_cores::{build_named, parse_graph6, Budget};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "petersen".into());
    let g = build_named(&arg).or_else(|_| parse_graph6(arg.as_bytes())).expect("graph name or graph6 line");

    let r = parity_report(&g, &Budget::default())
        .expect("bridgeless input")
        .expect("weak oddness within budget");
    println!("ω = {} via matching {:?}", r.oddness, r.matching.edges());
    println!("ω' = {} via join {:?}", r.weak_oddness, r.join.edges());
    println!("ω = ω': {}", r.omega_equal());

    if let Some(l2) = mu3(&g, &Budget::default()).unwrap().value() {
        println!("3ω = {} <= 2μ3 = {l2}", 3 * r.oddness);
    }

    let ms: Vec<Join<'_>> = enumerate_perfect_matchings(&g).map(Join::from).collect();
    for (i, a) in ms.iter().enumerate().take(3) {
        for b in &ms[i..ms.len().min(i + 2)] {
            let t = make_cover_triple(a.clone(), b.clone(), ms[ms.len() - 1].clone()).unwrap();
            println!("{:?}", check_theorem4(&t));
        }
    }
}
