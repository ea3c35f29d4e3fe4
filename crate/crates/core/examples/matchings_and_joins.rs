//! Perfect matchings, joins and the cycle space of the Petersen graph.

use cubic_cores::factors::{enumerate_joins, enumerate_perfect_matchings, is_simple_join, CycleSpace};
use cubic_cores::CubicGraph;

fn main() {
    let g = CubicGraph::petersen();

    let matchings: Vec<_> = enumerate_perfect_matchings(&g).collect();
    println!("{} perfect matchings", matchings.len());
    for m in &matchings {
        println!("  {:?}", m.edges());
    }
    // every two of them share exactly one edge
    for (i, a) in matchings.iter().enumerate() {
        for b in &matchings[i + 1..] {
            assert_eq!(a.edges().intersection(b.edges()).count(), 1);
        }
    }

    let cs = CycleSpace::new(&g);
    println!("cycle space of dimension {}; basis:", cs.dimension());
    for c in cs.basis() {
        println!("  {c:?}");
    }

    let mut by_j = std::collections::BTreeMap::new();
    let mut simple = 0;
    for j in enumerate_joins(&g) {
        *by_j.entry(j.n_j()).or_insert(0) += 1;
        simple += usize::from(is_simple_join(&j));
    }
    println!("{} joins, {simple} simple; by number of J-vertices: {by_j:?}", 1 << cs.dimension());
}
