//! Build each extremal construction and report its size and fan status.
//!
//! cargo run --example constructions

use lintur::configurations::contains_fan;
use lintur::constructions::{
    ag23, binary_factorization, c52_graph, design_from_factorization, extend_colored_graph, standard_factorization,
    transversal_design, truncate, wagner_graph,
};
use lintur::hypergraph::LinearHypergraph;

fn show(name: &str, h: &LinearHypergraph) {
    let fan = contains_fan(h, h.k()).unwrap().is_some();
    println!(
        "{name:<24} n={:<3} k={} edges={:<4} fan-free={}",
        h.n(),
        h.k(),
        h.edge_count(),
        !fan
    );
}

fn main() {
    for (m, k) in [(3, 3), (4, 3), (5, 4), (7, 5)] {
        let td = transversal_design(m, k).unwrap();
        show(&format!("TD({m},{k})"), &td);
        show(&format!("TD({m},{k}) minus a point"), &truncate(&td, 1).unwrap());
    }
    for s in [5, 7] {
        show(
            &format!("cyclic factorization s={s}"),
            &design_from_factorization(&standard_factorization(s).unwrap()),
        );
    }
    for t in [2, 3] {
        show(
            &format!("binary factorization t={t}"),
            &design_from_factorization(&binary_factorization(t).unwrap()),
        );
    }
    show("Wagner extension", &extend_colored_graph(&wagner_graph()).unwrap());
    show("C_{5,2} extension", &extend_colored_graph(&c52_graph()).unwrap());
    show("AG(2,3)", &ag23());
}
