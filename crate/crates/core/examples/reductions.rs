//! Turn a triple system into a linear one, and pick a large tripartite
//! subsystem by conditional expectations.
//!
//! cargo run --example reductions

use lintur::hypergraph::Hypergraph;
use lintur::reductions::{linearize, tripartite_subsystem};

fn main() {
    let h = Hypergraph::new(9, 3, [[1, 2, 3], [1, 2, 4], [5, 6, 7], [5, 8, 9], [3, 6, 9]]).unwrap();
    let r = linearize(&h).unwrap();
    println!("linearize: removed {:?} via W copies {:?}", r.removed_edges, r.w_copies);
    println!("  output {:?}, linear: {}", r.output.edges(), r.output.is_linear());

    let fano = Hypergraph::new(
        7,
        3,
        [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ],
    )
    .unwrap();
    let r = tripartite_subsystem(&fano, false).unwrap();
    println!("tripartite on the Fano plane: parts {:?}", r.partition.unwrap());
    println!(
        "  kept {} of {} triples (guaranteed at least {}): {:?}",
        r.output.edge_count(),
        r.input_edges,
        r.threshold,
        r.output.edges()
    );
}
