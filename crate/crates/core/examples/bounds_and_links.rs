//! Upper bounds on fan-free systems, the degree-based bounds at a vertex, and
//! the link graph seen from a point far from a maximum-degree vertex.
//!
//! cargo run --example bounds_and_links

use lintur::bounds::{aes_degree_check, fan_upper_bound, link_graph, proof_bounds, verify_extremal_structure};
use lintur::constructions::{extend_colored_graph, transversal_design, wagner_graph};

fn main() {
    for n in 5..=14 {
        let b = fan_upper_bound(n, 3);
        println!("n={n:<2} bound={:<3} {:?} tight={}", b.value, b.source, b.tight);
    }

    let td = transversal_design(4, 3).unwrap();
    let r = proof_bounds(&td, 1).unwrap();
    println!(
        "TD(4,3) at vertex 1: degree {}, edges {}, b1 {}, b2 {}",
        r.delta, r.edges, r.bound_b1, r.bound_b2
    );
    let groups = verify_extremal_structure(&td).unwrap();
    println!("recovered groups: {:?}", groups.groups);

    let h = extend_colored_graph(&wagner_graph()).unwrap();
    let link = link_graph(&h, 9).unwrap();
    println!("link graph at 9: W={:?}", link.w);
    for (color, m) in link.colors.iter().zip(&link.graph.matchings) {
        println!("  color {color}: {m:?}");
    }
    let aes = aes_degree_check(&link.graph.graph());
    println!(
        "link graph: min degree {} on {} vertices, triangle-free {}, bipartite {}",
        aes.min_degree, aes.vertices, aes.triangle_free, aes.bipartite
    );
}
