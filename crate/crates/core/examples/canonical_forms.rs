//! Canonical forms are unchanged by relabeling and tell a 3-edge path from
//! a 3-edge star.
//!
//! cargo run --example canonical_forms

use lintur::canon::{are_isomorphic, canonical_form};
use lintur::hypergraph::Hypergraph;

fn main() {
    let path = Hypergraph::new(7, 3, [[1, 2, 3], [3, 4, 5], [5, 6, 7]]).unwrap();
    let star = Hypergraph::new(7, 3, [[1, 2, 3], [1, 4, 5], [1, 6, 7]]).unwrap();
    let moved = path.relabel(&[7, 5, 3, 1, 2, 4, 6]).unwrap();
    println!("path       {:?}", canonical_form(&path).unwrap().edges);
    println!("relabeled  {:?}", canonical_form(&moved).unwrap().edges);
    println!("star       {:?}", canonical_form(&star).unwrap().edges);
    println!("path ~ relabeled: {}", are_isomorphic(&path, &moved).unwrap());
    println!("path ~ star: {}", are_isomorphic(&path, &star).unwrap());
}
