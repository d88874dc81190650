//! List the 38 isomorphism classes of four triples on at most seven points,
//! with the small configurations each one contains.
//!
//! cargo run --example f74_classification

use lintur::configurations::classify_f74_members;

fn main() {
    let members = classify_f74_members();
    for (i, m) in members.iter().enumerate() {
        let found: Vec<String> = m.contains.iter().map(|c| c.to_string()).collect();
        println!(
            "{:>2}. {} points {:?}  {}",
            i + 1,
            m.points,
            m.canonical.edges,
            found.join(", ")
        );
    }
    println!("{} classes", members.len());
}
