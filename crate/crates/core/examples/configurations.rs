//! Look for each named configuration in a few small systems and print where
//! it embeds.
//!
//! cargo run --example configurations

use lintur::configurations::{configuration, find_embedding, find_f74_violation, ConfigName};
use lintur::constructions::{ag23, transversal_design};
use lintur::hypergraph::Hypergraph;

fn main() {
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
    let hosts = [
        ("Fano plane", fano),
        ("TD(3,3)", transversal_design(3, 3).unwrap().into_inner()),
        ("AG(2,3)", ag23().into_inner()),
    ];
    let names = [ConfigName::Fan(3), ConfigName::Pasch, ConfigName::C14, ConfigName::W];
    for (label, h) in &hosts {
        println!("{label}:");
        for name in names {
            let c = configuration(name).unwrap();
            match find_embedding(h, &c).unwrap() {
                Some(e) => println!("  {name}: at {:?}", e.edge_map),
                None => println!("  {name}: absent"),
            }
        }
        match find_f74_violation(h).unwrap() {
            Some(four) => println!("  four triples on at most seven points: {four:?}"),
            None => println!("  no four triples on at most seven points"),
        }
    }
}
