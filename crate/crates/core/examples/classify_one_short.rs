//! Compare the extremal fan-free triple systems on 3m + 2 points with the
//! known reference families (truncated designs and colored-graph extensions).
//!
//! cargo run --release --example classify_one_short -- 3

use lintur::search::{one_short_references, verify_claim, Claim, SearchOptions};

fn main() {
    let m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let refs = one_short_references(m);
    println!(
        "m={m}: {} truncated-design classes and {} extension classes on {} points",
        refs.truncated.len(),
        refs.extensions.len(),
        3 * m + 2
    );
    let opts = SearchOptions {
        i_have_time: true,
        ..Default::default()
    };
    match verify_claim(Claim::OneShortClassification { m }, &opts) {
        Ok(v) => {
            println!(
                "every one of the {} extremal classes ({} triples) is a reference class",
                v.checked, v.found
            );
            for note in v.notes {
                println!("  {note}");
            }
        }
        Err(e) => {
            println!("mismatch: {e}");
            std::process::exit(1);
        }
    }
}
