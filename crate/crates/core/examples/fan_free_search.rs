//! Exact fan-free maxima for small orders, with every extremal system.
//!
//! cargo run --release --example fan_free_search -- 9 3

use lintur::configurations::ConfigName;
use lintur::search::{max_free, SearchOptions};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (9, 3),
    };
    let opts = SearchOptions {
        i_have_time: true,
        ..Default::default()
    };
    let report = max_free(n, k, &[ConfigName::Fan(k)], &opts).expect("search runs");
    println!(
        "n={n} k={k}: {} edges, {} extremal classes, {} nodes, {} ms",
        report.max_edges,
        report.witnesses.len(),
        report.nodes_explored,
        report.wall_time_ms
    );
    if let Some(b) = report.fan_bound {
        println!("upper bound {} ({:?}, tight: {})", b.value, b.source, b.tight);
    }
    for w in &report.witnesses {
        let edges: Vec<String> = w
            .edges
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        println!("  {}", edges.join(" "));
    }
}
