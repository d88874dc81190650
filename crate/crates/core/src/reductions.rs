//! Passing between general triple systems without small dense
//! configurations and linear or 3-partite ones.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::ratio_string;
use crate::configurations::{contains, find_embedding, find_f74_violation, ConfigName, Configuration};
use crate::hypergraph::{Edge, Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("expected a triple system, got uniformity {0}")]
    NotTriples(usize),
    #[error("four triples {0:?} span at most seven points")]
    NotF74Free([Edge; 4]),
    #[error("input contains {0}, so the premise does not hold")]
    PremiseViolated(ConfigName),
    #[error("3-partite output contains {0}")]
    OutputContains(ConfigName),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionMode {
    Linearize,
    Tripartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub mode: ReductionMode,
    pub n: usize,
    pub input_edges: usize,
    /// Every removed triple, in removal order.
    pub removed_edges: Vec<Edge>,
    /// Pairs of triples sharing two points that were removed together.
    pub w_copies: Vec<[Edge; 2]>,
    /// Triples removed one at a time after the packing left a non-linear system.
    pub fallback_removals: usize,
    /// Vertex 3-partition used by the tripartite mode.
    pub partition: Option<[Vec<Vertex>; 3]>,
    pub output: Hypergraph,
    /// Most triples linearize may remove (`n/2`), or least the tripartite
    /// mode must keep (`2|E|/9`).
    #[serde(serialize_with = "ratio_string")]
    pub threshold: Ratio<i64>,
    pub guarantee_met: bool,
}

fn shared(a: &Edge, b: &Edge) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// Remove a maximal family of pairwise vertex-disjoint W-copies (two triples
/// sharing two points), chosen greedily in edge order, and then one triple of
/// any W still present until the system is linear.
pub fn linearize(h: &Hypergraph) -> Result<ReductionReport, ReductionError> {
    if h.k() != 3 {
        return Err(ReductionError::NotTriples(h.k()));
    }
    if let Some(w) = find_f74_violation(h).expect("uniformity checked") {
        return Err(ReductionError::NotF74Free(w));
    }
    let edges = h.edges();
    let mut removed = vec![false; edges.len()];
    let mut used = vec![false; h.n() + 1];
    let mut w_copies = Vec::new();
    let mut removed_edges = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if removed[i] || removed[j] || shared(&edges[i], &edges[j]) < 2 {
                continue;
            }
            if edges[i].iter().chain(&edges[j]).any(|&v| used[v as usize]) {
                continue;
            }
            for &v in edges[i].iter().chain(&edges[j]) {
                used[v as usize] = true;
            }
            removed[i] = true;
            removed[j] = true;
            removed_edges.push(edges[i].clone());
            removed_edges.push(edges[j].clone());
            w_copies.push([edges[i].clone(), edges[j].clone()]);
        }
    }
    let mut fallback_removals = 0;
    let mut output = h.filter_edges(|i, _| !removed[i]);
    while let Some((_, second)) = output.linearity_violation() {
        fallback_removals += 1;
        output = output.filter_edges(|_, e| *e != second);
        removed_edges.push(second);
    }
    let threshold = Ratio::new(h.n() as i64, 2);
    Ok(ReductionReport {
        mode: ReductionMode::Linearize,
        n: h.n(),
        input_edges: edges.len(),
        guarantee_met: Ratio::from_integer(removed_edges.len() as i64) <= threshold,
        removed_edges,
        w_copies,
        fallback_removals,
        partition: None,
        output,
        threshold,
    })
}

/// Expected number of transversal triples, times 27, for one triple under a
/// partial assignment completed uniformly at random.
fn weight(parts: [Option<u8>; 3]) -> u64 {
    let fixed: Vec<u8> = parts.iter().flatten().copied().collect();
    for (a, &p) in fixed.iter().enumerate() {
        if fixed[a + 1..].contains(&p) {
            return 0;
        }
    }
    match fixed.len() {
        0 | 1 => 6,
        2 => 9,
        _ => 27,
    }
}

/// Split the vertices into three parts by conditional expectations and keep
/// the triples meeting every part. At least `ceil(2|E|/9)` triples survive.
///
/// With `assume_pasch_c14_free`, the input is checked for Pasch and C14 and the
/// output for the fan, Pasch and C14; a failure of either check is an error.
pub fn tripartite_subsystem(h: &Hypergraph, assume_pasch_c14_free: bool) -> Result<ReductionReport, ReductionError> {
    if h.k() != 3 {
        return Err(ReductionError::NotTriples(h.k()));
    }
    if assume_pasch_c14_free {
        for name in [ConfigName::Pasch, ConfigName::C14] {
            let c = Configuration::new(name).expect("built-in");
            if contains(h, &c).expect("uniformity checked") {
                return Err(ReductionError::PremiseViolated(name));
            }
        }
    }
    let n = h.n();
    let mut part: Vec<Option<u8>> = vec![None; n + 1];
    let parts_of = |part: &[Option<u8>], e: &Edge| [part[e[0] as usize], part[e[1] as usize], part[e[2] as usize]];
    for v in 1..=n {
        let mut best = (0u64, 0u8);
        for p in 0..3u8 {
            part[v] = Some(p);
            let score: u64 = h
                .incident(v as Vertex)
                .iter()
                .map(|&i| weight(parts_of(&part, &h.edges()[i])))
                .sum();
            if p == 0 || score > best.0 {
                best = (score, p);
            }
        }
        part[v] = Some(best.1);
    }
    let output = h.filter_edges(|_, e| weight(parts_of(&part, e)) == 27);
    let mut groups: [Vec<Vertex>; 3] = Default::default();
    for v in 1..=n {
        groups[part[v].expect("assigned") as usize].push(v as Vertex);
    }
    if assume_pasch_c14_free {
        for name in [ConfigName::Fan(3), ConfigName::Pasch, ConfigName::C14] {
            let c = Configuration::new(name).expect("built-in");
            if find_embedding(&output, &c).expect("uniformity checked").is_some() {
                return Err(ReductionError::OutputContains(name));
            }
        }
    }
    let input_edges = h.edge_count();
    let threshold = Ratio::new(2 * input_edges as i64, 9);
    Ok(ReductionReport {
        mode: ReductionMode::Tripartite,
        n,
        input_edges,
        removed_edges: h.edges().iter().filter(|e| !output.contains_edge(e)).cloned().collect(),
        w_copies: Vec::new(),
        fallback_removals: 0,
        partition: Some(groups),
        guarantee_met: Ratio::from_integer(output.edge_count() as i64) >= threshold,
        output,
        threshold,
    })
}
