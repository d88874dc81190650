//! Fan-free edge bounds and executable versions of the extremal-structure
//! arguments.
//!
//! For a fan-free linear `k`-graph `H` on `n` vertices with maximum degree
//! `D`, attained at `v`:
//!
//! * every edge meets `B_v`, so `|E(H)| <= D * |B_v| = D * (n - (k-1) D)`;
//! * counting incidences, `|E(H)| <= n D / k`.
//!
//! All arithmetic is exact (integers and `Ratio<i64>`).

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::configurations::contains_fan;
use crate::constructions::{field_transversal_design, ColoredGraph};
use crate::hypergraph::{GroupPartition, Hypergraph, HypergraphError, LinearHypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("vertex {vertex} has degree {degree}, the maximum is {max}")]
    NotMaxDegreeVertex { vertex: Vertex, degree: usize, max: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("extremal-structure check failed at {step:?}: {detail}")]
    PipelineFailure { step: PipelineStep, detail: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PipelineStep {
    Regularity,
    BallSize,
    BallIndependence,
    BallsPartition,
    PairCoverage,
}

/// Which argument produced a [`FanBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `n = km`: at most `n^2 / k^2 = m^2`.
    Divisible,
    /// `n = k(m+1) - 1`: at most `m^2 + m`.
    OneShort,
    /// Any other residue: `floor(n^2 / k^2)`, not known to be attained.
    Floor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanBound {
    pub n: usize,
    pub k: usize,
    pub value: u64,
    pub source: BoundSource,
    /// Whether this crate can build a fan-free hypergraph meeting the bound
    /// (a transversal design or a truncation of one).
    pub tight: bool,
}

fn td_constructible(m: usize, k: usize) -> bool {
    m == 0 || k <= 3 || field_transversal_design(m, k).is_ok()
}

/// Best upper bound on the number of edges of a fan-free linear `k`-graph on `n` vertices.
pub fn fan_upper_bound(n: usize, k: usize) -> FanBound {
    assert!(k >= 2, "uniformity must be at least 2");
    let n64 = n as u64;
    let k64 = k as u64;
    let floor = n64 * n64 / (k64 * k64);
    if n.is_multiple_of(k) {
        let m = n / k;
        FanBound {
            n,
            k,
            value: floor,
            source: BoundSource::Divisible,
            tight: td_constructible(m, k),
        }
    } else if (n + 1).is_multiple_of(k) {
        let m = ((n + 1) / k - 1) as u64;
        FanBound {
            n,
            k,
            value: floor.min(m * m + m),
            source: BoundSource::OneShort,
            tight: td_constructible(m as usize + 1, k),
        }
    } else {
        FanBound {
            n,
            k,
            value: floor,
            source: BoundSource::Floor,
            tight: false,
        }
    }
}

/// `max over D' >= delta of min(D'(n - (k-1)D'), floor(n D' / k))`: an upper
/// bound on the size of any fan-free linear `k`-graph on `n` vertices whose
/// maximum degree is at least `delta`.
pub fn fan_bound_given_min_max_degree(n: usize, k: usize, delta: usize) -> u64 {
    let top = if n == 0 { 0 } else { (n - 1) / (k - 1) };
    (delta..=top.max(delta))
        .map(|d| {
            let ball = n as i64 - ((k - 1) * d) as i64;
            let b1 = if ball <= 0 { 0 } else { (d as i64 * ball) as u64 };
            let b2 = (n * d / k) as u64;
            b1.min(b2)
        })
        .max()
        .unwrap_or(0)
}

pub(crate) fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    if *r.denom() == 1 {
        s.serialize_str(&r.numer().to_string())
    } else {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub vertex: Vertex,
    pub delta: usize,
    pub edges: usize,
    /// `D (n - (k-1) D)`.
    pub bound_b1: i64,
    /// `n D / k`.
    #[serde(serialize_with = "ratio_string")]
    pub bound_b2: Ratio<i64>,
    pub fan_bound: FanBound,
    pub fan_free: bool,
    /// Premise of the first bound: every edge meets `B_v`.
    pub every_edge_meets_ball: bool,
    pub within_b1: bool,
    pub within_b2: bool,
}

/// Evaluate both counting bounds at a maximum-degree vertex `v`.
pub fn proof_bounds(h: &LinearHypergraph, v: Vertex) -> Result<BoundReport, BoundsError> {
    let degree = h.degree(v)?;
    let (max, _) = h.max_degree();
    if degree != max {
        return Err(BoundsError::NotMaxDegreeVertex { vertex: v, degree, max });
    }
    let (n, k) = (h.n(), h.k());
    let delta = degree as i64;
    let bound_b1 = delta * (n as i64 - (k as i64 - 1) * delta);
    let bound_b2 = Ratio::new(n as i64 * delta, k as i64);
    let ball = h.outside_ball(v)?;
    let every_edge_meets_ball = h.edges().iter().all(|e| e.iter().any(|u| ball.contains(u)));
    let fan_free = contains_fan(h, k).expect("uniformity matches").is_none();
    let edges = h.edge_count();
    Ok(BoundReport {
        n,
        k,
        vertex: v,
        delta: degree,
        edges,
        bound_b1,
        bound_b2,
        fan_bound: fan_upper_bound(n, k),
        fan_free,
        every_edge_meets_ball,
        within_b1: edges as i64 <= bound_b1,
        within_b2: Ratio::from_integer(edges as i64) <= bound_b2,
    })
}

/// Certify that a fan-free linear `k`-graph with `n = km` vertices and `m^2`
/// edges is a transversal design, following the extremal-case argument step
/// by step, and return its groups.
pub fn verify_extremal_structure(h: &LinearHypergraph) -> Result<GroupPartition, BoundsError> {
    let (n, k) = (h.n(), h.k());
    if n == 0 || n % k != 0 {
        return Err(BoundsError::PreconditionViolated(format!(
            "n = {n} is not a positive multiple of k = {k}"
        )));
    }
    let m = n / k;
    if h.edge_count() != m * m {
        return Err(BoundsError::PreconditionViolated(format!(
            "{} edges, expected m^2 = {}",
            h.edge_count(),
            m * m
        )));
    }
    if contains_fan(h, k).expect("uniformity matches").is_some() {
        return Err(BoundsError::PreconditionViolated("contains a fan".into()));
    }
    let fail = |step, detail: String| Err(BoundsError::PipelineFailure { step, detail });

    if let Some(v) = h.vertices().find(|&v| h.incident(v).len() != m) {
        return fail(
            PipelineStep::Regularity,
            format!("vertex {v} has degree {}, expected {m}", h.incident(v).len()),
        );
    }
    let balls: Vec<Vec<Vertex>> = h
        .vertices()
        .map(|v| h.outside_ball(v).map(|b| b.into_iter().collect()))
        .collect::<Result<_, _>>()?;
    for (i, ball) in balls.iter().enumerate() {
        if ball.len() != m {
            return fail(
                PipelineStep::BallSize,
                format!("|B_{}| = {}, expected {m}", i + 1, ball.len()),
            );
        }
        if !h.is_strongly_independent(ball)? {
            return fail(
                PipelineStep::BallIndependence,
                format!("B_{} = {ball:?} is met twice by an edge", i + 1),
            );
        }
    }
    let Some(edge) = h.edges().first() else {
        return fail(PipelineStep::BallsPartition, "no edges".into());
    };
    let groups: Vec<Vec<Vertex>> = edge.iter().map(|&v| balls[v as usize - 1].clone()).collect();
    let partition = match GroupPartition::new(groups, h) {
        Ok(p) => p,
        Err(e) => return fail(PipelineStep::BallsPartition, e.to_string()),
    };
    // linearity makes every pair covered at most once; count the covered cross pairs
    let covered: usize = h
        .edges()
        .iter()
        .map(|e| {
            let mut c = 0;
            for (a, &u) in e.iter().enumerate() {
                for &w in &e[a + 1..] {
                    if partition.group_of(u) != partition.group_of(w) {
                        c += 1;
                    }
                }
            }
            c
        })
        .sum();
    let cross = k * (k - 1) / 2 * m * m;
    if covered != cross || !partition.is_transversal_for(h) {
        return fail(
            PipelineStep::PairCoverage,
            format!("{covered} of {cross} cross pairs covered"),
        );
    }
    Ok(partition)
}

/// The graph on `W = V \ B_x` joining `w1 w2` whenever `w1 w2 b` is a triple
/// with `b` in `B_x`, with one color class per vertex of `B_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    /// Host names of the graph's vertices: graph vertex `i` is `w[i - 1]`.
    pub w: Vec<Vertex>,
    /// Host vertex of `B_x` behind each color class.
    pub colors: Vec<Vertex>,
    pub graph: ColoredGraph,
}

pub fn link_graph(h: &LinearHypergraph, x: Vertex) -> Result<LinkGraph, BoundsError> {
    if h.k() != 3 {
        return Err(BoundsError::PreconditionViolated(format!(
            "link graphs are defined for triple systems, got k = {}",
            h.k()
        )));
    }
    let degree = h.degree(x)?;
    let (max, _) = h.max_degree();
    if degree != max {
        return Err(BoundsError::NotMaxDegreeVertex { vertex: x, degree, max });
    }
    let ball = h.outside_ball(x)?;
    let w: Vec<Vertex> = h.vertices().filter(|v| !ball.contains(v)).collect();
    let index = |v: Vertex| w.binary_search(&v).ok().map(|i| i as Vertex + 1);
    let colors: Vec<Vertex> = ball.iter().copied().collect();
    let matchings = colors
        .iter()
        .map(|&b| {
            h.incident(b)
                .iter()
                .filter_map(|&i| {
                    let rest: Vec<Vertex> = h.edges()[i].iter().copied().filter(|&u| u != b).collect();
                    match (index(rest[0]), index(rest[1])) {
                        (Some(a), Some(c)) => Some((a, c)),
                        _ => None,
                    }
                })
                .collect()
        })
        .collect();
    let graph = ColoredGraph::new(w.len(), matchings).expect("linearity makes each color class a matching");
    Ok(LinkGraph { w, colors, graph })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AesCheck {
    pub vertices: usize,
    pub min_degree: usize,
    pub triangle_free: bool,
    pub bipartite: bool,
    /// The degree bound only speaks about triangle-free non-bipartite graphs.
    pub applies: bool,
    /// `min_degree <= 2n/5` whenever the bound applies.
    pub holds: bool,
}

/// Check the minimum-degree bound `2n/5` for triangle-free non-bipartite graphs on an instance.
pub fn aes_degree_check(g: &Hypergraph) -> AesCheck {
    assert_eq!(g.k(), 2, "expects a graph");
    let n = g.n();
    let mut adj = vec![Vec::new(); n + 1];
    for e in g.edges() {
        adj[e[0] as usize].push(e[1]);
        adj[e[1] as usize].push(e[0]);
    }
    let triangle_free = g.edges().iter().all(|e| {
        let (a, b) = (e[0] as usize, e[1] as usize);
        !adj[a].iter().any(|x| adj[b].contains(x))
    });
    let mut side = vec![None; n + 1];
    let mut bipartite = true;
    for s in 1..=n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &v in &adj[u] {
                match side[v as usize] {
                    None => {
                        side[v as usize] = Some(!su);
                        stack.push(v as usize);
                    }
                    Some(sv) if sv == su => bipartite = false,
                    _ => {}
                }
            }
        }
    }
    let min_degree = (1..=n).map(|v| adj[v].len()).min().unwrap_or(0);
    let applies = triangle_free && !bipartite;
    AesCheck {
        vertices: n,
        min_degree,
        triangle_free,
        bipartite,
        applies,
        holds: !applies || 5 * min_degree <= 2 * n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{extend_colored_graph, transversal_design, truncate, wagner_graph};

    #[test]
    fn upper_bound_values() {
        assert_eq!(fan_upper_bound(9, 3).value, 9);
        assert_eq!(fan_upper_bound(9, 3).source, BoundSource::Divisible);
        let b5 = fan_upper_bound(5, 3);
        assert_eq!((b5.value, b5.source, b5.tight), (2, BoundSource::OneShort, true));
        let b7 = fan_upper_bound(7, 3);
        assert_eq!((b7.value, b7.source, b7.tight), (5, BoundSource::Floor, false));
        assert_eq!(fan_upper_bound(8, 3).value, 6);
        assert!(!fan_upper_bound(8, 4).tight);
        assert_eq!(fan_upper_bound(0, 3).value, 0);
        for k in 2..6 {
            for m in 0..8u64 {
                assert_eq!(fan_upper_bound(k * m as usize, k).value, m * m);
                if m > 0 {
                    assert_eq!(fan_upper_bound(k * (m as usize + 1) - 1, k).value, m * m + m);
                }
            }
        }
    }

    #[test]
    fn mantel_odd_case_matches() {
        for n in (1..30).step_by(2) {
            assert_eq!(fan_upper_bound(n, 2).value, (n * n / 4) as u64);
        }
    }

    #[test]
    fn degree_conditioned_bound_never_exceeds_the_global_one() {
        for k in 2..5 {
            for n in 0..20 {
                let g = fan_bound_given_min_max_degree(n, k, 0);
                assert!(g <= n as u64 * n as u64 / (k * k) as u64, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn td_bounds_are_tight() {
        let td = transversal_design(3, 3).unwrap();
        let r = proof_bounds(&td, 1).unwrap();
        assert_eq!(r.bound_b1, 9);
        assert_eq!(r.bound_b2, Ratio::from_integer(9));
        assert_eq!(r.edges, 9);
        assert!(r.fan_free && r.every_edge_meets_ball && r.within_b1 && r.within_b2);
    }

    #[test]
    fn single_triple_bounds() {
        let h = LinearHypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        let r = proof_bounds(&h, 1).unwrap();
        assert_eq!((r.bound_b1, r.bound_b2), (1, Ratio::from_integer(1)));
    }

    #[test]
    fn truncated_td_bounds() {
        let t = truncate(&transversal_design(4, 3).unwrap(), 1).unwrap();
        let (delta, v) = t.max_degree();
        assert_eq!(delta, 4);
        let r = proof_bounds(&t, v.unwrap()).unwrap();
        assert_eq!(r.bound_b2, Ratio::new(44, 3));
        assert_eq!(r.edges, 12);
        assert!(r.within_b2 && r.within_b1);
        let low = t.vertices().find(|&u| t.degree(u).unwrap() < 4).unwrap();
        assert!(matches!(
            proof_bounds(&t, low),
            Err(BoundsError::NotMaxDegreeVertex { .. })
        ));
    }

    #[test]
    fn extremal_pipeline_on_a_design() {
        let td = transversal_design(3, 3).unwrap();
        let p = verify_extremal_structure(&td).unwrap();
        assert_eq!(p.groups, vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let minus = LinearHypergraph::new(9, 3, td.edges()[1..].iter()).unwrap();
        assert!(matches!(
            verify_extremal_structure(&minus),
            Err(BoundsError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn link_graph_of_truncated_td9() {
        let t = truncate(&transversal_design(3, 3).unwrap(), 1).unwrap();
        let (delta, x) = t.max_degree();
        assert_eq!(delta, 3);
        let link = link_graph(&t, x.unwrap()).unwrap();
        assert_eq!(link.w.len(), 6);
        let g = link.graph.graph();
        assert!(g.degrees().iter().all(|&d| d == 2));
        let hexagon = Hypergraph::new(6, 2, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]]).unwrap();
        assert!(are_isomorphic(&g, &hexagon).unwrap());
        let check = aes_degree_check(&g);
        assert!(check.bipartite && check.triangle_free && !check.applies && check.holds);
    }

    #[test]
    fn link_graph_of_wagner_extension() {
        let h = extend_colored_graph(&wagner_graph()).unwrap();
        let link = link_graph(&h, 9).unwrap();
        assert_eq!(link.colors, vec![9, 10, 11]);
        assert_eq!(link.graph.edges(), wagner_graph().edges());
        assert_eq!(link.graph.matchings.len(), 3);
        assert!(matches!(link_graph(&h, 1), Err(BoundsError::NotMaxDegreeVertex { .. })));
    }

    #[test]
    fn link_graph_with_singleton_ball() {
        // x = 1 touches every vertex, so B_x = {x} and W is everything else.
        let h = LinearHypergraph::new(5, 3, [[1, 2, 3], [1, 4, 5]]).unwrap();
        let link = link_graph(&h, 1).unwrap();
        assert_eq!(link.colors, vec![1]);
        assert_eq!(link.graph.edges(), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn aes_instances() {
        let c5 = Hypergraph::new(5, 2, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).unwrap();
        let a = aes_degree_check(&c5);
        assert!(a.applies && a.holds);
        assert_eq!(a.min_degree, 2);

        let mut petersen = Vec::new();
        for i in 0..5u32 {
            petersen.push([i + 1, (i + 1) % 5 + 1]);
            petersen.push([i + 1, i + 6]);
            petersen.push([i + 6, (i + 2) % 5 + 6]);
        }
        let p = aes_degree_check(&Hypergraph::new(10, 2, petersen).unwrap());
        assert!(p.applies && p.holds);
        assert_eq!(p.min_degree, 3);

        let w = aes_degree_check(&wagner_graph().graph());
        assert!(w.applies && w.holds);
        assert_eq!(w.min_degree, 3);

        let k4 = Hypergraph::new(4, 2, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]).unwrap();
        let t = aes_degree_check(&k4);
        assert!(!t.triangle_free && !t.applies && t.holds);
    }
}
