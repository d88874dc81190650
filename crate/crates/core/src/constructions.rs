//! Explicit extremal and near-extremal objects.
//!
//! Transversal designs use the vertex numbering "group `g` (0-based) holds
//! vertices `g*m + 1 ..= (g+1)*m`", so groups can be recovered without
//! metadata.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::field::{prime_power, FiniteField, MAX_ORDER};
use crate::hypergraph::{Edge, GroupPartition, HypergraphError, LinearBuilder, LinearHypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("cannot build TD with {k} groups of size {m} with this tool: {reason}")]
    Unsupported { m: usize, k: usize, reason: String },
    #[error("input is not a transversal design")]
    NotATransversalDesign,
    #[error("the standard factorization needs an odd side, got {0}")]
    EvenSide(usize),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("improper coloring: {0}")]
    ImproperColoring(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

pub type Result<T, E = ConstructionError> = std::result::Result<T, E>;

fn td_vertex(group: usize, m: usize, x: usize) -> Vertex {
    (group * m + x + 1) as Vertex
}

/// Transversal design with `k` groups of size `m`.
///
/// * `k = 2`: the complete bipartite graph `K_{m,m}`.
/// * `k = 3`: the cyclic Latin square, triples `(i, j, i + j mod m)`.
/// * `k >= 4`: rows, columns and `k - 2` mutually orthogonal Latin squares
///   `L_a(i, j) = a*i + j` over GF(`m`); needs `m` a prime power and `k <= m + 1`.
pub fn transversal_design(m: usize, k: usize) -> Result<LinearHypergraph> {
    if k < 2 {
        return Err(HypergraphError::BadUniformity(k).into());
    }
    if m == 0 {
        return Err(ConstructionError::Unsupported {
            m,
            k,
            reason: "group size must be positive".into(),
        });
    }
    match k {
        2 | 3 => {
            let mut b = LinearBuilder::new(k * m, k)?;
            for i in 0..m {
                for j in 0..m {
                    let mut e = vec![td_vertex(0, m, i), td_vertex(1, m, j)];
                    if k == 3 {
                        e.push(td_vertex(2, m, (i + j) % m));
                    }
                    b.add_edge(&e)?;
                }
            }
            Ok(b.finish())
        }
        _ => field_transversal_design(m, k),
    }
}

/// Transversal design from the finite field of order `m`, for any `2 <= k <= m + 1`.
///
/// For `k = 3` and `m` a prime power that is not prime this gives a design
/// that is not isomorphic to the cyclic one (e.g. the elementary abelian
/// Latin square of order 4).
pub fn field_transversal_design(m: usize, k: usize) -> Result<LinearHypergraph> {
    if k < 2 {
        return Err(HypergraphError::BadUniformity(k).into());
    }
    let unsupported = |reason: String| ConstructionError::Unsupported { m, k, reason };
    if m > MAX_ORDER as usize || prime_power(m as u32).is_none() {
        return Err(unsupported(format!(
            "{m} is not a prime power up to {MAX_ORDER}; no field construction"
        )));
    }
    if k > m + 1 {
        return Err(unsupported(format!(
            "at most {} mutually orthogonal Latin squares of order {m} exist",
            m - 1
        )));
    }
    let f = FiniteField::new(m as u32).expect("checked prime power");
    let mut b = LinearBuilder::new(k * m, k)?;
    for i in 0..m as u32 {
        for j in 0..m as u32 {
            let mut e = vec![td_vertex(0, m, i as usize), td_vertex(1, m, j as usize)];
            for (t, a) in (1..m as u32).take(k - 2).enumerate() {
                let cell = f.add(f.mul(a, i), j);
                e.push(td_vertex(2 + t, m, cell as usize));
            }
            b.add_edge(&e)?;
        }
    }
    Ok(b.finish())
}

/// Recover the groups of a transversal design, or `None` if `h` is not one.
///
/// In a TD the group of `v` is exactly `B_v`. The sets `B_v` must partition
/// the vertices into `k` equal strongly independent blocks, and with linearity
/// and `m^2` edges every cross pair is then covered exactly once.
pub fn transversal_groups(h: &LinearHypergraph) -> Option<GroupPartition> {
    let (n, k) = (h.n(), h.k());
    if n == 0 || n % k != 0 {
        return None;
    }
    let m = n / k;
    if h.edge_count() != m * m {
        return None;
    }
    let mut assigned = vec![false; n + 1];
    let mut groups = Vec::new();
    for v in h.vertices() {
        if assigned[v as usize] {
            continue;
        }
        let ball: Vec<Vertex> = h.outside_ball(v).ok()?.into_iter().collect();
        if ball.len() != m || ball.iter().any(|&u| assigned[u as usize]) {
            return None;
        }
        for &u in &ball {
            assigned[u as usize] = true;
        }
        groups.push(ball);
    }
    if groups.len() != k {
        return None;
    }
    let partition = GroupPartition::new(groups, h).ok()?;
    partition.is_transversal_for(h).then_some(partition)
}

/// Remove vertex `v` and every edge through it from a transversal design.
/// Vertices above `v` shift down by one.
pub fn truncate(h: &LinearHypergraph, v: Vertex) -> Result<LinearHypergraph> {
    h.check_vertex(v)?;
    if transversal_groups(h).is_none() {
        return Err(ConstructionError::NotATransversalDesign);
    }
    let shift = |u: Vertex| if u > v { u - 1 } else { u };
    let edges: Vec<Edge> = h
        .edges()
        .iter()
        .filter(|e| !e.contains(&v))
        .map(|e| e.iter().map(|&u| shift(u)).collect())
        .collect();
    Ok(LinearHypergraph::new(h.n() - 1, h.k(), edges)?)
}

/// A partition of the edges of `K_{s,s}` into `s` perfect matchings.
/// Left and right vertices are both numbered `1..=s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    side: usize,
    matchings: Vec<Vec<(Vertex, Vertex)>>,
}

impl Factorization {
    pub fn new(side: usize, matchings: Vec<Vec<(Vertex, Vertex)>>) -> Result<Self> {
        let bad = |msg: String| Err(ConstructionError::InvalidFactorization(msg));
        if matchings.len() != side {
            return bad(format!("{} matchings for side {side}", matchings.len()));
        }
        let mut seen = BTreeSet::new();
        for (i, m) in matchings.iter().enumerate() {
            let lefts: BTreeSet<_> = m.iter().map(|e| e.0).collect();
            let rights: BTreeSet<_> = m.iter().map(|e| e.1).collect();
            let full: BTreeSet<Vertex> = (1..=side as Vertex).collect();
            if m.len() != side || lefts != full || rights != full {
                return bad(format!("matching {i} is not perfect"));
            }
            for &e in m {
                if !seen.insert(e) {
                    return bad(format!("edge {e:?} is used twice"));
                }
            }
        }
        Ok(Factorization { side, matchings })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn matchings(&self) -> &[Vec<(Vertex, Vertex)>] {
        &self.matchings
    }

    /// Cycle lengths (sorted) of the union of matchings `i` and `j`, `i != j`.
    /// Two disjoint perfect matchings always union to disjoint even cycles.
    pub fn union_cycle_lengths(&self, i: usize, j: usize) -> Vec<usize> {
        assert_ne!(i, j);
        let s = self.side;
        let mut right_of_a = vec![0; s + 1];
        let mut left_of_b = vec![0; s + 1];
        for &(l, r) in &self.matchings[i] {
            right_of_a[l as usize] = r as usize;
        }
        for &(l, r) in &self.matchings[j] {
            left_of_b[r as usize] = l as usize;
        }
        let mut seen = vec![false; s + 1];
        let mut lengths = Vec::new();
        for start in 1..=s {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut l = start;
            while !seen[l] {
                seen[l] = true;
                l = left_of_b[right_of_a[l]];
                len += 2;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }
}

/// The cyclic factorization `M_i = {(j, j + i mod s)}` of `K_{s,s}` for odd `s`.
/// Any two of its matchings union to a graph without 4-cycles.
pub fn standard_factorization(s: usize) -> Result<Factorization> {
    if s.is_multiple_of(2) {
        return Err(ConstructionError::EvenSide(s));
    }
    let matchings = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| ((j + 1) as Vertex, ((j + i) % s + 1) as Vertex))
                .collect()
        })
        .collect();
    Factorization::new(s, matchings)
}

/// The XOR factorization of `K_{2^t, 2^t}`.
///
/// Left vertices carry `(t+1)`-bit labels starting with 0, right ones labels
/// starting with 1; an edge is labeled by the XOR of its ends and each label
/// class is a matching. The union of any two classes splits into 4-cycles.
/// Vertex `x + 1` on either side is the one whose low `t` bits are `x`.
pub fn binary_factorization(t: u32) -> Result<Factorization> {
    let s = 1usize << t;
    let matchings = (0..s)
        .map(|label| {
            (0..s)
                .map(|a| ((a + 1) as Vertex, ((a ^ label) + 1) as Vertex))
                .collect()
        })
        .collect();
    Factorization::new(s, matchings)
}

/// Groups: left side `1..=s`, right side `s+1..=2s`, and one new vertex
/// `2s + i + 1` per matching `i`, added to each of its edges.
pub fn design_from_factorization(f: &Factorization) -> LinearHypergraph {
    let s = f.side() as Vertex;
    let edges: Vec<Edge> = f
        .matchings()
        .iter()
        .enumerate()
        .flat_map(|(i, m)| m.iter().map(move |&(l, r)| vec![l, s + r, 2 * s + i as Vertex + 1]))
        .collect();
    LinearHypergraph::new(3 * f.side(), 3, edges).expect("a factorization yields a transversal design")
}

/// A simple graph on `1..=n` with a proper edge coloring given as matchings.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ColoredGraph {
    pub n: usize,
    pub matchings: Vec<Vec<(Vertex, Vertex)>>,
}

impl ColoredGraph {
    pub fn new(n: usize, matchings: Vec<Vec<(Vertex, Vertex)>>) -> Result<Self> {
        let g = ColoredGraph { n, matchings };
        g.check()?;
        Ok(g)
    }

    pub fn check(&self) -> Result<()> {
        let mut all = BTreeSet::new();
        for (c, m) in self.matchings.iter().enumerate() {
            let mut touched = BTreeSet::new();
            for &(a, b) in m {
                for v in [a, b] {
                    if v == 0 || v as usize > self.n {
                        return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n }.into());
                    }
                    if !touched.insert(v) {
                        return Err(ConstructionError::ImproperColoring(format!(
                            "color {c} meets vertex {v} twice"
                        )));
                    }
                }
                if a == b {
                    return Err(ConstructionError::ImproperColoring(format!("loop at {a}")));
                }
                if !all.insert((a.min(b), a.max(b))) {
                    return Err(ConstructionError::ImproperColoring(format!(
                        "edge {a}-{b} has two colors"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All edges with the smaller endpoint first, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .matchings
            .iter()
            .flatten()
            .map(|&(a, b)| vec![a.min(b), a.max(b)])
            .collect();
        out.sort();
        out
    }

    /// The underlying graph as a 2-uniform hypergraph.
    pub fn graph(&self) -> LinearHypergraph {
        LinearHypergraph::new(self.n, 2, self.edges()).expect("checked coloring")
    }
}

/// Add one new point `n + i + 1` per color class `i` and extend every edge
/// of that class by it.
pub fn extend_colored_graph(g: &ColoredGraph) -> Result<LinearHypergraph> {
    g.check()?;
    let n = g.n as Vertex;
    let edges: Vec<Edge> = g
        .matchings
        .iter()
        .enumerate()
        .flat_map(|(i, m)| m.iter().map(move |&(a, b)| vec![a, b, n + i as Vertex + 1]))
        .collect();
    Ok(LinearHypergraph::new(g.n + g.matchings.len(), 3, edges)?)
}

/// The 8-cycle `1..8` with its four long diagonals, colored by the two
/// alternating perfect matchings of the cycle and the diagonals.
pub fn wagner_graph() -> ColoredGraph {
    let odd = vec![(1, 2), (3, 4), (5, 6), (7, 8)];
    let even = vec![(2, 3), (4, 5), (6, 7), (8, 1)];
    let diagonals = vec![(1, 5), (2, 6), (3, 7), (4, 8)];
    ColoredGraph::new(8, vec![odd, even, diagonals]).expect("valid coloring")
}

/// A fixed 1-factorization of `C_{5,2}`, found once by
/// [`one_factorizations`] (the first one it reports) and frozen here.
const C52_FACTORIZATION: [[(Vertex, Vertex); 5]; 4] = [
    [(1, 3), (2, 9), (4, 5), (6, 7), (8, 10)],
    [(1, 4), (2, 10), (3, 5), (6, 8), (7, 9)],
    [(1, 9), (2, 3), (4, 6), (5, 8), (7, 10)],
    [(1, 10), (2, 4), (3, 6), (5, 7), (8, 9)],
];

/// Edges of the blow-up of the 5-cycle: `p_i = 2i - 1`, `q_i = 2i`, with
/// `{p_i, q_i}` completely joined to `{p_{i+1}, q_{i+1}}` (indices mod 5).
pub fn c52_edges() -> Vec<Edge> {
    let mut edges = Vec::new();
    for i in 1..=5u32 {
        let j = i % 5 + 1;
        for a in [2 * i - 1, 2 * i] {
            for b in [2 * j - 1, 2 * j] {
                edges.push(vec![a.min(b), a.max(b)]);
            }
        }
    }
    edges.sort();
    edges
}

pub fn c52_graph() -> ColoredGraph {
    let matchings = C52_FACTORIZATION.iter().map(|m| m.to_vec()).collect();
    ColoredGraph::new(10, matchings).expect("valid coloring")
}

/// Every partition of the edges of a graph on `1..=n` into `t` perfect
/// matchings, as unordered partitions: the class holding the smallest
/// remaining edge is always chosen next. Backtracking, for small graphs.
pub fn one_factorizations(n: usize, edges: &[Edge], t: usize) -> Vec<ColoredGraph> {
    let mut sorted: Vec<(Vertex, Vertex)> = edges.iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
    sorted.sort_unstable();
    let mut out = Vec::new();
    if n % 2 == 1 || sorted.len() != t * n / 2 {
        return out;
    }
    fn perfect_matchings(
        n: usize,
        avail: &[(Vertex, Vertex)],
        covered: &mut Vec<bool>,
        chosen: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        let Some(v) = (1..=n as Vertex).find(|&v| !covered[v as usize]) else {
            out.push(chosen.clone());
            return;
        };
        for &(a, b) in avail {
            if (a == v || b == v) && !covered[a as usize] && !covered[b as usize] {
                covered[a as usize] = true;
                covered[b as usize] = true;
                chosen.push((a, b));
                perfect_matchings(n, avail, covered, chosen, out);
                chosen.pop();
                covered[a as usize] = false;
                covered[b as usize] = false;
            }
        }
    }
    fn go(
        n: usize,
        remaining: Vec<(Vertex, Vertex)>,
        classes: &mut Vec<Vec<(Vertex, Vertex)>>,
        out: &mut Vec<ColoredGraph>,
    ) {
        let Some(&first) = remaining.first() else {
            out.push(ColoredGraph {
                n,
                matchings: classes.clone(),
            });
            return;
        };
        let mut pms = Vec::new();
        perfect_matchings(n, &remaining, &mut vec![false; n + 1], &mut Vec::new(), &mut pms);
        for pm in pms {
            if !pm.contains(&first) {
                continue;
            }
            let rest = remaining.iter().copied().filter(|e| !pm.contains(e)).collect();
            let mut sorted_pm = pm;
            sorted_pm.sort_unstable();
            classes.push(sorted_pm);
            go(n, rest, classes, out);
            classes.pop();
        }
    }
    go(n, sorted, &mut Vec::new(), &mut out);
    out
}

/// The affine plane of order 3 as a Steiner triple system on 9 points:
/// point `(x, y)` of `Z_3^2` is vertex `3x + y + 1`, triples are its 12 lines.
pub fn ag23() -> LinearHypergraph {
    let pt = |x: u32, y: u32| 3 * (x % 3) + (y % 3) + 1;
    let mut lines = BTreeSet::new();
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for x in 0..3 {
            for y in 0..3 {
                let mut l: Edge = (0..3).map(|t| pt(x + t * dx, y + t * dy)).collect();
                l.sort_unstable();
                lines.insert(l);
            }
        }
    }
    LinearHypergraph::new(9, 3, lines).expect("lines of a plane meet at most once")
}
