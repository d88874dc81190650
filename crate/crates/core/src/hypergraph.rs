//! Uniform hypergraphs on the vertex set `1..=n`.
//!
//! [`Hypergraph`] only enforces uniformity, vertex range and distinct edges, so
//! it can also hold non-linear systems such as the two-triple pattern `W`.
//! [`LinearHypergraph`] adds the requirement that two edges share at most one
//! vertex and is what most of the crate works with.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Vertices are 1-based.
pub type Vertex = u32;

/// An edge is a strictly increasing list of vertices.
pub type Edge = Vec<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("edge {edge:?} has {found} distinct vertices, expected {expected}")]
    NotUniform {
        edge: Vec<Vertex>,
        expected: usize,
        found: usize,
    },
    #[error("edge {0:?} occurs more than once")]
    DuplicateEdge(Edge),
    #[error("edges {first:?} and {second:?} share more than one vertex")]
    NotLinear { first: Edge, second: Edge },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("no partition into {k} groups meets every edge once in each group")]
    NotKPartite { k: usize },
    #[error("invalid group partition: {0}")]
    BadPartition(String),
}

pub type Result<T, E = HypergraphError> = std::result::Result<T, E>;

fn normalize_edge(raw: &[Vertex], n: usize, k: usize) -> Result<Edge> {
    for &v in raw {
        if v == 0 || v as usize > n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut edge = raw.to_vec();
    edge.sort_unstable();
    edge.dedup();
    if edge.len() != k {
        return Err(HypergraphError::NotUniform {
            edge: raw.to_vec(),
            expected: k,
            found: edge.len(),
        });
    }
    Ok(edge)
}

/// A `k`-uniform hypergraph with distinct edges, stored in lexicographic order.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    masks: Vec<FixedBitSet>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl std::hash::Hash for Hypergraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.k.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, k={}, {{", self.n, self.k)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "}})")
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct Doc {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

impl serde::Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Hypergraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = Doc::deserialize(d)?;
        Hypergraph::new(doc.n, doc.k, doc.edges).map_err(serde::de::Error::custom)
    }
}

impl Hypergraph {
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if k < 2 {
            return Err(HypergraphError::BadUniformity(k));
        }
        let mut seen = BTreeSet::new();
        for raw in edges {
            let edge = normalize_edge(raw.as_ref(), n, k)?;
            if !seen.insert(edge.clone()) {
                return Err(HypergraphError::DuplicateEdge(edge));
            }
        }
        Ok(Self::from_sorted_unchecked(n, k, seen.into_iter().collect()))
    }

    /// The hypergraph on `n` vertices with no edges.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, std::iter::empty::<Edge>())
    }

    /// `edges` must already be normalized, distinct and sorted.
    pub(crate) fn from_sorted_unchecked(n: usize, k: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut incidence = vec![Vec::new(); n + 1];
        let mut masks = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let mut mask = FixedBitSet::with_capacity(n + 1);
            for &v in e {
                incidence[v as usize].push(i);
                mask.insert(v as usize);
            }
            masks.push(mask);
        }
        Hypergraph {
            n,
            k,
            edges,
            incidence,
            masks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n as Vertex
    }

    /// Bitset of the vertices of edge `i`, indexed by vertex.
    pub fn edge_mask(&self, i: usize) -> &FixedBitSet {
        &self.masks[i]
    }

    /// Indices (into [`Hypergraph::edges`]) of the edges through `v`.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v as usize]
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v as usize > self.n {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v as usize].len())
    }

    /// Maximum degree together with the smallest vertex attaining it.
    /// The vertex is `None` only when `n = 0`.
    pub fn max_degree(&self) -> (usize, Option<Vertex>) {
        let mut best: (usize, Option<Vertex>) = (0, None);
        for v in self.vertices() {
            let d = self.incidence[v as usize].len();
            if best.1.is_none() || d > best.0 {
                best = (d, Some(v));
            }
        }
        best
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.incidence[v as usize].len()).collect()
    }

    /// The open neighborhood `N_v`: every vertex sharing an edge with `v`.
    pub fn neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        self.check_vertex(v)?;
        let mut out = BTreeSet::new();
        for &i in &self.incidence[v as usize] {
            out.extend(self.edges[i].iter().copied().filter(|&u| u != v));
        }
        Ok(out)
    }

    /// `B_v`, the complement of the open neighborhood. Contains `v` itself.
    pub fn outside_ball(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        let nbhd = self.neighborhood(v)?;
        Ok(self.vertices().filter(|u| !nbhd.contains(u)).collect())
    }

    /// True iff every edge meets `set` in at most one vertex.
    pub fn is_strongly_independent(&self, set: &[Vertex]) -> Result<bool> {
        let mut mask = FixedBitSet::with_capacity(self.n + 1);
        for &v in set {
            self.check_vertex(v)?;
            mask.insert(v as usize);
        }
        Ok(self.masks.iter().all(|m| m.intersection(&mask).count() <= 1))
    }

    /// The first pair of edges (in edge order) sharing two or more vertices.
    pub fn linearity_violation(&self) -> Option<(Edge, Edge)> {
        for v in self.vertices() {
            let inc = &self.incidence[v as usize];
            for (a, &i) in inc.iter().enumerate() {
                for &j in &inc[a + 1..] {
                    if self.masks[i].intersection(&self.masks[j]).count() >= 2 {
                        return Some((self.edges[i].clone(), self.edges[j].clone()));
                    }
                }
            }
        }
        None
    }

    pub fn is_linear(&self) -> bool {
        self.linearity_violation().is_none()
    }

    /// Keep only the edges whose indices satisfy `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, &Edge) -> bool) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph::from_sorted_unchecked(self.n, self.k, edges)
    }

    /// Apply a vertex relabeling; `perm[v - 1]` is the new name of `v`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Hypergraph> {
        assert_eq!(perm.len(), self.n, "relabeling must cover every vertex");
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v as usize - 1]).collect())
            .collect();
        Hypergraph::new(self.n, self.k, edges)
    }

    /// Search for a partition of the vertices into `k` groups such that
    /// every edge has exactly one vertex in each group.
    ///
    /// Plain backtracking over group assignments, visiting vertices in
    /// breadth-first order along edges. Exponential in the worst case; meant
    /// for desk-scale inputs only.
    pub fn find_k_partition(&self) -> Result<GroupPartition> {
        let k = self.k;
        let mut order = Vec::with_capacity(self.n);
        let mut queued = vec![false; self.n + 1];
        for start in self.vertices() {
            if queued[start as usize] || self.incidence[start as usize].is_empty() {
                continue;
            }
            queued[start as usize] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &i in &self.incidence[v as usize] {
                    for &u in &self.edges[i] {
                        if !queued[u as usize] {
                            queued[u as usize] = true;
                            queue.push_back(u);
                        }
                    }
                }
            }
        }

        let mut group: Vec<Option<usize>> = vec![None; self.n + 1];
        if !self.assign_groups(&order, 0, 0, &mut group) {
            return Err(HypergraphError::NotKPartite { k });
        }

        let mut groups = vec![Vec::new(); k];
        for v in self.vertices() {
            if let Some(g) = group[v as usize] {
                groups[g].push(v);
            }
        }
        // isolated vertices go to the currently smallest group
        for v in self.vertices() {
            if group[v as usize].is_none() {
                let g = (0..k).min_by_key(|&g| groups[g].len()).unwrap();
                groups[g].push(v);
            }
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        Ok(GroupPartition { groups })
    }

    fn assign_groups(&self, order: &[Vertex], pos: usize, used: usize, group: &mut Vec<Option<usize>>) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        // Symmetry breaking: the next fresh group is always the lowest unused index.
        for g in 0..(used + 1).min(self.k) {
            let clash = self.incidence[v as usize]
                .iter()
                .any(|&i| self.edges[i].iter().any(|&u| u != v && group[u as usize] == Some(g)));
            if clash {
                continue;
            }
            group[v as usize] = Some(g);
            if self.assign_groups(order, pos + 1, used.max(g + 1), group) {
                return true;
            }
            group[v as usize] = None;
        }
        false
    }
}

/// A hypergraph in which two distinct edges share at most one vertex.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct LinearHypergraph(Hypergraph);

impl fmt::Debug for LinearHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Linear{:?}", self.0)
    }
}

impl Deref for LinearHypergraph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl AsRef<Hypergraph> for LinearHypergraph {
    fn as_ref(&self) -> &Hypergraph {
        &self.0
    }
}

impl From<LinearHypergraph> for Hypergraph {
    fn from(h: LinearHypergraph) -> Hypergraph {
        h.0
    }
}

impl TryFrom<Hypergraph> for LinearHypergraph {
    type Error = HypergraphError;

    fn try_from(h: Hypergraph) -> Result<Self> {
        match h.linearity_violation() {
            Some((first, second)) => Err(HypergraphError::NotLinear { first, second }),
            None => Ok(LinearHypergraph(h)),
        }
    }
}

impl LinearHypergraph {
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        let mut builder = LinearBuilder::new(n, k)?;
        for e in edges {
            builder.add_edge(e.as_ref())?;
        }
        Ok(builder.finish())
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Ok(LinearHypergraph(Hypergraph::empty(n, k)?))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_inner(self) -> Hypergraph {
        self.0
    }
}

/// Check a raw edge list and build the linear hypergraph it describes.
pub fn validate<I, E>(edges: I, n: usize, k: usize) -> Result<LinearHypergraph>
where
    I: IntoIterator<Item = E>,
    E: AsRef<[Vertex]>,
{
    LinearHypergraph::new(n, k, edges)
}

/// Incremental construction of a linear hypergraph.
///
/// Keeps an index from every covered vertex pair to the edge covering it, so
/// each insertion costs `O(k^2)` lookups.
#[derive(Debug, Clone)]
pub struct LinearBuilder {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    pair_owner: HashMap<(Vertex, Vertex), usize>,
}

impl LinearBuilder {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(HypergraphError::BadUniformity(k));
        }
        Ok(LinearBuilder {
            n,
            k,
            edges: Vec::new(),
            pair_owner: HashMap::new(),
        })
    }

    pub fn add_edge(&mut self, raw: &[Vertex]) -> Result<()> {
        let edge = normalize_edge(raw, self.n, self.k)?;
        for (a, &u) in edge.iter().enumerate() {
            for &v in &edge[a + 1..] {
                if let Some(&j) = self.pair_owner.get(&(u, v)) {
                    let other = self.edges[j].clone();
                    return Err(if other == edge {
                        HypergraphError::DuplicateEdge(edge)
                    } else {
                        HypergraphError::NotLinear {
                            first: other,
                            second: edge,
                        }
                    });
                }
            }
        }
        let id = self.edges.len();
        for (a, &u) in edge.iter().enumerate() {
            for &v in &edge[a + 1..] {
                self.pair_owner.insert((u, v), id);
            }
        }
        self.edges.push(edge);
        Ok(())
    }

    /// Whether the pair `{u, v}` is already covered by an edge.
    pub fn covers(&self, u: Vertex, v: Vertex) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.pair_owner.contains_key(&key)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn finish(self) -> LinearHypergraph {
        let mut edges = self.edges;
        edges.sort();
        LinearHypergraph(Hypergraph::from_sorted_unchecked(self.n, self.k, edges))
    }
}

/// A partition of `1..=n` into groups that no edge meets twice.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GroupPartition {
    pub groups: Vec<Vec<Vertex>>,
}

impl GroupPartition {
    /// Check the partition invariants against `h`.
    pub fn new(groups: Vec<Vec<Vertex>>, h: &Hypergraph) -> Result<Self> {
        let mut seen = vec![false; h.n() + 1];
        for g in &groups {
            for &v in g {
                h.check_vertex(v)?;
                if seen[v as usize] {
                    return Err(HypergraphError::BadPartition(format!("vertex {v} lies in two groups")));
                }
                seen[v as usize] = true;
            }
            if !h.is_strongly_independent(g)? {
                return Err(HypergraphError::BadPartition(format!(
                    "group {g:?} is met twice by some edge"
                )));
            }
        }
        if let Some(v) = h.vertices().find(|&v| !seen[v as usize]) {
            return Err(HypergraphError::BadPartition(format!("vertex {v} is not covered")));
        }
        let mut groups = groups;
        for g in &mut groups {
            g.sort_unstable();
        }
        Ok(GroupPartition { groups })
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Index of the group holding `v`.
    pub fn group_of(&self, v: Vertex) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&v))
    }

    /// True iff every edge of `h` has exactly one vertex in every group.
    pub fn is_transversal_for(&self, h: &Hypergraph) -> bool {
        h.edges().iter().all(|e| {
            self.groups
                .iter()
                .all(|g| e.iter().filter(|v| g.contains(v)).count() == 1)
        })
    }
}

/// A witness that a pattern occurs inside a host hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Embedding {
    /// `vertex_map[i]` is the host vertex that pattern vertex `i + 1` maps to.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[j]` is the host edge that pattern edge `j` maps onto.
    pub edge_map: Vec<Edge>,
}

impl Embedding {
    /// Check injectivity and that every pattern edge lands on the recorded host edge.
    pub fn is_valid(&self, host: &Hypergraph, pattern: &Hypergraph) -> bool {
        if self.vertex_map.len() != pattern.n() || self.edge_map.len() != pattern.edge_count() {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertex_map.iter().collect();
        if distinct.len() != self.vertex_map.len() {
            return false;
        }
        pattern.edges().iter().zip(&self.edge_map).all(|(pe, he)| {
            let mut image: Edge = pe.iter().map(|&v| self.vertex_map[v as usize - 1]).collect();
            image.sort_unstable();
            &image == he && host.contains_edge(he)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(n: usize, k: usize, edges: &[&[Vertex]]) -> LinearHypergraph {
        LinearHypergraph::new(n, k, edges.iter().copied()).unwrap()
    }

    #[test]
    fn validate_accepts_two_triples_through_one_vertex() {
        let h = validate([[1, 2, 3], [1, 4, 5]], 5, 3).unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn validate_reports_the_nonlinear_pair() {
        let err = validate([[1, 2, 3], [1, 2, 4]], 4, 3).unwrap_err();
        assert_eq!(
            err,
            HypergraphError::NotLinear {
                first: vec![1, 2, 3],
                second: vec![1, 2, 4]
            }
        );
    }

    #[test]
    fn graphs_are_linear() {
        let k4 = validate([[1, 2], [3, 4], [1, 3], [2, 4], [1, 4], [2, 3]], 4, 2).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.edges()[0], vec![1, 2]);
    }

    #[test]
    fn validate_error_kinds() {
        assert!(matches!(
            validate([[1, 2, 3], [3, 2, 1]], 3, 3),
            Err(HypergraphError::DuplicateEdge(_))
        ));
        assert!(matches!(
            validate([[1, 2, 9]], 5, 3),
            Err(HypergraphError::VertexOutOfRange { vertex: 9, n: 5 })
        ));
        assert!(matches!(
            validate([vec![1, 2]], 5, 3),
            Err(HypergraphError::NotUniform { found: 2, .. })
        ));
        assert!(matches!(
            validate([[1, 1, 2]], 5, 3),
            Err(HypergraphError::NotUniform { found: 2, .. })
        ));
        assert!(matches!(
            validate([[0, 1, 2]], 5, 3),
            Err(HypergraphError::VertexOutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn degrees_and_balls() {
        let h = lin(5, 3, &[&[1, 2, 3], &[1, 4, 5]]);
        assert_eq!(h.degree(1).unwrap(), 2);
        assert_eq!(h.max_degree(), (2, Some(1)));
        assert_eq!(
            h.neighborhood(1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![2, 3, 4, 5]
        );
        assert_eq!(h.outside_ball(1).unwrap().into_iter().collect::<Vec<_>>(), vec![1]);
        assert!(h.degree(6).is_err());
        assert!(h.neighborhood(0).is_err());
    }

    #[test]
    fn empty_and_isolated() {
        let h = LinearHypergraph::empty(4, 3).unwrap();
        assert_eq!(h.max_degree(), (0, Some(1)));
        assert!(h.neighborhood(2).unwrap().is_empty());
        assert_eq!(h.outside_ball(2).unwrap().len(), 4);
        assert_eq!(LinearHypergraph::empty(0, 3).unwrap().max_degree(), (0, None));
    }

    #[test]
    fn strong_independence() {
        let h = lin(3, 3, &[&[1, 2, 3]]);
        assert!(!h.is_strongly_independent(&[1, 2]).unwrap());
        assert!(h.is_strongly_independent(&[2]).unwrap());
        assert!(h.is_strongly_independent(&[4]).is_err());
    }

    #[test]
    fn partition_of_a_single_edge() {
        let h = lin(3, 3, &[&[1, 2, 3]]);
        let p = h.find_k_partition().unwrap();
        assert_eq!(p.groups, vec![vec![1], vec![2], vec![3]]);
        assert!(p.is_transversal_for(&h));
    }

    #[test]
    fn fan_is_not_tripartite() {
        let fan = lin(7, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[3, 6, 7]]);
        assert_eq!(
            fan.find_k_partition().unwrap_err(),
            HypergraphError::NotKPartite { k: 3 }
        );
    }

    #[test]
    fn group_partition_checks() {
        let h = lin(4, 2, &[&[1, 2], &[3, 4], &[1, 4], &[2, 3]]);
        assert!(GroupPartition::new(vec![vec![1, 3], vec![2, 4]], &h).is_ok());
        assert!(GroupPartition::new(vec![vec![1, 2], vec![3, 4]], &h).is_err());
        assert!(GroupPartition::new(vec![vec![1, 3], vec![2]], &h).is_err());
        assert!(GroupPartition::new(vec![vec![1, 3], vec![2, 4, 3]], &h).is_err());
    }

    #[test]
    fn nonlinear_hypergraph_is_allowed_in_the_plain_type() {
        let w = Hypergraph::new(4, 3, [[1, 2, 3], [1, 2, 4]]).unwrap();
        assert!(!w.is_linear());
        assert!(LinearHypergraph::try_from(w).is_err());
    }

    #[test]
    fn builder_tracks_pairs() {
        let mut b = LinearBuilder::new(6, 3).unwrap();
        b.add_edge(&[1, 2, 3]).unwrap();
        assert!(b.covers(3, 1));
        assert!(!b.covers(1, 4));
        assert!(b.add_edge(&[2, 3, 5]).is_err());
        b.add_edge(&[3, 4, 5]).unwrap();
        assert_eq!(b.finish().edge_count(), 2);
    }
}
