//! Named forbidden configurations and detectors for them.
//!
//! | name       | edges                         |
//! |------------|-------------------------------|
//! | `triangle` | 123 345 156                   |
//! | `fan3`     | 123 345 156 367 (center 3)    |
//! | `pasch`    | 123 345 156 246               |
//! | `c14`      | 123 345 156 267               |
//! | `w`        | 123 124 (not linear)          |
//!
//! Containment is the ordinary (non-induced) subhypergraph relation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{self, CanonicalForm};
use crate::embed::{self, IndexedHost, Pattern};
use crate::hypergraph::{Edge, Embedding, Hypergraph, LinearHypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("configuration {name} needs uniformity {needed}, got {got}")]
    BadUniformity { name: String, needed: usize, got: usize },
    #[error("host is {host}-uniform but the pattern is {pattern}-uniform")]
    UniformityMismatch { host: usize, pattern: usize },
    #[error("unknown configuration {0:?}; expected one of triangle, fan<k>, pasch, c14, w")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ConfigName {
    Triangle,
    Fan(usize),
    Pasch,
    C14,
    W,
}

impl fmt::Display for ConfigName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigName::Triangle => f.write_str("triangle"),
            ConfigName::Fan(k) => write!(f, "fan{k}"),
            ConfigName::Pasch => f.write_str("pasch"),
            ConfigName::C14 => f.write_str("c14"),
            ConfigName::W => f.write_str("w"),
        }
    }
}

impl FromStr for ConfigName {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "triangle" => Ok(ConfigName::Triangle),
            "pasch" => Ok(ConfigName::Pasch),
            "c14" => Ok(ConfigName::C14),
            "w" => Ok(ConfigName::W),
            _ => lower
                .strip_prefix("fan")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 2)
                .map(ConfigName::Fan)
                .ok_or_else(|| ConfigError::UnknownName(s.to_string())),
        }
    }
}

impl From<ConfigName> for String {
    fn from(c: ConfigName) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for ConfigName {
    type Error = ConfigError;

    fn try_from(s: String) -> Result<Self, ConfigError> {
        s.parse()
    }
}

impl ConfigName {
    pub fn uniformity(self) -> usize {
        match self {
            ConfigName::Fan(k) => k,
            _ => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub name: ConfigName,
    pub hypergraph: Hypergraph,
}

/// The `k`-fan: `k` edges through center `1` plus a crossing edge made of the
/// first non-center vertex of each. The 3-fan uses the triangle-plus-367 labeling
/// instead, whose center is vertex 3.
fn fan_edges(k: usize) -> (usize, Vec<Edge>) {
    if k == 3 {
        return (7, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6], vec![3, 6, 7]]);
    }
    let n = 1 + k * (k - 1);
    let mut edges = Vec::with_capacity(k + 1);
    let mut crossing = Vec::with_capacity(k);
    for i in 0..k {
        let first = (2 + i * (k - 1)) as Vertex;
        let mut f = vec![1];
        f.extend(first..first + (k - 1) as Vertex);
        crossing.push(first);
        edges.push(f);
    }
    edges.push(crossing);
    (n, edges)
}

impl Configuration {
    pub fn new(name: ConfigName) -> Result<Self, ConfigError> {
        let (n, edges): (usize, Vec<Edge>) = match name {
            ConfigName::Fan(k) if k >= 2 => fan_edges(k),
            ConfigName::Fan(k) => {
                return Err(ConfigError::BadUniformity {
                    name: name.to_string(),
                    needed: 2,
                    got: k,
                })
            }
            ConfigName::Triangle => (6, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]]),
            ConfigName::Pasch => (6, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6], vec![2, 4, 6]]),
            ConfigName::C14 => (7, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6], vec![2, 6, 7]]),
            ConfigName::W => (4, vec![vec![1, 2, 3], vec![1, 2, 4]]),
        };
        let hypergraph = Hypergraph::new(n, name.uniformity(), edges).expect("built-in configurations are well formed");
        Ok(Configuration { name, hypergraph })
    }

    /// Look a configuration up by name, checking it against uniformity `k`.
    pub fn with_uniformity(name: ConfigName, k: usize) -> Result<Self, ConfigError> {
        if name.uniformity() != k {
            return Err(ConfigError::BadUniformity {
                name: name.to_string(),
                needed: name.uniformity(),
                got: k,
            });
        }
        Self::new(name)
    }

    pub fn is_linear(&self) -> bool {
        self.hypergraph.is_linear()
    }
}

pub fn configuration(name: ConfigName) -> Result<Configuration, ConfigError> {
    Configuration::new(name)
}

fn embedding_from_map(host: &Hypergraph, pattern: &Hypergraph, map: Vec<Vertex>) -> Embedding {
    let edge_map = pattern
        .edges()
        .iter()
        .map(|e| {
            let mut img: Edge = e.iter().map(|&v| map[v as usize - 1]).collect();
            img.sort_unstable();
            debug_assert!(host.contains_edge(&img));
            img
        })
        .collect();
    Embedding {
        vertex_map: map,
        edge_map,
    }
}

/// The lexicographically least embedding of `c` into `host`, if any.
pub fn find_embedding(host: &Hypergraph, c: &Configuration) -> Result<Option<Embedding>, ConfigError> {
    find_pattern(host, &c.hypergraph)
}

/// [`find_embedding`] for an arbitrary pattern hypergraph.
pub fn find_pattern(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>, ConfigError> {
    if host.k() != pattern.k() {
        return Err(ConfigError::UniformityMismatch {
            host: host.k(),
            pattern: pattern.k(),
        });
    }
    let ih = IndexedHost::new(host);
    let p = Pattern::new(pattern);
    Ok(embed::find_map(&ih, &p, &[], &p.natural_order()).map(|m| embedding_from_map(host, pattern, m)))
}

/// Whether `host` contains a copy of `c`.
pub fn contains(host: &Hypergraph, c: &Configuration) -> Result<bool, ConfigError> {
    Ok(find_embedding(host, c)?.is_some())
}

/// Dedicated `k`-fan detector.
///
/// For each center `v` of degree at least `k` (in increasing order) and each
/// edge `g` avoiding `v`, look for a matching of the vertices of `g` into
/// distinct edges through `v`. In a linear host such a matching is exactly a
/// fan with center `v` and crossing edge `g`.
pub fn contains_fan(h: &LinearHypergraph, k: usize) -> Result<Option<Embedding>, ConfigError> {
    if h.k() != k {
        return Err(ConfigError::UniformityMismatch {
            host: h.k(),
            pattern: k,
        });
    }
    for v in h.vertices() {
        let through = h.incident(v);
        if through.len() < k {
            continue;
        }
        for (gi, g) in h.edges().iter().enumerate() {
            if h.edge_mask(gi).contains(v as usize) {
                continue;
            }
            if let Some(assignment) = match_crossing(h, g, through) {
                return Ok(Some(fan_embedding(h, k, v, g, &assignment)));
            }
        }
    }
    Ok(None)
}

/// Kuhn's augmenting-path matching from the vertices of `g` to the edges in
/// `through`. Returns, for each vertex of `g`, the matched edge index.
fn match_crossing(h: &Hypergraph, g: &[Vertex], through: &[usize]) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = g
        .iter()
        .map(|&x| {
            through
                .iter()
                .copied()
                .filter(|&f| h.edge_mask(f).contains(x as usize))
                .collect()
        })
        .collect();
    if adj.iter().any(|a| a.is_empty()) {
        return None;
    }
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    fn augment(x: usize, adj: &[Vec<usize>], owner: &mut BTreeMap<usize, usize>, seen: &mut BTreeSet<usize>) -> bool {
        for &f in &adj[x] {
            if !seen.insert(f) {
                continue;
            }
            let free = match owner.get(&f) {
                None => true,
                Some(&y) => augment(y, adj, owner, seen),
            };
            if free {
                owner.insert(f, x);
                return true;
            }
        }
        false
    }
    for x in 0..g.len() {
        if !augment(x, &adj, &mut owner, &mut BTreeSet::new()) {
            return None;
        }
    }
    let mut out = vec![0; g.len()];
    for (f, x) in owner {
        out[x] = f;
    }
    Some(out)
}

fn fan_embedding(h: &Hypergraph, k: usize, center: Vertex, g: &[Vertex], spokes: &[usize]) -> Embedding {
    let fan = Configuration::new(ConfigName::Fan(k)).expect("k >= 2");
    let pattern = &fan.hypergraph;
    // Locate center and crossing edge in the pattern.
    let p_center = pattern
        .vertices()
        .find(|&v| pattern.incident(v).len() == k)
        .expect("fan has a center");
    let p_cross = pattern
        .edges()
        .iter()
        .find(|e| !e.contains(&p_center))
        .expect("fan has a crossing edge")
        .clone();
    let mut pre = vec![(p_center, center)];
    pre.extend(p_cross.iter().copied().zip(g.iter().copied()));
    let mut map = vec![0; pattern.n()];
    for &(p, x) in &pre {
        map[p as usize - 1] = x;
    }
    // Each spoke through the pattern crossing vertex gets the matched host edge's remaining vertices.
    for (i, &px) in p_cross.iter().enumerate() {
        let p_spoke = pattern
            .edges()
            .iter()
            .find(|e| e.contains(&p_center) && e.contains(&px))
            .expect("every crossing vertex lies on a spoke");
        let host_rest: Vec<Vertex> = h.edges()[spokes[i]]
            .iter()
            .copied()
            .filter(|&u| u != center && u != g[i])
            .collect();
        let pattern_rest: Vec<Vertex> = p_spoke.iter().copied().filter(|&u| u != p_center && u != px).collect();
        for (p, x) in pattern_rest.into_iter().zip(host_rest) {
            map[p as usize - 1] = x;
        }
    }
    embedding_from_map(h, pattern, map)
}

/// Four distinct edges spanning at most seven vertices, if any exist.
///
/// Requires a 3-uniform host; linearity is not required.
pub fn find_f74_violation(h: &Hypergraph) -> Result<Option<[Edge; 4]>, ConfigError> {
    if h.k() != 3 {
        return Err(ConfigError::BadUniformity {
            name: "F(7,4)".into(),
            needed: 3,
            got: h.k(),
        });
    }
    let edges = h.edges();
    let m = edges.len();
    let union = |acc: &[Vertex], e: &[Vertex]| -> Vec<Vertex> {
        let mut u = acc.to_vec();
        for &v in e {
            if !u.contains(&v) {
                u.push(v);
            }
        }
        u
    };
    for a in 0..m {
        for b in a + 1..m {
            let u2 = union(&edges[a], &edges[b]);
            for c in b + 1..m {
                let u3 = union(&u2, &edges[c]);
                if u3.len() > 7 {
                    continue;
                }
                for d in c + 1..m {
                    if union(&u3, &edges[d]).len() <= 7 {
                        return Ok(Some([
                            edges[a].clone(),
                            edges[b].clone(),
                            edges[c].clone(),
                            edges[d].clone(),
                        ]));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_f74_free(h: &Hypergraph) -> Result<bool, ConfigError> {
    Ok(find_f74_violation(h)?.is_none())
}

/// One isomorphism class of four distinct triples on at most seven points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F74Member {
    /// Canonical form on the 7-point ground set.
    pub canonical: CanonicalForm,
    /// Number of points actually covered by the four triples.
    pub points: usize,
    pub contains: BTreeSet<ConfigName>,
}

/// The configurations every member of `F(7,4)` is checked against.
pub const F74_WITNESSES: [ConfigName; 4] = [ConfigName::Fan(3), ConfigName::Pasch, ConfigName::C14, ConfigName::W];

/// Enumerate all 4-triple systems on at most seven points up to isomorphism,
/// tagging each with the members of [`F74_WITNESSES`] it contains.
///
/// Generation adds one triple at a time on a fixed 7-point ground set and
/// keeps one representative per canonical form at each size.
pub fn classify_f74_members() -> Vec<F74Member> {
    let all_triples: Vec<Edge> = (1..=7u32)
        .flat_map(|a| (a + 1..=7).flat_map(move |b| (b + 1..=7).map(move |c| vec![a, b, c])))
        .collect();
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canon::canonical_form(&Hypergraph::new(7, 3, [[1, 2, 3]]).expect("valid")).expect("small"));
    for _ in 1..4 {
        let mut next = BTreeSet::new();
        for form in &level {
            for t in &all_triples {
                if form.edges.contains(t) {
                    continue;
                }
                let mut edges = form.edges.clone();
                edges.push(t.clone());
                let h = Hypergraph::new(7, 3, edges).expect("distinct triples");
                next.insert(canon::canonical_form(&h).expect("7 points"));
            }
        }
        level = next;
    }
    let witnesses: Vec<Configuration> = F74_WITNESSES
        .iter()
        .map(|&c| Configuration::new(c).expect("built-in"))
        .collect();
    level
        .into_iter()
        .map(|canonical| {
            let h = canonical.to_hypergraph();
            let points = h.vertices().filter(|&v| !h.incident(v).is_empty()).count();
            let contains = witnesses
                .iter()
                .filter(|c| contains(&h, c).expect("same uniformity"))
                .map(|c| c.name)
                .collect();
            F74Member {
                canonical,
                points,
                contains,
            }
        })
        .collect()
}
