//! Exhaustive search for the largest linear `k`-graphs on `n` points avoiding
//! a set of configurations, with every extremal system up to isomorphism.
//!
//! States are edge sets. A child adds any still-compatible edge; children are
//! deduplicated by canonical form against a per-depth LRU memo shared by all
//! workers, so every isomorphism class of reachable state is expanded at
//! least once (more often only after eviction). A state is cut when an upper
//! bound on its completions is below the best size found anywhere, which
//! keeps every state that could grow into an extremal system.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use lru::LruCache;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{fan_bound_given_min_max_degree, fan_upper_bound, verify_extremal_structure, FanBound};
use crate::canon::{self, CanonicalForm, Certificate};
use crate::configurations::{classify_f74_members, ConfigError, ConfigName, Configuration};
use crate::constructions::{
    c52_edges, extend_colored_graph, field_transversal_design, one_factorizations, transversal_design, truncate,
    wagner_graph,
};
use crate::embed::{self, MaskHost, Pattern};
use crate::hypergraph::{Hypergraph, LinearHypergraph};

/// Largest `n` searched for triple systems (and `k >= 4`) without an override.
pub const DEFAULT_CAP: usize = 12;
/// Largest `n` searched for graphs without an override.
pub const DEFAULT_GRAPH_CAP: usize = 14;
/// Masks are `u64`, so this is a hard ceiling even with an override.
pub const HARD_CAP: usize = 64;

pub fn default_cap(k: usize) -> usize {
    if k == 2 {
        DEFAULT_GRAPH_CAP
    } else {
        DEFAULT_CAP
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the search cap {cap} for k = {k} (raise it explicitly to proceed)")]
    CapExceeded { n: usize, k: usize, cap: usize },
    #[error("uniformity {0} is outside 2..=16")]
    BadUniformity(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{claim} falsified: {detail}")]
    Falsified {
        claim: String,
        detail: String,
        counterexample: Option<Box<Hypergraph>>,
    },
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the global rayon pool.
    pub workers: usize,
    /// Overrides [`default_cap`].
    pub cap: Option<usize>,
    /// Ignore the cap (up to [`HARD_CAP`]).
    pub i_have_time: bool,
    /// Most witnesses kept; the smallest certificates win, so the kept set is deterministic.
    pub witness_limit: usize,
    /// Total canonical forms remembered across all depths.
    pub memo_entries: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 0,
            cap: None,
            i_have_time: false,
            witness_limit: 1000,
            memo_entries: 1 << 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub forbidden: Vec<ConfigName>,
    pub max_edges: usize,
    /// Canonical forms of extremal systems, one per isomorphism class.
    pub witnesses: Vec<CanonicalForm>,
    pub witnesses_truncated: bool,
    /// Present when the fan of matching uniformity is forbidden.
    pub fan_bound: Option<FanBound>,
    pub nodes_explored: u64,
    pub wall_time_ms: u64,
}

enum Check {
    Fan,
    Pattern(Pattern),
}

struct Ctx {
    n: usize,
    k: usize,
    fan: bool,
    checks: Vec<Check>,
    best: AtomicUsize,
    nodes: AtomicU64,
    memo: Vec<Mutex<LruCache<Certificate, ()>>>,
    split_depth: usize,
    witness_limit: usize,
}

#[derive(Clone)]
struct Node {
    edges: Vec<u64>,
    adj: Vec<u64>,
    candidates: Vec<u64>,
    cert: Certificate,
}

#[derive(Default)]
struct Found {
    best: usize,
    certs: BTreeSet<Certificate>,
    truncated: bool,
}

impl Found {
    fn record(&mut self, size: usize, cert: &Certificate, limit: usize) {
        if size > self.best {
            self.best = size;
            self.certs.clear();
            self.truncated = false;
        }
        if size == self.best {
            self.certs.insert(cert.clone());
            if self.certs.len() > limit {
                self.certs.pop_last();
                self.truncated = true;
            }
        }
    }

    fn merge(mut self, other: Found, limit: usize) -> Found {
        if other.best > self.best {
            return other;
        }
        if other.best == self.best {
            self.truncated |= other.truncated;
            self.certs.extend(other.certs);
            while self.certs.len() > limit {
                self.certs.pop_last();
                self.truncated = true;
            }
        }
        self
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl Ctx {
    /// Whether `edges` (whose last entry is the new edge `g`) contains a
    /// forbidden configuration using `g`.
    fn creates_forbidden(&self, edges: &[u64], adj: &[u64], g: u64) -> bool {
        for check in &self.checks {
            let hit = match check {
                Check::Fan => {
                    // g as the crossing edge of a fan centered outside g
                    (0..self.n).any(|v| g >> v & 1 == 0 && adj[v] & g == g)
                        // or g through the center of a fan with another crossing edge
                        || bits(g).any(|v| edges.iter().any(|&e| e >> v & 1 == 0 && adj[v] & e == e))
                }
                Check::Pattern(p) => {
                    let host = MaskHost {
                        n: self.n,
                        edges,
                        adjacency: adj,
                    };
                    let verts: Vec<u32> = bits(g).map(|v| v as u32 + 1).collect();
                    embed::find_map_through(&host, p, &verts).is_some()
                }
            };
            if hit {
                return true;
            }
        }
        false
    }

    fn with_edge(&self, node: &Node, g: u64) -> (Vec<u64>, Vec<u64>) {
        let mut edges = node.edges.clone();
        edges.push(g);
        let mut adj = node.adj.clone();
        for v in bits(g) {
            adj[v] |= g & !(1 << v);
        }
        (edges, adj)
    }

    fn upper_bound(&self, node: &Node, valid: &[u64]) -> usize {
        let e = node.edges.len();
        let mut through = vec![0usize; self.n];
        for &c in valid {
            for v in bits(c) {
                through[v] += 1;
            }
        }
        let per_vertex: usize = (0..self.n)
            .map(|v| {
                let free = self.n - 1 - node.adj[v].count_ones() as usize;
                (free / (self.k - 1)).min(through[v])
            })
            .sum();
        let mut ub = e + valid.len().min(per_vertex / self.k);
        if self.fan {
            let delta = (0..self.n)
                .map(|v| node.edges.iter().filter(|&&x| x >> v & 1 == 1).count())
                .max()
                .unwrap_or(0);
            ub = ub.min(fan_bound_given_min_max_degree(self.n, self.k, delta) as usize);
        }
        ub
    }

    fn children(&self, node: &Node, valid: &[u64]) -> Vec<Node> {
        let depth = node.edges.len() + 1;
        let mut out = Vec::new();
        for &g in valid {
            let (edges, adj) = self.with_edge(node, g);
            let cert = canon::canonize_masks(self.n, &edges).cert;
            {
                let mut memo = self.memo[depth].lock().expect("memo lock");
                if memo.put(cert.clone(), ()).is_some() {
                    continue;
                }
            }
            let candidates = valid
                .iter()
                .copied()
                .filter(|&c| c != g && (c & g).count_ones() <= 1)
                .collect();
            out.push(Node {
                edges,
                adj,
                candidates,
                cert,
            });
        }
        out
    }

    fn explore(&self, node: Node) -> Found {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let size = node.edges.len();
        let mut found = Found::default();
        found.record(size, &node.cert, self.witness_limit);
        self.best.fetch_max(size, Ordering::Relaxed);

        let valid: Vec<u64> = node
            .candidates
            .iter()
            .copied()
            .filter(|&c| {
                let (edges, adj) = self.with_edge(&node, c);
                !self.creates_forbidden(&edges, &adj, c)
            })
            .collect();
        if valid.is_empty() || self.upper_bound(&node, &valid) < self.best.load(Ordering::Relaxed) {
            return found;
        }
        let kids = self.children(&node, &valid);
        let limit = self.witness_limit;
        if size < self.split_depth {
            kids.into_par_iter()
                .map(|c| self.explore(c))
                .reduce(Found::default, |a, b| a.merge(b, limit))
                .merge(found, limit)
        } else {
            kids.into_iter().fold(found, |acc, c| acc.merge(self.explore(c), limit))
        }
    }
}

fn all_edges(n: usize, k: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            go(v + 1, n, left - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k, 0, &mut out);
    out
}

/// The most edges in a linear `k`-graph on `n` points containing none of
/// `forbidden`, with all extremal systems up to isomorphism.
pub fn max_free(
    n: usize,
    k: usize,
    forbidden: &[ConfigName],
    opts: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    run(n, k, forbidden, opts, true)
}

fn run(
    n: usize,
    k: usize,
    forbidden: &[ConfigName],
    opts: &SearchOptions,
    fan_shortcut: bool,
) -> Result<SearchReport, SearchError> {
    if !(2..=canon::MAX_UNIFORMITY).contains(&k) {
        return Err(SearchError::BadUniformity(k));
    }
    let cap = if opts.i_have_time {
        HARD_CAP
    } else {
        opts.cap.unwrap_or_else(|| default_cap(k)).min(HARD_CAP)
    };
    if n > cap {
        return Err(SearchError::CapExceeded { n, k, cap });
    }
    let mut names: Vec<ConfigName> = forbidden.to_vec();
    names.sort();
    names.dedup();
    let mut checks = Vec::new();
    let mut fan = false;
    for &name in &names {
        let c = Configuration::with_uniformity(name, k)?;
        if name == ConfigName::Fan(k) {
            fan = true;
            checks.push(if fan_shortcut {
                Check::Fan
            } else {
                Check::Pattern(Pattern::new(&c.hypergraph))
            });
        } else if c.is_linear() {
            checks.push(Check::Pattern(Pattern::new(&c.hypergraph)));
        }
        // a non-linear pattern never embeds in a linear host
    }
    let start = Instant::now();
    let max_depth = if k <= n { n * (n - 1) / (k * (k - 1)) } else { 0 };
    let per_depth = NonZeroUsize::new((opts.memo_entries / (max_depth + 1)).max(1)).expect("non-zero");
    let ctx = Ctx {
        n,
        k,
        fan,
        checks,
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        memo: (0..=max_depth + 1)
            .map(|_| Mutex::new(LruCache::new(per_depth)))
            .collect(),
        split_depth: 3,
        witness_limit: opts.witness_limit.max(1),
    };
    let root = Node {
        edges: Vec::new(),
        adj: vec![0; n],
        candidates: if k <= n { all_edges(n, k) } else { Vec::new() },
        cert: Vec::new(),
    };
    let found = if opts.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| SearchError::BadParams(e.to_string()))?
            .install(|| ctx.explore(root))
    } else {
        ctx.explore(root)
    };
    let witnesses = found.certs.iter().map(|c| canon::form_from_cert(n, k, c)).collect();
    Ok(SearchReport {
        n,
        k,
        forbidden: names,
        max_edges: found.best,
        witnesses,
        witnesses_truncated: found.truncated,
        fan_bound: fan.then(|| fan_upper_bound(n, k)),
        nodes_explored: ctx.nodes.load(Ordering::Relaxed),
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Number of isomorphism classes of extremal systems.
pub fn count_extremal(
    n: usize,
    k: usize,
    forbidden: &[ConfigName],
    opts: &SearchOptions,
) -> Result<usize, SearchError> {
    let opts = SearchOptions {
        witness_limit: usize::MAX,
        ..opts.clone()
    };
    Ok(max_free(n, k, forbidden, &opts)?.witnesses.len())
}

/// A statement checked by [`verify_claim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "kebab-case")]
pub enum Claim {
    /// For `n = km`: the fan-free maximum is `m^2` and every extremal system is a transversal design.
    DivisibleEquality { n: usize, k: usize },
    /// For `n = k(m+1) - 1`: the fan-free maximum is `m^2 + m`.
    OneShortEquality { n: usize, k: usize },
    /// For triple systems on `3m + 2` points: every extremal fan-free system is
    /// a truncated design or, for `m = 3, 4`, an extension of the Wagner or
    /// `C_{5,2}` graph.
    OneShortClassification { m: usize },
    /// Every system of four triples on at most seven points contains a fan,
    /// Pasch, C14 or W.
    F74Classification,
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Claim::DivisibleEquality { n, k } => write!(f, "divisible-case equality (n={n}, k={k})"),
            Claim::OneShortEquality { n, k } => write!(f, "one-short equality (n={n}, k={k})"),
            Claim::OneShortClassification { m } => write!(f, "one-short classification (m={m})"),
            Claim::F74Classification => write!(f, "F(7,4) classification"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub claim: Claim,
    pub expected: usize,
    pub found: usize,
    /// Extremal systems (or F(7,4) classes) checked individually.
    pub checked: usize,
    pub notes: Vec<String>,
    pub report: Option<SearchReport>,
}

fn falsified(claim: Claim, detail: String, counterexample: Option<Hypergraph>) -> SearchError {
    SearchError::Falsified {
        claim: claim.to_string(),
        detail,
        counterexample: counterexample.map(Box::new),
    }
}

/// Reference extremal fan-free triple systems on `3m + 2` points, as
/// canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneShortReferences {
    /// Truncations at every vertex of the cyclic and field designs of order
    /// `m + 1`; together these cover every Latin square of order at most 4.
    pub truncated: Vec<CanonicalForm>,
    /// Extensions of every proper 3-coloring of the Wagner graph (`m = 3`) or
    /// every 1-factorization of `C_{5,2}` (`m = 4`) that are not truncated designs.
    pub extensions: Vec<CanonicalForm>,
}

impl OneShortReferences {
    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.truncated.contains(form) || self.extensions.contains(form)
    }

    pub fn len(&self) -> usize {
        self.truncated.len() + self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn form(h: &Hypergraph) -> CanonicalForm {
    canon::canonical_form_with_limit(h, canon::HARD_MAX_VERTICES).expect("small reference system")
}

pub fn one_short_references(m: usize) -> OneShortReferences {
    let mut designs = vec![transversal_design(m + 1, 3).expect("cyclic designs exist")];
    if let Ok(f) = field_transversal_design(m + 1, 3) {
        designs.push(f);
    }
    let mut truncated = BTreeSet::new();
    for d in &designs {
        for v in d.vertices() {
            truncated.insert(form(&truncate(d, v).expect("vertex in range")));
        }
    }
    let colorings = match m {
        3 => one_factorizations(8, &wagner_graph().edges(), 3),
        4 => one_factorizations(10, &c52_edges(), 4),
        _ => Vec::new(),
    };
    let extensions: BTreeSet<CanonicalForm> = colorings
        .iter()
        .map(|g| form(&extend_colored_graph(g).expect("proper coloring")))
        .filter(|f| !truncated.contains(f))
        .collect();
    OneShortReferences {
        truncated: truncated.into_iter().collect(),
        extensions: extensions.into_iter().collect(),
    }
}

/// Run the search (or enumeration) behind `claim` and check its prediction.
pub fn verify_claim(claim: Claim, opts: &SearchOptions) -> Result<Verification, SearchError> {
    let fan_free = |n: usize, k: usize| max_free(n, k, &[ConfigName::Fan(k)], opts);
    match claim {
        Claim::DivisibleEquality { n, k } => {
            if k < 2 || n % k != 0 {
                return Err(SearchError::BadParams(format!("{n} is not a multiple of {k}")));
            }
            let m = n / k;
            let report = fan_free(n, k)?;
            if report.max_edges != m * m {
                return Err(falsified(
                    claim,
                    format!("maximum is {}, expected {}", report.max_edges, m * m),
                    report.witnesses.first().map(CanonicalForm::to_hypergraph),
                ));
            }
            for w in &report.witnesses {
                let h = LinearHypergraph::try_from(w.to_hypergraph()).expect("witnesses are linear");
                if let Err(e) = verify_extremal_structure(&h) {
                    return Err(falsified(claim, e.to_string(), Some(h.into_inner())));
                }
            }
            Ok(Verification {
                claim,
                expected: m * m,
                found: report.max_edges,
                checked: report.witnesses.len(),
                notes: vec!["every extremal system splits into k groups".into()],
                report: Some(report),
            })
        }
        Claim::OneShortEquality { n, k } => {
            if k < 2 || (n + 1) % k != 0 || n + 1 < k {
                return Err(SearchError::BadParams(format!(
                    "{n} is not one short of a multiple of {k}"
                )));
            }
            let m = (n + 1) / k - 1;
            let report = fan_free(n, k)?;
            if report.max_edges != m * m + m {
                return Err(falsified(
                    claim,
                    format!("maximum is {}, expected {}", report.max_edges, m * m + m),
                    report.witnesses.first().map(CanonicalForm::to_hypergraph),
                ));
            }
            Ok(Verification {
                claim,
                expected: m * m + m,
                found: report.max_edges,
                checked: report.witnesses.len(),
                notes: Vec::new(),
                report: Some(report),
            })
        }
        Claim::OneShortClassification { m } => {
            if m == 0 {
                return Err(SearchError::BadParams("m must be positive".into()));
            }
            let n = 3 * m + 2;
            let report = fan_free(n, 3)?;
            if report.max_edges != m * m + m {
                return Err(falsified(
                    claim,
                    format!("maximum is {}, expected {}", report.max_edges, m * m + m),
                    report.witnesses.first().map(CanonicalForm::to_hypergraph),
                ));
            }
            let refs = one_short_references(m);
            for w in &report.witnesses {
                if !refs.contains(w) {
                    return Err(falsified(
                        claim,
                        "extremal system outside the reference classes".into(),
                        Some(w.to_hypergraph()),
                    ));
                }
            }
            let mut notes = vec![format!(
                "{} truncated-design classes, {} extension classes",
                refs.truncated.len(),
                refs.extensions.len()
            )];
            if m >= 4 {
                notes.push("reference list holds cyclic and field designs only".into());
            }
            Ok(Verification {
                claim,
                expected: m * m + m,
                found: report.max_edges,
                checked: report.witnesses.len(),
                notes,
                report: Some(report),
            })
        }
        Claim::F74Classification => {
            let members = classify_f74_members();
            if let Some(bad) = members.iter().find(|m| m.contains.is_empty()) {
                return Err(falsified(
                    claim,
                    "class contains none of the four configurations".into(),
                    Some(bad.canonical.to_hypergraph()),
                ));
            }
            Ok(Verification {
                claim,
                expected: members.len(),
                found: members.len(),
                checked: members.len(),
                notes: Vec::new(),
                report: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan_max(n: usize, k: usize) -> SearchReport {
        max_free(n, k, &[ConfigName::Fan(k)], &SearchOptions::default()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(fan_max(5, 3).max_edges, 2);
        assert_eq!(fan_max(6, 3).max_edges, 4);
        assert_eq!(fan_max(7, 3).max_edges, 4);
        assert_eq!(fan_max(4, 2).max_edges, 4);
        assert_eq!(fan_max(5, 2).max_edges, 6);
        assert_eq!(fan_max(2, 3).max_edges, 0);
    }

    #[test]
    fn packing_without_forbidden_sets() {
        let opts = SearchOptions::default();
        // Fano plane and complete graphs
        assert_eq!(max_free(7, 3, &[], &opts).unwrap().max_edges, 7);
        assert_eq!(max_free(5, 2, &[], &opts).unwrap().max_edges, 10);
        // W never embeds in a linear system
        assert_eq!(max_free(7, 3, &[ConfigName::W], &opts).unwrap().max_edges, 7);
    }

    #[test]
    fn witness_at_seven_points() {
        let r = fan_max(7, 3);
        let expected =
            canon::canonical_form(&Hypergraph::new(7, 3, [[1, 2, 3], [4, 5, 6], [1, 5, 7], [2, 6, 7]]).unwrap())
                .unwrap();
        assert!(r.witnesses.contains(&expected));
    }

    #[test]
    fn caps() {
        let opts = SearchOptions::default();
        assert_eq!(
            max_free(13, 3, &[ConfigName::Fan(3)], &opts),
            Err(SearchError::CapExceeded { n: 13, k: 3, cap: 12 })
        );
        assert!(matches!(
            max_free(15, 2, &[], &opts),
            Err(SearchError::CapExceeded { cap: 14, .. })
        ));
        assert!(matches!(
            max_free(6, 2, &[ConfigName::Pasch], &opts),
            Err(SearchError::Config(_))
        ));
    }

    #[test]
    fn fan_shortcut_matches_the_matcher() {
        for (n, k) in [(7, 3), (8, 3), (6, 2), (8, 4)] {
            let opts = SearchOptions::default();
            let fast = run(n, k, &[ConfigName::Fan(k)], &opts, true).unwrap();
            let slow = run(n, k, &[ConfigName::Fan(k)], &opts, false).unwrap();
            assert_eq!(fast.max_edges, slow.max_edges, "n={n} k={k}");
            assert_eq!(fast.witnesses, slow.witnesses, "n={n} k={k}");
        }
    }

    #[test]
    fn worker_counts_agree() {
        let one = max_free(
            8,
            3,
            &[ConfigName::Fan(3)],
            &SearchOptions {
                workers: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let four = max_free(
            8,
            3,
            &[ConfigName::Fan(3)],
            &SearchOptions {
                workers: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one.max_edges, 6);
        assert_eq!(one.witnesses, four.witnesses);
    }

    #[test]
    fn claims_at_small_sizes() {
        let opts = SearchOptions::default();
        assert!(verify_claim(Claim::DivisibleEquality { n: 6, k: 3 }, &opts).is_ok());
        assert!(verify_claim(Claim::OneShortEquality { n: 5, k: 3 }, &opts).is_ok());
        let v = verify_claim(Claim::OneShortClassification { m: 1 }, &opts).unwrap();
        assert_eq!(v.found, 2);
        assert!(matches!(
            verify_claim(Claim::DivisibleEquality { n: 7, k: 3 }, &opts),
            Err(SearchError::BadParams(_))
        ));
    }

    #[test]
    fn reference_classes() {
        assert_eq!(one_short_references(1).len(), 1);
        assert_eq!(one_short_references(2).len(), 1);
        let r3 = one_short_references(3);
        // order-4 designs from Z_4 and from GF(4) truncate to different systems
        assert_eq!(r3.truncated.len(), 2);
        assert_eq!(r3.extensions.len(), 2);
    }
}
