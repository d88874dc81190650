//! Backtracking subhypergraph matcher shared by the detectors and the search.
//!
//! Pattern vertices are assigned one at a time in a caller-chosen order. A
//! candidate image is accepted when, for every pattern edge through the
//! vertex, the images assigned so far lie together in some host edge. Once
//! all vertices of a pattern edge are placed that host edge is its image, so a
//! complete assignment is an embedding. Candidates come from the host
//! neighborhood of an already placed pattern neighbor, in increasing order, so
//! with the natural vertex order the first hit is the lexicographically least
//! vertex map.

use crate::hypergraph::{Edge, Hypergraph, Vertex};

pub(crate) trait Host {
    fn vertex_count(&self) -> usize;
    /// Push the neighbors of `v` onto `out` in increasing order.
    fn neighbors_into(&self, v: Vertex, out: &mut Vec<Vertex>);
    /// Whether a single edge contains every vertex of `verts` (`len >= 2`).
    fn covered(&self, verts: &[Vertex]) -> bool;
}

/// [`Host`] view of an arbitrary [`Hypergraph`].
pub(crate) struct IndexedHost<'a> {
    h: &'a Hypergraph,
    neighbors: Vec<Vec<Vertex>>,
}

impl<'a> IndexedHost<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        let mut neighbors = vec![Vec::new(); h.n() + 1];
        for v in h.vertices() {
            let mut nb: Vec<Vertex> = h
                .incident(v)
                .iter()
                .flat_map(|&i| h.edges()[i].iter().copied())
                .filter(|&u| u != v)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            neighbors[v as usize] = nb;
        }
        IndexedHost { h, neighbors }
    }
}

impl Host for IndexedHost<'_> {
    fn vertex_count(&self) -> usize {
        self.h.n()
    }

    fn neighbors_into(&self, v: Vertex, out: &mut Vec<Vertex>) {
        out.extend_from_slice(&self.neighbors[v as usize]);
    }

    fn covered(&self, verts: &[Vertex]) -> bool {
        let pivot = verts
            .iter()
            .copied()
            .min_by_key(|&v| self.h.incident(v).len())
            .expect("non-empty vertex list");
        self.h.incident(pivot).iter().any(|&i| {
            let m = self.h.edge_mask(i);
            verts.iter().all(|&v| m.contains(v as usize))
        })
    }
}

/// [`Host`] over at most 64 vertices with edges as bit masks (bit `v - 1`).
pub(crate) struct MaskHost<'a> {
    pub n: usize,
    pub edges: &'a [u64],
    pub adjacency: &'a [u64],
}

impl Host for MaskHost<'_> {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn neighbors_into(&self, v: Vertex, out: &mut Vec<Vertex>) {
        let mut m = self.adjacency[v as usize - 1];
        while m != 0 {
            out.push(m.trailing_zeros() + 1);
            m &= m - 1;
        }
    }

    fn covered(&self, verts: &[Vertex]) -> bool {
        let want = verts.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        self.edges.iter().any(|&e| e & want == want)
    }
}

/// A pattern prepared for matching.
pub(crate) struct Pattern {
    pub n: usize,
    pub edges: Vec<Edge>,
    edges_of: Vec<Vec<usize>>,
}

impl Pattern {
    pub fn new(h: &Hypergraph) -> Self {
        let mut edges_of = vec![Vec::new(); h.n() + 1];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                edges_of[v as usize].push(i);
            }
        }
        Pattern {
            n: h.n(),
            edges: h.edges().to_vec(),
            edges_of,
        }
    }

    /// Pattern vertices other than `fixed`, breadth-first from `fixed`,
    /// falling back to increasing order for anything unreachable.
    pub fn order_from(&self, fixed: &[Vertex]) -> Vec<Vertex> {
        let mut seen = vec![false; self.n + 1];
        for &v in fixed {
            seen[v as usize] = true;
        }
        let mut order = Vec::new();
        let mut frontier: Vec<Vertex> = fixed.to_vec();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &v in &frontier {
                for &i in &self.edges_of[v as usize] {
                    for &u in &self.edges[i] {
                        if !seen[u as usize] {
                            seen[u as usize] = true;
                            next.push(u);
                        }
                    }
                }
            }
            next.sort_unstable();
            order.extend_from_slice(&next);
            frontier = next;
        }
        order.extend((1..=self.n as Vertex).filter(|&v| !seen[v as usize]));
        order
    }

    pub fn natural_order(&self) -> Vec<Vertex> {
        (1..=self.n as Vertex).collect()
    }
}

struct State<'p, H: Host> {
    host: &'p H,
    pattern: &'p Pattern,
    map: Vec<Vertex>,
    used: Vec<bool>,
    scratch: Vec<Vertex>,
}

impl<H: Host> State<'_, H> {
    fn consistent(&mut self, p: Vertex) -> bool {
        for &i in &self.pattern.edges_of[p as usize] {
            self.scratch.clear();
            for &u in &self.pattern.edges[i] {
                let img = self.map[u as usize];
                if img != 0 {
                    self.scratch.push(img);
                }
            }
            if self.scratch.len() >= 2 && !self.host.covered(&self.scratch) {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, order: &[Vertex]) -> bool {
        let Some((&p, rest)) = order.split_first() else {
            return true;
        };
        let anchor = self.pattern.edges_of[p as usize]
            .iter()
            .flat_map(|&i| self.pattern.edges[i].iter())
            .map(|&u| self.map[u as usize])
            .find(|&img| img != 0);
        let mut candidates = Vec::new();
        match anchor {
            Some(a) => self.host.neighbors_into(a, &mut candidates),
            None => candidates.extend(1..=self.host.vertex_count() as Vertex),
        }
        for c in candidates {
            if self.used[c as usize] {
                continue;
            }
            self.map[p as usize] = c;
            self.used[c as usize] = true;
            if self.consistent(p) && self.extend(rest) {
                return true;
            }
            self.used[c as usize] = false;
            self.map[p as usize] = 0;
        }
        false
    }
}

/// Find a vertex map (`result[i]` is the image of pattern vertex `i + 1`)
/// extending the preassignment `pre`, assigning the rest in `order`.
pub(crate) fn find_map<H: Host>(
    host: &H,
    pattern: &Pattern,
    pre: &[(Vertex, Vertex)],
    order: &[Vertex],
) -> Option<Vec<Vertex>> {
    if pattern.n > host.vertex_count() {
        return None;
    }
    let mut st = State {
        host,
        pattern,
        map: vec![0; pattern.n + 1],
        used: vec![false; host.vertex_count() + 1],
        scratch: Vec::new(),
    };
    for &(p, h) in pre {
        if st.used[h as usize] {
            return None;
        }
        st.map[p as usize] = h;
        st.used[h as usize] = true;
    }
    for &(p, _) in pre {
        if !st.consistent(p) {
            return None;
        }
    }
    if st.extend(order) {
        Some(st.map[1..].to_vec())
    } else {
        None
    }
}

/// Find an embedding of `pattern` that maps some pattern edge onto `host_edge`.
pub(crate) fn find_map_through<H: Host>(host: &H, pattern: &Pattern, host_edge: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut perm = host_edge.to_vec();
    for pe in &pattern.edges {
        if pe.len() != host_edge.len() {
            continue;
        }
        let order = pattern.order_from(pe);
        perm.sort_unstable();
        loop {
            let pre: Vec<(Vertex, Vertex)> = pe.iter().copied().zip(perm.iter().copied()).collect();
            if let Some(m) = find_map(host, pattern, &pre, &order) {
                return Some(m);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    None
}

pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
