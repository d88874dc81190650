//! Canonical labeling for small uniform hypergraphs.
//!
//! Individualization-refinement: vertices are split into an ordered partition
//! by an isomorphism-invariant refinement (degree, then how each edge through
//! a vertex meets the current cells), and the remaining ties are resolved by
//! backtracking. The canonical form is the smallest sorted edge list among all
//! labelings produced at the leaves of that search tree. Automorphisms found
//! along the way prune sibling branches.
//!
//! The search is exponential in the worst case, which is why it is capped
//! at [`DEFAULT_MAX_VERTICES`] unless the caller raises the limit.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph, Vertex};

pub const DEFAULT_MAX_VERTICES: usize = 16;

/// Vertex sets are stored as `u64` masks, so this is a hard ceiling.
pub const HARD_MAX_VERTICES: usize = 64;

/// Edges are packed one byte per vertex into a `u128`.
pub const MAX_UNIFORMITY: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("{n} vertices exceeds the canonical-form limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("uniformity {0} exceeds the supported maximum of {MAX_UNIFORMITY}")]
    UniformityTooLarge(usize),
}

/// Relabeling-invariant representative of an isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_sorted_unchecked(self.n, self.k, self.edges.clone())
    }
}

/// Packed certificate: the sorted list of relabeled edges, one `u128` per edge.
pub(crate) type Certificate = Vec<u128>;

pub(crate) struct Canon {
    /// `labels[v]` is the new 0-based label of 0-based vertex `v`.
    pub labels: Vec<u8>,
    pub cert: Certificate,
}

fn check_limits(n: usize, k: usize, limit: usize) -> Result<(), CanonError> {
    let limit = limit.min(HARD_MAX_VERTICES);
    if n > limit {
        return Err(CanonError::TooLarge { n, limit });
    }
    if k > MAX_UNIFORMITY {
        return Err(CanonError::UniformityTooLarge(k));
    }
    Ok(())
}

pub(crate) fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
        .collect()
}

/// The canonical form of `h`, refusing inputs above [`DEFAULT_MAX_VERTICES`].
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm, CanonError> {
    canonical_form_with_limit(h, DEFAULT_MAX_VERTICES)
}

pub fn canonical_form_with_limit(h: &Hypergraph, limit: usize) -> Result<CanonicalForm, CanonError> {
    check_limits(h.n(), h.k(), limit)?;
    let canon = canonize_masks(h.n(), &edge_masks(h));
    Ok(form_from_cert(h.n(), h.k(), &canon.cert))
}

/// A canonical relabeling: `result[v - 1]` is the new name of vertex `v`.
pub fn canonical_labeling(h: &Hypergraph, limit: usize) -> Result<Vec<Vertex>, CanonError> {
    check_limits(h.n(), h.k(), limit)?;
    let canon = canonize_masks(h.n(), &edge_masks(h));
    Ok(canon.labels.iter().map(|&l| l as Vertex + 1).collect())
}

pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool, CanonError> {
    if a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.degrees().iter().copied().fold(vec![0; a.n() + 1], tally)
        != b.degrees().iter().copied().fold(vec![0; b.n() + 1], tally)
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn tally(mut acc: Vec<usize>, d: usize) -> Vec<usize> {
    if d >= acc.len() {
        acc.resize(d + 1, 0);
    }
    acc[d] += 1;
    acc
}

pub(crate) fn form_from_cert(n: usize, k: usize, cert: &[u128]) -> CanonicalForm {
    let edges = cert
        .iter()
        .map(|&packed| {
            (0..k)
                .map(|i| ((packed >> (8 * (15 - i))) & 0xff) as Vertex + 1)
                .collect()
        })
        .collect();
    CanonicalForm { n, k, edges }
}

fn pack(mask: u64, labels: &[u8]) -> u128 {
    let mut new: Vec<u8> = Vec::with_capacity(16);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        new.push(labels[v]);
        m &= m - 1;
    }
    new.sort_unstable();
    new.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &l)| acc | (l as u128) << (8 * (15 - i)))
}

pub(crate) fn certificate(edges: &[u64], labels: &[u8]) -> Certificate {
    let mut cert: Certificate = edges.iter().map(|&e| pack(e, labels)).collect();
    cert.sort_unstable();
    cert
}

fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

struct Leaf {
    path: Vec<u8>,
    labels: Vec<u8>,
    cert: Certificate,
}

struct Searcher<'a> {
    n: usize,
    edges: &'a [u64],
    incident: Vec<Vec<u64>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<u8>>,
}

type Cells = Vec<Vec<u8>>;

impl<'a> Searcher<'a> {
    fn refine(&self, mut cells: Cells) -> Cells {
        let mut cell_of = vec![0u32; self.n];
        let mut sig = Vec::with_capacity(16);
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v as usize] = i as u32;
                }
            }
            let mut split = false;
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u64, u8)> = cell
                    .iter()
                    .map(|&v| {
                        let mut key = 0u64;
                        for &e in &self.incident[v as usize] {
                            sig.clear();
                            let mut m = e & !(1u64 << v);
                            while m != 0 {
                                sig.push(cell_of[m.trailing_zeros() as usize]);
                                m &= m - 1;
                            }
                            sig.sort_unstable();
                            let h = sig.iter().fold(0x51_7cc1_b727_220a, |h, &c| mix(h ^ c as u64));
                            key = key.wrapping_add(mix(h));
                        }
                        (key, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if next.last().map(|c| c.len()) != Some(cell.len()) {
                    split = true;
                }
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn same_orbit(&self, w: u8, explored: &[u8], path: &[u8]) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p as usize] != p) {
                continue;
            }
            any = true;
            for (v, &g) in gamma.iter().enumerate().take(self.n) {
                let a = find(&mut parent, v as u8);
                let b = find(&mut parent, g);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == root)
    }

    /// Returns `Some(level)` to abandon everything below tree depth `level`.
    fn search(&mut self, cells: Cells, path: &mut Vec<u8>) -> Option<usize> {
        let Some(target_idx) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut targets = cells[target_idx].clone();
        targets.sort_unstable();
        let mut explored: Vec<u8> = Vec::new();
        for &w in &targets {
            if !explored.is_empty() && self.same_orbit(w, &explored, path) {
                continue;
            }
            explored.push(w);
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target_idx {
                    child.push(vec![w]);
                    child.push(c.iter().copied().filter(|&u| u != w).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let child = self.refine(child);
            path.push(w);
            let jump = self.search(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[u8]) -> Option<usize> {
        let mut labels = vec![0u8; self.n];
        for (i, c) in cells.iter().enumerate() {
            labels[c[0] as usize] = i as u8;
        }
        let cert = certificate(self.edges, &labels);
        let leaf = Leaf {
            path: path.to_vec(),
            labels,
            cert,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                labels: leaf.labels.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let gamma = automorphism(&leaf.labels, &first.labels);
            let level = common_prefix(&leaf.path, &first.path);
            self.automorphisms.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let gamma = automorphism(&leaf.labels, &best.labels);
                let level = common_prefix(&leaf.path, &best.path);
                self.automorphisms.push(gamma);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }
}

/// The vertex map sending the leaf labeled `from` onto the leaf labeled `to`.
fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut to_inv = vec![0u8; to.len()];
    for (v, &l) in to.iter().enumerate() {
        to_inv[l as usize] = v as u8;
    }
    from.iter().map(|&l| to_inv[l as usize]).collect()
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Canonize a hypergraph on vertices `0..n` given as bit masks. `n <= 64`.
pub(crate) fn canonize_masks(n: usize, edges: &[u64]) -> Canon {
    debug_assert!(n <= HARD_MAX_VERTICES);
    if n == 0 {
        return Canon {
            labels: Vec::new(),
            cert: Vec::new(),
        };
    }
    let mut incident = vec![Vec::new(); n];
    for &e in edges {
        let mut m = e;
        while m != 0 {
            incident[m.trailing_zeros() as usize].push(e);
            m &= m - 1;
        }
    }
    let mut s = Searcher {
        n,
        edges,
        incident,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = s.refine(vec![(0..n as u8).collect()]);
    s.search(root, &mut Vec::new());
    let best = s.best.expect("search visits at least one leaf");
    Canon {
        labels: best.labels,
        cert: best.cert,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, k: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(n, k, edges.iter().copied()).unwrap()
    }

    #[test]
    fn relabeled_copies_share_a_form() {
        let a = hg(5, 3, &[&[1, 2, 3], &[1, 4, 5]]);
        let b = hg(5, 3, &[&[2, 1, 3], &[2, 4, 5]]);
        assert!(are_isomorphic(&a, &b).unwrap());
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn fan_and_pasch_differ() {
        let fan = hg(7, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[3, 6, 7]]);
        let pasch = hg(7, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[2, 4, 6]]);
        assert!(!are_isomorphic(&fan, &pasch).unwrap());
    }

    #[test]
    fn empty_graph_is_its_own_form() {
        let h = Hypergraph::empty(6, 2).unwrap();
        assert!(canonical_form(&h).unwrap().edges.is_empty());
    }

    #[test]
    fn canonical_form_is_a_relabeling() {
        let h = hg(6, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[2, 4, 6]]);
        let labels = canonical_labeling(&h, 16).unwrap();
        let relabeled = h.relabel(&labels).unwrap();
        assert_eq!(relabeled.edges(), canonical_form(&h).unwrap().edges.as_slice());
    }

    #[test]
    fn size_cap() {
        let h = Hypergraph::empty(17, 3).unwrap();
        assert_eq!(
            canonical_form(&h).unwrap_err(),
            CanonError::TooLarge { n: 17, limit: 16 }
        );
        assert!(canonical_form_with_limit(&h, 20).is_ok());
    }

    #[test]
    fn different_shapes_are_not_isomorphic() {
        let path = hg(4, 2, &[&[1, 2], &[2, 3], &[3, 4]]);
        let star = hg(4, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(!are_isomorphic(&path, &star).unwrap());
    }
}
