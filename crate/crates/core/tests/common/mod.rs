//! Independent reference computations and generators shared by the
//! integration tests. Nothing here calls the library's search, canonical
//! labeling or detectors; everything is brute force on plain edge lists.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use lintur::hypergraph::Hypergraph;

pub type Edges = Vec<Vec<u32>>;

pub fn k_subsets(n: u32, k: usize) -> Edges {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Edges) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn meet(a: &[u32], b: &[u32]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// A fan by definition: `k` edges through a center and an edge avoiding the
/// center that meets each of them.
pub fn has_fan(edges: &Edges, k: usize) -> bool {
    let n = edges.iter().flatten().copied().max().unwrap_or(0);
    for c in 1..=n {
        let through: Vec<&Vec<u32>> = edges.iter().filter(|e| e.contains(&c)).collect();
        if through.len() < k {
            continue;
        }
        for g in edges.iter().filter(|e| !e.contains(&c)) {
            // each vertex of g must lie on a different edge through c
            let mut used = vec![false; through.len()];
            let ok = g.iter().all(
                |v| match through.iter().enumerate().find(|(i, e)| !used[*i] && e.contains(v)) {
                    Some((i, _)) => {
                        used[i] = true;
                        true
                    }
                    None => false,
                },
            );
            if ok {
                return true;
            }
        }
    }
    false
}

/// Whether some `pattern` edge set maps injectively into `edges`, tried over
/// every injective vertex map (patterns have at most 7 vertices).
pub fn has_pattern(edges: &Edges, n: u32, pattern: &Edges, pn: u32) -> bool {
    fn go(i: u32, pn: u32, n: u32, map: &mut Vec<u32>, used: &mut Vec<bool>, edges: &Edges, pattern: &Edges) -> bool {
        if i > pn {
            return pattern.iter().all(|p| {
                let mut img: Vec<u32> = p.iter().map(|&v| map[v as usize]).collect();
                img.sort_unstable();
                edges.contains(&img)
            });
        }
        for h in 1..=n {
            if !used[h as usize] {
                used[h as usize] = true;
                map[i as usize] = h;
                if go(i + 1, pn, n, map, used, edges, pattern) {
                    return true;
                }
                used[h as usize] = false;
            }
        }
        false
    }
    go(
        1,
        pn,
        n,
        &mut vec![0; pn as usize + 1],
        &mut vec![false; n as usize + 1],
        edges,
        pattern,
    )
}

pub fn pasch() -> Edges {
    vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6], vec![2, 4, 6]]
}

pub fn c14() -> Edges {
    vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6], vec![2, 6, 7]]
}

/// Four triples spanning at most seven points.
pub fn has_dense_four(edges: &Edges) -> bool {
    let m = edges.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let mut pts: Vec<u32> = [a, b, c, d].iter().flat_map(|&i| edges[i].clone()).collect();
                    pts.sort_unstable();
                    pts.dedup();
                    if pts.len() <= 7 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every maximum-size linear `k`-graph on `n` points avoiding `bad`, by plain
/// lexicographic enumeration of edge sets.
pub fn brute_max_free(n: u32, k: usize, bad: &dyn Fn(&Edges) -> bool) -> (usize, Vec<Edges>) {
    let all = k_subsets(n, k);
    let mut best = (0, vec![Vec::new()]);
    fn go(start: usize, all: &Edges, cur: &mut Edges, bad: &dyn Fn(&Edges) -> bool, best: &mut (usize, Vec<Edges>)) {
        for i in start..all.len() {
            let e = &all[i];
            if cur.iter().any(|c| meet(c, e) > 1) {
                continue;
            }
            cur.push(e.clone());
            if !bad(cur) {
                if cur.len() > best.0 {
                    *best = (cur.len(), Vec::new());
                }
                if cur.len() == best.0 {
                    best.1.push(cur.clone());
                }
                go(i + 1, all, cur, bad, best);
            }
            cur.pop();
        }
    }
    go(0, &all, &mut Vec::new(), bad, &mut best);
    best
}

pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut p: Vec<u32> = (1..=n as u32).collect();
    fn heap(k: usize, p: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

pub fn relabel(edges: &Edges, perm: &[u32]) -> Edges {
    let mut out: Edges = edges
        .iter()
        .map(|e| {
            let mut x: Vec<u32> = e.iter().map(|&v| perm[v as usize - 1]).collect();
            x.sort_unstable();
            x
        })
        .collect();
    out.sort();
    out
}

/// Automorphism count by trying every permutation.
pub fn automorphisms(edges: &Edges, perms: &[Vec<u32>]) -> usize {
    let mut sorted = edges.clone();
    sorted.sort();
    perms.iter().filter(|p| relabel(edges, p) == sorted).count()
}

/// Number of isomorphism classes of `count` triples on 7 points, by Burnside
/// over the symmetric group acting on triples.
pub fn burnside_triple_classes(count: usize) -> usize {
    let triples = k_subsets(7, 3);
    let perms = permutations(7);
    let mut total = 0usize;
    for p in &perms {
        // cycle lengths of p on triples
        let mut seen = vec![false; triples.len()];
        let mut lengths = Vec::new();
        for i in 0..triples.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                let mut img: Vec<u32> = triples[j].iter().map(|&v| p[v as usize - 1]).collect();
                img.sort_unstable();
                j = triples.iter().position(|t| *t == img).unwrap();
            }
            lengths.push(len);
        }
        // fixed sets of size `count` are unions of whole cycles
        let mut ways = vec![0usize; count + 1];
        ways[0] = 1;
        for &l in &lengths {
            for s in (l..=count).rev() {
                ways[s] += ways[s - l];
            }
        }
        total += ways[count];
    }
    assert_eq!(total % perms.len(), 0);
    total / perms.len()
}

/// A random linear `k`-graph: random edges added greedily while linear.
pub fn random_linear(rng: &mut ChaCha8Rng, n: u32, k: usize, tries: usize) -> Edges {
    let mut edges: Edges = Vec::new();
    let mut verts: Vec<u32> = (1..=n).collect();
    for _ in 0..tries {
        verts.shuffle(rng);
        let mut e = verts[..k].to_vec();
        e.sort_unstable();
        if edges.iter().all(|x| meet(x, &e) <= 1) {
            edges.push(e);
        }
    }
    edges.sort();
    edges
}

/// A random triple system without four triples on seven points.
pub fn random_f74_free(rng: &mut ChaCha8Rng, n: u32, tries: usize) -> Edges {
    let mut edges: Edges = Vec::new();
    let mut verts: Vec<u32> = (1..=n).collect();
    for _ in 0..tries {
        verts.shuffle(rng);
        let mut e = verts[..3].to_vec();
        e.sort_unstable();
        if edges.contains(&e) {
            continue;
        }
        edges.push(e);
        if has_dense_four(&edges) {
            edges.pop();
        }
    }
    edges.sort();
    edges
}

/// Any set of distinct triples.
pub fn random_triples(rng: &mut ChaCha8Rng, n: u32) -> Edges {
    let all = k_subsets(n, 3);
    let p = rng.gen_range(0.0..0.5);
    all.into_iter().filter(|_| rng.gen_bool(p)).collect()
}

pub fn to_h(n: u32, k: usize, edges: &Edges) -> Hypergraph {
    Hypergraph::new(n as usize, k, edges).expect("valid test hypergraph")
}

/// Best number of transversal triples over every 3-coloring of the vertices
/// (small n only).
pub fn best_tripartite(n: u32, edges: &Edges) -> usize {
    let mut best = 0;
    let total = 3usize.pow(n);
    for code in 0..total {
        let mut c = code;
        let mut part = vec![0usize; n as usize + 1];
        for slot in part.iter_mut().skip(1) {
            *slot = c % 3;
            c /= 3;
        }
        let count = edges
            .iter()
            .filter(|e| {
                let (a, b, d) = (part[e[0] as usize], part[e[1] as usize], part[e[2] as usize]);
                a != b && b != d && a != d
            })
            .count();
        best = best.max(count);
    }
    best
}
