mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lintur::bounds::proof_bounds;
use lintur::canon::{are_isomorphic, canonical_form};
use lintur::configurations::{
    contains_fan, find_embedding, find_f74_violation, is_f74_free, ConfigName, Configuration,
};
use lintur::constructions::transversal_design;
use lintur::hypergraph::LinearHypergraph;
use lintur::io;
use lintur::reductions::{linearize, tripartite_subsystem};
use lintur::search::{max_free, SearchOptions};

fn linear_strategy(max_n: u32, k: usize) -> impl Strategy<Value = (u32, Edges)> {
    (k as u32..=max_n, any::<u64>(), 1usize..40)
        .prop_map(move |(n, seed, tries)| (n, random_linear(&mut ChaCha8Rng::seed_from_u64(seed), n, k, tries)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_relabeling(
        (n, edges) in linear_strategy(10, 3),
        seed in any::<u64>(),
    ) {
        let h = to_h(n, 3, &edges);
        let form = canonical_form(&h).unwrap();
        let mut perm: Vec<u32> = (1..=n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let g = h.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), form);
        prop_assert!(are_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn fan_detector_agrees_with_matcher((n, edges) in linear_strategy(10, 3)) {
        let h = LinearHypergraph::new(n as usize, 3, &edges).unwrap();
        let fan = Configuration::new(ConfigName::Fan(3)).unwrap();
        let a = contains_fan(&h, 3).unwrap();
        let b = find_embedding(&h, &fan).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
        prop_assert_eq!(a.is_some(), has_fan(&edges, 3));
        if let Some(e) = a {
            prop_assert!(e.is_valid(&h, &fan.hypergraph));
        }
    }

    #[test]
    fn graph_fan_is_the_triangle((n, edges) in linear_strategy(9, 2)) {
        let h = LinearHypergraph::new(n as usize, 2, &edges).unwrap();
        prop_assert_eq!(contains_fan(&h, 2).unwrap().is_some(), has_fan(&edges, 2));
    }

    #[test]
    fn linear_f74_free_iff_no_fan_pasch_c14((n, edges) in linear_strategy(10, 3)) {
        let h = to_h(n, 3, &edges);
        let f74_free = is_f74_free(&h).unwrap();
        prop_assert_eq!(f74_free, !has_dense_four(&edges));
        let any = [ConfigName::Fan(3), ConfigName::Pasch, ConfigName::C14]
            .iter()
            .any(|&c| find_embedding(&h, &Configuration::new(c).unwrap()).unwrap().is_some());
        prop_assert_eq!(f74_free, !any);
        if let Some(four) = find_f74_violation(&h).unwrap() {
            let mut pts: Vec<u32> = four.iter().flatten().copied().collect();
            pts.sort_unstable();
            pts.dedup();
            prop_assert!(pts.len() <= 7);
        }
    }

    #[test]
    fn proof_bounds_hold_on_fan_free_systems((n, edges) in linear_strategy(12, 3)) {
        if has_fan(&edges, 3) {
            return Ok(());
        }
        let h = LinearHypergraph::new(n as usize, 3, &edges).unwrap();
        let (_, v) = h.max_degree();
        let r = proof_bounds(&h, v.unwrap()).unwrap();
        prop_assert!(r.fan_free && r.every_edge_meets_ball);
        prop_assert!(r.within_b1 && r.within_b2);
        prop_assert!(r.edges as u64 <= r.fan_bound.value);
    }

    #[test]
    fn linearize_guarantees(n in 4u32..=12, seed in any::<u64>()) {
        let edges = random_f74_free(&mut ChaCha8Rng::seed_from_u64(seed), n, 60);
        let h = to_h(n, 3, &edges);
        let r = linearize(&h).unwrap();
        prop_assert!(r.output.is_linear());
        prop_assert!(r.guarantee_met);
        prop_assert!(2 * r.removed_edges.len() <= n as usize);
        prop_assert_eq!(r.removed_edges.len(), 2 * r.w_copies.len() + r.fallback_removals);
        prop_assert_eq!(r.output.edge_count() + r.removed_edges.len(), edges.len());
    }

    #[test]
    fn tripartite_guarantees(n in 3u32..=15, seed in any::<u64>()) {
        let edges = random_triples(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let h = to_h(n, 3, &edges);
        let r = tripartite_subsystem(&h, false).unwrap();
        prop_assert!(9 * r.output.edge_count() >= 2 * edges.len());
        let parts = r.partition.unwrap();
        for e in r.output.edges() {
            for p in &parts {
                prop_assert_eq!(e.iter().filter(|v| p.contains(v)).count(), 1);
            }
        }
    }

    #[test]
    fn io_round_trip((n, edges) in linear_strategy(12, 3)) {
        let h = to_h(n, 3, &edges);
        prop_assert_eq!(io::parse_lhg(&io::to_lhg(&h)).unwrap(), h.clone());
        prop_assert_eq!(io::parse_json(&io::to_json(&h)).unwrap(), h);
    }
}

#[test]
fn tripartite_premise_gives_fan_pasch_c14_free_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 50 {
        let n = rand::Rng::gen_range(&mut rng, 6..=12);
        let edges = random_linear(&mut rng, n, 3, 40);
        if has_pattern(&edges, n, &pasch(), 6) || has_pattern(&edges, n, &c14(), 7) {
            continue;
        }
        let r = tripartite_subsystem(&to_h(n, 3, &edges), true).unwrap();
        let out: Edges = r.output.edges().to_vec();
        assert!(!has_fan(&out, 3));
        assert!(9 * out.len() >= 2 * edges.len());
        checked += 1;
    }
}

#[test]
fn search_is_monotone() {
    let opts = SearchOptions::default();
    let fan = [ConfigName::Fan(3)];
    let more = [ConfigName::Fan(3), ConfigName::Pasch];
    let mut last = 0;
    for n in 3..=9 {
        let a = max_free(n, 3, &fan, &opts).unwrap().max_edges;
        let b = max_free(n, 3, &more, &opts).unwrap().max_edges;
        let none = max_free(n, 3, &[], &opts).unwrap().max_edges;
        assert!(a >= last, "non-decreasing in n");
        assert!(b <= a && a <= none, "non-increasing in the forbidden set");
        last = a;
    }
}

#[test]
fn search_is_deterministic_across_workers() {
    for (n, k) in [(8, 3), (9, 3), (11, 3), (8, 2)] {
        let forbid = [ConfigName::Fan(k)];
        let runs: Vec<_> = [1, 2, 4, 0]
            .iter()
            .map(|&w| {
                max_free(
                    n,
                    k,
                    &forbid,
                    &SearchOptions {
                        workers: w,
                        ..Default::default()
                    },
                )
                .unwrap()
            })
            .collect();
        for r in &runs[1..] {
            assert_eq!(r.max_edges, runs[0].max_edges);
            assert_eq!(r.witnesses, runs[0].witnesses);
        }
    }
}

#[test]
fn tiny_memo_changes_nothing() {
    let small = SearchOptions {
        memo_entries: 1,
        ..Default::default()
    };
    let a = max_free(9, 3, &[ConfigName::Fan(3)], &small).unwrap();
    let b = max_free(9, 3, &[ConfigName::Fan(3)], &SearchOptions::default()).unwrap();
    assert_eq!(a.max_edges, b.max_edges);
    assert_eq!(a.witnesses, b.witnesses);
}

#[test]
fn witnesses_revalidate_from_scratch() {
    for (n, k, forbid) in [
        (7, 3, vec![ConfigName::Fan(3)]),
        (9, 3, vec![ConfigName::Pasch]),
        (9, 3, vec![ConfigName::C14, ConfigName::Fan(3)]),
        (7, 2, vec![ConfigName::Fan(2)]),
    ] {
        let r = max_free(n, k, &forbid, &SearchOptions::default()).unwrap();
        for w in &r.witnesses {
            let h = LinearHypergraph::new(n, k, &w.edges).unwrap();
            assert_eq!(h.edge_count(), r.max_edges);
            for &c in &forbid {
                let conf = Configuration::with_uniformity(c, k).unwrap();
                assert!(find_embedding(&h, &conf).unwrap().is_none());
            }
        }
        if let Some(b) = r.fan_bound {
            assert!(r.max_edges as u64 <= b.value);
        }
    }
}

#[test]
fn designs_relabel_to_themselves() {
    let td = transversal_design(4, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut perm: Vec<u32> = (1..=12).collect();
    for _ in 0..20 {
        perm.shuffle(&mut rng);
        assert!(are_isomorphic(&td, &td.relabel(&perm).unwrap()).unwrap());
    }
}
