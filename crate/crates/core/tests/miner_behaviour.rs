use std::collections::BTreeSet;

use proptest::prelude::*;

use topk_miner::miner::{grow_tree_levels, mine_seed_edges, mine_topk_observed, CandidateCheck, Phase};
use topk_miner::oracle::{exact_support_at_least, exact_topk, OracleLimits};
use topk_miner::{
    canonical_code, generate_preferential, load_lg, mine_topk, CanonicalCode, DataGraph, MinerConfig, MiningResult,
    Pattern, Termination,
};

fn twelve() -> DataGraph {
    load_lg(include_str!("data/twelve.lg").as_bytes()).unwrap()
}

fn cap12(max_frequent: usize) -> OracleLimits {
    OracleLimits {
        max_pattern_nodes: 12,
        max_frequent,
        ..OracleLimits::default()
    }
}

fn codes(r: &MiningResult) -> BTreeSet<CanonicalCode> {
    r.patterns.iter().map(|p| p.code.clone()).collect()
}

fn assert_ranked(r: &MiningResult) {
    for w in r.patterns.windows(2) {
        let key = |p: &topk_miner::RankedPattern| (std::cmp::Reverse(p.interestingness), p.code.clone());
        assert!(key(&w[0]) < key(&w[1]), "ranking order broken");
    }
}

#[test]
fn fixture_full_frequent_set_matches_oracle() {
    let g = twelve();
    let exact = exact_topk(&g, 2, 1, &cap12(10_000)).unwrap();
    let all = exact.frequent.len();
    // frozen from the exact oracle at a 12-node cap
    assert_eq!(all, 656);
    let r = mine_topk(&g, &MinerConfig::new(2, all, 2)).unwrap();
    let oracle: BTreeSet<CanonicalCode> = exact.frequent.iter().map(|p| p.code.clone()).collect();
    assert_eq!(codes(&r), oracle);
}

#[test]
fn fixture_top_patterns() {
    let g = twelve();
    let r = mine_topk(&g, &MinerConfig::new(2, 3, 2)).unwrap();
    let itrs: Vec<usize> = r.patterns.iter().map(|p| p.interestingness).collect();
    assert_eq!(itrs, vec![26, 25, 25]);
    let exact = exact_topk(&g, 2, 3, &cap12(10_000)).unwrap();
    let best: Vec<usize> = exact.ranked().iter().map(|p| p.interestingness).collect();
    assert_eq!(itrs, best);
    let top = &r.patterns[0];
    assert_eq!((top.pattern.node_count(), top.pattern.edge_count(), top.support), (12, 14, 2));
    let frequent: BTreeSet<&CanonicalCode> = exact.frequent.iter().map(|p| &p.code).collect();
    for p in &r.patterns {
        assert!(p.support >= 2);
        assert!(frequent.contains(&p.code));
    }
}

#[test]
fn fixture_tree_holds_q1_and_q2() {
    let g = twelve();
    let config = MinerConfig::new(2, 1, 2);
    let (seeds, edges) = mine_seed_edges(&g, 2);
    let l = |name: &str| g.label_id(name).unwrap();
    assert_eq!(
        seeds.iter().collect::<Vec<_>>(),
        vec![(l("A"), l("B")), (l("A"), l("C")), (l("C"), l("D"))]
    );
    let tree = grow_tree_levels(&g, seeds, edges, &config).unwrap();
    let q1 = Pattern::seed(l("A"), l("B")).with_forward(0, l("C")).unwrap();
    let q2 = q1.with_forward(2, l("D")).unwrap();
    let find = |p: &Pattern| {
        let code = canonical_code(p).unwrap();
        tree.nodes().iter().find(|n| n.code == code).map(|n| (n.level, n.support))
    };
    assert_eq!(find(&q1), Some((1, 2)));
    assert_eq!(find(&q2), Some((2, 2)));
}

#[test]
fn five_cycle_tree_height_and_top_pattern() {
    let g = DataGraph::from_edges(vec![0; 5], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    let config = MinerConfig::new(1, 1, 2);
    let (seeds, edges) = mine_seed_edges(&g, 1);
    let tree = grow_tree_levels(&g, seeds, edges, &config).unwrap();
    let exact = exact_topk(&g, 1, 1, &cap12(1000)).unwrap();
    let longest_tree = exact
        .frequent
        .iter()
        .filter(|p| p.pattern.is_tree())
        .map(|p| p.pattern.edge_count())
        .max()
        .unwrap();
    assert_eq!(tree.level_count(), longest_tree);
    let r = mine_topk(&g, &config).unwrap();
    assert_eq!(r.patterns[0].code, exact.ranked()[0].code);
    assert_eq!(r.patterns[0].interestingness, 10);
}

#[test]
fn triangle_rich_graph_prefers_the_triangle() {
    // three A-B-C triangles plus pendant edges keeping every label pair frequent
    let labels = vec![0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2];
    let mut edges = Vec::new();
    for t in 0..3u32 {
        let b = 3 * t;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
    }
    edges.extend([(9, 10), (10, 11), (2, 9)]);
    let g = DataGraph::from_edges(labels, &edges).unwrap();
    let r = mine_topk(&g, &MinerConfig::new(3, 1, 2)).unwrap();
    let exact = exact_topk(&g, 3, 1, &cap12(1000)).unwrap();
    let triangle = Pattern::seed(0, 1).with_forward(1, 2).unwrap().with_backward(0, 2).unwrap();
    let code = canonical_code(&triangle).unwrap();
    assert_eq!(exact.ranked()[0].code, code);
    assert_eq!(r.patterns[0].code, code);
    assert_eq!(r.patterns[0].interestingness, 6);
}

#[test]
fn theta_above_every_seed_returns_nothing() {
    let g = twelve();
    let r = mine_topk(&g, &MinerConfig::new(5, 3, 2)).unwrap();
    assert!(r.patterns.is_empty());
    assert_eq!(r.stats.frqchk_calls, 0);
    assert_eq!(r.termination, Termination::Exhausted);
}

#[test]
fn k_one_checks_fewer_candidates_than_k_ten() {
    let g = generate_preferential(200, 600, 5, 0).unwrap();
    let one = mine_topk(&g, &MinerConfig::new(22, 1, 3)).unwrap();
    let ten = mine_topk(&g, &MinerConfig::new(22, 10, 3)).unwrap();
    assert!(one.stats.frqchk_calls < ten.stats.frqchk_calls);
    assert_eq!(one.termination, Termination::Bound);
}

/// Every pattern admitted on the way, whether or not it reached the pool.
fn observed_run(g: &DataGraph, config: &MinerConfig) -> (MiningResult, Vec<(Phase, usize, CanonicalCode)>) {
    let mut seen = Vec::new();
    let mut observe = |c: &CandidateCheck| {
        if c.support >= config.theta {
            seen.push((c.phase, c.pattern.node_count() + c.pattern.edge_count(), c.code.clone()));
        }
    };
    let r = mine_topk_observed(g, config, &mut observe).unwrap();
    (r, seen)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mined_patterns_are_frequent_and_ranked(
        seed in any::<u64>(),
        n in 20usize..=100,
        labels in 3usize..=5,
        theta in 3usize..=5,
        m in 1usize..=2,
    ) {
        let g = generate_preferential(n, 2 * n, labels, seed).unwrap();
        let mut config = MinerConfig::new(theta, 5, m);
        config.max_pattern_nodes = 6;
        let (r, seen) = observed_run(&g, &config);
        prop_assert!(r.patterns.len() <= 5);
        assert_ranked(&r);
        for p in &r.patterns {
            prop_assert!(p.support >= theta);
            prop_assert!(exact_support_at_least(&g, &p.pattern, theta).unwrap());
        }
        if r.patterns.len() == 5 {
            let kth = r.patterns[4].interestingness;
            let returned = codes(&r);
            for (phase, itrs, code) in &seen {
                if *phase == Phase::Closure && !returned.contains(code) {
                    prop_assert!(*itrs <= kth);
                }
            }
        }
    }

    #[test]
    fn pattern_tree_levels_are_consistent(seed in any::<u64>(), n in 20usize..=80, theta in 3usize..=6) {
        let g = generate_preferential(n, 2 * n, 4, seed).unwrap();
        let mut config = MinerConfig::new(theta, 5, 2);
        config.max_pattern_nodes = 7;
        let (seeds, edges) = mine_seed_edges(&g, theta);
        let tree = grow_tree_levels(&g, seeds, edges, &config).unwrap();
        let mut codes = BTreeSet::new();
        for node in tree.nodes() {
            prop_assert!(codes.insert(node.code.clone()));
            prop_assert_eq!(node.pattern.edge_count(), node.level + 1);
            prop_assert!(node.pattern.is_tree());
            prop_assert!(node.support >= theta);
            match node.parent {
                None => prop_assert_eq!(node.level, 0),
                Some(pid) => {
                    let parent = tree.node(pid);
                    prop_assert_eq!(parent.level + 1, node.level);
                    prop_assert_eq!(Some(parent.pattern.clone()), node.pattern.parent());
                }
            }
        }
    }

    #[test]
    fn bound_keeps_the_best_admitted_sum(seed in any::<u64>(), n in 15usize..=40, k in 1usize..=8) {
        let g = generate_preferential(n, 2 * n, 3, seed).unwrap();
        let mut config = MinerConfig::new(2, k, 1_000_000);
        config.max_pattern_nodes = 6;
        let (r, seen) = observed_run(&g, &config);
        let mut admitted: Vec<(usize, CanonicalCode)> = seen.into_iter().map(|(_, i, c)| (i, c)).collect();
        admitted.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        admitted.dedup();
        let best: usize = admitted.iter().take(k).map(|(i, _)| i).sum();
        prop_assert!(r.interestingness_sum() >= best, "{} < {}", r.interestingness_sum(), best);
    }
}
