//! Level-wise top-k miner with early termination.
//!
//! 1. Seed scan: exact images of every single-edge label pair.
//! 2. Tree growth: forward-expand the top level of the pattern tree, verify
//!    each candidate against its parent's domain, stop when a round admits
//!    nothing.
//! 3. Top-down search: visit tree patterns from the highest level down; each
//!    one enters the pool and seeds a closure of backward expansions. The run
//!    stops once the worst of the current top k is at least as interesting
//!    as the complete pattern of any tree pattern not yet expanded.

use std::cmp::Reverse;
use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::frqchk::{frqchk, FrqChkOptions, FrqChkOutcome};
use crate::graph::{DataGraph, LabelId, NodeId};
use crate::pattern::{
    backward_expansions_with_limit, canonical_code, complete_interestingness, forward_expansions_with_limit,
    interestingness, CanonicalCode, Candidate, Pattern, SeedSet, DEFAULT_NODE_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinerConfig {
    pub theta: usize,
    pub k: usize,
    /// Condition-B budget per traversal level (`m`).
    pub budget: usize,
    /// Largest pattern (in nodes) the miner will generate.
    pub max_pattern_nodes: usize,
    /// Expand each tree pattern by one round of backward edges only,
    /// instead of closing over repeated backward expansion.
    pub single_backward: bool,
    pub shuffle_seed: Option<u64>,
    /// Worker threads for verifying one tree level; 1 runs sequentially.
    pub threads: usize,
}

impl MinerConfig {
    pub fn new(theta: usize, k: usize, budget: usize) -> Self {
        MinerConfig {
            theta,
            k,
            budget,
            max_pattern_nodes: DEFAULT_NODE_LIMIT,
            single_backward: false,
            shuffle_seed: None,
            threads: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta == 0 {
            return Err(Error::Parameter("theta must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(Error::Parameter("k must be at least 1".into()));
        }
        if self.budget == 0 {
            return Err(Error::Parameter("m must be at least 1".into()));
        }
        if !(2..=DEFAULT_NODE_LIMIT).contains(&self.max_pattern_nodes) {
            return Err(Error::Parameter(format!(
                "max pattern nodes must be within 2..={DEFAULT_NODE_LIMIT}"
            )));
        }
        if self.threads == 0 {
            return Err(Error::Parameter("threads must be at least 1".into()));
        }
        Ok(())
    }

    fn frqchk_options(&self) -> FrqChkOptions {
        FrqChkOptions {
            budget: self.budget,
            shuffle_seed: self.shuffle_seed,
            trace: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Stopped while tree patterns were still unexpanded.
    Bound,
    /// Every tree pattern was expanded.
    Exhausted,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Bound => "bound",
            Termination::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MiningStats {
    pub frqchk_calls: u64,
    pub candidates: u64,
    pub domain_entries_peak: u64,
    pub tree_patterns: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone)]
pub struct RankedPattern {
    pub pattern: Pattern,
    pub code: CanonicalCode,
    pub support: usize,
    pub interestingness: usize,
    pub domain: Option<Arc<Domain>>,
}

#[derive(Debug, Clone)]
pub struct MiningResult {
    pub config: MinerConfig,
    pub patterns: Vec<RankedPattern>,
    pub stats: MiningStats,
    pub termination: Termination,
}

impl MiningResult {
    pub fn interestingness_sum(&self) -> usize {
        self.patterns.iter().map(|p| p.interestingness).sum()
    }
}

/// Which phase produced a verified candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Tree,
    Closure,
}

/// One frqchk verdict, reported to observers in admission order.
#[derive(Debug)]
pub struct CandidateCheck<'a> {
    pub phase: Phase,
    pub pattern: &'a Pattern,
    pub code: &'a CanonicalCode,
    pub support: usize,
    pub domain: &'a Domain,
}

/// A frequent single-edge pattern with its exact domain.
#[derive(Debug, Clone)]
pub struct SeedEdge {
    pub pattern: Pattern,
    pub code: CanonicalCode,
    pub domain: Domain,
}

impl SeedEdge {
    pub fn support(&self) -> usize {
        self.domain.support()
    }
}

/// Exact images of every single-edge label pair, without a threshold.
/// Keys are `(low, high)` label pairs.
pub fn seed_images(graph: &DataGraph) -> BTreeMap<(LabelId, LabelId), [Vec<NodeId>; 2]> {
    let mut images: BTreeMap<(LabelId, LabelId), [Vec<NodeId>; 2]> = BTreeMap::new();
    for v in 0..graph.node_count() as NodeId {
        let a = graph.label(v);
        for b in graph.neighbor_labels(v) {
            let key = (a.min(b), a.max(b));
            let cols = images.entry(key).or_default();
            if a <= b {
                cols[0].push(v);
            }
            if a >= b {
                cols[1].push(v);
            }
        }
    }
    images
}

/// Frequent seed label pairs and their single-edge patterns with exact
/// domains, ordered by canonical code.
pub fn mine_seed_edges(graph: &DataGraph, theta: usize) -> (SeedSet, Vec<SeedEdge>) {
    let mut seeds = SeedSet::new();
    let mut edges = Vec::new();
    for ((a, b), [first, second]) in seed_images(graph) {
        if first.len().min(second.len()) < theta {
            continue;
        }
        seeds.insert(a, b);
        let pattern = Pattern::seed(a, b);
        let code = canonical_code(&pattern).expect("two-node pattern");
        edges.push(SeedEdge {
            pattern,
            code,
            domain: Domain::new(vec![a, b], vec![first, second]),
        });
    }
    edges.sort_by(|x, y| x.code.cmp(&y.code));
    (seeds, edges)
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    pub pattern: Pattern,
    pub code: CanonicalCode,
    pub domain: Arc<Domain>,
    pub support: usize,
    pub parent: Option<usize>,
    pub level: usize,
    expanded: bool,
}

impl TreeNode {
    pub fn is_expanded(&self) -> bool {
        self.expanded
    }
}

/// Frequent tree patterns grouped by level; level `l` holds patterns with
/// `l + 1` edges.
#[derive(Debug, Clone, Default)]
pub struct PatternTree {
    nodes: Vec<TreeNode>,
    levels: Vec<Vec<usize>>,
    unexpanded: Vec<usize>,
    seeds: SeedSet,
}

impl PatternTree {
    fn from_seeds(seeds: SeedSet, seed_edges: Vec<SeedEdge>) -> Self {
        let mut tree = PatternTree {
            seeds,
            ..Default::default()
        };
        for seed in seed_edges {
            let support = seed.support();
            tree.push(0, None, seed.pattern, seed.code, Arc::new(seed.domain), support);
        }
        tree
    }

    fn push(
        &mut self,
        level: usize,
        parent: Option<usize>,
        pattern: Pattern,
        code: CanonicalCode,
        domain: Arc<Domain>,
        support: usize,
    ) -> usize {
        while self.levels.len() <= level {
            self.levels.push(Vec::new());
            self.unexpanded.push(0);
        }
        let id = self.nodes.len();
        self.nodes.push(TreeNode {
            pattern,
            code,
            domain,
            support,
            parent,
            level,
            expanded: false,
        });
        self.levels[level].push(id);
        self.unexpanded[level] += 1;
        id
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the highest non-empty level; 0 for an empty tree.
    pub fn height(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    /// Node ids at `level`, ascending by canonical code.
    pub fn level(&self, level: usize) -> &[usize] {
        self.levels.get(level).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn seeds(&self) -> &SeedSet {
        &self.seeds
    }

    pub fn mark_expanded(&mut self, id: usize) {
        let node = &mut self.nodes[id];
        if !node.expanded {
            node.expanded = true;
            self.unexpanded[node.level] -= 1;
        }
    }

    /// Node count of the largest tree pattern not yet expanded.
    pub fn max_unexpanded_nodes(&self) -> Option<usize> {
        self.unexpanded.iter().rposition(|&n| n > 0).map(|level| level + 2)
    }

    fn domain_entries(&self) -> u64 {
        self.nodes.iter().map(|n| n.domain.entry_count() as u64).sum()
    }
}

/// Running count of domain entries held by the miner.
#[derive(Debug, Default)]
struct EntryMeter {
    current: u64,
    peak: u64,
}

impl EntryMeter {
    fn hold(&mut self, entries: usize) {
        self.current += entries as u64;
        self.peak = self.peak.max(self.current);
    }

    fn release(&mut self, entries: usize) {
        self.current -= entries as u64;
    }
}

struct Run<'a, 'o> {
    graph: &'a DataGraph,
    config: &'a MinerConfig,
    stats: MiningStats,
    meter: EntryMeter,
    observer: Option<&'o mut dyn FnMut(&CandidateCheck)>,
}

fn verify(graph: &DataGraph, config: &MinerConfig, candidate: &Pattern, parent: &Domain) -> Result<FrqChkOutcome> {
    frqchk(graph, candidate, parent, config.theta, &config.frqchk_options())
}

impl Run<'_, '_> {

    /// Books one verdict; returns the domain when the candidate is frequent.
    fn settle(&mut self, phase: Phase, candidate: &Candidate, outcome: FrqChkOutcome) -> Option<(usize, Domain)> {
        self.stats.frqchk_calls += 1;
        let entries = outcome.domain.entry_count();
        self.meter.hold(entries);
        if let Some(obs) = self.observer.as_mut() {
            obs(&CandidateCheck {
                phase,
                pattern: &candidate.pattern,
                code: &candidate.code,
                support: outcome.support,
                domain: &outcome.domain,
            });
        }
        if outcome.support >= self.config.theta {
            Some((outcome.support, outcome.domain))
        } else {
            self.meter.release(entries);
            None
        }
    }
}

/// Grows the tree of frequent tree patterns level by level from the seeds.
pub fn grow_tree_levels(
    graph: &DataGraph,
    seeds: SeedSet,
    seed_edges: Vec<SeedEdge>,
    config: &MinerConfig,
) -> Result<PatternTree> {
    config.validate()?;
    let mut run = Run {
        graph,
        config,
        stats: MiningStats::default(),
        meter: EntryMeter::default(),
        observer: None,
    };
    grow(&mut run, seeds, seed_edges)
}

fn grow(run: &mut Run, seeds: SeedSet, seed_edges: Vec<SeedEdge>) -> Result<PatternTree> {
    let mut tree = PatternTree::from_seeds(seeds, seed_edges);
    run.meter.hold(tree.domain_entries() as usize);
    let pool = if run.config.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(run.config.threads)
                .build()
                .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let mut seen: FxHashSet<CanonicalCode> = tree.nodes.iter().map(|n| n.code.clone()).collect();

    while !tree.is_empty() {
        let top = tree.height();
        let mut batch: Vec<(usize, Candidate)> = Vec::new();
        for &id in tree.level(top) {
            let node = &tree.nodes[id];
            if node.pattern.node_count() >= run.config.max_pattern_nodes {
                continue;
            }
            let expansions =
                forward_expansions_with_limit(&node.pattern, &tree.seeds, run.config.max_pattern_nodes)?;
            run.stats.candidates += expansions.len() as u64;
            for cand in expansions {
                if seen.insert(cand.code.clone()) {
                    batch.push((id, cand));
                }
            }
        }
        batch.sort_by(|a, b| a.1.code.cmp(&b.1.code));

        let (graph, config) = (run.graph, run.config);
        let outcomes: Vec<Result<FrqChkOutcome>> = match &pool {
            Some(p) => p.install(|| {
                batch
                    .par_iter()
                    .map(|(parent, cand)| verify(graph, config, &cand.pattern, &tree.nodes[*parent].domain))
                    .collect()
            }),
            None => batch
                .iter()
                .map(|(parent, cand)| verify(graph, config, &cand.pattern, &tree.nodes[*parent].domain))
                .collect(),
        };

        let mut admitted = 0;
        for ((parent, cand), outcome) in batch.into_iter().zip(outcomes) {
            if let Some((support, domain)) = run.settle(Phase::Tree, &cand, outcome?) {
                tree.push(top + 1, Some(parent), cand.pattern, cand.code, Arc::new(domain), support);
                admitted += 1;
            }
        }
        if admitted == 0 {
            break;
        }
    }
    run.stats.tree_patterns = tree.len() as u64;
    Ok(tree)
}

/// Ranked pool of accepted patterns, keeping the best `k` by
/// (interestingness desc, canonical code asc).
#[derive(Debug, Clone)]
pub struct TopKState {
    k: usize,
    pool: BTreeMap<(Reverse<usize>, CanonicalCode), RankedPattern>,
}

impl TopKState {
    pub fn new(k: usize) -> Self {
        TopKState {
            k,
            pool: BTreeMap::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.pool.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pool.is_empty()
    }

    pub fn admit(&mut self, entry: RankedPattern) {
        self.pool
            .insert((Reverse(entry.interestingness), entry.code.clone()), entry);
        while self.pool.len() > self.k {
            self.pool.pop_last();
        }
    }

    /// Interestingness of the worst retained pattern.
    pub fn min_interestingness(&self) -> Option<usize> {
        self.pool.keys().next_back().map(|(Reverse(i), _)| *i)
    }

    pub fn ranked(&self) -> impl Iterator<Item = &RankedPattern> {
        self.pool.values()
    }

    pub fn into_ranked(self) -> Vec<RankedPattern> {
        self.pool.into_values().collect()
    }
}

/// True once the pool holds `k` patterns and none of the unexpanded tree
/// patterns can still produce a more interesting one.
pub fn termination_check(state: &TopKState, tree: &PatternTree) -> bool {
    if state.len() < state.k() {
        return false;
    }
    match tree.max_unexpanded_nodes() {
        None => true,
        Some(n) => state.min_interestingness().unwrap_or(0) >= complete_interestingness(n),
    }
}

fn ranked(pattern: Pattern, code: CanonicalCode, support: usize, domain: Arc<Domain>) -> RankedPattern {
    RankedPattern {
        interestingness: interestingness(&pattern),
        pattern,
        code,
        support,
        domain: Some(domain),
    }
}

/// Top-down search over the tree with backward-expansion closure and early
/// termination.
pub fn etsearch(graph: &DataGraph, tree: &mut PatternTree, config: &MinerConfig) -> Result<(TopKState, Termination)> {
    config.validate()?;
    let mut run = Run {
        graph,
        config,
        stats: MiningStats::default(),
        meter: EntryMeter::default(),
        observer: None,
    };
    search(&mut run, tree)
}

fn search(run: &mut Run, tree: &mut PatternTree) -> Result<(TopKState, Termination)> {
    let mut state = TopKState::new(run.config.k);
    let mut seen: FxHashSet<CanonicalCode> = tree.nodes.iter().map(|n| n.code.clone()).collect();
    let stop = |tree: &PatternTree| {
        if tree.max_unexpanded_nodes().is_some() {
            Termination::Bound
        } else {
            Termination::Exhausted
        }
    };

    for level in (0..tree.level_count()).rev() {
        for id in tree.level(level).to_vec() {
            let node = &tree.nodes[id];
            state.admit(ranked(node.pattern.clone(), node.code.clone(), node.support, node.domain.clone()));
            if termination_check(&state, tree) {
                return Ok((state, stop(tree)));
            }

            let mut queue: VecDeque<(Pattern, Arc<Domain>, bool)> = VecDeque::new();
            queue.push_back((node.pattern.clone(), node.domain.clone(), false));
            while let Some((pattern, domain, owned)) = queue.pop_front() {
                if pattern.node_count() >= 3 {
                    let expansions =
                        backward_expansions_with_limit(&pattern, &tree.seeds, run.config.max_pattern_nodes)?;
                    run.stats.candidates += expansions.len() as u64;
                    for cand in expansions {
                        if !seen.insert(cand.code.clone()) {
                            continue;
                        }
                        let outcome = verify(run.graph, run.config, &cand.pattern, &domain)?;
                        if let Some((support, found)) = run.settle(Phase::Closure, &cand, outcome) {
                            let found = Arc::new(found);
                            state.admit(ranked(cand.pattern.clone(), cand.code, support, found.clone()));
                            if run.config.single_backward {
                                run.meter.release(found.entry_count());
                            } else {
                                queue.push_back((cand.pattern, found, true));
                            }
                            if termination_check(&state, tree) {
                                return Ok((state, stop(tree)));
                            }
                        }
                    }
                }
                if run.config.single_backward {
                    break;
                }
                if owned {
                    run.meter.release(domain.entry_count());
                }
            }
            tree.mark_expanded(id);
            if termination_check(&state, tree) {
                return Ok((state, stop(tree)));
            }
        }
    }
    Ok((state, Termination::Exhausted))
}

/// Mines the top-k patterns of `graph`.
pub fn mine_topk(graph: &DataGraph, config: &MinerConfig) -> Result<MiningResult> {
    mine(graph, config, None)
}

/// Like [`mine_topk`], reporting every frqchk verdict to `observer`.
pub fn mine_topk_observed(
    graph: &DataGraph,
    config: &MinerConfig,
    observer: &mut dyn FnMut(&CandidateCheck),
) -> Result<MiningResult> {
    mine(graph, config, Some(observer))
}

fn mine(graph: &DataGraph, config: &MinerConfig, observer: Option<&mut dyn FnMut(&CandidateCheck)>) -> Result<MiningResult> {
    config.validate()?;
    let started = Instant::now();
    let mut run = Run {
        graph,
        config,
        stats: MiningStats::default(),
        meter: EntryMeter::default(),
        observer,
    };
    let (seeds, seed_edges) = mine_seed_edges(graph, config.theta);
    let mut tree = grow(&mut run, seeds, seed_edges)?;
    let (state, termination) = search(&mut run, &mut tree)?;
    let mut stats = run.stats;
    stats.domain_entries_peak = run.meter.peak;
    stats.wall_ms = started.elapsed().as_millis() as u64;
    Ok(MiningResult {
        config: config.clone(),
        patterns: state.into_ranked(),
        stats,
        termination,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::twelve;

    const A: LabelId = 0;
    const B: LabelId = 1;
    const C: LabelId = 2;
    const D: LabelId = 3;

    #[test]
    fn fixture_seed_edges() {
        let g = twelve();
        let (seeds, edges) = mine_seed_edges(&g, 2);
        let pairs: Vec<_> = seeds.iter().collect();
        assert_eq!(pairs, vec![(A, B), (A, C), (C, D)]);
        assert!(edges.iter().all(|e| e.support() == 2));
        let (seeds, edges) = mine_seed_edges(&g, 3);
        assert!(seeds.is_empty() && edges.is_empty());
    }

    #[test]
    fn single_edge_graph_seed() {
        let g = DataGraph::from_edges(vec![0, 1], &[(0, 1)]).unwrap();
        let (seeds, edges) = mine_seed_edges(&g, 1);
        assert_eq!(seeds.len(), 1);
        assert_eq!(edges[0].support(), 1);
        // same labels: both endpoints fill both columns
        let g = DataGraph::from_edges(vec![0, 0], &[(0, 1)]).unwrap();
        let (_, edges) = mine_seed_edges(&g, 1);
        assert_eq!(edges[0].domain.column(0), &[0, 1]);
        assert_eq!(edges[0].support(), 2);
    }

    #[test]
    fn fixture_tree_contains_q1_and_q2() {
        let g = twelve();
        let config = MinerConfig::new(2, 1, 2);
        let (seeds, edges) = mine_seed_edges(&g, 2);
        let tree = grow_tree_levels(&g, seeds, edges, &config).unwrap();
        let q1 = Pattern::seed(A, B).with_forward(0, C).unwrap();
        let q2 = q1.with_forward(2, D).unwrap();
        let find = |p: &Pattern| {
            let code = canonical_code(p).unwrap();
            tree.nodes().iter().find(|n| n.code == code).cloned()
        };
        let n1 = find(&q1).expect("Q1 in tree");
        assert_eq!(n1.level, 1);
        let n2 = find(&q2).expect("Q2 in tree");
        assert_eq!(n2.level, 2);
        assert_eq!(n2.support, 2);
        for node in tree.nodes() {
            assert_eq!(node.pattern.edge_count(), node.level + 1);
            assert!(node.support >= 2);
            if let Some(p) = node.parent {
                assert_eq!(tree.node(p).level + 1, node.level);
                assert_eq!(node.pattern.parent().unwrap(), tree.node(p).pattern);
            }
        }
        let codes: FxHashSet<_> = tree.nodes().iter().map(|n| n.code.clone()).collect();
        assert_eq!(codes.len(), tree.len());
    }

    #[test]
    fn empty_tree_when_theta_too_high() {
        let g = twelve();
        let config = MinerConfig::new(3, 1, 2);
        let (seeds, edges) = mine_seed_edges(&g, 3);
        let tree = grow_tree_levels(&g, seeds, edges, &config).unwrap();
        assert!(tree.is_empty());
        assert_eq!(tree.height(), 0);
        let result = mine_topk(&g, &config).unwrap();
        assert!(result.patterns.is_empty());
        assert_eq!(result.stats.frqchk_calls, 0);
    }

    #[test]
    fn termination_check_cases() {
        let g = twelve();
        let mut tree = PatternTree::default();
        let seed = Pattern::seed(A, B);
        let code = canonical_code(&seed).unwrap();
        let dom = Arc::new(Domain::new(vec![A, B], vec![vec![4], vec![0]]));
        tree.push(0, None, seed.clone(), code.clone(), dom.clone(), 1);
        let mut state = TopKState::new(1);
        assert!(!termination_check(&state, &tree));
        state.admit(ranked(seed.clone(), code.clone(), 1, dom.clone()));
        // bound 3 for two-node trees, min itrs 3
        assert!(termination_check(&state, &tree));

        let star = Pattern::seed(A, B).with_forward(0, C).unwrap().with_forward(0, D).unwrap();
        let mut tree4 = PatternTree::default();
        let star_dom = Arc::new(Domain::new(star.labels().to_vec(), vec![vec![4], vec![0], vec![6], vec![10]]));
        tree4.push(2, None, star.clone(), canonical_code(&star).unwrap(), star_dom, 1);
        let mut nine = TopKState::new(1);
        let mut p9 = ranked(seed, code, 1, dom);
        p9.interestingness = 9;
        nine.admit(p9);
        assert!(!termination_check(&nine, &tree4));
        tree4.mark_expanded(0);
        assert!(termination_check(&nine, &tree4));
        let _ = g;
    }

    #[test]
    fn topk_pool_keeps_best_with_code_tiebreak() {
        let mut state = TopKState::new(2);
        let mk = |p: Pattern| {
            let code = canonical_code(&p).unwrap();
            RankedPattern {
                interestingness: interestingness(&p),
                pattern: p,
                code,
                support: 1,
                domain: None,
            }
        };
        state.admit(mk(Pattern::seed(A, B)));
        state.admit(mk(Pattern::seed(A, C)));
        state.admit(mk(Pattern::seed(A, A)));
        let kept: Vec<_> = state.ranked().map(|r| r.pattern.labels().to_vec()).collect();
        assert_eq!(kept, vec![vec![A, A], vec![A, B]]);
        state.admit(mk(Pattern::seed(A, B).with_forward(0, C).unwrap()));
        assert_eq!(state.min_interestingness(), Some(3));
        assert_eq!(state.ranked().next().unwrap().interestingness, 5);
    }

    #[test]
    fn invalid_parameters_rejected() {
        let g = twelve();
        for (t, k, m) in [(0, 1, 1), (1, 0, 1), (1, 1, 0)] {
            assert!(matches!(mine_topk(&g, &MinerConfig::new(t, k, m)), Err(Error::Parameter(_))));
        }
    }

    #[test]
    fn parallel_run_matches_sequential() {
        let g = crate::graph::generate_preferential(150, 450, 4, 3).unwrap();
        let mut config = MinerConfig::new(20, 5, 2);
        let seq = mine_topk(&g, &config).unwrap();
        config.threads = 4;
        let par = mine_topk(&g, &config).unwrap();
        let codes = |r: &MiningResult| r.patterns.iter().map(|p| p.code.clone()).collect::<Vec<_>>();
        assert_eq!(codes(&seq), codes(&par));
        assert_eq!(seq.stats.frqchk_calls, par.stats.frqchk_calls);
        assert_eq!(seq.stats.domain_entries_peak, par.stats.domain_entries_peak);
    }
}
