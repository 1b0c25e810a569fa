//! Exact ground truth for small graphs: subgraph matching by backtracking,
//! exact MNI images, the complete frequent set and its top k.

use std::cmp::Reverse;
use std::collections::VecDeque;
use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::graph::{DataGraph, LabelId, NodeId};
use crate::miner::{MiningResult, RankedPattern};
use crate::pattern::{canonical_code, interestingness, CanonicalCode, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_pattern_nodes: usize,
    /// Matches materialized by [`enumerate_matches`].
    pub max_matches: usize,
    /// Backtracking steps per image or enumeration run.
    pub max_steps: u64,
    /// Members of the frequent set explored by [`exact_topk`].
    pub max_frequent: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_pattern_nodes: 8,
            max_matches: 2_000_000,
            max_steps: 500_000_000,
            max_frequent: 50_000,
        }
    }
}

const UNBOUND: NodeId = NodeId::MAX;

struct Matcher<'a> {
    graph: &'a DataGraph,
    pattern: &'a Pattern,
    restrict: Option<&'a Domain>,
    steps: u64,
    max_steps: u64,
}

/// Search order rooted at `root`: each later node has an earlier neighbor
/// to draw candidates from. Nodes with more bound neighbors come first.
struct Plan {
    order: Vec<usize>,
    anchor: Vec<usize>,
    checks: Vec<Vec<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(graph: &'a DataGraph, pattern: &'a Pattern, restrict: Option<&'a Domain>, limits: &OracleLimits) -> Self {
        Matcher {
            graph,
            pattern,
            restrict,
            steps: 0,
            max_steps: limits.max_steps,
        }
    }

    fn candidate_count(&self, u: usize) -> usize {
        match self.restrict {
            Some(d) if u < d.column_count() => d.column(u).len(),
            _ => self.graph.nodes_with_label(self.pattern.label(u)).len(),
        }
    }

    fn candidates(&self, u: usize) -> &'a [NodeId] {
        match self.restrict {
            Some(d) if u < d.column_count() => d.column(u),
            _ => self.graph.nodes_with_label(self.pattern.label(u)),
        }
    }

    fn allowed(&self, u: usize, v: NodeId) -> bool {
        if self.graph.label(v) != self.pattern.label(u) || self.graph.degree(v) < self.pattern.degree(u) {
            return false;
        }
        match self.restrict {
            Some(d) if u < d.column_count() => d.contains(u, v),
            _ => true,
        }
    }

    fn plan(&self, root: usize) -> Plan {
        let n = self.pattern.node_count();
        let mut placed = vec![false; n];
        placed[root] = true;
        let mut order = vec![root];
        let mut anchor = vec![usize::MAX];
        let mut checks = vec![Vec::new()];
        while order.len() < n {
            let next = (0..n)
                .filter(|&u| !placed[u])
                .filter(|&u| order.iter().any(|&w| self.pattern.has_edge(u, w)))
                .min_by_key(|&u| {
                    let linked = order.iter().filter(|&&w| self.pattern.has_edge(u, w)).count();
                    (Reverse(linked), self.candidate_count(u), u)
                })
                .expect("patterns are connected");
            let bound: Vec<usize> = order.iter().copied().filter(|&w| self.pattern.has_edge(next, w)).collect();
            placed[next] = true;
            order.push(next);
            anchor.push(bound[0]);
            checks.push(bound[1..].to_vec());
        }
        Plan { order, anchor, checks }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::Capacity {
                what: "oracle search steps (use a smaller graph or pattern)".into(),
                limit: self.max_steps as usize,
            });
        }
        Ok(())
    }

    /// Extends `binding` along `plan` from position `pos`; `visit` returns
    /// false to stop the whole search. Returns false if stopped.
    fn extend(
        &mut self,
        plan: &Plan,
        pos: usize,
        binding: &mut [NodeId],
        visit: &mut dyn FnMut(&[NodeId]) -> Result<bool>,
    ) -> Result<bool> {
        if pos == plan.order.len() {
            return visit(binding);
        }
        let u = plan.order[pos];
        let pool = self
            .graph
            .labeled_neighbors(binding[plan.anchor[pos]], self.pattern.label(u));
        for &v in pool {
            self.tick()?;
            if binding.contains(&v) || !self.allowed(u, v) {
                continue;
            }
            if !plan.checks[pos].iter().all(|&w| self.graph.has_edge(binding[w], v)) {
                continue;
            }
            binding[u] = v;
            let go_on = self.extend(plan, pos + 1, binding, visit)?;
            binding[u] = UNBOUND;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Some match binding `root` to `v`, if one exists.
    fn find_with(&mut self, plan: &Plan, v: NodeId) -> Result<Option<Vec<NodeId>>> {
        let root = plan.order[0];
        if !self.allowed(root, v) {
            return Ok(None);
        }
        let mut binding = vec![UNBOUND; self.pattern.node_count()];
        binding[root] = v;
        let mut found = None;
        self.extend(plan, 1, &mut binding, &mut |b| {
            found = Some(b.to_vec());
            Ok(false)
        })?;
        Ok(found)
    }
}

fn check_size(pattern: &Pattern, limits: &OracleLimits) -> Result<()> {
    if pattern.node_count() > limits.max_pattern_nodes {
        return Err(Error::Capacity {
            what: "oracle pattern nodes".into(),
            limit: limits.max_pattern_nodes,
        });
    }
    Ok(())
}

/// Every embedding of `pattern` in `graph`, one graph node per pattern
/// node, in lexicographic order.
pub fn enumerate_matches(graph: &DataGraph, pattern: &Pattern) -> Result<Vec<Vec<NodeId>>> {
    enumerate_matches_with(graph, pattern, &OracleLimits::default())
}

pub fn enumerate_matches_with(graph: &DataGraph, pattern: &Pattern, limits: &OracleLimits) -> Result<Vec<Vec<NodeId>>> {
    check_size(pattern, limits)?;
    let mut matcher = Matcher::new(graph, pattern, None, limits);
    let root = (0..pattern.node_count())
        .min_by_key(|&u| (matcher.candidate_count(u), u))
        .unwrap_or(0);
    let plan = matcher.plan(root);
    let mut out: Vec<Vec<NodeId>> = Vec::new();
    let mut binding = vec![UNBOUND; pattern.node_count()];
    for &v in matcher.candidates(root) {
        if !matcher.allowed(root, v) {
            continue;
        }
        binding[root] = v;
        let cap = limits.max_matches;
        matcher.extend(&plan, 1, &mut binding, &mut |b| {
            if out.len() >= cap {
                return Err(Error::Capacity {
                    what: "oracle match count".into(),
                    limit: cap,
                });
            }
            out.push(b.to_vec());
            Ok(true)
        })?;
        binding[root] = UNBOUND;
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact images of every pattern node. With `theta`, gives up (None) as
/// soon as some image provably stays below it. With `restrict`, candidates
/// for node `i` are limited to column `i` of that domain, which must hold
/// the images of a sub-pattern sharing the first node indices.
fn images(
    graph: &DataGraph,
    pattern: &Pattern,
    restrict: Option<&Domain>,
    theta: Option<usize>,
    limits: &OracleLimits,
) -> Result<Option<Domain>> {
    check_size(pattern, limits)?;
    let n = pattern.node_count();
    let mut matcher = Matcher::new(graph, pattern, restrict, limits);
    let mut found: Vec<FxHashSet<NodeId>> = vec![FxHashSet::default(); n];
    let mut by_size: Vec<usize> = (0..n).collect();
    by_size.sort_by_key(|&u| (matcher.candidate_count(u), u));
    for u in by_size {
        let plan = matcher.plan(u);
        let candidates = matcher.candidates(u);
        if theta.is_some_and(|t| candidates.len() < t) {
            return Ok(None);
        }
        for (idx, &v) in candidates.iter().enumerate() {
            if !found[u].contains(&v) {
                if let Some(m) = matcher.find_with(&plan, v)? {
                    for (w, &x) in m.iter().enumerate() {
                        found[w].insert(x);
                    }
                }
            }
            let remaining = candidates.len() - idx - 1;
            if theta.is_some_and(|t| found[u].len() + remaining < t) {
                return Ok(None);
            }
        }
    }
    let columns = found.into_iter().map(|s| s.into_iter().collect()).collect();
    Ok(Some(Domain::new(pattern.labels().to_vec(), columns)))
}

/// Exact image table of `pattern`.
pub fn exact_images(graph: &DataGraph, pattern: &Pattern) -> Result<Domain> {
    Ok(images(graph, pattern, None, None, &OracleLimits::default())?.expect("no threshold"))
}

/// Exact MNI support.
pub fn exact_support(graph: &DataGraph, pattern: &Pattern) -> Result<usize> {
    Ok(exact_images(graph, pattern)?.support())
}

/// Whether the exact MNI support is at least `t`; stops early either way.
pub fn exact_support_at_least(graph: &DataGraph, pattern: &Pattern, t: usize) -> Result<bool> {
    if t == 0 {
        return Ok(true);
    }
    Ok(images(graph, pattern, None, Some(t), &OracleLimits::default())?.is_some_and(|d| d.support() >= t))
}

/// The complete frequent set (up to the node cap), ranked.
#[derive(Debug, Clone)]
pub struct ExactTopK {
    pub theta: usize,
    pub k: usize,
    pub max_pattern_nodes: usize,
    /// All frequent patterns, by interestingness desc then code asc.
    pub frequent: Vec<RankedPattern>,
    /// A frequent pattern at the node cap had possible extensions that were
    /// not explored.
    pub truncated: bool,
}

impl ExactTopK {
    pub fn ranked(&self) -> &[RankedPattern] {
        &self.frequent[..self.k.min(self.frequent.len())]
    }

    pub fn codes(&self) -> FxHashSet<&CanonicalCode> {
        self.frequent.iter().map(|p| &p.code).collect()
    }
}

/// Exhaustive level-wise search for every connected pattern with exact
/// support at least `theta`; keeps the top `k`.
pub fn exact_topk(graph: &DataGraph, theta: usize, k: usize, limits: &OracleLimits) -> Result<ExactTopK> {
    if theta == 0 || k == 0 {
        return Err(Error::Parameter("theta and k must be at least 1".into()));
    }
    let labels: Vec<LabelId> = (0..graph.label_count() as LabelId)
        .filter(|&l| !graph.nodes_with_label(l).is_empty())
        .collect();
    let mut partners: Vec<Vec<LabelId>> = vec![Vec::new(); graph.label_count()];
    let mut frequent: Vec<RankedPattern> = Vec::new();
    let mut queue: VecDeque<(Pattern, Arc<Domain>)> = VecDeque::new();
    let mut seen: FxHashSet<CanonicalCode> = FxHashSet::default();

    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i..] {
            let seed = Pattern::seed(a, b);
            if let Some(d) = images(graph, &seed, None, Some(theta), limits)? {
                partners[a as usize].push(b);
                if a != b {
                    partners[b as usize].push(a);
                }
                let code = canonical_code(&seed)?;
                seen.insert(code.clone());
                admit(seed, code, d, &mut frequent, &mut queue, limits)?;
            }
        }
    }
    for p in &mut partners {
        p.sort_unstable();
    }

    let mut truncated = false;
    while let Some((parent, domain)) = queue.pop_front() {
        let n = parent.node_count();
        let mut children = Vec::new();
        for u in 0..n {
            for &b in &partners[parent.label(u) as usize] {
                if n < limits.max_pattern_nodes {
                    children.push(parent.with_forward(u, b)?);
                } else {
                    truncated = true;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !parent.has_edge(i, j) && partners[parent.label(i) as usize].contains(&parent.label(j)) {
                    children.push(parent.with_backward(i, j)?);
                }
            }
        }
        for child in children {
            let code = canonical_code(&child)?;
            if !seen.insert(code.clone()) {
                continue;
            }
            if let Some(d) = images(graph, &child, Some(&domain), Some(theta), limits)? {
                admit(child, code, d, &mut frequent, &mut queue, limits)?;
            }
        }
    }
    frequent.sort_by(|x, y| (Reverse(x.interestingness), &x.code).cmp(&(Reverse(y.interestingness), &y.code)));
    Ok(ExactTopK {
        theta,
        k,
        max_pattern_nodes: limits.max_pattern_nodes,
        frequent,
        truncated,
    })
}

fn admit(
    pattern: Pattern,
    code: CanonicalCode,
    domain: Domain,
    frequent: &mut Vec<RankedPattern>,
    queue: &mut VecDeque<(Pattern, Arc<Domain>)>,
    limits: &OracleLimits,
) -> Result<()> {
    let domain = Arc::new(domain);
    frequent.push(RankedPattern {
        interestingness: interestingness(&pattern),
        support: domain.support(),
        pattern: pattern.clone(),
        code,
        domain: Some(domain.clone()),
    });
    if frequent.len() > limits.max_frequent {
        return Err(Error::Capacity {
            what: "oracle frequent set size".into(),
            limit: limits.max_frequent,
        });
    }
    queue.push_back((pattern, domain));
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecallMetrics {
    /// Share of the approximate top k that is exactly frequent.
    pub set_recall: f64,
    /// Interestingness sum of the approximate top k over the exact one.
    pub itrs_ratio: f64,
}

pub fn recall_metrics(approx: &MiningResult, exact: &ExactTopK) -> Result<RecallMetrics> {
    if approx.config.theta != exact.theta || approx.config.k != exact.k {
        return Err(Error::Contract(format!(
            "compared runs differ: approximate theta={} k={}, exact theta={} k={}",
            approx.config.theta, approx.config.k, exact.theta, exact.k
        )));
    }
    let codes = exact.codes();
    let set_recall = if approx.patterns.is_empty() {
        1.0
    } else {
        let hits = approx.patterns.iter().filter(|p| codes.contains(&p.code)).count();
        hits as f64 / approx.patterns.len() as f64
    };
    let exact_sum: usize = exact.ranked().iter().map(|p| p.interestingness).sum();
    let itrs_ratio = if exact_sum == 0 {
        1.0
    } else {
        approx.interestingness_sum() as f64 / exact_sum as f64
    };
    Ok(RecallMetrics { set_recall, itrs_ratio })
}
