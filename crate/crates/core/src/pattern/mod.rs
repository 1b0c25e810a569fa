//! Patterns as ordered expansion scripts.
//!
//! A pattern is built from a seed edge `u0 - u1` followed by forward steps
//! (each adds a new node `u_t` and an edge to an existing node) and backward
//! steps (each adds an edge between two existing nodes). Node indices follow
//! discovery order, so position `i` of a partial binding always binds `u_i`.

mod canonical;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

pub use canonical::{canonical_code, canonical_code_with_limit, CanonicalCode, DEFAULT_NODE_LIMIT};

use crate::error::{Error, Result};
use crate::graph::LabelId;

/// Hard ceiling from the bitmask adjacency representation.
pub const MAX_PATTERN_NODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// The initial edge `u0 - u1`.
    Seed { first: LabelId, second: LabelId },
    /// New node `u_to` labeled `label`, attached to existing `u_from`.
    Forward { from: usize, to: usize, label: LabelId },
    /// New edge between existing nodes `u_i` and `u_j`.
    Backward { i: usize, j: usize },
}

impl Step {
    pub fn is_backward(&self) -> bool {
        matches!(self, Step::Backward { .. })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    labels: Vec<LabelId>,
    script: Vec<Step>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u64>,
}

impl Pattern {
    /// Single-edge pattern with the smaller label on `u0`.
    pub fn seed(a: LabelId, b: LabelId) -> Pattern {
        let (first, second) = (a.min(b), a.max(b));
        Pattern {
            labels: vec![first, second],
            script: vec![Step::Seed { first, second }],
            edges: vec![(0, 1)],
            adjacency: vec![0b10, 0b01],
        }
    }

    /// Replays an expansion script, validating every step.
    pub fn from_script(script: &[Step]) -> Result<Pattern> {
        let mut steps = script.iter();
        let mut pattern = match steps.next() {
            Some(&Step::Seed { first, second }) => Pattern {
                labels: vec![first, second],
                script: vec![Step::Seed { first, second }],
                edges: vec![(0, 1)],
                adjacency: vec![0b10, 0b01],
            },
            _ => return Err(invalid("script must start with a seed step")),
        };
        for step in steps {
            pattern = match *step {
                Step::Seed { .. } => return Err(invalid("seed step after the start")),
                Step::Forward { from, to, label } => {
                    if to != pattern.node_count() {
                        return Err(invalid("forward step must introduce the next node index"));
                    }
                    pattern.with_forward(from, label)?
                }
                Step::Backward { i, j } => pattern.with_backward(i, j)?,
            };
        }
        Ok(pattern)
    }

    /// Builds a pattern from an arbitrary connected labeled edge list.
    ///
    /// Nodes are re-indexed in breadth-first discovery order starting at
    /// input node 0; the returned vector maps new index to input index.
    pub fn from_edges(labels: &[LabelId], edges: &[(usize, usize)]) -> Result<(Pattern, Vec<usize>)> {
        let n = labels.len();
        if !(2..=MAX_PATTERN_NODES).contains(&n) {
            return Err(invalid("pattern needs between 2 and 64 nodes"));
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(invalid("edge endpoint out of range or self-edge"));
            }
            if !adj[a].insert(b) || !adj[b].insert(a) {
                return Err(invalid("duplicate pattern edge"));
            }
        }
        let mut order = vec![0usize];
        let mut index = vec![usize::MAX; n];
        index[0] = 0;
        let mut tree_edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if index[w] == usize::MAX {
                    index[w] = order.len();
                    order.push(w);
                    tree_edges.push((index[v], index[w]));
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(invalid("pattern is not connected"));
        }
        let mut script = vec![Step::Seed {
            first: labels[order[0]],
            second: labels[order[1]],
        }];
        for &(from, to) in &tree_edges[1..] {
            script.push(Step::Forward {
                from,
                to,
                label: labels[order[to]],
            });
        }
        let tree: BTreeSet<(usize, usize)> = tree_edges.iter().copied().collect();
        let mut extra: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (index[a], index[b]);
                (x.min(y), x.max(y))
            })
            .filter(|e| !tree.contains(e))
            .collect();
        extra.sort_unstable();
        script.extend(extra.into_iter().map(|(i, j)| Step::Backward { i, j }));
        Ok((Pattern::from_script(&script)?, order))
    }

    pub fn with_forward(&self, from: usize, label: LabelId) -> Result<Pattern> {
        let to = self.node_count();
        if from >= to {
            return Err(invalid("forward step anchored at a missing node"));
        }
        if to >= MAX_PATTERN_NODES {
            return Err(Error::Capacity {
                what: "pattern node count".into(),
                limit: MAX_PATTERN_NODES,
            });
        }
        let mut next = self.clone();
        next.labels.push(label);
        next.adjacency.push(1 << from);
        next.adjacency[from] |= 1 << to;
        next.edges.push((from, to));
        next.script.push(Step::Forward { from, to, label });
        Ok(next)
    }

    pub fn with_backward(&self, i: usize, j: usize) -> Result<Pattern> {
        let n = self.node_count();
        if i >= n || j >= n || i == j {
            return Err(invalid("backward step needs two distinct existing nodes"));
        }
        if self.has_edge(i, j) {
            return Err(invalid("backward step repeats an existing edge"));
        }
        let mut next = self.clone();
        next.adjacency[i] |= 1 << j;
        next.adjacency[j] |= 1 << i;
        next.edges.push((i, j));
        next.script.push(Step::Backward { i, j });
        Ok(next)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[LabelId] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> LabelId {
        self.labels[u]
    }

    pub fn script(&self) -> &[Step] {
        &self.script
    }

    /// Edges in script order; `edges()[t]` is the edge added by `script()[t]`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].count_ones() as usize
    }

    pub fn last_step(&self) -> Step {
        *self.script.last().expect("script is never empty")
    }

    pub fn is_tree(&self) -> bool {
        !self.script.iter().any(Step::is_backward)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.node_count();
        self.edge_count() == n * (n - 1) / 2
    }

    /// The pattern this one was expanded from (script minus its last step).
    pub fn parent(&self) -> Option<Pattern> {
        if self.script.len() < 2 {
            return None;
        }
        Some(Pattern::from_script(&self.script[..self.script.len() - 1]).expect("prefix of a valid script"))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern(labels={:?}, edges={:?})", self.labels, self.edges)
    }
}

fn invalid(message: &str) -> Error {
    Error::Contract(message.to_string())
}

/// |V_p| + |E_p|.
pub fn interestingness(pattern: &Pattern) -> usize {
    pattern.node_count() + pattern.edge_count()
}

/// Interestingness of the complete pattern on `n` nodes, the largest value
/// any expansion of an `n`-node pattern can reach without adding nodes.
pub fn complete_interestingness(n: usize) -> usize {
    n + n * n.saturating_sub(1) / 2
}

/// Frequent single-edge label pairs, stored as `(low, high)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedSet {
    pairs: BTreeSet<(LabelId, LabelId)>,
}

impl SeedSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: LabelId, b: LabelId) {
        self.pairs.insert((a.min(b), a.max(b)));
    }

    pub fn contains(&self, a: LabelId, b: LabelId) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (LabelId, LabelId)> + '_ {
        self.pairs.iter().copied()
    }

    /// Labels that may sit across a seed edge from a node labeled `label`.
    pub fn partners(&self, label: LabelId) -> impl Iterator<Item = LabelId> + '_ {
        self.pairs.iter().filter_map(move |&(a, b)| {
            if a == label {
                Some(b)
            } else if b == label {
                Some(a)
            } else {
                None
            }
        })
    }
}

impl FromIterator<(LabelId, LabelId)> for SeedSet {
    fn from_iter<T: IntoIterator<Item = (LabelId, LabelId)>>(iter: T) -> Self {
        let mut set = SeedSet::new();
        for (a, b) in iter {
            set.insert(a, b);
        }
        set
    }
}

/// A generated candidate together with its canonical code.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub pattern: Pattern,
    pub code: CanonicalCode,
}

/// One-node-larger tree candidates of a tree pattern, deduplicated and
/// sorted by canonical code.
pub fn forward_expansions(pattern: &Pattern, seeds: &SeedSet) -> Result<Vec<Candidate>> {
    forward_expansions_with_limit(pattern, seeds, DEFAULT_NODE_LIMIT)
}

pub fn forward_expansions_with_limit(
    pattern: &Pattern,
    seeds: &SeedSet,
    node_limit: usize,
) -> Result<Vec<Candidate>> {
    if !pattern.is_tree() {
        return Err(invalid("forward expansion expects a tree pattern"));
    }
    all_forward_extensions(pattern, seeds, node_limit)
}

/// Forward extensions of any pattern, trees or not.
pub(crate) fn all_forward_extensions(
    pattern: &Pattern,
    seeds: &SeedSet,
    node_limit: usize,
) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for u in 0..pattern.node_count() {
        for label in seeds.partners(pattern.label(u)) {
            let next = pattern.with_forward(u, label)?;
            let code = canonical_code_with_limit(&next, node_limit)?;
            out.push(Candidate { pattern: next, code });
        }
    }
    Ok(dedup_by_code(out))
}

/// Candidates adding one edge between existing, non-adjacent nodes whose
/// label pair is a seed; deduplicated and sorted by canonical code.
pub fn backward_expansions(pattern: &Pattern, seeds: &SeedSet) -> Result<Vec<Candidate>> {
    backward_expansions_with_limit(pattern, seeds, DEFAULT_NODE_LIMIT)
}

pub fn backward_expansions_with_limit(
    pattern: &Pattern,
    seeds: &SeedSet,
    node_limit: usize,
) -> Result<Vec<Candidate>> {
    let n = pattern.node_count();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !pattern.has_edge(i, j) && seeds.contains(pattern.label(i), pattern.label(j)) {
                let next = pattern.with_backward(i, j)?;
                let code = canonical_code_with_limit(&next, node_limit)?;
                out.push(Candidate { pattern: next, code });
            }
        }
    }
    Ok(dedup_by_code(out))
}

fn dedup_by_code(mut candidates: Vec<Candidate>) -> Vec<Candidate> {
    // stable sort keeps the first generated script for each code
    candidates.sort_by(|a, b| a.code.cmp(&b.code));
    candidates.dedup_by(|later, earlier| later.code == earlier.code);
    candidates
}
