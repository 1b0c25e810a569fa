//! Lower-bound MNI support estimation of a child pattern from its parent's
//! domain.
//!
//! Starting from every valid node of the parent's first column, a guided
//! depth-first traversal re-binds the parent pattern position by position
//! (`bound[i]` binds `u_i`). Whenever a full parent binding is reached the
//! child's extension edge is checked and every node of each genuine child
//! match is recorded in the child's domain. Node selection prefers nodes not
//! yet in the child's domain (condition A), revisits known nodes at most
//! `budget` times per level while the binding still holds an unrecorded
//! node (condition B), and otherwise stops (condition C).
//!
//! Every recorded node belongs to a verified match, so the returned support
//! never exceeds the exact MNI support.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domain::{support_of, valid_count, Domain, DomainBuilder, ValidityOverlay};
use crate::error::{Error, Result};
use crate::graph::{DataGraph, LabelId, NodeId};
use crate::pattern::{Pattern, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrqChkOptions {
    /// Condition-B picks allowed per traversal level (`m`).
    pub budget: usize,
    /// Visit candidate nodes in a seeded random order instead of ascending id.
    pub shuffle_seed: Option<u64>,
    pub trace: bool,
}

impl Default for FrqChkOptions {
    fn default() -> Self {
        FrqChkOptions {
            budget: 2,
            shuffle_seed: None,
            trace: false,
        }
    }
}

impl FrqChkOptions {
    pub fn with_budget(budget: usize) -> Self {
        FrqChkOptions {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    A,
    B,
    C,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::A => "A",
            Condition::B => "B",
            Condition::C => "C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    /// Condition A: a node not yet in the child's column.
    Fresh(NodeId),
    /// Condition B: a known node, spending one unit of budget.
    Revisit(NodeId),
    /// Condition C.
    Stop,
}

impl Choice {
    pub fn condition(&self) -> Condition {
        match self {
            Choice::Fresh(_) => Condition::A,
            Choice::Revisit(_) => Condition::B,
            Choice::Stop => Condition::C,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Root { node: NodeId },
    Pick { bound: Vec<NodeId>, node: NodeId, condition: Condition },
    Stop { bound: Vec<NodeId> },
    Expand { bound: Vec<NodeId>, added: Vec<NodeId>, matched: bool },
    EarlyBreak { column0: usize, remaining: usize },
}

fn fmt_nodes(nodes: &[NodeId]) -> String {
    let parts: Vec<String> = nodes.iter().map(|v| format!("v{v}")).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Root { node } => write!(f, "root v{node}"),
            TraceEvent::Pick { bound, node, condition } => {
                write!(f, "pick {} v{node} {condition}", fmt_nodes(bound))
            }
            TraceEvent::Stop { bound } => write!(f, "stop {} C", fmt_nodes(bound)),
            TraceEvent::Expand { bound, added, matched } => write!(
                f,
                "expand {} {} {}",
                fmt_nodes(bound),
                if *matched { "match" } else { "none" },
                fmt_nodes(added)
            ),
            TraceEvent::EarlyBreak { column0, remaining } => {
                write!(f, "break column0={column0} remaining={remaining}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct FrqChkOutcome {
    /// Support of `domain`; a lower bound of the exact MNI support.
    pub support: usize,
    pub domain: Domain,
    /// The remaining candidates of column 0 could not reach the threshold.
    pub early_break: bool,
    pub overlay: ValidityOverlay,
    /// Nodes pushed onto the binding stack.
    pub steps: u64,
    pub trace: Vec<TraceEvent>,
}

/// The child's extension edge `e_x = (u_i, u_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    Forward { anchor: usize, new: usize, label: LabelId },
    Backward { i: usize, j: usize },
}

impl Extension {
    pub fn of(candidate: &Pattern) -> Result<Extension> {
        match candidate.last_step() {
            Step::Forward { from, to, label } => Ok(Extension::Forward {
                anchor: from,
                new: to,
                label,
            }),
            Step::Backward { i, j } => Ok(Extension::Backward { i, j }),
            Step::Seed { .. } => Err(Error::Contract(
                "a seed pattern has no parent to estimate from".into(),
            )),
        }
    }
}

/// Positional binding plan for the parent part of a candidate.
#[derive(Debug, Clone)]
pub struct TraversalPlan {
    labels: Vec<LabelId>,
    edges: Vec<(usize, usize)>,
    parent_nodes: usize,
    /// `anchor[s]`: parent node whose binding supplies candidates for `u_s`.
    anchor: Vec<usize>,
    /// `checks[s]`: other earlier parent nodes adjacent to `u_s`.
    checks: Vec<Vec<usize>>,
    extension: Extension,
}

impl TraversalPlan {
    pub fn new(candidate: &Pattern) -> Result<Self> {
        let extension = Extension::of(candidate)?;
        let parent_nodes = match extension {
            Extension::Forward { .. } => candidate.node_count() - 1,
            Extension::Backward { .. } => candidate.node_count(),
        };
        let parent_edges = &candidate.edges()[..candidate.edge_count() - 1];
        let mut anchor = vec![usize::MAX; parent_nodes];
        let mut checks = vec![Vec::new(); parent_nodes];
        for (t, step) in candidate.script()[..candidate.script().len() - 1].iter().enumerate() {
            match *step {
                Step::Seed { .. } => anchor[1] = 0,
                Step::Forward { from, to, .. } => anchor[to] = from,
                Step::Backward { .. } => {
                    let (a, b) = parent_edges[t];
                    let (lo, hi) = (a.min(b), a.max(b));
                    checks[hi].push(lo);
                }
            }
        }
        for c in &mut checks {
            c.sort_unstable();
        }
        Ok(TraversalPlan {
            labels: candidate.labels().to_vec(),
            edges: candidate.edges().to_vec(),
            parent_nodes,
            anchor,
            checks,
            extension,
        })
    }

    pub fn parent_nodes(&self) -> usize {
        self.parent_nodes
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    /// Candidate graph nodes for parent position `bound.len()`.
    pub fn cons_extr(&self, graph: &DataGraph, overlay: &ValidityOverlay, bound: &[NodeId]) -> Vec<NodeId> {
        let mut out = Vec::new();
        self.cons_extr_into(graph, overlay, bound, &mut out);
        out
    }

    fn cons_extr_into(&self, graph: &DataGraph, overlay: &ValidityOverlay, bound: &[NodeId], out: &mut Vec<NodeId>) {
        let s = bound.len();
        debug_assert!(s > 0 && s < self.parent_nodes);
        let from = bound[self.anchor[s]];
        out.clear();
        out.extend(graph.labeled_neighbors(from, self.labels[s]).iter().copied().filter(|&w| {
            !bound.contains(&w)
                && !overlay.is_invalid(s, w)
                && self.checks[s].iter().all(|&b| graph.has_edge(w, bound[b]))
        }));
    }

    /// Records every child match extending a full parent binding.
    /// Returns the nodes added for the new node (forward), or whether the
    /// binding closed the extension edge (backward).
    pub fn expand(&self, graph: &DataGraph, live: &mut DomainBuilder, bound: &[NodeId]) -> (bool, Vec<NodeId>) {
        let mut added = Vec::new();
        let matched = self.expand_into(graph, live, bound, Some(&mut added));
        (matched, added)
    }

    fn expand_into(
        &self,
        graph: &DataGraph,
        live: &mut DomainBuilder,
        bound: &[NodeId],
        mut added: Option<&mut Vec<NodeId>>,
    ) -> bool {
        debug_assert_eq!(bound.len(), self.parent_nodes);
        match self.extension {
            Extension::Forward { anchor, new, label } => {
                let mut matched = false;
                for &w in graph.labeled_neighbors(bound[anchor], label) {
                    if bound.contains(&w) {
                        continue;
                    }
                    #[cfg(debug_assertions)]
                    self.assert_match(graph, bound, Some(w));
                    live.insert(new, w);
                    if let Some(a) = added.as_mut() {
                        a.push(w);
                    }
                    matched = true;
                }
                if matched {
                    for (i, &v) in bound.iter().enumerate() {
                        live.insert(i, v);
                    }
                }
                matched
            }
            Extension::Backward { i, j } => {
                if !graph.has_edge(bound[i], bound[j]) {
                    return false;
                }
                #[cfg(debug_assertions)]
                self.assert_match(graph, bound, None);
                for (k, &v) in bound.iter().enumerate() {
                    live.insert(k, v);
                }
                true
            }
        }
    }

    #[cfg(debug_assertions)]
    fn assert_match(&self, graph: &DataGraph, bound: &[NodeId], extra: Option<NodeId>) {
        let at = |k: usize| if k < bound.len() { bound[k] } else { extra.unwrap() };
        let n = bound.len() + extra.is_some() as usize;
        for k in 0..n {
            assert_eq!(graph.label(at(k)), self.labels[k], "label mismatch at u{k}");
            assert!((0..k).all(|i| at(i) != at(k)), "binding is not injective");
        }
        for &(a, b) in &self.edges {
            assert!(graph.has_edge(at(a), at(b)), "missing edge u{a}-u{b}");
        }
    }
}

/// Candidates at one traversal level, with tried flags and cursors so that
/// repeated choices stay linear in the candidate count.
struct LevelCandidates {
    nodes: Vec<NodeId>,
    tried: Vec<bool>,
    fresh_cursor: usize,
    any_cursor: usize,
}

impl LevelCandidates {
    fn new(nodes: Vec<NodeId>) -> Self {
        Self::reuse(nodes, Vec::new())
    }

    fn reuse(nodes: Vec<NodeId>, mut tried: Vec<bool>) -> Self {
        tried.clear();
        tried.resize(nodes.len(), false);
        LevelCandidates {
            nodes,
            tried,
            fresh_cursor: 0,
            any_cursor: 0,
        }
    }

    fn choose(&mut self, live: &DomainBuilder, bound: &[NodeId], c: usize, budget: usize) -> Choice {
        let col = bound.len();
        // nodes only ever join the column, so skipped positions stay skipped
        while self.fresh_cursor < self.nodes.len()
            && (self.tried[self.fresh_cursor] || live.contains(col, self.nodes[self.fresh_cursor]))
        {
            self.fresh_cursor += 1;
        }
        if self.fresh_cursor < self.nodes.len() {
            self.tried[self.fresh_cursor] = true;
            return Choice::Fresh(self.nodes[self.fresh_cursor]);
        }
        while self.any_cursor < self.nodes.len() && self.tried[self.any_cursor] {
            self.any_cursor += 1;
        }
        if self.any_cursor < self.nodes.len()
            && c < budget
            && bound.iter().enumerate().any(|(i, &v)| !live.contains(i, v))
        {
            self.tried[self.any_cursor] = true;
            return Choice::Revisit(self.nodes[self.any_cursor]);
        }
        Choice::Stop
    }
}

/// One selection among `candidates` (already excluding tried nodes) for
/// position `bound.len()`.
pub fn node_choose(
    candidates: &[NodeId],
    live: &DomainBuilder,
    bound: &[NodeId],
    c: usize,
    budget: usize,
) -> Choice {
    LevelCandidates::new(candidates.to_vec()).choose(live, bound, c, budget)
}

/// Marks parent-domain nodes that cannot take part in any child match
/// because they lack a neighbor required by the extension edge.
pub fn preliminary_prune(graph: &DataGraph, candidate: &Pattern, parent: &Domain) -> Result<ValidityOverlay> {
    let extension = Extension::of(candidate)?;
    let mut overlay = ValidityOverlay::new(parent.column_count());
    match extension {
        Extension::Forward { anchor, label, .. } => {
            for &v in parent.column(anchor) {
                if graph.labeled_neighbors(v, label).is_empty() {
                    overlay.mark(anchor, v);
                }
            }
        }
        Extension::Backward { i, j } => {
            for (a, b) in [(i, j), (j, i)] {
                let label = candidate.label(b);
                for &v in parent.column(a) {
                    let supported = graph
                        .labeled_neighbors(v, label)
                        .iter()
                        .any(|&w| parent.contains(b, w));
                    if !supported {
                        overlay.mark(a, v);
                    }
                }
            }
        }
    }
    Ok(overlay)
}

/// Estimates the MNI support of `candidate` from the domain of its parent
/// (the candidate minus its last step).
pub fn frqchk(
    graph: &DataGraph,
    candidate: &Pattern,
    parent: &Domain,
    theta: usize,
    options: &FrqChkOptions,
) -> Result<FrqChkOutcome> {
    let plan = TraversalPlan::new(candidate)?;
    if parent.column_count() != plan.parent_nodes
        || parent.labels() != &candidate.labels()[..plan.parent_nodes]
    {
        return Err(Error::Contract(format!(
            "parent domain columns {:?} do not match parent pattern labels {:?}",
            parent.labels(),
            &candidate.labels()[..plan.parent_nodes.min(candidate.node_count())]
        )));
    }
    let overlay = preliminary_prune(graph, candidate, parent)?;
    let mut counter = valid_count(parent, &overlay, 0);

    let mut run = Traversal {
        graph,
        plan: &plan,
        overlay: &overlay,
        live: DomainBuilder::new(candidate.labels().to_vec()),
        budget: options.budget,
        rng: options.shuffle_seed.map(ChaCha8Rng::seed_from_u64),
        trace: options.trace.then(Vec::new),
        steps: 0,
        spare: Vec::new(),
    };

    let mut early_break = false;
    let mut bound = Vec::with_capacity(plan.parent_nodes);
    for &v in parent.column(0) {
        if overlay.is_invalid(0, v) {
            continue;
        }
        counter -= 1;
        bound.clear();
        bound.push(v);
        run.record(|| TraceEvent::Root { node: v });
        run.traverse(&mut bound);
        let column0 = run.live.column_len(0);
        if column0 + counter < theta {
            early_break = true;
            run.record(|| TraceEvent::EarlyBreak {
                column0,
                remaining: counter,
            });
            break;
        }
    }

    let steps = run.steps;
    let trace = run.trace.take().unwrap_or_default();
    let domain = run.live.freeze();
    Ok(FrqChkOutcome {
        support: support_of(&domain),
        domain,
        early_break,
        overlay,
        steps,
        trace,
    })
}

struct Traversal<'a> {
    graph: &'a DataGraph,
    plan: &'a TraversalPlan,
    overlay: &'a ValidityOverlay,
    live: DomainBuilder,
    budget: usize,
    rng: Option<ChaCha8Rng>,
    trace: Option<Vec<TraceEvent>>,
    steps: u64,
    /// Spare candidate buffers, one pair per traversal depth.
    spare: Vec<(Vec<NodeId>, Vec<bool>)>,
}

impl Traversal<'_> {
    fn record(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(t) = self.trace.as_mut() {
            t.push(event());
        }
    }

    fn traverse(&mut self, bound: &mut Vec<NodeId>) {
        let depth = bound.len();
        if self.spare.len() <= depth {
            self.spare.resize_with(depth + 1, Default::default);
        }
        let (mut nodes, tried) = std::mem::take(&mut self.spare[depth]);
        self.plan.cons_extr_into(self.graph, self.overlay, bound, &mut nodes);
        if let Some(rng) = self.rng.as_mut() {
            nodes.shuffle(rng);
        }
        let mut level = LevelCandidates::reuse(nodes, tried);
        let mut c = 0;
        loop {
            let choice = level.choose(&self.live, bound, c, self.budget);
            let node = match choice {
                Choice::Fresh(v) => v,
                Choice::Revisit(v) => {
                    c += 1;
                    v
                }
                Choice::Stop => {
                    self.record(|| TraceEvent::Stop { bound: bound.clone() });
                    break;
                }
            };
            self.record(|| TraceEvent::Pick {
                bound: bound.clone(),
                node,
                condition: choice.condition(),
            });
            self.steps += 1;
            bound.push(node);
            if bound.len() == self.plan.parent_nodes {
                if self.trace.is_some() {
                    let mut added = Vec::new();
                    let matched = self.plan.expand_into(self.graph, &mut self.live, bound, Some(&mut added));
                    self.record(|| TraceEvent::Expand {
                        bound: bound.clone(),
                        added,
                        matched,
                    });
                } else {
                    self.plan.expand_into(self.graph, &mut self.live, bound, None);
                }
            } else {
                self.traverse(bound);
            }
            bound.pop();
        }
        self.spare[depth] = (level.nodes, level.tried);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::twelve;

    const A: LabelId = 0;
    const B: LabelId = 1;
    const C: LabelId = 2;
    const D: LabelId = 3;

    fn q1() -> Pattern {
        Pattern::seed(A, B).with_forward(0, C).unwrap()
    }

    fn q2() -> Pattern {
        q1().with_forward(2, D).unwrap()
    }

    /// Exact images of Q1 on the fixture (from its 18 matches).
    fn q1_domain() -> Domain {
        Domain::new(vec![A, B, C], vec![vec![4, 5], vec![0, 1, 2, 3], vec![6, 7, 8, 9]])
    }

    #[test]
    fn preliminary_prune_marks_v7() {
        let g = twelve();
        let overlay = preliminary_prune(&g, &q2(), &q1_domain()).unwrap();
        assert_eq!(overlay.invalid_in(2), vec![7]);
        assert_eq!(overlay.total_invalid(), 1);
        assert_eq!(valid_count(&q1_domain(), &overlay, 2), 3);
    }

    #[test]
    fn prune_is_empty_when_every_anchor_has_the_label() {
        let g = twelve();
        let cand = q1().with_forward(0, B).unwrap();
        let overlay = preliminary_prune(&g, &cand, &q1_domain()).unwrap();
        assert_eq!(overlay.total_invalid(), 0);
    }

    #[test]
    fn backward_prune_without_shared_edges_empties_columns() {
        // path A-B-A with the two A columns never adjacent to each other
        let g = DataGraph::from_edges(vec![A, B, A, A, B, A], &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let path = Pattern::seed(A, B).with_forward(1, A).unwrap();
        let tri = path.with_backward(0, 2).unwrap();
        let parent = Domain::new(vec![A, B, A], vec![vec![0, 2, 3, 5], vec![1, 4], vec![0, 2, 3, 5]]);
        let overlay = preliminary_prune(&g, &tri, &parent).unwrap();
        assert_eq!(overlay.invalid_count(0), 4);
        assert_eq!(overlay.invalid_count(2), 4);
        let out = frqchk(&g, &tri, &parent, 1, &FrqChkOptions::default()).unwrap();
        assert_eq!(out.support, 0);
    }

    #[test]
    fn cons_extr_on_fixture() {
        let g = twelve();
        let cand = q2();
        let plan = TraversalPlan::new(&cand).unwrap();
        let overlay = preliminary_prune(&g, &cand, &q1_domain()).unwrap();
        assert_eq!(plan.cons_extr(&g, &overlay, &[4]), vec![0, 1, 2]);
        assert_eq!(plan.cons_extr(&g, &overlay, &[4, 0]), vec![6, 8]);
        assert_eq!(plan.cons_extr(&g, &overlay, &[5, 3]), vec![8, 9]);
    }

    #[test]
    fn node_choose_conditions() {
        let empty = DomainBuilder::new(vec![A, B, C]);
        assert_eq!(node_choose(&[0, 1, 2], &empty, &[4], 0, 2), Choice::Fresh(0));

        let mut live = DomainBuilder::new(vec![A, B, C]);
        for (i, v) in [(0, 4), (1, 0), (1, 1), (1, 2)] {
            live.insert(i, v);
        }
        // everything known, binding fully recorded
        assert_eq!(node_choose(&[0, 1, 2], &live, &[4], 0, 2), Choice::Stop);
        // binding holds an unrecorded node: budgeted revisit
        assert_eq!(node_choose(&[0, 1, 2], &live, &[5], 0, 2), Choice::Revisit(0));
        assert_eq!(node_choose(&[0, 1, 2], &live, &[5], 2, 2), Choice::Stop);
    }

    #[test]
    fn expand_on_fixture() {
        let g = twelve();
        let plan = TraversalPlan::new(&q2()).unwrap();
        let mut live = DomainBuilder::new(q2().labels().to_vec());
        assert_eq!(plan.expand(&g, &mut live, &[4, 0, 6]), (true, vec![10]));
        assert!(live.contains(3, 10) && live.contains(0, 4) && live.contains(1, 0) && live.contains(2, 6));
        assert_eq!(plan.expand(&g, &mut live, &[4, 0, 8]), (true, vec![11]));
        assert_eq!(plan.expand(&g, &mut live, &[5, 3, 9]), (true, vec![11]));
        assert!(live.contains(0, 5) && live.contains(1, 3) && live.contains(2, 9));
        assert_eq!(plan.expand(&g, &mut live, &[4, 1, 7]), (false, vec![]));
    }

    #[test]
    fn fixture_q2_estimate() {
        let g = twelve();
        let out = frqchk(&g, &q2(), &q1_domain(), 2, &FrqChkOptions::with_budget(2)).unwrap();
        assert_eq!(out.support, 2);
        assert!(!out.early_break);
        assert_eq!(out.overlay.invalid_in(2), vec![7]);
        let expected = Domain::new(
            vec![A, B, C, D],
            vec![vec![4, 5], vec![0, 1, 2, 3], vec![6, 8, 9], vec![10, 11]],
        );
        assert_eq!(out.domain, expected);
    }

    #[test]
    fn fixture_early_break_at_theta_4() {
        let g = twelve();
        let out = frqchk(&g, &q2(), &q1_domain(), 4, &FrqChkOptions::with_budget(2)).unwrap();
        assert!(out.early_break);
        assert!(out.support < 4);
    }

    #[test]
    fn fixture_trace_golden() {
        let g = twelve();
        let opts = FrqChkOptions {
            budget: 2,
            shuffle_seed: None,
            trace: true,
        };
        let out = frqchk(&g, &q2(), &q1_domain(), 2, &opts).unwrap();
        let lines: Vec<String> = out.trace.iter().map(ToString::to_string).collect();
        let expected = [
            "root v4",
            "pick [v4] v0 A",
            "pick [v4,v0] v6 A",
            "expand [v4,v0,v6] match [v10]",
            "pick [v4,v0] v8 A",
            "expand [v4,v0,v8] match [v11]",
            "stop [v4,v0] C",
            "pick [v4] v1 A",
            "pick [v4,v1] v6 B",
            "expand [v4,v1,v6] match [v10]",
            "stop [v4,v1] C",
            "pick [v4] v2 A",
            "pick [v4,v2] v6 B",
            "expand [v4,v2,v6] match [v10]",
            "stop [v4,v2] C",
            "stop [v4] C",
            "root v5",
            "pick [v5] v3 A",
            "pick [v5,v3] v9 A",
            "expand [v5,v3,v9] match [v11]",
            "stop [v5,v3] C",
            "stop [v5] C",
        ];
        assert_eq!(lines, expected);
    }

    #[test]
    fn mismatched_parent_domain_is_a_contract_error() {
        let g = twelve();
        let wrong = Domain::new(vec![A, B], vec![vec![4, 5], vec![0, 1, 2, 3]]);
        assert!(matches!(
            frqchk(&g, &q2(), &wrong, 2, &FrqChkOptions::default()),
            Err(Error::Contract(_))
        ));
        let swapped = Domain::new(vec![B, A, C], vec![vec![0], vec![4], vec![6]]);
        assert!(frqchk(&g, &q2(), &swapped, 2, &FrqChkOptions::default()).is_err());
    }

    #[test]
    fn deterministic_and_shuffle_is_seeded() {
        let g = twelve();
        let a = frqchk(&g, &q2(), &q1_domain(), 2, &FrqChkOptions::default()).unwrap();
        let b = frqchk(&g, &q2(), &q1_domain(), 2, &FrqChkOptions::default()).unwrap();
        assert_eq!(a.domain, b.domain);
        let opts = FrqChkOptions {
            shuffle_seed: Some(9),
            ..FrqChkOptions::default()
        };
        let s1 = frqchk(&g, &q2(), &q1_domain(), 2, &opts).unwrap();
        let s2 = frqchk(&g, &q2(), &q1_domain(), 2, &opts).unwrap();
        assert_eq!(s1.domain, s2.domain);
    }
}
