use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::{DataGraph, LabelId, NodeId};
use crate::error::{Error, Result};

/// Attempts at drawing a second endpoint before falling back to an explicit
/// weighted draw over the remaining non-neighbors.
const REJECTION_ATTEMPTS: usize = 64;

/// Connected preferential-attachment graph with uniformly drawn labels.
///
/// Nodes `1..n` first join the growing graph through one edge to an existing
/// node; the remaining edges connect two existing nodes. Every endpoint is
/// drawn with probability proportional to `degree + 1`.
pub fn generate_preferential(
    n_nodes: usize,
    n_edges: usize,
    n_labels: usize,
    rng_seed: u64,
) -> Result<DataGraph> {
    if n_nodes == 0 {
        return Err(Error::Parameter("graph needs at least one node".into()));
    }
    if n_labels == 0 {
        return Err(Error::Parameter("need at least one label".into()));
    }
    if n_nodes > NodeId::MAX as usize {
        return Err(Error::Parameter(format!("{n_nodes} nodes exceed the id space")));
    }
    let max_edges = n_nodes * (n_nodes - 1) / 2;
    if n_edges > max_edges {
        return Err(Error::Parameter(format!(
            "{n_edges} edges is infeasible for {n_nodes} nodes (max {max_edges})"
        )));
    }
    if n_edges + 1 < n_nodes {
        return Err(Error::Parameter(format!(
            "{n_edges} edges cannot connect {n_nodes} nodes"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let labels: Vec<LabelId> = (0..n_nodes)
        .map(|_| rng.gen_range(0..n_labels) as LabelId)
        .collect();

    let mut state = Attachment::new(n_nodes);
    state.add_node(0);
    for v in 1..n_nodes as NodeId {
        let target = state.sample(&mut rng);
        state.add_node(v);
        state.add_edge(v, target);
    }
    while state.edges.len() < n_edges {
        let a = state.sample(&mut rng);
        if state.degree[a as usize] + 1 == n_nodes {
            continue;
        }
        let b = state.partner(a, &mut rng);
        state.add_edge(a, b);
    }

    let mut edges: Vec<(NodeId, NodeId)> = state.edges.into_iter().collect();
    edges.sort_unstable();
    DataGraph::from_edges(labels, &edges)
}

struct Attachment {
    // each node appears once, plus once per incident edge
    pool: Vec<NodeId>,
    degree: Vec<usize>,
    edges: FxHashSet<(NodeId, NodeId)>,
    present: usize,
}

impl Attachment {
    fn new(n: usize) -> Self {
        Attachment {
            pool: Vec::new(),
            degree: vec![0; n],
            edges: FxHashSet::default(),
            present: 0,
        }
    }

    fn add_node(&mut self, v: NodeId) {
        self.pool.push(v);
        self.present += 1;
    }

    fn add_edge(&mut self, a: NodeId, b: NodeId) {
        self.edges.insert((a.min(b), a.max(b)));
        self.degree[a as usize] += 1;
        self.degree[b as usize] += 1;
        self.pool.push(a);
        self.pool.push(b);
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> NodeId {
        self.pool[rng.gen_range(0..self.pool.len())]
    }

    fn adjacent(&self, a: NodeId, b: NodeId) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn partner(&self, a: NodeId, rng: &mut ChaCha8Rng) -> NodeId {
        for _ in 0..REJECTION_ATTEMPTS {
            let b = self.sample(rng);
            if b != a && !self.adjacent(a, b) {
                return b;
            }
        }
        let candidates: Vec<NodeId> = (0..self.present as NodeId)
            .filter(|&b| b != a && !self.adjacent(a, b))
            .collect();
        let weights = candidates.iter().map(|&b| self.degree[b as usize] + 1);
        let dist = WeightedIndex::new(weights).expect("unsaturated node has a partner");
        candidates[dist.sample(rng)]
    }
}

#[cfg(test)]
mod tests {
    use super::super::write_lg;
    use super::*;

    fn is_connected(g: &DataGraph) -> bool {
        let mut seen = vec![false; g.node_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    #[test]
    fn two_node_path() {
        let g = generate_preferential(2, 1, 1, 99).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.labels(), &[0, 0]);
    }

    #[test]
    fn deterministic_given_seed() {
        let render = |seed| {
            let mut buf = Vec::new();
            write_lg(&generate_preferential(100, 300, 5, seed).unwrap(), &mut buf).unwrap();
            buf
        };
        assert_eq!(render(42), render(42));
        assert_ne!(render(42), render(43));
    }

    #[test]
    fn exact_size_and_connected() {
        for seed in 0..5 {
            let g = generate_preferential(120, 333, 4, seed).unwrap();
            assert_eq!(g.node_count(), 120);
            assert_eq!(g.edge_count(), 333);
            assert!(is_connected(&g));
        }
    }

    #[test]
    fn heavy_tailed_degrees() {
        let g = generate_preferential(1000, 5000, 10, 7).unwrap();
        let mean = 2.0 * g.edge_count() as f64 / g.node_count() as f64;
        assert!(
            g.max_degree() as f64 > 3.0 * mean,
            "max degree {} vs mean {mean}",
            g.max_degree()
        );
    }

    #[test]
    fn dense_requests_terminate() {
        let g = generate_preferential(12, 66, 2, 1).unwrap();
        assert_eq!(g.edge_count(), 66);
        let g = generate_preferential(30, 400, 2, 1).unwrap();
        assert_eq!(g.edge_count(), 400);
    }

    #[test]
    fn infeasible_parameters() {
        assert!(matches!(generate_preferential(4, 7, 1, 0), Err(Error::Parameter(_))));
        assert!(matches!(generate_preferential(4, 2, 1, 0), Err(Error::Parameter(_))));
        assert!(matches!(generate_preferential(4, 3, 0, 0), Err(Error::Parameter(_))));
    }
}
