//! The immutable node-labeled data graph and its label-aware adjacency queries.

mod generate;
mod lg;

use std::collections::BTreeSet;

pub use generate::generate_preferential;
pub use lg::{load_lg, read_lg_file, write_lg, write_lg_file};

use crate::error::{Error, Result};

pub type NodeId = u32;
pub type LabelId = u32;

/// Undirected simple graph with one categorical label per node.
///
/// Adjacency is stored twice in CSR form: once sorted by node id (for edge
/// tests) and once sorted by `(label, node id)` so that the neighbors of a
/// node carrying one label form a contiguous ascending slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataGraph {
    labels: Vec<LabelId>,
    offsets: Vec<usize>,
    adjacency: Vec<NodeId>,
    by_label: Vec<NodeId>,
    label_index: Vec<Vec<NodeId>>,
    label_names: Vec<String>,
    edge_count: usize,
    duplicate_edges: usize,
}

impl DataGraph {
    /// Builds a graph from per-node labels and an edge list.
    ///
    /// Reversed or repeated edges are collapsed and counted in
    /// [`DataGraph::duplicate_edges`]. Self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(labels: Vec<LabelId>, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let label_space = labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let names = (0..label_space).map(|l| l.to_string()).collect();
        Self::with_label_names(labels, edges, names)
    }

    pub(crate) fn with_label_names(
        labels: Vec<LabelId>,
        edges: &[(NodeId, NodeId)],
        label_names: Vec<String>,
    ) -> Result<Self> {
        let n = labels.len();
        if let Some(&l) = labels.iter().find(|&&l| l as usize >= label_names.len()) {
            return Err(Error::Parameter(format!("label id {l} has no name")));
        }
        let mut unique = BTreeSet::new();
        let mut duplicate_edges = 0;
        for (pos, &(a, b)) in edges.iter().enumerate() {
            for endpoint in [a, b] {
                if endpoint as usize >= n {
                    return Err(Error::Reference {
                        line: pos + 1,
                        node: endpoint as u64,
                    });
                }
            }
            if a == b {
                return Err(Error::Validation {
                    line: pos + 1,
                    message: format!("self-loop on node {a}"),
                });
            }
            if !unique.insert((a.min(b), a.max(b))) {
                duplicate_edges += 1;
            }
        }
        Ok(Self::build(labels, &unique, label_names, duplicate_edges))
    }

    fn build(
        labels: Vec<LabelId>,
        edges: &BTreeSet<(NodeId, NodeId)>,
        label_names: Vec<String>,
        duplicate_edges: usize,
    ) -> Self {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(a, b) in edges {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![0; offsets[n]];
        for &(a, b) in edges {
            adjacency[fill[a as usize]] = b;
            fill[a as usize] += 1;
            adjacency[fill[b as usize]] = a;
            fill[b as usize] += 1;
        }
        let mut by_label = adjacency.clone();
        for v in 0..n {
            let range = offsets[v]..offsets[v + 1];
            adjacency[range.clone()].sort_unstable();
            by_label[range].sort_unstable_by_key(|&w| (labels[w as usize], w));
        }
        let mut label_index = vec![Vec::new(); label_names.len()];
        for (v, &l) in labels.iter().enumerate() {
            label_index[l as usize].push(v as NodeId);
        }
        DataGraph {
            labels,
            offsets,
            adjacency,
            by_label,
            label_index,
            label_names,
            edge_count: edges.len(),
            duplicate_edges,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of distinct label ids (the label space, including unused ids).
    pub fn label_count(&self) -> usize {
        self.label_names.len()
    }

    /// Duplicate edge records collapsed while building the graph.
    pub fn duplicate_edges(&self) -> usize {
        self.duplicate_edges
    }

    pub fn label(&self, v: NodeId) -> LabelId {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[LabelId] {
        &self.labels
    }

    pub fn label_name(&self, l: LabelId) -> &str {
        &self.label_names[l as usize]
    }

    pub fn label_id(&self, name: &str) -> Option<LabelId> {
        self.label_names
            .iter()
            .position(|n| n == name)
            .map(|p| p as LabelId)
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Ascending neighbor ids of `v`.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Ascending ids of the neighbors of `v` that carry label `l`.
    pub fn labeled_neighbors(&self, v: NodeId, l: LabelId) -> &[NodeId] {
        let slice = &self.by_label[self.offsets[v as usize]..self.offsets[v as usize + 1]];
        let start = slice.partition_point(|&w| self.labels[w as usize] < l);
        let end = start + slice[start..].partition_point(|&w| self.labels[w as usize] == l);
        &slice[start..end]
    }

    /// Distinct labels among the neighbors of `v`, ascending.
    pub fn neighbor_labels(&self, v: NodeId) -> impl Iterator<Item = LabelId> + '_ {
        let slice = &self.by_label[self.offsets[v as usize]..self.offsets[v as usize + 1]];
        slice
            .iter()
            .enumerate()
            .filter(move |&(i, &w)| i == 0 || self.labels[slice[i - 1] as usize] != self.labels[w as usize])
            .map(move |(_, &w)| self.labels[w as usize])
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        let (a, b) = if self.degree(a) <= self.degree(b) { (a, b) } else { (b, a) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Ascending ids of all nodes carrying label `l`.
    pub fn nodes_with_label(&self, l: LabelId) -> &[NodeId] {
        self.label_index
            .get(l as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Every edge once, as `(low, high)` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |v| {
            self.neighbors(v)
                .iter()
                .copied()
                .filter(move |&w| w > v)
                .map(move |w| (v, w))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count() as NodeId)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::twelve;
    use super::*;

    fn lbl(g: &DataGraph, name: &str) -> LabelId {
        g.label_id(name).unwrap()
    }

    #[test]
    fn twelve_shape() {
        let g = twelve();
        assert_eq!(g.node_count(), 12);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.nodes_with_label(lbl(&g, "A")), &[4, 5]);
        assert_eq!(g.nodes_with_label(lbl(&g, "D")), &[10, 11]);
    }

    #[test]
    fn labeled_neighbors_on_fixture() {
        let g = twelve();
        assert_eq!(g.labeled_neighbors(4, lbl(&g, "C")), &[6, 7, 8]);
        assert!(g.labeled_neighbors(7, lbl(&g, "D")).is_empty());
        assert_eq!(g.labeled_neighbors(9, lbl(&g, "D")), &[11]);
    }

    #[test]
    fn labeled_neighbors_match_brute_force_scan() {
        let g = generate_preferential(300, 900, 6, 3).unwrap();
        for v in 0..g.node_count() as NodeId {
            for l in 0..g.label_count() as LabelId {
                let expected: Vec<NodeId> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| g.nodes_with_label(l).contains(&w))
                    .collect();
                assert_eq!(g.labeled_neighbors(v, l), expected.as_slice());
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric_and_degree_sum_matches() {
        let g = generate_preferential(200, 700, 4, 11).unwrap();
        let total: usize = (0..g.node_count() as NodeId).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
        for (a, b) in g.edges() {
            assert!(g.neighbors(b).contains(&a));
            assert_ne!(a, b);
        }
    }

    #[test]
    fn rejects_self_loop_and_bad_reference() {
        assert!(matches!(
            DataGraph::from_edges(vec![0, 0], &[(1, 1)]),
            Err(Error::Validation { .. })
        ));
        assert!(matches!(
            DataGraph::from_edges(vec![0, 0], &[(0, 2)]),
            Err(Error::Reference { node: 2, .. })
        ));
    }
}
