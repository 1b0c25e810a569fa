//! Per-pattern-node image columns (the MNI table) and the validity overlay
//! used while estimating a child pattern's support.

use std::io::Write;

use rustc_hash::FxHashSet;

use crate::error::Result;
use crate::graph::{DataGraph, LabelId, NodeId};

/// Frozen domain: one ascending set of distinct graph nodes per pattern node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    labels: Vec<LabelId>,
    columns: Vec<Vec<NodeId>>,
}

impl Domain {
    /// Builds a domain, sorting and deduplicating every column.
    pub fn new(labels: Vec<LabelId>, mut columns: Vec<Vec<NodeId>>) -> Domain {
        assert_eq!(labels.len(), columns.len(), "one label per column");
        for col in &mut columns {
            col.sort_unstable();
            col.dedup();
        }
        Domain { labels, columns }
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &[NodeId] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<NodeId>] {
        &self.columns
    }

    /// Label carried by every node of column `i`.
    pub fn column_label(&self, i: usize) -> LabelId {
        self.labels[i]
    }

    pub fn labels(&self) -> &[LabelId] {
        &self.labels
    }

    pub fn contains(&self, i: usize, v: NodeId) -> bool {
        self.columns[i].binary_search(&v).is_ok()
    }

    /// Total number of stored node entries over all columns.
    pub fn entry_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn support(&self) -> usize {
        support_of(self)
    }

    /// Debug dump: one CSV row per column with index, label token,
    /// cardinality and the first 20 node ids (space separated).
    pub fn write_csv<W: Write>(&self, graph: &DataGraph, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["index", "label", "cardinality", "nodes"])?;
        for (i, col) in self.columns.iter().enumerate() {
            let head: Vec<String> = col.iter().take(20).map(|v| v.to_string()).collect();
            w.write_record([
                i.to_string(),
                graph.label_name(self.labels[i]).to_string(),
                col.len().to_string(),
                head.join(" "),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// MNI support: the smallest column cardinality.
pub fn support_of(domain: &Domain) -> usize {
    domain.columns.iter().map(Vec::len).min().unwrap_or(0)
}

/// Domain under construction, with hash-set columns for O(1) membership.
#[derive(Debug, Clone)]
pub struct DomainBuilder {
    labels: Vec<LabelId>,
    sets: Vec<FxHashSet<NodeId>>,
}

impl DomainBuilder {
    pub fn new(labels: Vec<LabelId>) -> Self {
        let sets = vec![FxHashSet::default(); labels.len()];
        DomainBuilder { labels, sets }
    }

    pub fn insert(&mut self, i: usize, v: NodeId) -> bool {
        self.sets[i].insert(v)
    }

    pub fn contains(&self, i: usize, v: NodeId) -> bool {
        self.sets[i].contains(&v)
    }

    pub fn column_len(&self, i: usize) -> usize {
        self.sets[i].len()
    }

    pub fn column_count(&self) -> usize {
        self.sets.len()
    }

    pub fn support(&self) -> usize {
        self.sets.iter().map(FxHashSet::len).min().unwrap_or(0)
    }

    pub fn freeze(self) -> Domain {
        let columns = self
            .sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        Domain::new(self.labels, columns)
    }
}

/// Nodes of a parent domain marked invalid for one support estimation.
/// The domain itself is never modified.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidityOverlay {
    invalid: Vec<FxHashSet<NodeId>>,
}

impl ValidityOverlay {
    pub fn new(column_count: usize) -> Self {
        ValidityOverlay {
            invalid: vec![FxHashSet::default(); column_count],
        }
    }

    pub fn mark(&mut self, i: usize, v: NodeId) {
        self.invalid[i].insert(v);
    }

    pub fn is_invalid(&self, i: usize, v: NodeId) -> bool {
        self.invalid.get(i).is_some_and(|s| s.contains(&v))
    }

    pub fn invalid_count(&self, i: usize) -> usize {
        self.invalid.get(i).map_or(0, FxHashSet::len)
    }

    pub fn total_invalid(&self) -> usize {
        self.invalid.iter().map(FxHashSet::len).sum()
    }

    /// Invalid nodes of column `i`, ascending.
    pub fn invalid_in(&self, i: usize) -> Vec<NodeId> {
        let mut v: Vec<NodeId> = self.invalid.get(i).into_iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Entries of column `i` not marked invalid by the overlay.
pub fn valid_count(domain: &Domain, overlay: &ValidityOverlay, i: usize) -> usize {
    domain.columns[i]
        .iter()
        .filter(|&&v| !overlay.is_invalid(i, v))
        .count()
}
