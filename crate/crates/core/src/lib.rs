//! Near-optimal top-k frequent pattern mining on a single large
//! node-labeled graph.
//!
//! Frequent tree patterns are grown level by level from frequent single-edge
//! seeds; cyclic patterns are then derived top-down by backward expansion
//! until no unexpanded tree can still improve the current top-k set. Pattern
//! supports are minimum-image-based (MNI) and estimated from the parent's
//! domain by a budgeted guided traversal that only ever under-estimates.
//! The [`oracle`] module provides exact, exhaustive counterparts for
//! validation at desk scale.

pub mod bench;
pub mod domain;
pub mod error;
pub mod frqchk;
pub mod graph;
pub mod miner;
pub mod oracle;
pub mod pattern;
pub mod report;

pub use domain::{support_of, valid_count, Domain, DomainBuilder, ValidityOverlay};
pub use error::{Error, ErrorKind, Result};
pub use frqchk::{frqchk, FrqChkOptions, FrqChkOutcome};
pub use graph::{generate_preferential, load_lg, read_lg_file, write_lg, DataGraph, LabelId, NodeId};
pub use miner::{mine_topk, MinerConfig, MiningResult, RankedPattern, Termination};
pub use pattern::{
    canonical_code, complete_interestingness, interestingness, CanonicalCode, Pattern, SeedSet, Step,
};
