//! One-factor parameter sweeps comparing the miner with the exact oracle.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, ErrorKind, Result};
use crate::graph::{generate_preferential, DataGraph};
use crate::miner::{mine_topk, MinerConfig};
use crate::oracle::{exact_topk, recall_metrics, OracleLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    Theta,
    K,
    M,
    /// Graph size; each point generates a graph with that many nodes.
    Nodes,
}

impl SweepParam {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepParam::Theta => "theta",
            SweepParam::K => "k",
            SweepParam::M => "m",
            SweepParam::Nodes => "nodes",
        }
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(SweepParam::Theta),
            "k" => Ok(SweepParam::K),
            "m" => Ok(SweepParam::M),
            "nodes" => Ok(SweepParam::Nodes),
            other => Err(Error::Parameter(format!(
                "unknown sweep variable {other:?} (expected theta, k, m or nodes)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub param: SweepParam,
    pub values: Vec<usize>,
    pub theta: usize,
    pub k: usize,
    pub m: usize,
    /// Generator settings for a `nodes` sweep.
    pub edges_per_node: usize,
    pub labels: usize,
    pub seed: u64,
    pub oracle: bool,
    pub limits: OracleLimits,
    pub threads: usize,
}

impl BenchSpec {
    pub fn new(param: SweepParam, values: Vec<usize>) -> Self {
        BenchSpec {
            param,
            values,
            theta: 2,
            k: 10,
            m: 2,
            edges_per_node: 3,
            labels: 5,
            seed: 0,
            oracle: true,
            limits: OracleLimits::default(),
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub param: &'static str,
    pub value: usize,
    pub wall_ms_approx: u64,
    pub wall_ms_oracle: Option<u64>,
    pub frqchk_calls: u64,
    pub candidates: u64,
    pub domain_entries_peak: u64,
    pub itrs_ratio: Option<f64>,
    pub set_recall: Option<f64>,
}

/// Runs every sweep point. `graph` is required unless sweeping `nodes`.
pub fn run_bench(graph: Option<&DataGraph>, spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    if spec.values.is_empty() {
        return Err(Error::Parameter("sweep needs at least one value".into()));
    }
    let mut rows = Vec::with_capacity(spec.values.len());
    for &value in &spec.values {
        let (mut theta, mut k, mut m) = (spec.theta, spec.k, spec.m);
        let generated;
        let g = match spec.param {
            SweepParam::Nodes => {
                generated = generate_preferential(value, value * spec.edges_per_node, spec.labels, spec.seed)?;
                &generated
            }
            _ => graph.ok_or_else(|| Error::Parameter("a graph is required for this sweep".into()))?,
        };
        match spec.param {
            SweepParam::Theta => theta = value,
            SweepParam::K => k = value,
            SweepParam::M => m = value,
            SweepParam::Nodes => {}
        }
        let mut config = MinerConfig::new(theta, k, m);
        config.threads = spec.threads;
        let started = Instant::now();
        let approx = mine_topk(g, &config)?;
        let wall_ms_approx = started.elapsed().as_millis() as u64;
        let mut row = BenchRow {
            param: spec.param.as_str(),
            value,
            wall_ms_approx,
            wall_ms_oracle: None,
            frqchk_calls: approx.stats.frqchk_calls,
            candidates: approx.stats.candidates,
            domain_entries_peak: approx.stats.domain_entries_peak,
            itrs_ratio: None,
            set_recall: None,
        };
        if spec.oracle {
            let started = Instant::now();
            match exact_topk(g, theta, k, &spec.limits) {
                Ok(exact) => {
                    row.wall_ms_oracle = Some(started.elapsed().as_millis() as u64);
                    let metrics = recall_metrics(&approx, &exact)?;
                    row.itrs_ratio = Some(metrics.itrs_ratio);
                    row.set_recall = Some(metrics.set_recall);
                }
                Err(e) if e.kind() == ErrorKind::Capacity => {
                    log::warn!("oracle skipped at {}={value}: {e}", spec.param.as_str());
                }
                Err(e) => return Err(e),
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record([
            "param",
            "value",
            "wall_ms_approx",
            "wall_ms_oracle",
            "frqchk_calls",
            "candidates",
            "domain_entries_peak",
            "itrs_ratio",
            "set_recall",
        ])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
