//! JSON shapes for mining results, oracle reports and single patterns.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DataGraph, LabelId};
use crate::miner::{MinerConfig, MiningResult, MiningStats, RankedPattern, Termination};
use crate::oracle::{ExactTopK, RecallMetrics};
use crate::pattern::{canonical_code, interestingness, CanonicalCode, Pattern, Step};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub nodes: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    pub support: usize,
    pub interestingness: usize,
    pub code: String,
}

impl PatternJson {
    pub fn from_ranked(graph: &DataGraph, p: &RankedPattern) -> Self {
        PatternJson {
            nodes: p
                .pattern
                .labels()
                .iter()
                .map(|&l| graph.label_name(l).to_string())
                .collect(),
            edges: p.pattern.edges().iter().map(|&(i, j)| [i, j]).collect(),
            support: p.support,
            interestingness: p.interestingness,
            code: p.code.to_hex(),
        }
    }

    /// Rebuilds the pattern against `graph`'s label dictionary and checks
    /// that the stored code and interestingness agree with it.
    pub fn to_ranked(&self, graph: &DataGraph) -> Result<RankedPattern> {
        let labels: Vec<LabelId> = self
            .nodes
            .iter()
            .map(|name| {
                graph
                    .label_id(name)
                    .ok_or_else(|| Error::Contract(format!("label {name:?} does not occur in the graph")))
            })
            .collect::<Result<_>>()?;
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[i, j]| (i, j)).collect();
        let pattern = match replay(&labels, &edges) {
            Some(p) => p,
            None => Pattern::from_edges(&labels, &edges)?.0,
        };
        let code = canonical_code(&pattern)?;
        if code != CanonicalCode::from_hex(&self.code)? {
            return Err(Error::Contract(format!("pattern code {} does not match its edges", self.code)));
        }
        let itrs = interestingness(&pattern);
        if itrs != self.interestingness {
            return Err(Error::Contract(format!(
                "pattern {} declares interestingness {} but has {itrs}",
                self.code, self.interestingness
            )));
        }
        Ok(RankedPattern {
            pattern,
            code,
            support: self.support,
            interestingness: itrs,
            domain: None,
        })
    }
}

/// Reads an edge list already in script order (as written by this module).
fn replay(labels: &[LabelId], edges: &[(usize, usize)]) -> Option<Pattern> {
    let (&first, rest) = edges.split_first()?;
    if first != (0, 1) || labels.len() < 2 {
        return None;
    }
    let mut script = vec![Step::Seed {
        first: labels[0],
        second: labels[1],
    }];
    let mut nodes = 2;
    for &(i, j) in rest {
        if j == nodes && i < j && j < labels.len() {
            script.push(Step::Forward {
                from: i,
                to: j,
                label: labels[j],
            });
            nodes += 1;
        } else {
            script.push(Step::Backward { i, j });
        }
    }
    if nodes != labels.len() {
        return None;
    }
    Pattern::from_script(&script).ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub theta: usize,
    pub k: usize,
    pub m: usize,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub frqchk_calls: u64,
    pub candidates: u64,
    pub domain_entries_peak: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
    pub termination: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiningJson {
    pub params: ParamsJson,
    pub patterns: Vec<PatternJson>,
    pub stats: StatsJson,
}

impl MiningJson {
    /// `timing` adds `wall_ms`; without it the document is reproducible
    /// byte for byte.
    pub fn new(graph: &DataGraph, result: &MiningResult, timing: bool) -> Self {
        MiningJson {
            params: ParamsJson {
                theta: result.config.theta,
                k: result.config.k,
                m: result.config.budget,
                seed: result.config.shuffle_seed,
            },
            patterns: result
                .patterns
                .iter()
                .map(|p| PatternJson::from_ranked(graph, p))
                .collect(),
            stats: StatsJson {
                frqchk_calls: result.stats.frqchk_calls,
                candidates: result.stats.candidates,
                domain_entries_peak: result.stats.domain_entries_peak,
                wall_ms: timing.then_some(result.stats.wall_ms),
                termination: result.termination.as_str().to_string(),
            },
        }
    }
}

impl MiningResult {
    pub fn to_json(&self, graph: &DataGraph, timing: bool) -> String {
        let mut text = serde_json::to_string_pretty(&MiningJson::new(graph, self, timing)).expect("serializable");
        text.push('\n');
        text
    }

    /// Parses a result written by [`MiningResult::to_json`]. Domains are not
    /// part of the document and come back empty.
    pub fn from_json(text: &str, graph: &DataGraph) -> Result<MiningResult> {
        let doc: MiningJson = serde_json::from_str(text)?;
        let termination = match doc.stats.termination.as_str() {
            "bound" => Termination::Bound,
            "exhausted" => Termination::Exhausted,
            other => return Err(Error::Contract(format!("unknown termination {other:?}"))),
        };
        let mut config = MinerConfig::new(doc.params.theta, doc.params.k, doc.params.m);
        config.shuffle_seed = doc.params.seed;
        let patterns = doc
            .patterns
            .iter()
            .map(|p| p.to_ranked(graph))
            .collect::<Result<Vec<_>>>()?;
        Ok(MiningResult {
            config,
            patterns,
            stats: MiningStats {
                frqchk_calls: doc.stats.frqchk_calls,
                candidates: doc.stats.candidates,
                domain_entries_peak: doc.stats.domain_entries_peak,
                tree_patterns: 0,
                wall_ms: doc.stats.wall_ms.unwrap_or(0),
            },
            termination,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleParamsJson {
    pub theta: usize,
    pub k: usize,
    pub max_pattern_nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonJson {
    pub itrs_ratio: f64,
    pub set_recall: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub mode: String,
    pub params: OracleParamsJson,
    pub frequent_count: usize,
    /// Some frequent pattern sat at the node cap, so larger ones were not explored.
    pub truncated: bool,
    pub patterns: Vec<PatternJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonJson>,
}

impl OracleJson {
    pub fn new(graph: &DataGraph, exact: &ExactTopK, comparison: Option<RecallMetrics>) -> Self {
        OracleJson {
            mode: "exact".into(),
            params: OracleParamsJson {
                theta: exact.theta,
                k: exact.k,
                max_pattern_nodes: exact.max_pattern_nodes,
            },
            frequent_count: exact.frequent.len(),
            truncated: exact.truncated,
            patterns: exact.ranked().iter().map(|p| PatternJson::from_ranked(graph, p)).collect(),
            comparison: comparison.map(|c| ComparisonJson {
                itrs_ratio: c.itrs_ratio,
                set_recall: c.set_recall,
            }),
        }
    }

    pub fn to_string_pretty(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::twelve;
    use crate::miner::mine_topk;

    #[test]
    fn mining_json_round_trip() {
        let g = twelve();
        let result = mine_topk(&g, &MinerConfig::new(2, 3, 2)).unwrap();
        let text = result.to_json(&g, false);
        assert!(!text.contains("wall_ms"));
        let back = MiningResult::from_json(&text, &g).unwrap();
        assert_eq!(back.to_json(&g, false), text);
        assert!(result.to_json(&g, true).contains("\"wall_ms\""));
    }

    #[test]
    fn pattern_json_shape() {
        let g = twelve();
        let p = Pattern::seed(0, 1);
        let ranked = RankedPattern {
            code: canonical_code(&p).unwrap(),
            interestingness: 3,
            pattern: p,
            support: 2,
            domain: None,
        };
        let value = serde_json::to_value(PatternJson::from_ranked(&g, &ranked)).unwrap();
        assert_eq!(value["nodes"], serde_json::json!(["A", "B"]));
        assert_eq!(value["edges"], serde_json::json!([[0, 1]]));
        assert_eq!(value["support"], 2);
        assert_eq!(value["interestingness"], 3);
        assert_eq!(value["code"].as_str().unwrap().len(), 20);
    }

    #[test]
    fn tampered_code_rejected() {
        let g = twelve();
        let mut pj = PatternJson {
            nodes: vec!["A".into(), "B".into()],
            edges: vec![[0, 1]],
            support: 2,
            interestingness: 3,
            code: canonical_code(&Pattern::seed(0, 2)).unwrap().to_hex(),
        };
        assert!(matches!(pj.to_ranked(&g), Err(Error::Contract(_))));
        pj.nodes[1] = "Z".into();
        assert!(matches!(pj.to_ranked(&g), Err(Error::Contract(_))));
    }
}
