//! Reader and writer for the line-oriented `.lg` graph format.
//!
//! ```text
//! # comment
//! t # 0
//! v <id> <label>
//! e <src> <dst> <edge-label>
//! ```
//!
//! Node labels are arbitrary tokens. When every token is a small
//! non-negative integer the integer is used as the label id directly;
//! otherwise tokens are sorted and numbered densely. Edge labels are parsed
//! and dropped.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{DataGraph, LabelId, NodeId};
use crate::error::{Error, Result};

/// Integer label tokens up to this value map straight to label ids.
const DIRECT_LABEL_LIMIT: u64 = 1 << 20;

pub fn load_lg<R: BufRead>(reader: R) -> Result<DataGraph> {
    let mut node_tokens: Vec<Option<String>> = Vec::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut headers = 0;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let kind = fields.next().unwrap_or_default();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match kind {
            "t" => {
                headers += 1;
                if headers > 1 || !node_tokens.is_empty() {
                    return Err(parse_err("only a single graph per file is supported".into()));
                }
            }
            "v" => {
                let id = parse_id(fields.next(), line_no, "node id")?;
                let label = fields
                    .next()
                    .ok_or_else(|| parse_err("missing node label".into()))?;
                if fields.next().is_some() {
                    return Err(parse_err("unexpected trailing field on node line".into()));
                }
                let id = usize::try_from(id)
                    .ok()
                    .filter(|&i| i < NodeId::MAX as usize)
                    .ok_or_else(|| parse_err(format!("node id {id} out of range")))?;
                if id >= node_tokens.len() {
                    node_tokens.resize(id + 1, None);
                }
                if node_tokens[id].is_some() {
                    return Err(parse_err(format!("node {id} declared twice")));
                }
                node_tokens[id] = Some(label.to_string());
            }
            "e" => {
                let a = parse_id(fields.next(), line_no, "edge source")?;
                let b = parse_id(fields.next(), line_no, "edge target")?;
                // edge label is optional and ignored
                let _ = fields.next();
                if fields.next().is_some() {
                    return Err(parse_err("unexpected trailing field on edge line".into()));
                }
                for endpoint in [a, b] {
                    let known = usize::try_from(endpoint)
                        .ok()
                        .and_then(|e| node_tokens.get(e))
                        .is_some_and(Option::is_some);
                    if !known {
                        return Err(Error::Reference {
                            line: line_no,
                            node: endpoint,
                        });
                    }
                }
                if a == b {
                    return Err(Error::Validation {
                        line: line_no,
                        message: format!("self-loop on node {a}"),
                    });
                }
                edges.push((a as NodeId, b as NodeId));
            }
            other => return Err(parse_err(format!("unknown record type `{other}`"))),
        }
    }

    let tokens: Vec<String> = node_tokens
        .into_iter()
        .enumerate()
        .map(|(id, t)| {
            t.ok_or_else(|| Error::Validation {
                line: 0,
                message: format!("node ids are not dense: node {id} is missing"),
            })
        })
        .collect::<Result<_>>()?;

    let (labels, names) = intern_labels(&tokens);
    DataGraph::with_label_names(labels, &edges, names)
}

fn parse_id(field: Option<&str>, line: usize, what: &str) -> Result<u64> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{field}`"),
    })
}

fn intern_labels(tokens: &[String]) -> (Vec<LabelId>, Vec<String>) {
    let numeric: Option<Vec<u64>> = tokens
        .iter()
        .map(|t| t.parse::<u64>().ok().filter(|&x| x < DIRECT_LABEL_LIMIT && x.to_string() == *t))
        .collect();
    if let Some(values) = numeric {
        let space = values.iter().max().map_or(0, |&m| m as usize + 1);
        let names = (0..space).map(|l| l.to_string()).collect();
        return (values.into_iter().map(|x| x as LabelId).collect(), names);
    }
    let distinct: BTreeSet<&str> = tokens.iter().map(String::as_str).collect();
    let ids: BTreeMap<&str, LabelId> = distinct
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, i as LabelId))
        .collect();
    let labels = tokens.iter().map(|t| ids[t.as_str()]).collect();
    (labels, distinct.into_iter().map(str::to_string).collect())
}

pub fn read_lg_file(path: impl AsRef<Path>) -> Result<DataGraph> {
    let file = File::open(path.as_ref()).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.as_ref().display()),
        ))
    })?;
    load_lg(BufReader::new(file))
}

pub fn write_lg<W: Write>(graph: &DataGraph, mut out: W) -> Result<()> {
    writeln!(out, "t # 0")?;
    for v in 0..graph.node_count() as NodeId {
        writeln!(out, "v {v} {}", graph.label_name(graph.label(v)))?;
    }
    for (a, b) in graph.edges() {
        writeln!(out, "e {a} {b} 0")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_lg_file(graph: &DataGraph, path: impl AsRef<Path>) -> Result<()> {
    write_lg(graph, BufWriter::new(File::create(path)?))
}
