//! Minimum DFS code of a labeled pattern.
//!
//! The code is the lexicographically smallest sequence of edge tuples
//! `(from, to, label_from, label_to)` over all depth-first traversals, with
//! the usual rightmost-path ordering: backward edges from the rightmost
//! vertex come before forward edges, backward edges by ascending target,
//! forward edges from the deepest rightmost-path vertex first and then by
//! ascending label of the new vertex. Two patterns get equal codes exactly
//! when they are isomorphic.

use std::cmp::Reverse;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use super::Pattern;
use crate::error::{Error, Result};
use crate::graph::LabelId;

pub const DEFAULT_NODE_LIMIT: usize = 12;

const UNSEEN: u8 = u8::MAX;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s)
            .map(CanonicalCode)
            .map_err(|e| Error::Contract(format!("bad canonical code `{s}`: {e}")))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_code(pattern: &Pattern) -> Result<CanonicalCode> {
    canonical_code_with_limit(pattern, DEFAULT_NODE_LIMIT)
}

pub fn canonical_code_with_limit(pattern: &Pattern, node_limit: usize) -> Result<CanonicalCode> {
    if pattern.node_count() > node_limit {
        return Err(Error::Capacity {
            what: format!("canonical code of a {}-node pattern", pattern.node_count()),
            limit: node_limit,
        });
    }
    let mut bytes = Vec::with_capacity(pattern.edge_count() * 10);
    for t in min_dfs_code(pattern) {
        bytes.push(t.from);
        bytes.push(t.to);
        bytes.extend_from_slice(&t.label_from.to_be_bytes());
        bytes.extend_from_slice(&t.label_to.to_be_bytes());
    }
    Ok(CanonicalCode(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Tuple {
    from: u8,
    to: u8,
    label_from: LabelId,
    label_to: LabelId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum ExtKey {
    Backward { to: u8 },
    Forward { from: Reverse<u8>, label: LabelId },
}

#[derive(Clone)]
struct State {
    /// dfs index -> pattern node
    order: SmallVec<[u8; 16]>,
    /// pattern node -> dfs index
    index: SmallVec<[u8; 16]>,
    /// per pattern node, incident edges already in the code
    used: SmallVec<[u64; 16]>,
    /// dfs indices from the root to the rightmost vertex
    rmpath: SmallVec<[u8; 16]>,
}

impl State {
    fn best_extension(&self, p: &Pattern, twin: &[usize], out: &mut Vec<usize>) -> Option<ExtKey> {
        out.clear();
        let r = *self.rmpath.last().unwrap();
        let rnode = self.order[r as usize] as usize;
        let open = p.neighbor_mask(rnode) & !self.used[rnode];
        for &j in &self.rmpath[..self.rmpath.len() - 1] {
            if open >> self.order[j as usize] & 1 == 1 {
                return Some(ExtKey::Backward { to: j });
            }
        }
        for &i in self.rmpath.iter().rev() {
            let node = self.order[i as usize] as usize;
            let mut best: Option<LabelId> = None;
            let mut mask = p.neighbor_mask(node);
            while mask != 0 {
                let w = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                if self.index[w] != UNSEEN {
                    continue;
                }
                let l = p.label(w);
                match best {
                    Some(b) if l > b => continue,
                    Some(b) if l == b => {}
                    _ => {
                        best = Some(l);
                        out.clear();
                    }
                }
                // twins are interchangeable while both are unvisited
                if !out.iter().any(|&o| twin[o] == twin[w]) {
                    out.push(w);
                }
            }
            if let Some(label) = best {
                return Some(ExtKey::Forward { from: Reverse(i), label });
            }
        }
        None
    }

    fn push_backward(&self, to: u8) -> State {
        let mut next = self.clone();
        let r = *self.rmpath.last().unwrap();
        let (a, b) = (self.order[r as usize] as usize, self.order[to as usize] as usize);
        next.used[a] |= 1 << b;
        next.used[b] |= 1 << a;
        next
    }

    fn push_forward(&self, from: u8, w: usize) -> State {
        let mut next = self.clone();
        let a = self.order[from as usize] as usize;
        let idx = next.order.len() as u8;
        next.order.push(w as u8);
        next.index[w] = idx;
        next.used[a] |= 1 << w;
        next.used[w] |= 1 << a;
        let keep = next.rmpath.iter().position(|&x| x == from).unwrap() + 1;
        next.rmpath.truncate(keep);
        next.rmpath.push(idx);
        next
    }
}

/// Representative of each node's twin class: nodes with equal label and equal
/// open (non-adjacent twins) or closed (adjacent twins) neighborhoods.
fn twin_classes(p: &Pattern) -> Vec<usize> {
    let n = p.node_count();
    (0..n)
        .map(|w| {
            (0..w)
                .find(|&v| {
                    p.label(v) == p.label(w) && {
                        let (nv, nw) = (p.neighbor_mask(v), p.neighbor_mask(w));
                        if p.has_edge(v, w) {
                            nv | 1 << v == nw | 1 << w
                        } else {
                            nv == nw
                        }
                    }
                })
                .unwrap_or(w)
        })
        .collect()
}

fn min_dfs_code(p: &Pattern) -> Vec<Tuple> {
    let n = p.node_count();
    let twin = twin_classes(p);

    let first = p
        .edges()
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .map(|(a, b)| (p.label(a), p.label(b)))
        .min()
        .expect("pattern has at least one edge");
    let mut states: Vec<State> = Vec::new();
    for &(a, b) in p.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if (p.label(x), p.label(y)) != first {
                continue;
            }
            let mut s = State {
                order: smallvec![x as u8, y as u8],
                index: smallvec![UNSEEN; n],
                used: smallvec![0; n],
                rmpath: smallvec![0, 1],
            };
            s.index[x] = 0;
            s.index[y] = 1;
            s.used[x] |= 1 << y;
            s.used[y] |= 1 << x;
            states.push(s);
        }
    }
    let mut code = vec![Tuple {
        from: 0,
        to: 1,
        label_from: first.0,
        label_to: first.1,
    }];

    let mut scratch = Vec::new();
    let mut keyed: Vec<(ExtKey, Vec<usize>)> = Vec::with_capacity(states.len());
    while code.len() < p.edge_count() {
        keyed.clear();
        for s in &states {
            let key = s
                .best_extension(p, &twin, &mut scratch)
                .expect("connected pattern always has an extension until all edges are coded");
            keyed.push((key, scratch.clone()));
        }
        let best = keyed.iter().map(|(k, _)| *k).min().unwrap();
        let mut next = Vec::new();
        for (s, (key, targets)) in states.iter().zip(&keyed) {
            if *key != best {
                continue;
            }
            match best {
                ExtKey::Backward { to } => next.push(s.push_backward(to)),
                ExtKey::Forward { from, .. } => {
                    next.extend(targets.iter().map(|&w| s.push_forward(from.0, w)));
                }
            }
        }
        let witness = &next[0];
        let tuple = match best {
            ExtKey::Backward { to } => {
                let r = *states[0].rmpath.last().unwrap();
                Tuple {
                    from: r,
                    to,
                    label_from: p.label(witness.order[r as usize] as usize),
                    label_to: p.label(witness.order[to as usize] as usize),
                }
            }
            ExtKey::Forward { from, label } => Tuple {
                from: from.0,
                to: witness.order.len() as u8 - 1,
                label_from: p.label(witness.order[from.0 as usize] as usize),
                label_to: label,
            },
        };
        code.push(tuple);
        states = next;
    }
    code
}
