use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::heart::{tilt_backward, tilt_forward, Heart};
use super::orbit::is_f_stable;
use crate::error::{Error, Result};
use crate::quiver::Automorphism;
use crate::rep::Catalog;

/// A forward tilt from `source` at its simple number `simple` to `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub source: usize,
    pub simple: usize,
    pub target: usize,
}

/// Hearts joined by forward simple tilts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeGraph {
    nodes: Vec<Heart>,
    edges: Vec<Edge>,
    marks: Option<Vec<bool>>,
    base: usize,
    index: HashMap<Heart, usize>,
}

impl ExchangeGraph {
    pub fn nodes(&self) -> &[Heart] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn node(&self, id: usize) -> &Heart {
        &self.nodes[id]
    }

    pub fn find(&self, h: &Heart) -> Option<usize> {
        self.index.get(h).copied()
    }

    /// F-stable flags, present after [`ExchangeGraph::mark_f_stable`].
    pub fn marks(&self) -> Option<&[bool]> {
        self.marks.as_deref()
    }

    pub fn is_marked(&self, id: usize) -> bool {
        self.marks.as_ref().is_some_and(|m| m[id])
    }

    pub fn out_edges(&self, id: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.source == id)
    }

    pub fn mark_f_stable(mut self, cat: &Catalog, s: &Automorphism) -> Result<Self> {
        let marks = self
            .nodes
            .iter()
            .map(|h| is_f_stable(cat, h, s))
            .collect::<Result<Vec<_>>>()?;
        self.marks = Some(marks);
        Ok(self)
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        connected(self.nodes.len(), self.edges.iter().map(|e| (e.source, e.target)))
    }

    /// Recomputes every edge as a forward tilt and checks that the backward
    /// tilt at the shifted simple returns to the source.
    pub fn verify_edges(&self, cat: &Catalog) -> Result<()> {
        for e in &self.edges {
            let src = &self.nodes[e.source];
            let tgt = tilt_forward(cat, src, e.simple)?;
            if tgt != self.nodes[e.target] {
                return Err(Error::Invariant(format!("edge {e:?} does not recompute")));
            }
            let shifted = src.simples()[e.simple].shifted(1);
            let idx = tgt
                .position(shifted)
                .ok_or_else(|| Error::Invariant(format!("edge {e:?} lost its shifted simple")))?;
            if tilt_backward(cat, &tgt, idx)? != *src {
                return Err(Error::Invariant(format!("edge {e:?} is not undone by a backward tilt")));
            }
        }
        Ok(())
    }
}

pub(crate) fn connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// Breadth-first search over forward tilts from `h0`, keeping only hearts
/// whose simples all sit in the two shifts `lo` and `lo + 1`, where `lo` is
/// the least shift in `h0`. Each frontier is tilted in parallel and merged
/// in a fixed order, so node numbering is deterministic.
pub fn build_interval_eg(cat: &Catalog, h0: &Heart) -> Result<ExchangeGraph> {
    let (lo, _) = h0.shift_range();
    let inside = |h: &Heart| h.simples().iter().all(|s| s.shift == lo || s.shift == lo + 1);
    let mut g = ExchangeGraph {
        nodes: vec![h0.clone()],
        edges: Vec::new(),
        marks: None,
        base: 0,
        index: HashMap::from([(h0.clone(), 0)]),
    };
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let tilted: Vec<Vec<Heart>> = frontier
            .par_iter()
            .map(|&u| {
                let h = &g.nodes[u];
                (0..h.len())
                    .map(|i| tilt_forward(cat, h, i))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&u, targets) in frontier.iter().zip(tilted) {
            for (i, t) in targets.into_iter().enumerate() {
                if !inside(&t) {
                    continue;
                }
                let v = match g.index.get(&t) {
                    Some(&v) => v,
                    None => {
                        let v = g.nodes.len();
                        g.index.insert(t.clone(), v);
                        g.nodes.push(t);
                        next.push(v);
                        v
                    }
                };
                g.edges.push(Edge {
                    source: u,
                    simple: i,
                    target: v,
                });
            }
        }
        frontier = next;
    }
    Ok(g)
}
