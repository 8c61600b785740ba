use std::fmt::Write;

use serde::Serialize;

use super::graph::ExchangeGraph;
use super::orbit::FoldedGraph;
use crate::rep::Catalog;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering; F-stable hearts get a double border.
pub fn eg_dot(cat: &Catalog, g: &ExchangeGraph) -> String {
    let mut out = String::from("digraph exchange_graph {\n  node [shape=box];\n");
    for (i, h) in g.nodes().iter().enumerate() {
        let extra = if g.is_marked(i) { ", peripheries=2" } else { "" };
        writeln!(out, "  n{i} [label={}{extra}];", quote(&h.label(cat))).unwrap();
    }
    for e in g.edges() {
        let s = g.node(e.source).simples()[e.simple].label(cat);
        writeln!(out, "  n{} -> n{} [label={}];", e.source, e.target, quote(&s)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a folded graph; nodes show orbit sums of simples.
pub fn folded_dot(cat: &Catalog, g: &ExchangeGraph, f: &FoldedGraph) -> String {
    let mut out = String::from("digraph folded_exchange_graph {\n  node [shape=box];\n");
    for k in 0..f.node_count() {
        writeln!(out, "  f{k} [label={}];", quote(&f.label(cat, g, k))).unwrap();
    }
    for e in &f.edges {
        let h = g.node(f.nodes[e.source]);
        let s: Vec<String> = e.orbit.iter().map(|&i| h.simples()[i].label(cat)).collect();
        writeln!(out, "  f{} -> f{} [label={}];", e.source, e.target, quote(&s.join("⊕"))).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct SimpleJson {
    label: String,
    catalog_id: usize,
    shift: i32,
    k_class: Vec<i64>,
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    label: String,
    f_stable: Option<bool>,
    simples: Vec<SimpleJson>,
}

#[derive(Serialize)]
struct EdgeJson {
    source: usize,
    target: usize,
    simple: usize,
    label: String,
}

#[derive(Serialize)]
struct FoldedNodeJson {
    id: usize,
    heart: usize,
    label: String,
    orbits: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct FoldedEdgeJson {
    source: usize,
    target: usize,
    orbit: Vec<usize>,
}

#[derive(Serialize)]
struct FoldedJson {
    nodes: Vec<FoldedNodeJson>,
    edges: Vec<FoldedEdgeJson>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    schema: u32,
    vertices: &'a [String],
    base: usize,
    nodes: Vec<NodeJson>,
    edges: Vec<EdgeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    folded: Option<FoldedJson>,
}

/// JSON document with nodes, edges, F-stability marks and K-classes, plus
/// the folded graph when one is given.
pub fn eg_json(cat: &Catalog, g: &ExchangeGraph, folded: Option<&FoldedGraph>) -> serde_json::Value {
    let doc = GraphJson {
        schema: 1,
        vertices: cat.quiver().vertices(),
        base: g.base(),
        nodes: g
            .nodes()
            .iter()
            .enumerate()
            .map(|(id, h)| NodeJson {
                id,
                label: h.label(cat),
                f_stable: g.marks().map(|m| m[id]),
                simples: h
                    .simples()
                    .iter()
                    .map(|s| SimpleJson {
                        label: s.label(cat),
                        catalog_id: s.id,
                        shift: s.shift,
                        k_class: s.k_class(cat),
                    })
                    .collect(),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                source: e.source,
                target: e.target,
                simple: e.simple,
                label: g.node(e.source).simples()[e.simple].label(cat),
            })
            .collect(),
        folded: folded.map(|f| FoldedJson {
            nodes: (0..f.node_count())
                .map(|k| FoldedNodeJson {
                    id: k,
                    heart: f.nodes[k],
                    label: f.label(cat, g, k),
                    orbits: f.orbits[k].clone(),
                })
                .collect(),
            edges: f
                .edges
                .iter()
                .map(|e| FoldedEdgeJson {
                    source: e.source,
                    target: e.target,
                    orbit: e.orbit.clone(),
                })
                .collect(),
        }),
    };
    serde_json::to_value(doc).expect("graph document serializes")
}
