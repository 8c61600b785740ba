mod common;

use std::collections::{BTreeSet, HashMap, VecDeque};

use common::*;
use foldstab_core::quiver::{Automorphism, Quiver};
use foldstab_core::rep::{Catalog, Shifted};
use foldstab_core::tilt::{build_interval_eg, folded_eg, multi_tilt, ExchangeGraph, FoldedGraph, Heart};
use petgraph::algo::is_isomorphic;
use petgraph::graph::DiGraph;

fn interval(q: &Quiver) -> (Catalog, ExchangeGraph) {
    let c = Catalog::build(q).unwrap();
    let g = build_interval_eg(&c, &Heart::seed(&c)).unwrap();
    (c, g)
}

fn digraph(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> DiGraph<(), ()> {
    let mut g = DiGraph::new();
    let v: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for (a, b) in edges {
        g.add_edge(v[a], v[b], ());
    }
    g
}

fn eg_graph(g: &ExchangeGraph) -> DiGraph<(), ()> {
    digraph(g.node_count(), g.edges().iter().map(|e| (e.source, e.target)))
}

fn folded_graph(f: &FoldedGraph) -> DiGraph<(), ()> {
    digraph(f.node_count(), f.edges.iter().map(|e| (e.source, e.target)))
}

fn reversed(g: &DiGraph<(), ()>) -> DiGraph<(), ()> {
    let mut r = g.clone();
    r.reverse();
    r
}

/// Matches `g` against the Cambrian lattice of `c` or of `c^-1`, in either
/// direction.
fn matches_cambrian(g: &DiGraph<(), ()>, w: &PermGroup, c: &[usize]) -> bool {
    let rc: Vec<usize> = c.iter().rev().copied().collect();
    [c.to_vec(), rc].iter().any(|c| {
        let h = w.cambrian_hasse(c);
        is_isomorphic(g, &h) || is_isomorphic(g, &reversed(&h))
    })
}

fn coxeter_word(q: &Quiver, to_gen: &[usize]) -> Vec<usize> {
    sinks_first(q).iter().map(|&v| to_gen[v]).collect()
}

#[test]
fn type_a_intervals_are_cambrian_lattices() {
    for (edges, n, cat) in [(A2, 2, 5), (A3, 3, 14)] {
        let w = type_a(n);
        let to_gen: Vec<usize> = (0..n).collect();
        for q in orientations(n, edges) {
            let (c, g) = interval(&q);
            assert_eq!(g.node_count(), cat);
            assert_eq!(g.edge_count(), n * cat / 2);
            assert!(g.is_connected());
            g.verify_edges(&c).unwrap();
            assert!(matches_cambrian(&eg_graph(&g), &w, &coxeter_word(&q, &to_gen)));
        }
    }
}

#[test]
fn d4_intervals_are_cambrian_lattices() {
    let w = type_d(4);
    assert_eq!(w.order(), 192);
    // centre vertex 2 is generator 2; the arms are generators 0, 1, 3
    let to_gen = [0, 2, 1, 3];
    for q in orientations(4, D4) {
        let (c, g) = interval(&q);
        assert_eq!(g.node_count(), 50);
        assert_eq!(g.edge_count(), 100);
        g.verify_edges(&c).unwrap();
        assert!(matches_cambrian(&eg_graph(&g), &w, &coxeter_word(&q, &to_gen)));
    }
}

#[test]
fn a1_interval() {
    let (c, g) = interval(&Quiver::from_edges(1, &[]).unwrap());
    assert_eq!(g.node_count(), 2);
    assert_eq!(g.node(1).label(&c), "{T1^1}");
}

fn classic_name(label: &str) -> String {
    let (base, shift) = match label.split_once('^') {
        Some((b, s)) => (b, format!("^{s}")),
        None => (label, String::new()),
    };
    let base = match base {
        "X110" => "X1",
        "X111" => "X2",
        "X011" => "X3",
        t => t,
    };
    format!("{base}{shift}")
}

fn simple_set(c: &Catalog, h: &Heart) -> BTreeSet<String> {
    h.simples().iter().map(|s| classic_name(&s.label(c))).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn a3_interval_reproduces_the_published_hearts() {
    let q = a3_symmetric();
    let s = Automorphism::from_cycles(&q, "(1 3)", None).unwrap();
    let (c, g) = interval(&q);
    let g = g.mark_f_stable(&c, &s).unwrap();
    let published: Vec<(BTreeSet<String>, bool)> = vec![
        (set(&["T1", "X3^1", "T2"]), false),
        (set(&["T1", "T3^1", "X3"]), false),
        (set(&["T1^1", "X1", "X3^1"]), false),
        (set(&["T3^1", "T1", "T2^1"]), false),
        (set(&["T1^1", "X2", "T3^1"]), true),
        (set(&["T2", "X1^1", "X3^1"]), true),
        (set(&["T1", "T2^1", "T3"]), true),
        (set(&["T1", "T2", "T3"]), true),
        (set(&["X1", "X2^1", "X3"]), true),
        (set(&["T1^1", "T2^1", "T3^1"]), true),
        (set(&["T3", "T1^1", "X1"]), false),
        (set(&["X1^1", "X3", "T3^1"]), false),
        (set(&["T2^1", "T3", "T1^1"]), false),
        (set(&["T2", "X1^1", "T3"]), false),
    ];
    let mut ours: Vec<(BTreeSet<String>, bool)> = g
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, h)| (simple_set(&c, h), g.is_marked(i)))
        .collect();
    let mut want = published;
    ours.sort();
    want.sort();
    assert_eq!(ours, want);
    assert_eq!(g.edge_count(), 21);
    assert!(g.is_connected());
}

/// Orbits of `F` on the simples of `h`, found through dimension vectors.
fn oracle_orbits(c: &Catalog, h: &Heart, s: &Automorphism) -> Option<Vec<Vec<usize>>> {
    let image = |x: Shifted| {
        let d = c.entry(x.id).dim_vector();
        let mut t = vec![0; d.len()];
        for (i, &k) in d.iter().enumerate() {
            t[s.vertex_image(i)] = k;
        }
        Shifted::new(c.by_dim_vector(&t).unwrap(), x.shift)
    };
    let perm: Vec<usize> = h
        .simples()
        .iter()
        .map(|&x| h.position(image(x)))
        .collect::<Option<_>>()?;
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for i in 0..perm.len() {
        let mut o = Vec::new();
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            o.push(j);
            j = perm[j];
        }
        if !o.is_empty() {
            out.push(o);
        }
    }
    Some(out)
}

/// Search over orbit tilts from the seed, kept inside the interval.
fn orbit_tilt_oracle(c: &Catalog, s: &Automorphism) -> DiGraph<(), ()> {
    let seed = Heart::seed(c);
    let inside = |h: &Heart| h.simples().iter().all(|x| x.shift == 0 || x.shift == 1);
    let mut ids = HashMap::from([(seed.clone(), 0usize)]);
    let mut order = vec![seed];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let h = order[k].clone();
        for o in oracle_orbits(c, &h, s).expect("orbit tilts keep F-stability") {
            let t = multi_tilt(c, &h, &o).unwrap();
            if !inside(&t) {
                continue;
            }
            let id = *ids.entry(t.clone()).or_insert_with(|| {
                order.push(t.clone());
                queue.push_back(order.len() - 1);
                order.len() - 1
            });
            edges.push((k, id));
        }
    }
    digraph(order.len(), edges.into_iter())
}

fn folded(q: &Quiver, cycles: &str) -> (Catalog, ExchangeGraph, FoldedGraph, Automorphism) {
    let s = Automorphism::from_cycles(q, cycles, None).unwrap();
    let (c, g) = interval(q);
    let g = g.mark_f_stable(&c, &s).unwrap();
    let f = folded_eg(&c, &g, &s).unwrap();
    (c, g, f, s)
}

#[test]
fn a3_folded_graph_matches_oracles() {
    let (c, g, f, s) = folded(&a3_symmetric(), "(1 3)");
    assert_eq!(f.node_count(), 6);
    assert!(f.is_connected());
    assert_eq!(g.marks().unwrap().iter().filter(|&&m| m).count(), 6);
    let fg = folded_graph(&f);
    assert!(is_isomorphic(&fg, &orbit_tilt_oracle(&c, &s)));
    // folded type B2; orbit {1,3} has label 2
    assert!(matches_cambrian(&fg, &dihedral(4), &[0, 1]));
}

#[test]
fn d4_folded_graphs_match_oracles() {
    let q = Quiver::from_edges(4, &[(2, 1), (3, 1), (4, 1)]).unwrap();
    let (c, _, f, s) = folded(&q, "(2 3 4)");
    assert_eq!(f.node_count(), 8);
    assert_eq!(f.edge_count(), 8);
    let fg = folded_graph(&f);
    assert!(is_isomorphic(&fg, &orbit_tilt_oracle(&c, &s)));
    assert!(matches_cambrian(&fg, &dihedral(6), &[0, 1]));

    let (c, _, f, s) = folded(&d4_sink(), "(3 4)");
    assert_eq!(f.node_count(), 20);
    assert_eq!(f.edge_count(), 30);
    let fg = folded_graph(&f);
    assert!(is_isomorphic(&fg, &orbit_tilt_oracle(&c, &s)));
    // B3: orbit {3,4} is the negation generator, centre 2 next, then 1
    let to_gen = [2, 1, 0, 0];
    let mut word: Vec<usize> = Vec::new();
    for v in sinks_first(&d4_sink()) {
        if !word.contains(&to_gen[v]) {
            word.push(to_gen[v]);
        }
    }
    assert!(matches_cambrian(&fg, &type_b(3), &word));
}

#[test]
fn orbit_tilt_oracle_on_all_symmetric_orientations() {
    // every σ-compatible orientation of A3 and D4
    for q in orientations(3, A3) {
        if let Ok(s) = Automorphism::from_cycles(&q, "(1 3)", None) {
            let (c, _, f, _) = folded(&q, "(1 3)");
            assert!(is_isomorphic(&folded_graph(&f), &orbit_tilt_oracle(&c, &s)));
        }
    }
    for q in orientations(4, D4) {
        if let Ok(s) = Automorphism::from_cycles(&q, "(1 3 4)", None) {
            let (c, _, f, _) = folded(&q, "(1 3 4)");
            assert_eq!(f.node_count(), 8);
            assert!(is_isomorphic(&folded_graph(&f), &orbit_tilt_oracle(&c, &s)));
        }
    }
}
