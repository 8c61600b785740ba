#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use foldstab_core::quiver::Quiver;
use petgraph::graph::DiGraph;

/// Every orientation of a tree given by undirected 1-based edges.
pub fn orientations(n: usize, edges: &[(usize, usize)]) -> Vec<Quiver> {
    (0..1u32 << edges.len())
        .map(|mask| {
            let e: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            Quiver::from_edges(n, &e).unwrap()
        })
        .collect()
}

pub const A2: &[(usize, usize)] = &[(1, 2)];
pub const A3: &[(usize, usize)] = &[(1, 2), (2, 3)];
pub const D4: &[(usize, usize)] = &[(1, 2), (3, 2), (4, 2)];

pub fn a3_symmetric() -> Quiver {
    Quiver::from_edges(3, &[(2, 1), (2, 3)]).unwrap()
}

pub fn d4_sink() -> Quiver {
    Quiver::from_edges(4, &[(1, 2), (3, 2), (4, 2)]).unwrap()
}

/// A finite group generated by permutations, with word lengths from a
/// breadth-first search of the Cayley graph.
pub struct PermGroup {
    pub gens: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    pub elements: Vec<Vec<usize>>,
    length: Vec<usize>,
}

impl PermGroup {
    pub fn new(points: usize, gens: Vec<Vec<usize>>) -> Self {
        let id: Vec<usize> = (0..points).collect();
        let mut index = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id.clone()];
        let mut length = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let x = compose(&elements[k], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    length.push(length[k] + 1);
                    elements.push(x);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        PermGroup {
            gens,
            index,
            elements,
            length,
        }
    }

    pub fn len(&self, w: &[usize]) -> usize {
        self.length[self.index[w]]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Right weak order.
    pub fn below(&self, x: &[usize], y: &[usize]) -> bool {
        self.len(x) + self.len(&compose(&inverse(x), y)) == self.len(y)
    }

    /// Whether `w` is sortable for the Coxeter element `c` (a word using
    /// each generator once): the greedy leftmost reduced subword of
    /// `c c c ...` must use nested sets of letters.
    pub fn is_sortable(&self, w: &[usize], c: &[usize]) -> bool {
        let mut w = w.to_vec();
        let mut prev: Option<Vec<usize>> = None;
        while self.len(&w) > 0 {
            let mut block = Vec::new();
            for &s in c {
                let sw = compose(&self.gens[s], &w);
                if self.len(&sw) < self.len(&w) {
                    block.push(s);
                    w = sw;
                }
            }
            if let Some(p) = &prev {
                if block.iter().any(|s| !p.contains(s)) {
                    return false;
                }
            }
            prev = Some(block);
        }
        true
    }

    /// Hasse diagram of the sortable elements under the weak order, with
    /// edges pointing up.
    pub fn cambrian_hasse(&self, c: &[usize]) -> DiGraph<(), ()> {
        let s: Vec<&Vec<usize>> = self.elements.iter().filter(|w| self.is_sortable(w, c)).collect();
        let mut g = DiGraph::new();
        let nodes: Vec<_> = s.iter().map(|_| g.add_node(())).collect();
        for (i, x) in s.iter().enumerate() {
            for (j, y) in s.iter().enumerate() {
                if i == j || !self.below(x, y) {
                    continue;
                }
                let covered = s
                    .iter()
                    .enumerate()
                    .any(|(k, z)| k != i && k != j && self.below(x, z) && self.below(z, y));
                if !covered {
                    g.add_edge(nodes[i], nodes[j], ());
                }
            }
        }
        g
    }
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn swap(points: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..points).collect();
    for &(a, b) in pairs {
        p.swap(a, b);
    }
    p
}

/// Symmetric group on `n + 1` letters; generator `i` swaps `i` and `i + 1`.
pub fn type_a(n: usize) -> PermGroup {
    PermGroup::new(n + 1, (0..n).map(|i| swap(n + 1, &[(i, i + 1)])).collect())
}

/// Signed permutations of `1..=n` acting on `2n` points (`+i` at `i - 1`,
/// `-i` at `n + i - 1`). Generator 0 negates the first letter, generator
/// `i` swaps letters `i` and `i + 1`.
pub fn type_b(n: usize) -> PermGroup {
    let mut gens = vec![swap(2 * n, &[(0, n)])];
    for i in 0..n - 1 {
        gens.push(swap(2 * n, &[(i, i + 1), (n + i, n + i + 1)]));
    }
    PermGroup::new(2 * n, gens)
}

/// Even signed permutations. Generator 0 sends `1 -> -2` and `2 -> -1`;
/// generator `i` swaps letters `i` and `i + 1`.
pub fn type_d(n: usize) -> PermGroup {
    let mut gens = vec![swap(2 * n, &[(0, n + 1), (1, n)])];
    for i in 0..n - 1 {
        gens.push(swap(2 * n, &[(i, i + 1), (n + i, n + i + 1)]));
    }
    PermGroup::new(2 * n, gens)
}

/// Symmetries of a regular `m`-gon, generated by two adjacent reflections.
pub fn dihedral(m: usize) -> PermGroup {
    let a = (0..m).map(|k| (m - k) % m).collect();
    let b = (0..m).map(|k| (m + 1 - k) % m).collect();
    PermGroup::new(m, vec![a, b])
}

/// Vertices ordered sinks first, for building a Coxeter element.
pub fn sinks_first(q: &Quiver) -> Vec<usize> {
    q.sink_order()
}
