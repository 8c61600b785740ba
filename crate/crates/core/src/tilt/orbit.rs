use serde::Serialize;

use super::graph::{connected, ExchangeGraph};
use super::heart::{multi_tilt, multi_tilt_backward, Heart};
use crate::error::{Error, Result};
use crate::quiver::Automorphism;
use crate::rep::{graded_hom, Catalog, Shifted};

fn transport(cat: &Catalog, x: Shifted, s: &Automorphism) -> Result<Shifted> {
    Ok(Shifted::new(cat.transport_id(x.id, s)?, x.shift))
}

/// Whether the Frobenius relabeling permutes the simples of `h`.
pub fn is_f_stable(cat: &Catalog, h: &Heart, s: &Automorphism) -> Result<bool> {
    for &x in h.simples() {
        if h.position(transport(cat, x, s)?).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// F-orbits of the simples of an F-stable heart, as index lists. Each orbit
/// starts at its least index and follows `F`; orbits are ordered by that
/// least index.
pub fn simple_orbits(cat: &Catalog, h: &Heart, s: &Automorphism) -> Result<Vec<Vec<usize>>> {
    let perm: Vec<usize> = h
        .simples()
        .iter()
        .map(|&x| {
            h.position(transport(cat, x, s)?)
                .ok_or_else(|| Error::TiltPrecondition(format!("heart {} is not F-stable", h.label(cat))))
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = perm[i];
        }
        out.push(orbit);
    }
    Ok(out)
}

fn orbit_of(cat: &Catalog, h: &Heart, simple: usize, s: &Automorphism) -> Result<Vec<usize>> {
    simple_orbits(cat, h, s)?
        .into_iter()
        .find(|o| o.contains(&simple))
        .ok_or_else(|| Error::TiltPrecondition(format!("simple index {simple} out of range")))
}

/// Forward tilt at the whole F-orbit of `simples[simple]` in an F-stable heart.
pub fn orbit_tilt(cat: &Catalog, h: &Heart, simple: usize, s: &Automorphism) -> Result<Heart> {
    let orbit = orbit_of(cat, h, simple, s)?;
    let out = multi_tilt(cat, h, &orbit)?;
    if !is_f_stable(cat, &out, s)? {
        return Err(Error::Invariant(format!(
            "orbit tilt of {} is not F-stable",
            h.label(cat)
        )));
    }
    Ok(out)
}

/// Backward tilt at the whole F-orbit of `simples[simple]`.
pub fn orbit_tilt_backward(cat: &Catalog, h: &Heart, simple: usize, s: &Automorphism) -> Result<Heart> {
    let orbit = orbit_of(cat, h, simple, s)?;
    let out = multi_tilt_backward(cat, h, &orbit)?;
    if !is_f_stable(cat, &out, s)? {
        return Err(Error::Invariant(format!(
            "backward orbit tilt of {} is not F-stable",
            h.label(cat)
        )));
    }
    Ok(out)
}

/// An orbit tilt between two F-stable hearts of the folded graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedEdge {
    pub source: usize,
    pub orbit: Vec<usize>,
    pub target: usize,
}

/// The F-stable hearts of an exchange graph joined by orbit tilts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedGraph {
    /// Node ids in the unfolded graph.
    pub nodes: Vec<usize>,
    pub edges: Vec<FoldedEdge>,
    /// Folded simples of each node: one list of simple indices per orbit.
    pub orbits: Vec<Vec<Vec<usize>>>,
}

impl FoldedGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        connected(self.nodes.len(), self.edges.iter().map(|e| (e.source, e.target)))
    }

    /// `{T1⊕T3,T2}`: each orbit rendered as the direct sum of its members.
    pub fn label(&self, cat: &Catalog, g: &ExchangeGraph, k: usize) -> String {
        let h = g.node(self.nodes[k]);
        let parts: Vec<String> = self.orbits[k]
            .iter()
            .map(|o| {
                o.iter()
                    .map(|&i| h.simples()[i].label(cat))
                    .collect::<Vec<_>>()
                    .join("⊕")
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Restricts a marked graph to its F-stable hearts and joins them by the
/// orbit tilts that stay inside the graph.
pub fn folded_eg(cat: &Catalog, g: &ExchangeGraph, s: &Automorphism) -> Result<FoldedGraph> {
    let marks = g
        .marks()
        .ok_or_else(|| Error::TiltPrecondition("exchange graph has no F-stability marks".to_string()))?;
    let nodes: Vec<usize> = (0..g.node_count()).filter(|&i| marks[i]).collect();
    let local = |id: usize| nodes.iter().position(|&n| n == id);
    let mut edges = Vec::new();
    let mut orbits = Vec::with_capacity(nodes.len());
    for (k, &id) in nodes.iter().enumerate() {
        let h = g.node(id);
        let os = simple_orbits(cat, h, s)?;
        for o in &os {
            let t = orbit_tilt(cat, h, o[0], s)?;
            if let Some(target) = g.find(&t).and_then(local) {
                edges.push(FoldedEdge {
                    source: k,
                    orbit: o.clone(),
                    target,
                });
            }
        }
        orbits.push(os);
    }
    Ok(FoldedGraph { nodes, edges, orbits })
}

/// Ext multiplicities between the members of two F-orbits of simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitExtPattern {
    /// `gcd` of the two orbit sizes.
    pub d: usize,
    /// Size of the first orbit divided by `d`.
    pub s: usize,
    /// Size of the second orbit divided by `d`.
    pub t: usize,
    /// `h_k = dim Ext^1(R_{j,k}, R_{i,0})` for `k = 0..d`.
    pub h_k: Vec<usize>,
    pub h: usize,
    /// `dim Ext^1(⊕_b R_{j,b}, R_{i,a})` for any fixed `a`; equals `t * h`.
    pub orbit_total: usize,
}

/// Computes `E[a][b] = dim Ext^1(F^b R_j, F^a R_i)` over both orbits and
/// checks that it depends only on `(b - a) mod d`.
pub fn orbit_ext_pattern(cat: &Catalog, h: &Heart, i: usize, j: usize, s: &Automorphism) -> Result<OrbitExtPattern> {
    let oi = orbit_of(cat, h, i, s)?;
    let oj = orbit_of(cat, h, j, s)?;
    if oi.contains(&j) {
        return Err(Error::TiltPrecondition(
            "both simples lie in the same F-orbit".to_string(),
        ));
    }
    // rotate so that the given simples are the orbit base points
    let rotate = |o: &[usize], x: usize| {
        let p = o.iter().position(|&y| y == x).unwrap();
        o[p..]
            .iter()
            .chain(&o[..p])
            .map(|&k| h.simples()[k])
            .collect::<Vec<_>>()
    };
    let (ri, rj) = (rotate(&oi, i), rotate(&oj, j));
    let d = num_integer::gcd(ri.len(), rj.len());
    let e: Vec<Vec<usize>> = ri
        .iter()
        .map(|&x| rj.iter().map(|&y| graded_hom(cat, y, x, 1)).collect())
        .collect();
    let h_k: Vec<usize> = (0..d).map(|k| e[0][k]).collect();
    for (a, row) in e.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            let k = (b + ri.len() * rj.len() - a) % d;
            if v != h_k[k] {
                return Err(Error::Invariant(format!(
                    "Ext pattern breaks periodicity at ({a}, {b}): {v} != h_{k} = {}",
                    h_k[k]
                )));
            }
        }
    }
    let hsum: usize = h_k.iter().sum();
    Ok(OrbitExtPattern {
        d,
        s: ri.len() / d,
        t: rj.len() / d,
        h: hsum,
        orbit_total: e[0].iter().sum(),
        h_k,
    })
}
