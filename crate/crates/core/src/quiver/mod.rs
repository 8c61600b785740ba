//! Acyclic quivers, admissible automorphisms and the integer forms attached
//! to them.

mod dynkin;
mod fold;
pub mod format;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, IntegerBilinearForm};

pub use dynkin::{DynkinComponent, DynkinFamily};
pub use fold::{bold, fold, FoldedType, OrbitArrow, OrbitVertex, ValuedQuiver};
pub use format::{parse_quiver, QuiverSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(arrow id, tail id, head id)`
    /// triples, rejecting duplicates, unknown endpoints and directed cycles.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex id {v}")));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (id, t, h) in arrows {
            if seen.insert(id.clone(), ()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow id {id}")));
            }
            let lookup = |v: &str| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidQuiver(format!("arrow {id} uses unknown vertex {v}")))
            };
            let (tail, head) = (lookup(&t)?, lookup(&h)?);
            out.push(Arrow { id, tail, head });
        }
        let q = Quiver {
            vertices,
            arrows: out,
            index,
        };
        q.topological_order()?;
        Ok(q)
    }

    /// Quiver on vertices `"1".."n"` with 1-based `(tail, head)` pairs; arrows
    /// are named `a1, a2, ...` in the given order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| (format!("a{}", k + 1), t.to_string(), h.to_string()))
            .collect();
        Self::new(vertices, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Number of arrows `i -> j`.
    pub fn arrows_between(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.tail == i && a.head == j).count()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.tail != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.head != v)
    }

    /// Vertices ordered so that every arrow points to an earlier vertex
    /// (sinks first); ties broken by vertex position.
    pub fn sink_order(&self) -> Vec<usize> {
        self.topological_order()
            .expect("validated quiver is acyclic")
            .into_iter()
            .rev()
            .collect()
    }

    /// Kahn's algorithm; ties broken by vertex position.
    fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.head] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.tail == v) {
                indeg[a.head] -= 1;
                if indeg[a.head] == 0 {
                    ready.insert(a.head);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::Cycle(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    /// Copy with every arrow touching `v` reversed.
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.tail == v || a.head == v {
                    Arrow {
                        id: a.id.clone(),
                        tail: a.head,
                        head: a.tail,
                    }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
            index: self.index.clone(),
        }
    }

    /// Connected components of the underlying graph, each as a sorted
    /// vertex list; components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for a in &self.arrows {
                    for (x, y) in [(a.tail, a.head), (a.head, a.tail)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Validates that the underlying graph is a disjoint union of simply-laced
    /// Dynkin diagrams and returns the components.
    pub fn dynkin_type(&self) -> Result<Vec<DynkinComponent>> {
        dynkin::classify(self)
    }

    /// Number of positive roots of the underlying Dynkin diagram.
    pub fn positive_root_count(&self) -> Result<usize> {
        Ok(self
            .dynkin_type()?
            .iter()
            .map(DynkinComponent::positive_root_count)
            .sum())
    }

    /// `chi(e_i, e_j) = delta_ij - #{arrows i -> j}`.
    pub fn euler_form_hereditary(&self) -> IntegerBilinearForm {
        let n = self.vertex_count();
        let mut m = crate::lattice::identity(n);
        for a in &self.arrows {
            m[a.tail][a.head] -= 1;
        }
        IntegerBilinearForm::new(self.vertices.clone(), m).expect("square by construction")
    }

    /// Euler form of the associated 3-Calabi-Yau category, `chi - chi^T`.
    pub fn euler_form_cy3(&self) -> IntegerBilinearForm {
        let h = self.euler_form_hereditary();
        let n = self.vertex_count();
        let m: IntMatrix = (0..n)
            .map(|i| (0..n).map(|j| h.matrix[i][j] - h.matrix[j][i]).collect())
            .collect();
        IntegerBilinearForm::new(self.vertices.clone(), m).expect("square by construction")
    }
}

/// A quiver automorphism given by compatible vertex and arrow permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    vertex_perm: Vec<usize>,
    arrow_perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(q: &Quiver) -> Self {
        Automorphism {
            vertex_perm: (0..q.vertex_count()).collect(),
            arrow_perm: (0..q.arrow_count()).collect(),
        }
    }

    /// Validates `vertex_perm` (and `arrow_perm` when given) against `q`.
    ///
    /// Admissibility is checked before compatibility. When `arrow_perm` is
    /// absent it is inferred, which requires every arrow to have exactly one
    /// candidate image.
    pub fn new(q: &Quiver, vertex_perm: Vec<usize>, arrow_perm: Option<Vec<usize>>) -> Result<Self> {
        let n = q.vertex_count();
        if !is_permutation(&vertex_perm, n) {
            return Err(Error::Incompatible(format!(
                "vertex map {vertex_perm:?} is not a permutation of {n} vertices"
            )));
        }
        let orbit_of = orbit_labels(&vertex_perm);
        for a in q.arrows() {
            if orbit_of[a.tail] == orbit_of[a.head] {
                return Err(Error::NotAdmissible {
                    arrow: a.id.clone(),
                    tail: q.vertex_id(a.tail).to_string(),
                    head: q.vertex_id(a.head).to_string(),
                });
            }
        }
        let arrow_perm = match arrow_perm {
            Some(p) => {
                if !is_permutation(&p, q.arrow_count()) {
                    return Err(Error::Incompatible("arrow map is not a permutation".to_string()));
                }
                p
            }
            None => infer_arrow_perm(q, &vertex_perm)?,
        };
        for (k, a) in q.arrows().iter().enumerate() {
            let b = &q.arrows()[arrow_perm[k]];
            if b.tail != vertex_perm[a.tail] || b.head != vertex_perm[a.head] {
                return Err(Error::Incompatible(format!(
                    "arrow {} is sent to {}, whose endpoints are not the images of {} -> {}",
                    a.id,
                    b.id,
                    q.vertex_id(a.tail),
                    q.vertex_id(a.head)
                )));
            }
        }
        Ok(Automorphism {
            vertex_perm,
            arrow_perm,
        })
    }

    /// Parses cycle notation over vertex ids, e.g. `"(1 3)"` or `"(2 3 4)(5 6)"`.
    /// The empty string and `"()"` denote the identity.
    pub fn from_cycles(q: &Quiver, vertex_cycles: &str, arrow_cycles: Option<&str>) -> Result<Self> {
        let vertex_perm = parse_cycles(vertex_cycles, q.vertex_count(), |id| q.vertex_index(id))?;
        let arrow_perm = arrow_cycles
            .map(|s| parse_cycles(s, q.arrow_count(), |id| q.arrow_index(id)))
            .transpose()?;
        Self::new(q, vertex_perm, arrow_perm)
    }

    pub fn vertex_image(&self, i: usize) -> usize {
        self.vertex_perm[i]
    }

    pub fn arrow_image(&self, a: usize) -> usize {
        self.arrow_perm[a]
    }

    pub fn vertex_perm(&self) -> &[usize] {
        &self.vertex_perm
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Vertex orbits, members ascending, orbits ordered by least member.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        orbits(&self.vertex_perm)
    }

    pub fn arrow_orbits(&self) -> Vec<Vec<usize>> {
        orbits(&self.arrow_perm)
    }

    /// `i, s(i), s^2(i), ...` up to the orbit length.
    pub fn vertex_cycle(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut j = self.vertex_perm[i];
        while j != i {
            out.push(j);
            j = self.vertex_perm[j];
        }
        out
    }

    /// Order of the induced permutation: lcm of orbit sizes.
    pub fn order(&self) -> usize {
        self.vertex_orbits()
            .iter()
            .chain(self.arrow_orbits().iter())
            .fold(1, |acc, o| num_integer::lcm(acc, o.len()))
    }

    /// Permutation matrix of the induced action on `K`, with `P[s(i)][i] = 1`.
    pub fn frobenius_on_k(&self) -> IntMatrix {
        let n = self.vertex_perm.len();
        let mut p = vec![vec![0; n]; n];
        for i in 0..n {
            p[self.vertex_perm[i]][i] = 1;
        }
        p
    }

    /// Renders the vertex permutation in cycle notation over vertex ids.
    pub fn cycle_notation(&self, q: &Quiver) -> String {
        let cycles: Vec<String> = self
            .vertex_orbits()
            .iter()
            .filter(|o| o.len() > 1)
            .map(|o| {
                let ids: Vec<&str> = self.vertex_cycle(o[0]).iter().map(|&v| q.vertex_id(v)).collect();
                format!("({})", ids.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            "()".to_string()
        } else {
            cycles.concat()
        }
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    true
}

fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut o = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            o.push(j);
            j = perm[j];
        }
        o.sort_unstable();
        out.push(o);
    }
    out
}

fn orbit_labels(perm: &[usize]) -> Vec<usize> {
    let mut label = vec![0; perm.len()];
    for (k, o) in orbits(perm).iter().enumerate() {
        for &v in o {
            label[v] = k;
        }
    }
    label
}

fn infer_arrow_perm(q: &Quiver, vertex_perm: &[usize]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(q.arrow_count());
    for a in q.arrows() {
        let candidates: Vec<usize> = q
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.tail == vertex_perm[a.tail] && b.head == vertex_perm[a.head])
            .map(|(k, _)| k)
            .collect();
        match candidates.as_slice() {
            [k] => out.push(*k),
            [] => {
                return Err(Error::Incompatible(format!(
                    "no arrow {} -> {} to receive arrow {}",
                    q.vertex_id(vertex_perm[a.tail]),
                    q.vertex_id(vertex_perm[a.head]),
                    a.id
                )))
            }
            _ => {
                return Err(Error::Incompatible(format!(
                    "image of arrow {} is ambiguous; give arrow_perm explicitly",
                    a.id
                )))
            }
        }
    }
    if !is_permutation(&out, q.arrow_count()) {
        return Err(Error::Incompatible("inferred arrow map is not a bijection".to_string()));
    }
    Ok(out)
}

fn parse_cycles(text: &str, n: usize, lookup: impl Fn(&str) -> Option<usize>) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut touched: BTreeMap<usize, ()> = BTreeMap::new();
    let bad = |m: String| Error::Parse {
        line: 0,
        column: 0,
        message: m,
    };
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad(format!("expected '(' in cycle notation {text:?}")));
        };
        let Some(end) = body.find(')') else {
            return Err(bad(format!("unterminated cycle in {text:?}")));
        };
        let ids: Vec<&str> = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .collect();
        let mut cycle = Vec::with_capacity(ids.len());
        for id in &ids {
            let v = lookup(id).ok_or_else(|| bad(format!("unknown id {id:?} in cycle notation")))?;
            if touched.insert(v, ()).is_some() {
                return Err(bad(format!("id {id:?} appears in more than one cycle")));
            }
            cycle.push(v);
        }
        for k in 0..cycle.len() {
            perm[cycle[k]] = cycle[(k + 1) % cycle.len()];
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(perm)
}
