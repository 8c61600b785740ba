use std::fmt;

use serde::Serialize;

use super::{Automorphism, Quiver};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

/// A vertex orbit. `id` is the index of its least member in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitVertex {
    pub id: usize,
    pub members: Vec<usize>,
    pub label: usize,
}

/// An arrow orbit; `tail` and `head` index into `ValuedQuiver::orbit_vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitArrow {
    pub id: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub tail: usize,
    pub head: usize,
}

/// The orbit quiver of an admissible automorphism, with orbit sizes as labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuedQuiver {
    pub orbit_vertices: Vec<OrbitVertex>,
    pub orbit_arrows: Vec<OrbitArrow>,
    #[serde(skip)]
    orbit_of: Vec<usize>,
    #[serde(skip)]
    symmetric_cartan: IntMatrix,
}

pub fn fold(q: &Quiver, s: &Automorphism) -> Result<ValuedQuiver> {
    if s.vertex_perm().len() != q.vertex_count() {
        return Err(Error::ShapeMismatch(
            "automorphism belongs to a different quiver".to_string(),
        ));
    }
    let orbits = s.vertex_orbits();
    let mut orbit_of = vec![0; q.vertex_count()];
    for (k, o) in orbits.iter().enumerate() {
        for &v in o {
            orbit_of[v] = k;
        }
    }
    for a in q.arrows() {
        if orbit_of[a.tail] == orbit_of[a.head] {
            return Err(Error::NotAdmissible {
                arrow: a.id.clone(),
                tail: q.vertex_id(a.tail).to_string(),
                head: q.vertex_id(a.head).to_string(),
            });
        }
    }
    let orbit_vertices = orbits
        .iter()
        .map(|o| OrbitVertex {
            id: o[0],
            members: o.clone(),
            label: o.len(),
        })
        .collect();
    let orbit_arrows = s
        .arrow_orbits()
        .iter()
        .map(|o| {
            let a = &q.arrows()[o[0]];
            OrbitArrow {
                id: o[0],
                members: o.clone(),
                size: o.len(),
                tail: orbit_of[a.tail],
                head: orbit_of[a.head],
            }
        })
        .collect();
    let n = q.vertex_count();
    let mut symmetric_cartan = crate::lattice::identity(n);
    for row in symmetric_cartan.iter_mut() {
        for x in row.iter_mut() {
            *x *= 2;
        }
    }
    for a in q.arrows() {
        symmetric_cartan[a.tail][a.head] -= 1;
        symmetric_cartan[a.head][a.tail] -= 1;
    }
    Ok(ValuedQuiver {
        orbit_vertices,
        orbit_arrows,
        orbit_of,
        symmetric_cartan,
    })
}

impl ValuedQuiver {
    pub fn rank(&self) -> usize {
        self.orbit_vertices.len()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.orbit_vertices.iter().map(|o| o.label).collect()
    }

    /// Index of the orbit containing vertex `v`.
    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    /// Orbit display names: the least member's vertex id in bold digits.
    pub fn orbit_names(&self, q: &Quiver) -> Vec<String> {
        self.orbit_vertices.iter().map(|o| bold(q.vertex_id(o.id))).collect()
    }

    /// `a_IJ = sum over j in J of c_ij` for any fixed `i in I`, where `c` is
    /// the symmetric Cartan matrix of the unfolded diagram.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let rep = self.orbit_vertices[i].members[0];
                (0..r)
                    .map(|j| {
                        self.orbit_vertices[j]
                            .members
                            .iter()
                            .map(|&v| self.symmetric_cartan[rep][v])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Coxeter matrix of the folded diagram; `None` marks an infinite entry.
    pub fn coxeter_matrix(&self) -> Vec<Vec<Option<u32>>> {
        let a = self.cartan_matrix();
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            return Some(1);
                        }
                        match a[i][j] * a[j][i] {
                            0 => Some(2),
                            1 => Some(3),
                            2 => Some(4),
                            3 => Some(6),
                            _ => None,
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Names the folded Cartan type, one entry per connected component.
    pub fn folded_type(&self) -> Result<FoldedType> {
        let m = self.coxeter_matrix();
        let r = self.rank();
        if m.iter().flatten().any(Option::is_none) {
            return Err(Error::Unsupported(
                "folded diagram has an infinite Coxeter entry".to_string(),
            ));
        }
        let m: Vec<Vec<u32>> = m.into_iter().map(|row| row.into_iter().flatten().collect()).collect();
        let adj: Vec<Vec<usize>> = (0..r)
            .map(|i| (0..r).filter(|&j| j != i && m[i][j] > 2).collect())
            .collect();
        let mut seen = vec![false; r];
        let mut components = Vec::new();
        for s in 0..r {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                for &w in &adj[comp[k]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(self.name_component(&comp, &m, &adj)?);
        }
        Ok(FoldedType { components })
    }

    fn name_component(&self, comp: &[usize], m: &[Vec<u32>], adj: &[Vec<usize>]) -> Result<String> {
        let n = comp.len();
        let edges: Vec<(usize, usize)> = comp
            .iter()
            .flat_map(|&i| adj[i].iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        let unsupported = || Error::Unsupported(format!("folded component of rank {n} is not of finite type"));
        if edges.len() + 1 != n {
            return Err(unsupported());
        }
        let heavy: Vec<(usize, usize)> = edges.iter().copied().filter(|&(i, j)| m[i][j] > 3).collect();
        if heavy.is_empty() {
            return simply_laced_name(comp, adj).ok_or_else(unsupported);
        }
        let (i, j) = heavy[0];
        if heavy.len() > 1 || comp.iter().any(|&v| adj[v].len() > 2) {
            return Err(unsupported());
        }
        match (m[i][j], n) {
            (6, 2) => Ok("G2".to_string()),
            (4, 2) => Ok("B2".to_string()),
            (4, _) => {
                let (ei, ej) = (adj[i].len() == 1, adj[j].len() == 1);
                if n == 4 && !ei && !ej {
                    return Ok("F4".to_string());
                }
                if !ei && !ej {
                    return Err(unsupported());
                }
                let (end, inner) = if ei { (i, j) } else { (j, i) };
                let family = if self.orbit_vertices[end].label > self.orbit_vertices[inner].label {
                    'B'
                } else {
                    'C'
                };
                Ok(format!("{family}{n}"))
            }
            _ => Err(unsupported()),
        }
    }

    /// One-line table such as `𝟏:2, 𝟐:1; arrow 𝟐⇒𝟏 (size 2)`.
    pub fn render_table(&self, q: &Quiver) -> String {
        let names = self.orbit_names(q);
        let mut out: Vec<String> = vec![self
            .orbit_vertices
            .iter()
            .zip(&names)
            .map(|(o, name)| format!("{name}:{}", o.label))
            .collect::<Vec<_>>()
            .join(", ")];
        for a in &self.orbit_arrows {
            out.push(format!("arrow {}⇒{} (size {})", names[a.tail], names[a.head], a.size));
        }
        out.join("; ")
    }
}

fn simply_laced_name(comp: &[usize], adj: &[Vec<usize>]) -> Option<String> {
    let n = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Some(format!("A{n}")),
        [b] if adj[*b].len() == 3 => {
            let mut arms: Vec<usize> = adj[*b]
                .iter()
                .map(|&s| {
                    let (mut prev, mut cur, mut len) = (*b, s, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        (prev, cur) = (cur, next);
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(format!("D{n}")),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(format!("E{n}")),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Renders ASCII digits as mathematical bold digits; other characters pass through.
pub fn bold(id: &str) -> String {
    id.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) => char::from_u32(0x1D7CE + d).unwrap(),
            None => c,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedType {
    pub components: Vec<String>,
}

impl fmt::Display for FoldedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("empty");
        }
        f.write_str(&self.components.join(" × "))
    }
}
