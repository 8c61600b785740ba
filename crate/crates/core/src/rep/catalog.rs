use std::cmp::Reverse;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::representation::{ext1_dim, hom_dim, reflect_at_source, Representation};
use crate::error::{Error, Result};
use crate::linalg::{rat, to_integer, Matrix};
use crate::quiver::{Automorphism, Quiver};

/// An indecomposable representation together with its display label.
#[derive(Clone, Debug)]
pub struct Indecomposable {
    pub id: usize,
    pub label: String,
    pub rep: Representation,
}

impl Indecomposable {
    pub fn dim_vector(&self) -> &[usize] {
        self.rep.dim_vector()
    }
}

/// One indecomposable per positive root, with Hom and Ext tables.
///
/// Entries are ordered by total dimension, then by dimension vector in
/// decreasing lexicographic order, so simples come first in vertex order.
#[derive(Clone, Debug)]
pub struct Catalog {
    quiver: Quiver,
    entries: Vec<Indecomposable>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    by_dim: HashMap<Vec<usize>, usize>,
    fingerprint_inverse: Matrix,
}

#[derive(Serialize)]
struct CatalogDump<'a> {
    schema: u32,
    vertices: &'a [String],
    entries: Vec<EntryDump<'a>>,
    hom: &'a [Vec<usize>],
    ext: &'a [Vec<usize>],
}

#[derive(Serialize)]
struct EntryDump<'a> {
    id: usize,
    label: &'a str,
    dim_vector: &'a [usize],
}

/// Builds `C^-(X)` or the preprojective seeds by reflecting at sources
/// `ks[j-1]` of `quivers[j]` for `j = from, from-1, ..., 1`.
fn reflect_down(quivers: &[Quiver], ks: &[usize], mut m: Representation, from: usize) -> Representation {
    for j in (1..=from).rev() {
        if m.is_zero() {
            break;
        }
        m = reflect_at_source(&quivers[j], &m, ks[j - 1]);
    }
    m
}

fn component_indecomposables(q: &Quiver, component: &[usize], roots: usize) -> Result<Vec<Representation>> {
    let ks: Vec<usize> = q.sink_order().into_iter().filter(|v| component.contains(v)).collect();
    let n = ks.len();
    let mut quivers = vec![q.clone()];
    for &k in &ks {
        let next = quivers.last().unwrap().reflect_at(k);
        quivers.push(next);
    }

    // preprojective seeds: X_t = S^-_{k1} ... S^-_{k(t-1)} (S_{kt})
    let mut layer: Vec<Representation> = (0..n)
        .map(|t| reflect_down(&quivers, &ks, Representation::simple(&quivers[t], ks[t]), t))
        .collect();
    let mut found = Vec::new();
    while layer.iter().any(|m| !m.is_zero()) {
        for m in &layer {
            if !m.is_zero() {
                found.push(m.clone());
            }
        }
        if found.len() > roots {
            break;
        }
        // the Coxeter functor sends each X_t to tau^- X_t
        layer = layer.into_iter().map(|m| reflect_down(&quivers, &ks, m, n)).collect();
    }
    if found.len() != roots {
        return Err(Error::Invariant(format!(
            "reflection functors produced {} indecomposables, expected {roots}",
            found.len()
        )));
    }
    Ok(found)
}

fn label_for(q: &Quiver, dims: &[usize]) -> String {
    let support: Vec<usize> = (0..dims.len()).filter(|&i| dims[i] > 0).collect();
    if let [v] = support.as_slice() {
        if dims[*v] == 1 {
            return format!("T{}", q.vertex_id(*v));
        }
    }
    let digits: Vec<String> = dims.iter().map(usize::to_string).collect();
    if dims.iter().all(|&d| d < 10) {
        format!("X{}", digits.concat())
    } else {
        format!("X{}", digits.join("."))
    }
}

impl Catalog {
    /// Enumerates indecomposables with BGP reflection functors along an
    /// admissible sink ordering and fills the Hom/Ext tables.
    pub fn build(q: &Quiver) -> Result<Self> {
        let components = q.dynkin_type()?;
        let mut reps = Vec::new();
        for c in &components {
            reps.extend(component_indecomposables(q, &c.vertices, c.positive_root_count())?);
        }
        reps.sort_by(|a, b| (a.total_dim(), Reverse(a.dim_vector())).cmp(&(b.total_dim(), Reverse(b.dim_vector()))));
        let mut by_dim = HashMap::new();
        let mut entries = Vec::with_capacity(reps.len());
        for (id, rep) in reps.into_iter().enumerate() {
            if by_dim.insert(rep.dim_vector().to_vec(), id).is_some() {
                return Err(Error::Invariant(format!(
                    "dimension vector {:?} produced twice",
                    rep.dim_vector()
                )));
            }
            entries.push(Indecomposable {
                id,
                label: label_for(q, rep.dim_vector()),
                rep,
            });
        }

        let table = |f: fn(&Quiver, &Representation, &Representation) -> Result<usize>| -> Result<Vec<Vec<usize>>> {
            entries
                .par_iter()
                .map(|a| entries.iter().map(|b| f(q, &a.rep, &b.rep)).collect())
                .collect()
        };
        let hom = table(hom_dim)?;
        let ext = table(ext1_dim)?;
        for e in &entries {
            if hom[e.id][e.id] != 1 || ext[e.id][e.id] != 0 {
                return Err(Error::Invariant(format!("{} is not a rigid brick", e.label)));
            }
        }
        let n = entries.len();
        let fingerprint_inverse = Matrix::from_fn(n, n, |k, j| rat(hom[k][j] as i64))
            .inverse()
            .ok_or_else(|| Error::Invariant("Hom fingerprint matrix is singular".to_string()))?;
        Ok(Catalog {
            quiver: q.clone(),
            entries,
            hom,
            ext,
            by_dim,
            fingerprint_inverse,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Indecomposable] {
        &self.entries
    }

    pub fn entry(&self, id: usize) -> &Indecomposable {
        &self.entries[id]
    }

    pub fn label(&self, id: usize) -> &str {
        &self.entries[id].label
    }

    pub fn rep(&self, id: usize) -> &Representation {
        &self.entries[id].rep
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext_dim(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn hom_table(&self) -> &[Vec<usize>] {
        &self.hom
    }

    pub fn ext_table(&self) -> &[Vec<usize>] {
        &self.ext
    }

    pub fn by_dim_vector(&self, dims: &[usize]) -> Option<usize> {
        self.by_dim.get(dims).copied()
    }

    /// Catalog id of the simple at vertex `v`.
    pub fn simple(&self, v: usize) -> usize {
        let mut dims = vec![0; self.quiver.vertex_count()];
        dims[v] = 1;
        self.by_dim[&dims]
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.label == label)
    }

    /// Decomposes `r` into catalog ids (with repetition, ascending) from its
    /// Hom fingerprint `k -> dim Hom(C_k, r)`.
    pub fn identify(&self, r: &Representation) -> Result<Vec<usize>> {
        if r.dim_vector().len() != self.quiver.vertex_count() {
            return Err(Error::ShapeMismatch(
                "representation does not belong to the catalog quiver".to_string(),
            ));
        }
        if r.is_zero() {
            return Ok(Vec::new());
        }
        let f: Vec<_> = self
            .entries
            .iter()
            .map(|e| hom_dim(&self.quiver, &e.rep, r).map(|d| rat(d as i64)))
            .collect::<Result<_>>()?;
        let m = self.fingerprint_inverse.mul_vec(&f);
        let mut out = Vec::new();
        let mut dims = vec![0; r.dim_vector().len()];
        for (id, x) in m.iter().enumerate() {
            let k = to_integer(x)
                .filter(|&k| k >= 0)
                .ok_or_else(|| Error::Identification(format!("multiplicity {x} of {}", self.entries[id].label)))?;
            for _ in 0..k {
                out.push(id);
                for (d, e) in dims.iter_mut().zip(self.entries[id].dim_vector()) {
                    *d += e;
                }
            }
        }
        if dims != r.dim_vector() {
            return Err(Error::Identification(format!(
                "summands add up to {dims:?}, not {:?}",
                r.dim_vector()
            )));
        }
        Ok(out)
    }

    /// Identifies an indecomposable, failing if `r` splits.
    pub fn identify_single(&self, r: &Representation) -> Result<usize> {
        match self.identify(r)?.as_slice() {
            [id] => Ok(*id),
            other => Err(Error::Invariant(format!(
                "expected an indecomposable, found summands {:?}",
                other.iter().map(|&i| self.label(i)).collect::<Vec<_>>()
            ))),
        }
    }

    /// Image of a catalog entry under the Frobenius relabeling.
    pub fn transport_id(&self, id: usize, s: &Automorphism) -> Result<usize> {
        self.identify_single(&self.entries[id].rep.transport(s))
    }

    /// JSON dump of labels, dimension vectors and the Hom/Ext tables.
    pub fn to_json(&self) -> serde_json::Value {
        let dump = CatalogDump {
            schema: 1,
            vertices: self.quiver.vertices(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryDump {
                    id: e.id,
                    label: &e.label,
                    dim_vector: e.dim_vector(),
                })
                .collect(),
            hom: &self.hom,
            ext: &self.ext,
        };
        serde_json::to_value(dump).expect("catalog dump serializes")
    }
}
