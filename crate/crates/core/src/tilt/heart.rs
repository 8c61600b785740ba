use std::cmp::Reverse;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::{universal_coextension, universal_extension, Catalog, Shifted};

/// A heart, recorded by its simples in canonical order: decreasing
/// lexicographic order of their signed dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Heart {
    simples: Vec<Shifted>,
}

impl Heart {
    pub fn new(cat: &Catalog, mut simples: Vec<Shifted>) -> Self {
        simples.sort_by_cached_key(|s| Reverse(s.k_class(cat)));
        Heart { simples }
    }

    /// The standard heart: every simple representation at shift 0.
    pub fn seed(cat: &Catalog) -> Self {
        let n = cat.quiver().vertex_count();
        Heart::new(cat, (0..n).map(|v| Shifted::new(cat.simple(v), 0)).collect())
    }

    pub fn simples(&self) -> &[Shifted] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn position(&self, s: Shifted) -> Option<usize> {
        self.simples.iter().position(|&x| x == s)
    }

    pub fn k_classes(&self, cat: &Catalog) -> Vec<Vec<i64>> {
        self.simples.iter().map(|s| s.k_class(cat)).collect()
    }

    pub fn shift_range(&self) -> (i32, i32) {
        let lo = self.simples.iter().map(|s| s.shift).min().unwrap_or(0);
        let hi = self.simples.iter().map(|s| s.shift).max().unwrap_or(0);
        (lo, hi)
    }

    /// `{T1,X011^1,T2}`.
    pub fn label(&self, cat: &Catalog) -> String {
        let parts: Vec<String> = self.simples.iter().map(|s| s.label(cat)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Checks that the simples are bricks with no Hom between distinct ones.
    pub fn validate(&self, cat: &Catalog) -> Result<()> {
        if self.simples.len() != cat.quiver().vertex_count() {
            return Err(Error::Invariant(format!(
                "heart has {} simples for {} vertices",
                self.simples.len(),
                cat.quiver().vertex_count()
            )));
        }
        for (i, &a) in self.simples.iter().enumerate() {
            for (j, &b) in self.simples.iter().enumerate() {
                let h = crate::rep::graded_hom(cat, a, b, 0);
                let want = usize::from(i == j);
                if h != want {
                    return Err(Error::Invariant(format!(
                        "Hom({}, {}) has dimension {h}",
                        a.label(cat),
                        b.label(cat)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_index(h: &Heart, idx: usize) -> Result<Shifted> {
    h.simples
        .get(idx)
        .copied()
        .ok_or_else(|| Error::TiltPrecondition(format!("simple index {idx} out of range for {} simples", h.len())))
}

fn single(cat: &Catalog, r: crate::rep::DerivedObject, what: &str) -> Result<Shifted> {
    r.single()
        .ok_or_else(|| Error::Invariant(format!("{what} is {}, not a single indecomposable", r.label(cat))))
}

/// Forward simple tilt at `simples[idx]`: `S` becomes `S[1]` and every other
/// simple `X` becomes its universal extension by `S`.
pub fn tilt_forward(cat: &Catalog, h: &Heart, idx: usize) -> Result<Heart> {
    let s = check_index(h, idx)?;
    let mut out = Vec::with_capacity(h.len());
    for (j, &x) in h.simples.iter().enumerate() {
        if j == idx {
            out.push(s.shifted(1));
        } else {
            out.push(single(cat, universal_extension(cat, x, s)?, "forward tilt image")?);
        }
    }
    Ok(Heart::new(cat, out))
}

/// Backward simple tilt at `simples[idx]`: `S` becomes `S[-1]`.
pub fn tilt_backward(cat: &Catalog, h: &Heart, idx: usize) -> Result<Heart> {
    let s = check_index(h, idx)?;
    let mut out = Vec::with_capacity(h.len());
    for (j, &x) in h.simples.iter().enumerate() {
        if j == idx {
            out.push(s.shifted(-1));
        } else {
            out.push(single(cat, universal_coextension(cat, x, s)?, "backward tilt image")?);
        }
    }
    Ok(Heart::new(cat, out))
}

/// Total graded Hom `Hom^*(x, y)`, summed over all degrees.
fn total_hom(cat: &Catalog, x: Shifted, y: Shifted) -> usize {
    cat.hom_dim(x.id, y.id) + cat.ext_dim(x.id, y.id)
}

fn check_orthogonal(cat: &Catalog, h: &Heart, indices: &[usize]) -> Result<Vec<Shifted>> {
    let chosen: Vec<Shifted> = indices.iter().map(|&i| check_index(h, i)).collect::<Result<_>>()?;
    for (a, &x) in chosen.iter().enumerate() {
        if chosen[..a].contains(&x) {
            return Err(Error::TiltPrecondition(format!(
                "simple {} selected twice",
                x.label(cat)
            )));
        }
        for &y in &chosen[a + 1..] {
            if total_hom(cat, x, y) + total_hom(cat, y, x) != 0 {
                return Err(Error::TiltPrecondition(format!(
                    "simples {} and {} have nonzero graded Hom",
                    x.label(cat),
                    y.label(cat)
                )));
            }
        }
    }
    Ok(chosen)
}

/// Tilts forward at several mutually Hom-orthogonal simples, one after
/// another in the given order.
pub fn multi_tilt(cat: &Catalog, h: &Heart, indices: &[usize]) -> Result<Heart> {
    let chosen = check_orthogonal(cat, h, indices)?;
    let mut cur = h.clone();
    for s in chosen {
        let idx = cur
            .position(s)
            .ok_or_else(|| Error::Invariant(format!("{} stopped being simple during a multi-tilt", s.label(cat))))?;
        cur = tilt_forward(cat, &cur, idx)?;
    }
    Ok(cur)
}

/// Backward counterpart of [`multi_tilt`].
pub fn multi_tilt_backward(cat: &Catalog, h: &Heart, indices: &[usize]) -> Result<Heart> {
    let chosen = check_orthogonal(cat, h, indices)?;
    let mut cur = h.clone();
    for s in chosen {
        let idx = cur
            .position(s)
            .ok_or_else(|| Error::Invariant(format!("{} stopped being simple during a multi-tilt", s.label(cat))))?;
        cur = tilt_backward(cat, &cur, idx)?;
    }
    Ok(cur)
}
