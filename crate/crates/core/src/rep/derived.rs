use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::catalog::Catalog;
use super::representation::{
    coextension, cokernel, ext1_space, extension, hom_space, join_morphisms, kernel, stack_morphisms, Representation,
};
use crate::error::{Error, Result};
use crate::quiver::Automorphism;

/// An indecomposable object `M[shift]` of the bounded derived category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Shifted {
    pub id: usize,
    pub shift: i32,
}

impl Shifted {
    pub fn new(id: usize, shift: i32) -> Self {
        Shifted { id, shift }
    }

    pub fn shifted(self, by: i32) -> Self {
        Shifted {
            id: self.id,
            shift: self.shift + by,
        }
    }

    /// Signed dimension vector `(-1)^shift * dim M`.
    pub fn k_class(&self, cat: &Catalog) -> Vec<i64> {
        let sign = if self.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        cat.entry(self.id)
            .dim_vector()
            .iter()
            .map(|&d| sign * d as i64)
            .collect()
    }

    /// Label such as `T1`, `X011^1` or `T2^-1`.
    pub fn label(&self, cat: &Catalog) -> String {
        if self.shift == 0 {
            cat.label(self.id).to_string()
        } else {
            format!("{}^{}", cat.label(self.id), self.shift)
        }
    }
}

/// `dim Hom(M[a], N[b][k]) = dim Hom^{k+b-a}(M, N)` in a hereditary category.
pub fn graded_hom(cat: &Catalog, x: Shifted, y: Shifted, k: i32) -> usize {
    match k + y.shift - x.shift {
        0 => cat.hom_dim(x.id, y.id),
        1 => cat.ext_dim(x.id, y.id),
        _ => 0,
    }
}

/// A finite direct sum of shifted indecomposables, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DerivedObject {
    summands: Vec<Shifted>,
}

impl DerivedObject {
    pub fn new(mut summands: Vec<Shifted>) -> Self {
        summands.sort_unstable();
        DerivedObject { summands }
    }

    pub fn zero() -> Self {
        DerivedObject::default()
    }

    pub fn summands(&self) -> &[Shifted] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn single(&self) -> Option<Shifted> {
        match self.summands.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn direct_sum(&self, other: &DerivedObject) -> DerivedObject {
        let mut all = self.summands.clone();
        all.extend_from_slice(&other.summands);
        DerivedObject::new(all)
    }

    pub fn k_class(&self, cat: &Catalog) -> Vec<i64> {
        let mut out = vec![0; cat.quiver().vertex_count()];
        for s in &self.summands {
            for (o, x) in out.iter_mut().zip(s.k_class(cat)) {
                *o += x;
            }
        }
        out
    }

    /// Concrete representation in each nonzero cohomological degree; an
    /// object `M[s]` contributes `M` in degree `-s`.
    pub fn concrete(&self, cat: &Catalog) -> BTreeMap<i32, Representation> {
        let mut by_degree: BTreeMap<i32, Vec<Representation>> = BTreeMap::new();
        for s in &self.summands {
            by_degree.entry(-s.shift).or_default().push(cat.rep(s.id).clone());
        }
        by_degree
            .into_iter()
            .map(|(d, parts)| (d, Representation::direct_sum_all(&parts)))
            .collect()
    }

    /// Rebuilds the summand list from concrete cohomology, identifying each
    /// degree through the catalog.
    pub fn from_concrete(cat: &Catalog, degrees: &BTreeMap<i32, Representation>) -> Result<Self> {
        let mut summands = Vec::new();
        for (&d, r) in degrees {
            summands.extend(cat.identify(r)?.into_iter().map(|id| Shifted::new(id, -d)));
        }
        Ok(DerivedObject::new(summands))
    }

    pub fn label(&self, cat: &Catalog) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands
            .iter()
            .map(|s| s.label(cat))
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

impl From<Shifted> for DerivedObject {
    fn from(s: Shifted) -> Self {
        DerivedObject { summands: vec![s] }
    }
}

impl fmt::Display for Shifted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}[{}]", self.id, self.shift)
    }
}

/// Forward tilt image `Cone(X -> Ext^1(X,S)^* ⊗ S[1])[-1]` of `X = M[a]` at
/// the simple `S = N[b]`.
///
/// For `b = a` this is the universal extension of `M` by `N^d`; for
/// `b = a - 1` it is the cone of the coevaluation `M -> N^d`; in every other
/// configuration `Ext^1(X, S)` vanishes and `X` is returned.
pub fn universal_extension(cat: &Catalog, x: Shifted, s: Shifted) -> Result<DerivedObject> {
    let q = cat.quiver();
    let (m, n) = (cat.rep(x.id), cat.rep(s.id));
    if s.shift == x.shift {
        let classes = ext1_space(q, m, n)?;
        if classes.is_empty() {
            return Ok(x.into());
        }
        let e = extension(q, n, m, &classes);
        let mut out = BTreeMap::new();
        out.insert(-x.shift, e);
        return DerivedObject::from_concrete(cat, &out);
    }
    if s.shift == x.shift - 1 {
        let homs = hom_space(q, m, n)?;
        if homs.is_empty() {
            return Ok(x.into());
        }
        let f = stack_morphisms(m.dim_vector(), &homs);
        let nd = Representation::direct_sum_all(&vec![n.clone(); homs.len()]);
        let mut out = BTreeMap::new();
        out.insert(-x.shift, kernel(q, m, &f)?);
        out.insert(-(x.shift - 1), cokernel(q, &nd, &f)?);
        return DerivedObject::from_concrete(cat, &out);
    }
    Ok(x.into())
}

/// Backward tilt image `Cone(Ext^1(S,X) ⊗ S[-1] -> X)` of `X = M[a]` at the
/// simple `S = N[b]`; dual to [`universal_extension`].
pub fn universal_coextension(cat: &Catalog, x: Shifted, s: Shifted) -> Result<DerivedObject> {
    let q = cat.quiver();
    let (m, n) = (cat.rep(x.id), cat.rep(s.id));
    if s.shift == x.shift {
        let classes = ext1_space(q, n, m)?;
        if classes.is_empty() {
            return Ok(x.into());
        }
        let e = coextension(q, m, n, &classes);
        let mut out = BTreeMap::new();
        out.insert(-x.shift, e);
        return DerivedObject::from_concrete(cat, &out);
    }
    if s.shift == x.shift + 1 {
        let homs = hom_space(q, n, m)?;
        if homs.is_empty() {
            return Ok(x.into());
        }
        let g = join_morphisms(m.dim_vector(), &homs);
        let nd = Representation::direct_sum_all(&vec![n.clone(); homs.len()]);
        let mut out = BTreeMap::new();
        out.insert(-(x.shift + 1), kernel(q, &nd, &g)?);
        out.insert(-x.shift, cokernel(q, m, &g)?);
        return DerivedObject::from_concrete(cat, &out);
    }
    Ok(x.into())
}

/// Applies the Frobenius relabeling summand by summand.
pub fn frobenius_transport(cat: &Catalog, x: &DerivedObject, s: &Automorphism) -> Result<DerivedObject> {
    let mut out = Vec::with_capacity(x.summands.len());
    for t in &x.summands {
        out.push(Shifted::new(cat.transport_id(t.id, s)?, t.shift));
    }
    Ok(DerivedObject::new(out))
}

/// Least `m >= 1` with `F^m(x) = x`.
pub fn f_period(cat: &Catalog, x: &DerivedObject, s: &Automorphism) -> Result<usize> {
    let mut y = frobenius_transport(cat, x, s)?;
    let mut m = 1;
    while &y != x {
        if m > s.order() {
            return Err(Error::Invariant(
                "Frobenius orbit longer than the automorphism order".to_string(),
            ));
        }
        y = frobenius_transport(cat, &y, s)?;
        m += 1;
    }
    Ok(m)
}

/// `F(x) ⊕ F^2(x) ⊕ ... ⊕ F^p(x)` for the period `p` of `x`.
pub fn f_tilde(cat: &Catalog, x: &DerivedObject, s: &Automorphism) -> Result<DerivedObject> {
    let p = f_period(cat, x, s)?;
    let mut acc = DerivedObject::zero();
    let mut y = x.clone();
    for _ in 0..p {
        y = frobenius_transport(cat, &y, s)?;
        acc = acc.direct_sum(&y);
    }
    Ok(acc)
}

/// `dim Hom^k(x, y)` in the bounded derived category of the quiver.
pub fn hom_q(cat: &Catalog, x: &DerivedObject, y: &DerivedObject, k: i32) -> usize {
    x.summands
        .iter()
        .flat_map(|a| y.summands.iter().map(move |b| graded_hom(cat, *a, *b, k)))
        .sum()
}

/// Hom dimensions in degrees 0..=3 of the 3-Calabi-Yau category, read off
/// the quiver side: `Hom^k(x, y) + Hom^{3-k}(y, x)`.
pub fn cy3_hom_dims(cat: &Catalog, x: &DerivedObject, y: &DerivedObject) -> [usize; 4] {
    let mut out = [0; 4];
    for (k, o) in out.iter_mut().enumerate() {
        let k = k as i32;
        *o = hom_q(cat, x, y, k) + hom_q(cat, y, x, 3 - k);
    }
    out
}
