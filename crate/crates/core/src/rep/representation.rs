use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Quotient, Rational};
use crate::quiver::{Automorphism, Quiver};

/// A finite-dimensional representation: a space per vertex and a matrix per
/// arrow with `rows = dim(head)` and `cols = dim(tail)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A morphism of representations, one block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Representation {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::ShapeMismatch(format!(
                "representation has {} spaces and {} maps for a quiver with {} vertices and {} arrows",
                dims.len(),
                maps.len(),
                q.vertex_count(),
                q.arrow_count()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.head] || m.cols() != dims[a.tail] {
                return Err(Error::ShapeMismatch(format!(
                    "map on arrow {} is {}x{}, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    dims[a.head],
                    dims[a.tail]
                )));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero(q: &Quiver) -> Self {
        Representation {
            dims: vec![0; q.vertex_count()],
            maps: vec![Matrix::zeros(0, 0); q.arrow_count()],
        }
    }

    pub fn simple(q: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[v] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.head], dims[a.tail]))
            .collect();
        Representation { dims, maps }
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        Self::direct_sum_all(&[self.clone(), other.clone()])
    }

    pub fn direct_sum_all(parts: &[Representation]) -> Representation {
        let n = parts.first().map_or(0, |p| p.dims.len());
        let arrows = parts.first().map_or(0, |p| p.maps.len());
        let dims = (0..n).map(|i| parts.iter().map(|p| p.dims[i]).sum()).collect();
        let maps = (0..arrows)
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Representation { dims, maps }
    }

    /// `F(M)_{s(i)} = M_i` and `F(M)_{s(a)} = M_a`.
    pub fn transport(&self, s: &Automorphism) -> Representation {
        let mut dims = vec![0; self.dims.len()];
        for (i, &d) in self.dims.iter().enumerate() {
            dims[s.vertex_image(i)] = d;
        }
        let mut maps = vec![Matrix::zeros(0, 0); self.maps.len()];
        for (a, m) in self.maps.iter().enumerate() {
            maps[s.arrow_image(a)] = m.clone();
        }
        Representation { dims, maps }
    }

    fn check_same_quiver(&self, other: &Representation) -> Result<()> {
        if self.dims.len() != other.dims.len() || self.maps.len() != other.maps.len() {
            return Err(Error::ShapeMismatch(
                "representations live on different quivers".to_string(),
            ));
        }
        Ok(())
    }
}

/// Layout of the unknowns `phi_i` (each `n_i x m_i`, row-major) of a
/// vertex-wise map `M -> N`.
fn offsets(m: &Representation, n: &Representation) -> Vec<usize> {
    let mut off = Vec::with_capacity(m.dims.len() + 1);
    let mut acc = 0;
    for i in 0..m.dims.len() {
        off.push(acc);
        acc += n.dims[i] * m.dims[i];
    }
    off.push(acc);
    off
}

/// Row offsets of the target `⊕_a Hom(M_t(a), N_h(a))`.
fn cochain_offsets(q: &Quiver, m: &Representation, n: &Representation) -> Vec<usize> {
    let mut off = Vec::with_capacity(q.arrow_count() + 1);
    let mut acc = 0;
    for a in q.arrows() {
        off.push(acc);
        acc += n.dims[a.head] * m.dims[a.tail];
    }
    off.push(acc);
    off
}

/// `delta(phi)_a = N_a phi_t - phi_h M_a`, whose kernel is `Hom(M, N)` and
/// whose cokernel is `Ext^1(M, N)`.
fn intertwiner(q: &Quiver, m: &Representation, n: &Representation) -> Matrix {
    let voff = offsets(m, n);
    let coff = cochain_offsets(q, m, n);
    let mut d = Matrix::zeros(coff[q.arrow_count()], voff[m.dims.len()]);
    for (k, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        let (na, ma) = (&n.maps[k], &m.maps[k]);
        // rows index entries (r, c) of an n_h x m_t matrix
        for r in 0..n.dims[h] {
            for c in 0..m.dims[t] {
                let row = coff[k] + r * m.dims[t] + c;
                for j in 0..n.dims[t] {
                    let x = &na[(r, j)];
                    if !x.is_zero() {
                        d[(row, voff[t] + j * m.dims[t] + c)] += x;
                    }
                }
                for j in 0..m.dims[h] {
                    let x = &ma[(j, c)];
                    if !x.is_zero() {
                        d[(row, voff[h] + r * m.dims[h] + j)] -= x;
                    }
                }
            }
        }
    }
    d
}

/// Basis of `Hom(M, N)`, each element a morphism.
pub fn hom_space(q: &Quiver, m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.check_same_quiver(n)?;
    let voff = offsets(m, n);
    let d = intertwiner(q, m, n);
    let basis = d.nullspace();
    Ok(basis
        .into_iter()
        .map(|v| Morphism {
            blocks: (0..m.dims.len())
                .map(|i| Matrix::from_fn(n.dims[i], m.dims[i], |r, c| v[voff[i] + r * m.dims[i] + c].clone()))
                .collect(),
        })
        .collect())
}

pub fn hom_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_quiver(n)?;
    let d = intertwiner(q, m, n);
    Ok(d.cols() - d.rank())
}

/// A class in `Ext^1(M, N)` given by a cocycle `xi_a : M_t(a) -> N_h(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub cocycle: Vec<Matrix>,
}

/// Basis of `Ext^1(M, N)` as cocycles representing a complement of the
/// image of the intertwiner map.
pub fn ext1_space(q: &Quiver, m: &Representation, n: &Representation) -> Result<Vec<ExtClass>> {
    m.check_same_quiver(n)?;
    let coff = cochain_offsets(q, m, n);
    let d = intertwiner(q, m, n);
    let image: Vec<Vec<Rational>> = (0..d.cols()).map(|c| d.column(c)).collect();
    let quotient = Quotient::new(d.rows(), &image);
    Ok(quotient
        .complement
        .iter()
        .map(|&coord| ExtClass {
            cocycle: q
                .arrows()
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    let (h, w) = (n.dims[a.head], m.dims[a.tail]);
                    Matrix::from_fn(h, w, |r, c| {
                        if coff[k] + r * w + c == coord {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                })
                .collect(),
        })
        .collect())
}

pub fn ext1_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same_quiver(n)?;
    let d = intertwiner(q, m, n);
    Ok(d.rows() - d.rank())
}

/// Middle term of `0 -> N^d -> E -> M -> 0` classified by `(xi_1, ..., xi_d)`
/// with each `xi_k` in `Ext^1(M, N)`.
pub fn extension(q: &Quiver, sub: &Representation, quot: &Representation, classes: &[ExtClass]) -> Representation {
    let d = classes.len();
    let dims: Vec<usize> = (0..sub.dims.len()).map(|i| d * sub.dims[i] + quot.dims[i]).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (t, h) = (a.tail, a.head);
            let mut e = Matrix::zeros(dims[h], dims[t]);
            for j in 0..d {
                e.set_block(j * sub.dims[h], j * sub.dims[t], &sub.maps[k]);
                e.set_block(j * sub.dims[h], d * sub.dims[t], &classes[j].cocycle[k]);
            }
            e.set_block(d * sub.dims[h], d * sub.dims[t], &quot.maps[k]);
            e
        })
        .collect();
    Representation { dims, maps }
}

/// Middle term of `0 -> M -> E -> N^d -> 0` classified by `(eta_1, ..., eta_d)`
/// with each `eta_k` in `Ext^1(N, M)`.
pub fn coextension(q: &Quiver, sub: &Representation, quot: &Representation, classes: &[ExtClass]) -> Representation {
    let d = classes.len();
    let dims: Vec<usize> = (0..sub.dims.len()).map(|i| sub.dims[i] + d * quot.dims[i]).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (t, h) = (a.tail, a.head);
            let mut e = Matrix::zeros(dims[h], dims[t]);
            e.set_block(0, 0, &sub.maps[k]);
            for j in 0..d {
                e.set_block(0, sub.dims[t] + j * quot.dims[t], &classes[j].cocycle[k]);
                e.set_block(
                    sub.dims[h] + j * quot.dims[h],
                    sub.dims[t] + j * quot.dims[t],
                    &quot.maps[k],
                );
            }
            e
        })
        .collect();
    Representation { dims, maps }
}

/// `M -> N^d` whose components are the given morphisms `M -> N`.
pub fn stack_morphisms(source_dims: &[usize], parts: &[Morphism]) -> Morphism {
    Morphism {
        blocks: (0..source_dims.len())
            .map(|i| {
                Matrix::vstack(
                    &parts.iter().map(|p| p.blocks[i].clone()).collect::<Vec<_>>(),
                    source_dims[i],
                )
            })
            .collect(),
    }
}

/// `N^d -> M` whose components are the given morphisms `N -> M`.
pub fn join_morphisms(target_dims: &[usize], parts: &[Morphism]) -> Morphism {
    Morphism {
        blocks: (0..target_dims.len())
            .map(|i| {
                Matrix::hstack(
                    &parts.iter().map(|p| p.blocks[i].clone()).collect::<Vec<_>>(),
                    target_dims[i],
                )
            })
            .collect(),
    }
}

/// Kernel of `f : M -> N` as a subrepresentation of `M`.
pub fn kernel(q: &Quiver, m: &Representation, f: &Morphism) -> Result<Representation> {
    let bases: Vec<Matrix> = f
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let ns = b.nullspace();
            Matrix::from_columns(m.dims[i], &ns)
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (k, a) in q.arrows().iter().enumerate() {
        // B_h X = M_a B_t has a unique solution because B_h has full column rank
        let rhs = m.maps[k].mul(&bases[a.tail]);
        let bh = &bases[a.head];
        let cols: Result<Vec<Vec<Rational>>> = (0..dims[a.tail])
            .map(|c| {
                bh.solve(&rhs.column(c))
                    .ok_or_else(|| Error::Invariant("kernel is not a subrepresentation".to_string()))
            })
            .collect();
        maps.push(Matrix::from_columns(dims[a.head], &cols?));
    }
    Representation::new(q, dims, maps)
}

/// Cokernel of `f : M -> N` as a quotient representation of `N`.
pub fn cokernel(q: &Quiver, n: &Representation, f: &Morphism) -> Result<Representation> {
    let quotients: Vec<Quotient> = f
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let image: Vec<Vec<Rational>> = (0..b.cols()).map(|c| b.column(c)).collect();
            Quotient::new(n.dims[i], &image)
        })
        .collect();
    let dims: Vec<usize> = quotients.iter().map(Quotient::dim).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let qt = &quotients[a.tail];
            let proj = quotients[a.head].projection_matrix();
            let section = Matrix::from_fn(n.dims[a.tail], dims[a.tail], |r, c| {
                if qt.complement[c] == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            });
            proj.mul(&n.maps[k]).mul(&section)
        })
        .collect();
    Representation::new(q, dims, maps)
}

/// BGP reflection at a source `k`: the cokernel of `M_k -> ⊕ M_j` over the
/// arrows leaving `k`. The result lives on `q.reflect_at(k)`.
pub fn reflect_at_source(q: &Quiver, m: &Representation, k: usize) -> Representation {
    debug_assert!(q.is_source(k));
    let out: Vec<usize> = (0..q.arrow_count()).filter(|&a| q.arrows()[a].tail == k).collect();
    let total: usize = out.iter().map(|&a| m.dims[q.arrows()[a].head]).sum();
    let g = Matrix::vstack(&out.iter().map(|&a| m.maps[a].clone()).collect::<Vec<_>>(), m.dims[k]);
    let image: Vec<Vec<Rational>> = (0..g.cols()).map(|c| g.column(c)).collect();
    let quotient = Quotient::new(total, &image);
    let proj = quotient.projection_matrix();
    let mut dims = m.dims.clone();
    dims[k] = quotient.dim();
    let mut maps = m.maps.clone();
    let mut r0 = 0;
    for &a in &out {
        let h = m.dims[q.arrows()[a].head];
        maps[a] = proj.block(0, dims[k], r0, h);
        r0 += h;
    }
    Representation { dims, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn a2() -> Quiver {
        Quiver::from_edges(2, &[(1, 2)]).unwrap()
    }

    #[test]
    fn ext_between_simples_follows_arrows() {
        let q = a2();
        let (s1, s2) = (Representation::simple(&q, 0), Representation::simple(&q, 1));
        assert_eq!(ext1_dim(&q, &s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&q, &s2, &s1).unwrap(), 0);
        assert_eq!(hom_dim(&q, &s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&q, &s1, &s1).unwrap(), 1);
    }

    #[test]
    fn nonsplit_extension_is_indecomposable_projective() {
        let q = a2();
        let (s1, s2) = (Representation::simple(&q, 0), Representation::simple(&q, 1));
        let classes = ext1_space(&q, &s1, &s2).unwrap();
        let e = extension(&q, &s2, &s1, &classes);
        assert_eq!(e.dim_vector(), &[1, 1]);
        assert_eq!(e.map(0), &Matrix::from_i64(1, 1, &[1]));
        assert_eq!(hom_dim(&q, &e, &e).unwrap(), 1);
    }

    #[test]
    fn kernel_and_cokernel_of_projection() {
        let q = a2();
        let p = Representation::new(&q, vec![1, 1], vec![Matrix::from_i64(1, 1, &[1])]).unwrap();
        let s1 = Representation::simple(&q, 0);
        let f = hom_space(&q, &p, &s1).unwrap();
        assert_eq!(f.len(), 1);
        let k = kernel(&q, &p, &f[0]).unwrap();
        assert_eq!(k.dim_vector(), &[0, 1]);
        let c = cokernel(&q, &s1, &f[0]).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn transport_swaps_outer_vertices() {
        let q = Quiver::from_edges(3, &[(2, 1), (2, 3)]).unwrap();
        let s = Automorphism::from_cycles(&q, "(1 3)", None).unwrap();
        let m = Representation::new(
            &q,
            vec![1, 1, 0],
            vec![Matrix::from_i64(1, 1, &[1]), Matrix::zeros(0, 1)],
        )
        .unwrap();
        let f = m.transport(&s);
        assert_eq!(f.dim_vector(), &[0, 1, 1]);
        assert_eq!(f.map(1), &Matrix::from_i64(1, 1, &[1]));
        assert_eq!(f.transport(&s), m);
    }

    #[test]
    fn reflection_of_simple_at_source_vanishes() {
        let q = a2();
        let s1 = Representation::simple(&q, 0);
        assert!(reflect_at_source(&q, &s1, 0).is_zero());
        let s2 = Representation::simple(&q, 1);
        let r = reflect_at_source(&q, &s2, 0);
        assert_eq!(r.dim_vector(), &[1, 1]);
        assert_eq!(r.map(0), &Matrix::from_fn(1, 1, |_, _| rat(1)));
    }

    #[test]
    fn shapes_are_checked() {
        let q = a2();
        assert!(Representation::new(&q, vec![1, 1], vec![Matrix::zeros(2, 1)]).is_err());
        let other = Representation::simple(&Quiver::from_edges(1, &[]).unwrap(), 0);
        assert!(hom_dim(&q, &Representation::simple(&q, 0), &other).is_err());
    }
}
