use serde::Serialize;

use super::coxeter::CoxeterSystem;
use super::garside::{normal_form, words_equal};
use super::word::ArtinWord;
use crate::error::{Error, Result};
use crate::lattice::{identity, integer_kernel, mat_mul, mat_vec, IntMatrix};
use crate::quiver::{fold, Automorphism, Quiver};

/// Image of each folded generator: the product of the generators in its
/// vertex orbit, in ascending vertex order. Orbits follow [`fold`].
pub fn orbit_embedding(q: &Quiver, s: &Automorphism) -> Result<Vec<ArtinWord>> {
    let vq = fold(q, s)?;
    Ok(vq
        .orbit_vertices
        .iter()
        .map(|o| {
            let mut m = o.members.clone();
            m.sort_unstable();
            ArtinWord::positive(&m)
        })
        .collect())
}

/// Whether the generators inside every vertex orbit pairwise commute.
pub fn orbit_generators_commute(c: &CoxeterSystem, s: &Automorphism) -> bool {
    s.vertex_orbits().iter().all(|o| {
        o.iter().all(|&a| {
            o.iter().all(|&b| {
                let (x, y) = (ArtinWord::generator(a), ArtinWord::generator(b));
                words_equal(c, &x.then(&y), &y.then(&x))
            })
        })
    })
}

/// `I J I ...` with `m` letters, each letter a word.
pub fn alternating(a: &ArtinWord, b: &ArtinWord, m: usize) -> ArtinWord {
    (0..m).fold(ArtinWord::empty(), |acc, k| acc.then(if k % 2 == 0 { a } else { b }))
}

/// Outcome of checking one folded braid relation in the ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    /// Folded generator indices.
    pub i: usize,
    pub j: usize,
    /// Folded Coxeter exponent.
    pub m: u32,
    pub lhs: String,
    pub rhs: String,
    pub lhs_normal_form: String,
    pub rhs_normal_form: String,
    pub holds: bool,
}

/// Checks `(I J I ...)_m = (J I J ...)_m` for the orbit products of every
/// pair of folded generators, with `m` read off the folded Cartan matrix.
pub fn verify_folded_relation(q: &Quiver, s: &Automorphism) -> Result<Vec<RelationCheck>> {
    let ambient = CoxeterSystem::from_quiver(q)?;
    let vq = fold(q, s)?;
    let images = orbit_embedding(q, s)?;
    let m = vq.coxeter_matrix();
    let mut out = Vec::new();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            let mij = m[i][j].ok_or_else(|| Error::Unsupported(format!("folded pair ({i}, {j}) is not spherical")))?;
            out.push(check_relation(
                &ambient,
                i,
                j,
                mij,
                &alternating(&images[i], &images[j], mij as usize),
                &alternating(&images[j], &images[i], mij as usize),
            ));
        }
    }
    Ok(out)
}

/// Compares two words and records both normal forms.
pub fn check_relation(
    c: &CoxeterSystem,
    i: usize,
    j: usize,
    m: u32,
    lhs: &ArtinWord,
    rhs: &ArtinWord,
) -> RelationCheck {
    let (a, b) = (normal_form(c, lhs), normal_form(c, rhs));
    RelationCheck {
        i,
        j,
        m,
        lhs: lhs.render(c),
        rhs: rhs.render(c),
        lhs_normal_form: a.render(c),
        rhs_normal_form: b.render(c),
        holds: a == b,
    }
}

/// Action of the spherical twist along a simple of class `v` on `K`:
/// `x -> x - χ(v, x) v` with `χ` the 3-Calabi-Yau Euler form given as a
/// matrix `form[i][j] = χ(e_i, e_j)`.
///
/// The sign is the one under which the inverse twist sends the simples of
/// a heart to those of the two-step forward tilt at `S` and then `S[1]` in
/// the 3-Calabi-Yau category: `S -> S` and
/// `X -> X + (ext^1(X, S) - ext^2(X, S)) S`, with Ext counted there.
pub fn twist_k_matrix(v: &[i64], form: &IntMatrix) -> IntMatrix {
    let n = v.len();
    // row vector χ(v, -)
    let w: Vec<i64> = (0..n).map(|j| (0..n).map(|i| v[i] * form[i][j]).sum()).collect();
    let mut m = identity(n);
    for r in 0..n {
        for c in 0..n {
            m[r][c] -= v[r] * w[c];
        }
    }
    m
}

/// Twist matrices of the vertex simples.
pub fn vertex_twists(q: &Quiver) -> Vec<IntMatrix> {
    let form = q.euler_form_cy3().matrix;
    let n = q.vertex_count();
    (0..n)
        .map(|i| {
            let e: Vec<i64> = (0..n).map(|k| i64::from(k == i)).collect();
            twist_k_matrix(&e, &form)
        })
        .collect()
}

fn alternating_product(a: &IntMatrix, b: &IntMatrix, m: usize) -> IntMatrix {
    (0..m).fold(identity(a.len()), |acc, k| {
        mat_mul(&acc, if k % 2 == 0 { a } else { b })
    })
}

/// Whether the twist action on `K` respects the braid relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    /// Every defining relation of the ambient Artin group.
    pub ambient_relations: bool,
    /// The folded relations between orbit products.
    pub folded_relations: bool,
    /// Orbit products commute with the Frobenius permutation.
    pub commutes_with_frobenius: bool,
    /// Every twist fixes the radical of the 3-Calabi-Yau form.
    pub fixes_kernel: bool,
}

impl TwistCheck {
    pub fn all(&self) -> bool {
        self.ambient_relations && self.folded_relations && self.commutes_with_frobenius && self.fixes_kernel
    }
}

pub fn check_twist_action(q: &Quiver, s: &Automorphism) -> Result<TwistCheck> {
    let ambient = CoxeterSystem::from_quiver(q)?;
    let t = vertex_twists(q);
    let n = t.len();
    let m = ambient.coxeter_matrix();
    let ambient_relations = (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let k = m[i][j] as usize;
            alternating_product(&t[i], &t[j], k) == alternating_product(&t[j], &t[i], k)
        })
    });

    let vq = fold(q, s)?;
    let products: Vec<IntMatrix> = orbit_embedding(q, s)?
        .iter()
        .map(|w| {
            w.letters()
                .iter()
                .fold(identity(n), |acc, &(g, _)| mat_mul(&acc, &t[g]))
        })
        .collect();
    let fm = vq.coxeter_matrix();
    let mut folded_relations = true;
    for i in 0..products.len() {
        for j in i + 1..products.len() {
            let k = fm[i][j].ok_or_else(|| Error::Unsupported(format!("folded pair ({i}, {j}) is not spherical")))?
                as usize;
            folded_relations &= alternating_product(&products[i], &products[j], k)
                == alternating_product(&products[j], &products[i], k);
        }
    }
    let f = s.frobenius_on_k();
    let commutes_with_frobenius = products.iter().all(|p| mat_mul(&f, p) == mat_mul(p, &f));
    let kernel = integer_kernel(&q.euler_form_cy3());
    let fixes_kernel = t.iter().all(|m| kernel.iter().all(|v| mat_vec(m, v) == *v));
    Ok(TwistCheck {
        ambient_relations,
        folded_relations,
        commutes_with_frobenius,
        fixes_kernel,
    })
}
