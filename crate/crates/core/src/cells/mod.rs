//! Cells of central charges attached to hearts, and exact decisions about
//! which of them meet a linear subspace of charges.
//!
//! A charge on a heart is one complex value per simple. It lies in the cell
//! when every value is in the half-open upper half plane: imaginary part
//! positive, or zero with positive real part. Constraints are integer linear
//! functionals on `K` that the charge must kill.

pub mod lp;

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, rational_rank};
use crate::linalg::{rat, Matrix, Rational};
use crate::quiver::{Automorphism, Quiver};
use crate::rep::Catalog;
use crate::tilt::{ExchangeGraph, Heart};

/// A complex number with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Complex { re, im }
    }

    pub fn zero() -> Self {
        Complex::new(Rational::zero(), Rational::zero())
    }

    /// `{r e^{i pi theta} : r > 0, 0 <= theta < 1}`.
    pub fn in_upper_half_plane(&self) -> bool {
        self.im.is_positive() || (self.im.is_zero() && self.re.is_positive())
    }

    fn add(&self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn scale(&self, k: &Rational) -> Complex {
        Complex::new(&self.re * k, &self.im * k)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Serialize for Complex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.re.to_string(), self.im.to_string()].serialize(s)
    }
}

/// Linear functionals on `K`, in the vertex basis.
pub type Constraints = Vec<Vec<i64>>;

/// `Z` must vanish on the radical of the 3-Calabi-Yau Euler form.
pub fn numerical_constraints(q: &Quiver) -> Constraints {
    integer_kernel(&q.euler_form_cy3())
}

/// `Z(e_i) = Z(e_j)` for vertices in a common orbit: one functional
/// `e_first - e_other` per non-least member.
pub fn f_constraints(q: &Quiver, s: &Automorphism) -> Constraints {
    let n = q.vertex_count();
    let mut out = Vec::new();
    for o in s.vertex_orbits() {
        for &v in &o[1..] {
            let mut c = vec![0; n];
            c[o[0]] = 1;
            c[v] = -1;
            out.push(c);
        }
    }
    out
}

/// Whether two constraint lists span the same rational subspace.
pub fn same_span(a: &Constraints, b: &Constraints) -> bool {
    let ra = rational_rank(a);
    let rb = rational_rank(b);
    let mut both = a.clone();
    both.extend(b.iter().cloned());
    ra == rb && rational_rank(&both) == ra
}

fn qvec(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

/// A charge in the cell satisfying the constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Values on the simples of the heart, in heart order.
    pub simple_values: Vec<Complex>,
    /// Values on the vertex simples `e_i`.
    pub vertex_values: Vec<Complex>,
}

/// A nonnegative combination of constraint functionals, written in the
/// heart's simple basis, supported where it is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    /// Coefficients on the constraint functionals.
    pub multipliers: Vec<Rational>,
    /// The resulting functional on simple values; nonnegative.
    pub functional: Vec<Rational>,
}

impl Serialize for Combination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Combination", 2)?;
        st.serialize_field("multipliers", &qvec(&self.multipliers))?;
        st.serialize_field("functional", &qvec(&self.functional))?;
        st.end()
    }
}

/// Proof that no charge in the cell satisfies the constraints.
///
/// Each `forced_real[k] = (j, g)` shows that the imaginary part of simple
/// `j` must vanish: `g` kills every admissible charge, is nonnegative and
/// positive at `j`. Then `final_step` is nonnegative, supported on those
/// simples and nonzero, so their real parts cannot all be positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub forced_real: Vec<(usize, Combination)>,
    pub final_step: Combination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible(Witness),
    Infeasible(Certificate),
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }
}

/// Constraint functionals re-expressed on the simple values of `h`:
/// `l = B^{-T} c` where the rows of `B` are the simples' classes.
fn constraints_on_simples(cat: &Catalog, h: &Heart, constraints: &Constraints) -> Result<(Matrix, Matrix)> {
    let classes = h.k_classes(cat);
    let n = classes.len();
    let b = Matrix::from_fn(n, n, |r, c| rat(classes[r][c]));
    let b_inv = b
        .inverse()
        .ok_or_else(|| Error::Invariant(format!("classes of {} are not a basis", h.label(cat))))?;
    let bt_inv = b_inv.transpose();
    let rows: Vec<Vec<Rational>> = constraints
        .iter()
        .map(|c| {
            if c.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "constraint of length {} on a rank {n} lattice",
                    c.len()
                )));
            }
            Ok(bt_inv.mul_vec(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>()))
        })
        .collect::<Result<_>>()?;
    let l = Matrix::from_fn(rows.len(), n, |r, c| rows[r][c].clone());
    Ok((l, b_inv))
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| if k == j { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Multipliers `u` such that `g = L^T u` satisfies `g - rhs >= 0` on
/// `support` and `g = rhs` elsewhere; with `sum_one` the slack on `support`
/// also sums to one.
fn combination(l: &Matrix, support: &[usize], rhs: Vec<Rational>, sum_one: bool) -> Option<Combination> {
    let (m, n) = (l.rows(), l.cols());
    // unknowns: u (free, m), s (nonneg, |support|)
    let k = support.len();
    let rows = n + usize::from(sum_one);
    let mut a = Matrix::zeros(rows, m + k);
    for c in 0..n {
        for r in 0..m {
            a[(c, r)] = l[(r, c)].clone();
        }
    }
    for (t, &j) in support.iter().enumerate() {
        a[(j, m + t)] = -Rational::one();
        if sum_one {
            a[(n, m + t)] = Rational::one();
        }
    }
    let mut b = rhs;
    if sum_one {
        b.push(Rational::one());
    }
    let mut nonneg = vec![false; m];
    nonneg.extend(std::iter::repeat_n(true, k));
    let x = lp::feasible(&a, &b, &nonneg)?;
    let multipliers = x[..m].to_vec();
    let functional = l.transpose().mul_vec(&multipliers);
    Some(Combination {
        multipliers,
        functional,
    })
}

/// Decides whether some charge in the cell of `h` kills every constraint.
pub fn decide_cell(cat: &Catalog, h: &Heart, constraints: &Constraints) -> Result<Verdict> {
    let n = h.len();
    let (l, b_inv) = constraints_on_simples(cat, h, constraints)?;
    let m = l.rows();
    let zeros = vec![Rational::zero(); m];

    // step 1: which simples can carry positive imaginary part
    let mut y = vec![Rational::zero(); n];
    let mut forced_real = Vec::new();
    for j in 0..n {
        let mut a = Matrix::zeros(m + 1, n);
        a.set_block(0, 0, &l);
        a[(m, j)] = Rational::one();
        let mut b = zeros.clone();
        b.push(Rational::one());
        match lp::feasible(&a, &b, &vec![true; n]) {
            Some(sol) => {
                for (acc, v) in y.iter_mut().zip(sol) {
                    *acc += v;
                }
            }
            None => {
                // g = L^T u with g - s = e_j, s >= 0 on every coordinate
                let all: Vec<usize> = (0..n).collect();
                let g = combination(&l, &all, unit(n, j), false)
                    .ok_or_else(|| Error::Invariant("no certificate for a forced real value".to_string()))?;
                forced_real.push((j, g));
            }
        }
    }
    let real_only: Vec<usize> = forced_real.iter().map(|(j, _)| *j).collect();

    // step 2: real parts positive on the forced-real simples
    let k = real_only.len();
    let mut a = Matrix::zeros(m + k, n + k);
    a.set_block(0, 0, &l);
    let mut b = zeros.clone();
    for (t, &j) in real_only.iter().enumerate() {
        a[(m + t, j)] = Rational::one();
        a[(m + t, n + t)] = -Rational::one();
        b.push(Rational::one());
    }
    let mut nonneg = vec![false; n];
    nonneg.extend(std::iter::repeat_n(true, k));
    match lp::feasible(&a, &b, &nonneg) {
        Some(sol) => {
            let x = &sol[..n];
            let simple_values: Vec<Complex> = (0..n).map(|j| Complex::new(x[j].clone(), y[j].clone())).collect();
            let re = b_inv.mul_vec(x);
            let im = b_inv.mul_vec(&y);
            let vertex_values = re.into_iter().zip(im).map(|(r, i)| Complex::new(r, i)).collect();
            let w = Witness {
                simple_values,
                vertex_values,
            };
            verify_witness(cat, h, constraints, &w)?;
            Ok(Verdict::Feasible(w))
        }
        None => {
            let final_step = combination(&l, &real_only, vec![Rational::zero(); n], true)
                .ok_or_else(|| Error::Invariant("no certificate for infeasible real parts".to_string()))?;
            let cert = Certificate {
                forced_real,
                final_step,
            };
            if !verify_certificate(&l, &cert) {
                return Err(Error::Invariant("certificate failed verification".to_string()));
            }
            Ok(Verdict::Infeasible(cert))
        }
    }
}

/// Checks a witness exactly: every simple value in the half plane, values
/// consistent with the heart's classes, and every constraint killed.
pub fn verify_witness(cat: &Catalog, h: &Heart, constraints: &Constraints, w: &Witness) -> Result<()> {
    let classes = h.k_classes(cat);
    let bad = |m: String| Err(Error::Invariant(format!("witness rejected: {m}")));
    for (j, cls) in classes.iter().enumerate() {
        let v = cls
            .iter()
            .zip(&w.vertex_values)
            .fold(Complex::zero(), |acc, (&k, z)| acc.add(&z.scale(&rat(k))));
        if v != w.simple_values[j] {
            return bad(format!("value on simple {j} disagrees with its class"));
        }
        if !v.in_upper_half_plane() {
            return bad(format!("value {v} on simple {j} is outside the half plane"));
        }
    }
    for c in constraints {
        let v = c
            .iter()
            .zip(&w.vertex_values)
            .fold(Complex::zero(), |acc, (&k, z)| acc.add(&z.scale(&rat(k))));
        if v != Complex::zero() {
            return bad(format!("constraint {c:?} evaluates to {v}"));
        }
    }
    Ok(())
}

/// Checks a certificate against the constraint functionals on simples.
pub fn verify_certificate(l: &Matrix, cert: &Certificate) -> bool {
    let lt = l.transpose();
    let ok =
        |g: &Combination| lt.mul_vec(&g.multipliers) == g.functional && g.functional.iter().all(|x| !x.is_negative());
    let forced: Vec<usize> = cert.forced_real.iter().map(|(j, _)| *j).collect();
    cert.forced_real
        .iter()
        .all(|(j, g)| ok(g) && g.functional[*j].is_positive())
        && ok(&cert.final_step)
        && cert
            .final_step
            .functional
            .iter()
            .enumerate()
            .all(|(k, x)| x.is_zero() || forced.contains(&k))
        && cert.final_step.functional.iter().any(|x| x.is_positive())
}

/// Per-heart result of checking the numerical and F-invariance constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellClassification {
    pub heart: usize,
    pub label: String,
    pub f_stable: bool,
    pub numerical: Verdict,
    pub f_invariant: Verdict,
    /// For F-stable hearts: whether both constraint sets cut out the same
    /// slice of the cell. `None` for hearts that are not F-stable.
    pub slices_equal: Option<bool>,
}

impl CellClassification {
    pub fn numerical_feasible(&self) -> bool {
        self.numerical.is_feasible()
    }
}

pub fn classify_cell(
    cat: &Catalog,
    heart_id: usize,
    h: &Heart,
    f_stable: bool,
    numerical: &Constraints,
    f_invariant: &Constraints,
) -> Result<CellClassification> {
    let nv = decide_cell(cat, h, numerical)?;
    let fv = decide_cell(cat, h, f_invariant)?;
    let slices_equal = f_stable.then(|| nv.is_feasible() && fv.is_feasible() && same_span(numerical, f_invariant));
    Ok(CellClassification {
        heart: heart_id,
        label: h.label(cat),
        f_stable,
        numerical: nv,
        f_invariant: fv,
        slices_equal,
    })
}

/// Classifies every node of a marked graph, on `jobs` worker threads.
pub fn classify_graph(
    cat: &Catalog,
    g: &ExchangeGraph,
    s: &Automorphism,
    jobs: usize,
) -> Result<Vec<CellClassification>> {
    let q = cat.quiver();
    let numerical = numerical_constraints(q);
    let f_inv = f_constraints(q, s);
    let marks = g
        .marks()
        .ok_or_else(|| Error::TiltPrecondition("exchange graph has no F-stability marks".to_string()))?;
    let run = || {
        g.nodes()
            .par_iter()
            .enumerate()
            .map(|(i, h)| classify_cell(cat, i, h, marks[i], &numerical, &f_inv))
            .collect::<Result<Vec<_>>>()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    pool.install(run)
}

/// Orbit sums `Z~(e_I) = sum over i in I of Z(e_i)` of an F-invariant charge
/// given on vertex classes.
pub fn fold_charge(q: &Quiver, s: &Automorphism, z: &[Complex]) -> Result<Vec<Complex>> {
    if z.len() != q.vertex_count() {
        return Err(Error::ShapeMismatch(format!(
            "charge has {} values for {} vertices",
            z.len(),
            q.vertex_count()
        )));
    }
    if (0..z.len()).any(|i| z[s.vertex_image(i)] != z[i]) {
        return Err(Error::NotInvariant);
    }
    Ok(s.vertex_orbits()
        .iter()
        .map(|o| o.iter().fold(Complex::zero(), |acc, &v| acc.add(&z[v])))
        .collect())
}

/// Inverse of [`fold_charge`]: each orbit value is split evenly.
pub fn unfold_charge(q: &Quiver, s: &Automorphism, folded: &[Complex]) -> Result<Vec<Complex>> {
    let orbits = s.vertex_orbits();
    if folded.len() != orbits.len() {
        return Err(Error::ShapeMismatch(format!(
            "folded charge has {} values for {} orbits",
            folded.len(),
            orbits.len()
        )));
    }
    let mut z = vec![Complex::zero(); q.vertex_count()];
    for (o, v) in orbits.iter().zip(folded) {
        let share = v.scale(&Rational::new(1.into(), (o.len() as i64).into()));
        for &i in o {
            z[i] = share.clone();
        }
    }
    Ok(z)
}
