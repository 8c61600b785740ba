//! Integer matrices: bilinear forms, Smith normal form and integer kernels.

use serde::Serialize;

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

/// A square integer matrix indexed by a labelled vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerBilinearForm {
    pub labels: Vec<String>,
    pub matrix: IntMatrix,
}

impl IntegerBilinearForm {
    pub fn new(labels: Vec<String>, matrix: IntMatrix) -> Result<Self> {
        let n = labels.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "bilinear form on {n} labels needs a {n}x{n} matrix"
            )));
        }
        Ok(IntegerBilinearForm { labels, matrix })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn transpose(&self) -> Self {
        IntegerBilinearForm {
            labels: self.labels.clone(),
            matrix: transpose(&self.matrix),
        }
    }

    /// `x^T M y`.
    pub fn eval(&self, x: &[i64], y: &[i64]) -> i64 {
        let my = mat_vec(&self.matrix, y);
        dot(x, &my)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == -self.matrix[j][i]))
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|c| m.iter().map(|row| row[c]).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "integer matrix product shape mismatch");
            (0..cols).map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum()).collect()
        })
        .collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn vec_mat(v: &[i64], m: &IntMatrix) -> Vec<i64> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| v.iter().zip(m).map(|(x, row)| x * row[c]).sum())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// `D = U * A * V` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);

    let row_op = |d: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, q: i64| {
        // row[dst] -= q * row[src]
        for c in 0..d[dst].len() {
            d[dst][c] -= q * d[src][c];
        }
        for c in 0..u[dst].len() {
            u[dst][c] -= q * u[src][c];
        }
    };
    let col_op = |d: &mut IntMatrix, v: &mut IntMatrix, dst: usize, src: usize, q: i64| {
        for row in d.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let pivot = (t..m)
            .flat_map(|r| (t..n).map(move |c| (r, c)))
            .filter(|&(r, c)| d[r][c] != 0)
            .min_by_key(|&(r, c)| (d[r][c].abs(), r, c));
        let Some((pr, pc)) = pivot else { break };
        d.swap(t, pr);
        u.swap(t, pr);
        for row in d.iter_mut() {
            row.swap(t, pc);
        }
        for row in v.iter_mut() {
            row.swap(t, pc);
        }

        loop {
            let mut dirty = false;
            for r in t + 1..m {
                if d[r][t] != 0 {
                    let q = d[r][t].div_euclid(d[t][t]);
                    row_op(&mut d, &mut u, r, t, q);
                    if d[r][t] != 0 {
                        d.swap(t, r);
                        u.swap(t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..n {
                if d[t][c] != 0 {
                    let q = d[t][c].div_euclid(d[t][t]);
                    col_op(&mut d, &mut v, c, t, q);
                    if d[t][c] != 0 {
                        for row in d.iter_mut() {
                            row.swap(t, c);
                        }
                        for row in v.iter_mut() {
                            row.swap(t, c);
                        }
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (t + 1..m).find(|&r| (t + 1..n).any(|c| d[r][c] % d[t][t] != 0));
            match offending {
                Some(r) => row_op(&mut d, &mut u, t, r, -1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for c in 0..n {
                d[t][c] = -d[t][c];
            }
            for c in 0..m {
                u[t][c] = -u[t][c];
            }
        }
        t += 1;
    }

    let diagonal: Vec<i64> = (0..m.min(n)).map(|i| d[i][i]).collect();
    let rank = diagonal.iter().filter(|&&x| x != 0).count();
    SmithForm {
        diagonal,
        left: u,
        right: v,
        rank,
    }
}

/// Hermite normal form of the row lattice spanned by `rows` (zero rows dropped).
pub fn hermite_rows(rows: &[Vec<i64>]) -> IntMatrix {
    let mut h: IntMatrix = rows.to_vec();
    let n = h.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == h.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..h.len()).filter(|&i| h[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            h.swap(r, p);
            let mut done = true;
            for i in r + 1..h.len() {
                if h[i][c] != 0 {
                    let q = h[i][c].div_euclid(h[r][c]);
                    for k in 0..n {
                        h[i][k] -= q * h[r][k];
                    }
                    if h[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if (r..h.len()).all(|i| h[i][c] == 0) {
            continue;
        }
        if h[r][c] < 0 {
            for k in 0..n {
                h[r][k] = -h[r][k];
            }
        }
        for i in 0..r {
            let q = h[i][c].div_euclid(h[r][c]);
            if q != 0 {
                for k in 0..n {
                    h[i][k] -= q * h[r][k];
                }
            }
        }
        r += 1;
    }
    h.truncate(r);
    h
}

/// Lattice basis of `{x in Z^n : x^T M = 0}`, in Hermite normal form.
///
/// Every returned vector is primitive and the lattice is saturated, so it is
/// the full integer left kernel rather than a finite-index sublattice.
pub fn integer_kernel(form: &IntegerBilinearForm) -> Vec<Vec<i64>> {
    let a = transpose(&form.matrix);
    let n = form.dim();
    if n == 0 {
        return Vec::new();
    }
    let snf = smith_normal_form(&a);
    let basis: Vec<Vec<i64>> = (snf.rank..n)
        .map(|k| (0..n).map(|r| snf.right[r][k]).collect())
        .collect();
    hermite_rows(&basis)
}

/// Whether `v` lies in the rational span of `rows`.
pub fn in_rational_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    use crate::linalg::{rat, Matrix};
    let n = v.len();
    let base = Matrix::from_fn(rows.len(), n, |r, c| rat(rows[r][c]));
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    let with = Matrix::from_fn(ext.len(), n, |r, c| rat(ext[r][c]));
    base.rank() == with.rank()
}

pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    use crate::linalg::{rat, Matrix};
    let n = rows.first().map_or(0, Vec::len);
    Matrix::from_fn(rows.len(), n, |r, c| rat(rows[r][c])).rank()
}
