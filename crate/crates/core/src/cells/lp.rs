//! Exact feasibility of `A x = b` with sign constraints, by the phase-one
//! simplex method over the rationals with Bland's anti-cycling rule.

use num_traits::{Signed, Zero};

use crate::linalg::{Matrix, Rational};

/// Some `x` with `A x = b` and `x_j >= 0` wherever `nonneg[j]`, or `None`.
pub fn feasible(a: &Matrix, b: &[Rational], nonneg: &[bool]) -> Option<Vec<Rational>> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m);
    assert_eq!(nonneg.len(), n);

    // free variables are split as x = x+ - x-
    let mut cols: Vec<(usize, bool)> = Vec::new();
    for (j, &nn) in nonneg.iter().enumerate() {
        cols.push((j, true));
        if !nn {
            cols.push((j, false));
        }
    }
    let nv = cols.len();
    let width = nv + m + 1;
    let rhs = nv + m;

    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row = vec![Rational::zero(); width];
            for (k, &(j, plus)) in cols.iter().enumerate() {
                let mut v = a[(i, j)].clone();
                if !plus {
                    v = -v;
                }
                row[k] = if flip { -v } else { v };
            }
            row[nv + i] = Rational::from_integer(1.into());
            row[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nv..nv + m).collect();
    let mut cost = vec![Rational::zero(); width];
    for row in &t {
        for k in 0..nv {
            cost[k] -= &row[k];
        }
        cost[rhs] -= &row[rhs];
    }

    loop {
        let Some(enter) = (0..nv + m).find(|&k| cost[k].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (p, _) = leave.expect("phase-one objective is bounded");
        let pivot = t[p][enter].clone();
        for v in t[p].iter_mut() {
            *v /= &pivot;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, pv) in cost.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        basis[p] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut split = vec![Rational::zero(); nv];
    for (i, &k) in basis.iter().enumerate() {
        if k < nv {
            split[k] = t[i][rhs].clone();
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (k, &(j, plus)) in cols.iter().enumerate() {
        if plus {
            x[j] += &split[k];
        } else {
            x[j] -= &split[k];
        }
    }
    Some(x)
}
