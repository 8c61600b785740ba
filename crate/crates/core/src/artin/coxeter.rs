use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::{identity, mat_mul, IntMatrix};
use crate::quiver::Quiver;

/// An element of a crystallographic Coxeter group, acting on the root
/// lattice. Column `j` of `mat` is the image of the simple root `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    mat: IntMatrix,
    inv: IntMatrix,
}

impl Element {
    fn new(mat: IntMatrix, inv: IntMatrix) -> Self {
        Element { mat, inv }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn mul(&self, other: &Element) -> Element {
        Element::new(mat_mul(&self.mat, &other.mat), mat_mul(&other.inv, &self.inv))
    }

    pub fn inverse(&self) -> Element {
        Element::new(self.inv.clone(), self.mat.clone())
    }

    fn sends_negative(m: &IntMatrix, s: usize) -> bool {
        m.iter().any(|row| row[s] < 0)
    }

    /// `l(w s) < l(w)`: `w` sends the simple root `s` to a negative root.
    pub fn has_right_descent(&self, s: usize) -> bool {
        Self::sends_negative(&self.mat, s)
    }

    /// `l(s w) < l(w)`.
    pub fn has_left_descent(&self, s: usize) -> bool {
        Self::sends_negative(&self.inv, s)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.mat.len()).filter(|&s| self.has_right_descent(s)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.mat.len()).filter(|&s| self.has_left_descent(s)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity(self.mat.len())
    }
}

/// A finite Coxeter group with crystallographic Coxeter matrix, realised on
/// the root lattice of a Cartan matrix.
#[derive(Debug)]
pub struct CoxeterSystem {
    label: String,
    generator_labels: Vec<String>,
    coxeter: Vec<Vec<u32>>,
    gens: Vec<Element>,
    longest: Element,
    longest_length: usize,
    diagram_involution: Vec<usize>,
    elements: OnceLock<Vec<Element>>,
}

fn cartan_entries(m: u32) -> Option<(i64, i64)> {
    match m {
        2 => Some((0, 0)),
        3 => Some((-1, -1)),
        4 => Some((-1, -2)),
        6 => Some((-1, -3)),
        _ => None,
    }
}

impl CoxeterSystem {
    /// Builds the system from a generalized Cartan matrix. Fails unless the
    /// group is finite.
    pub fn from_cartan(label: &str, generator_labels: Vec<String>, cartan: &IntMatrix) -> Result<Self> {
        let n = cartan.len();
        if generator_labels.len() != n || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "Cartan matrix of size {n} with {} generator labels",
                generator_labels.len()
            )));
        }
        let mut coxeter = vec![vec![1; n]; n];
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::Unsupported(format!(
                    "Cartan diagonal entry {} at {i}",
                    cartan[i][i]
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                coxeter[i][j] = match cartan[i][j] * cartan[j][i] {
                    0 if cartan[i][j] == 0 && cartan[j][i] == 0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    p => {
                        return Err(Error::Unsupported(format!(
                            "Cartan entries {} and {} at ({i}, {j}) give product {p}",
                            cartan[i][j], cartan[j][i]
                        )))
                    }
                };
            }
        }
        // s_i(a_j) = a_j - a_ij a_i; each generator is an involution
        let gens: Vec<Element> = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for j in 0..n {
                    m[i][j] -= cartan[i][j];
                }
                Element::new(m.clone(), m)
            })
            .collect();

        // greedy climb to the longest element; only finite groups have one
        let bound = 4 * n * n + 8;
        let mut w = Element::new(identity(n), identity(n));
        let mut length = 0;
        while let Some(s) = (0..n).find(|&s| !w.has_right_descent(s)) {
            w = w.mul(&gens[s]);
            length += 1;
            if length > bound * n {
                return Err(Error::Unsupported(format!("Coxeter group of {label} is infinite")));
            }
        }
        let diagram_involution = (0..n)
            .map(|i| {
                let c = w.mul(&gens[i]).mul(&w);
                gens.iter()
                    .position(|g| *g == c)
                    .ok_or_else(|| Error::Invariant("longest element does not normalise generators".to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(CoxeterSystem {
            label: label.to_string(),
            generator_labels,
            coxeter,
            gens,
            longest: w,
            longest_length: length,
            diagram_involution,
            elements: OnceLock::new(),
        })
    }

    /// Crystallographic realisation of a Coxeter matrix with entries in
    /// `{2, 3, 4, 6}`. Generators are labelled `1..=n`.
    pub fn from_coxeter_matrix(label: &str, m: &[Vec<u32>]) -> Result<Self> {
        let n = m.len();
        let mut cartan = identity(n);
        for row in cartan.iter_mut() {
            for x in row.iter_mut() {
                *x *= 2;
            }
        }
        for i in 0..n {
            if m[i].len() != n || m[i][i] != 1 {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} of the Coxeter matrix is malformed"
                )));
            }
            for j in i + 1..n {
                if m[i][j] != m[j][i] {
                    return Err(Error::ShapeMismatch(format!(
                        "Coxeter matrix is not symmetric at ({i}, {j})"
                    )));
                }
                let (a, b) = cartan_entries(m[i][j])
                    .ok_or_else(|| Error::Unsupported(format!("Coxeter entry {} is not crystallographic", m[i][j])))?;
                cartan[i][j] = a;
                cartan[j][i] = b;
            }
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::from_cartan(label, labels, &cartan)
    }

    /// The Weyl group of the underlying graph of a Dynkin quiver, with one
    /// generator per vertex.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        let label = q
            .dynkin_type()?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" × ");
        let n = q.vertex_count();
        let cartan: IntMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else {
                            -((q.arrows_between(i, j) + q.arrows_between(j, i)) as i64)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_cartan(&label, q.vertices().to_vec(), &cartan)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.generator_labels
    }

    pub fn generator_index(&self, label: &str) -> Option<usize> {
        self.generator_labels.iter().position(|l| l == label)
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn generator(&self, i: usize) -> &Element {
        &self.gens[i]
    }

    pub fn identity(&self) -> Element {
        let n = self.rank();
        Element::new(identity(n), identity(n))
    }

    pub fn longest(&self) -> &Element {
        &self.longest
    }

    /// Length of the longest element, the number of positive roots.
    pub fn longest_length(&self) -> usize {
        self.longest_length
    }

    /// `i -> j` where `w0 s_i w0 = s_j`.
    pub fn diagram_involution(&self) -> &[usize] {
        &self.diagram_involution
    }

    pub fn conjugate_by_longest(&self, w: &Element) -> Element {
        self.longest.mul(w).mul(&self.longest)
    }

    /// Lexicographically least reduced word, as generator indices.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut w = w.clone();
        let mut out = Vec::new();
        while let Some(s) = (0..self.rank()).find(|&s| w.has_left_descent(s)) {
            w = self.gens[s].mul(&w);
            out.push(s);
        }
        out
    }

    pub fn length(&self, w: &Element) -> usize {
        self.reduced_word(w).len()
    }

    /// Every group element, in breadth-first order by length. Computed on
    /// first use and cached.
    pub fn elements(&self) -> &[Element] {
        self.elements.get_or_init(|| {
            let e = self.identity();
            let mut seen = HashSet::from([e.clone()]);
            let mut order = vec![e.clone()];
            let mut queue = VecDeque::from([e]);
            while let Some(w) = queue.pop_front() {
                for g in &self.gens {
                    let x = w.mul(g);
                    if seen.insert(x.clone()) {
                        order.push(x.clone());
                        queue.push_back(x);
                    }
                }
            }
            order
        })
    }
}
