use super::coxeter::{CoxeterSystem, Element};
use super::word::ArtinWord;

/// `Δ^k · s_1 ⋯ s_r` with each `s_i` a simple element (the positive lift of
/// a Coxeter group element), every adjacent pair left-weighted, no `s_i`
/// equal to `Δ` and none trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub delta_power: i64,
    pub simples: Vec<Element>,
}

impl GarsideNormalForm {
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.simples.is_empty()
    }

    /// `Δ^k · [1 3 2].[2]`, each simple written as its least reduced word.
    pub fn render(&self, c: &CoxeterSystem) -> String {
        let mut out = format!("Δ^{}", self.delta_power);
        if !self.simples.is_empty() {
            let parts: Vec<String> = self
                .simples
                .iter()
                .map(|s| {
                    let w: Vec<&str> = c
                        .reduced_word(s)
                        .into_iter()
                        .map(|g| c.generator_labels()[g].as_str())
                        .collect();
                    format!("[{}]", w.join(" "))
                })
                .collect();
            out.push_str(" · ");
            out.push_str(&parts.join("."));
        }
        out
    }
}

/// Moves generators from the front of `b` onto `a` while the product stays
/// simple. Afterwards every left descent of `b` is a right descent of `a`.
fn left_weight(c: &CoxeterSystem, a: &mut Element, b: &mut Element) -> bool {
    let mut changed = false;
    while let Some(s) = (0..c.rank()).find(|&s| b.has_left_descent(s) && !a.has_right_descent(s)) {
        let g = c.generator(s);
        *a = a.mul(g);
        *b = g.mul(b);
        changed = true;
    }
    changed
}

/// Left-greedy normal form. Two words represent the same element of the
/// Artin group exactly when their forms are equal.
pub fn normal_form(c: &CoxeterSystem, w: &ArtinWord) -> GarsideNormalForm {
    let mut k: i64 = 0;
    let mut factors: Vec<Element> = Vec::new();
    for &(g, e) in w.letters() {
        if e > 0 {
            factors.push(c.generator(g).clone());
        } else {
            // x Δ^-1 = Δ^-1 (Δ x Δ^-1), and s^-1 = Δ^-1 · (w0 s)
            k -= 1;
            for f in factors.iter_mut() {
                *f = c.conjugate_by_longest(f);
            }
            factors.push(c.longest().mul(c.generator(g)));
        }
    }

    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (head, tail) = factors.split_at_mut(i + 1);
            changed |= left_weight(c, &mut head[i], &mut tail[0]);
        }
    }

    let leading = factors.iter().take_while(|f| *f == c.longest()).count();
    k += leading as i64;
    let simples: Vec<Element> = factors[leading..]
        .iter()
        .filter(|f| !f.is_identity())
        .cloned()
        .collect();
    GarsideNormalForm {
        delta_power: k,
        simples,
    }
}

/// Whether two words are equal in the Artin group.
pub fn words_equal(c: &CoxeterSystem, a: &ArtinWord, b: &ArtinWord) -> bool {
    normal_form(c, a) == normal_form(c, b)
}
