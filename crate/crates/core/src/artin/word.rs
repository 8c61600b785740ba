use super::coxeter::CoxeterSystem;
use crate::error::{Error, Result};

/// A word in the Artin generators and their inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    letters: Vec<(usize, i8)>,
}

impl ArtinWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        assert!(letters.iter().all(|&(_, e)| e == 1 || e == -1), "exponents are ±1");
        ArtinWord { letters }
    }

    pub fn empty() -> Self {
        ArtinWord::default()
    }

    pub fn generator(i: usize) -> Self {
        ArtinWord::new(vec![(i, 1)])
    }

    /// Positive word in the given generators.
    pub fn positive(gens: &[usize]) -> Self {
        ArtinWord::new(gens.iter().map(|&g| (g, 1)).collect())
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        ArtinWord::new(self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn then(&self, other: &ArtinWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord { letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        ArtinWord {
            letters: self.letters.repeat(k),
        }
    }

    /// Exponent sum; an invariant of the Artin group element.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| i64::from(e)).sum()
    }

    /// Parses space-separated generator labels, each optionally raised
    /// to a nonzero integer power: `"1 3 2 1^-1 2^2"`.
    pub fn parse(c: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut column = 1;
        for token in text.split(' ') {
            if token.is_empty() {
                column += 1;
                continue;
            }
            let err = |message: String| Error::Parse {
                line: 1,
                column,
                message,
            };
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.parse().map_err(|_| err(format!("bad exponent in `{token}`")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            if exp == 0 {
                return Err(err(format!("zero exponent in `{token}`")));
            }
            let g = c
                .generator_index(name)
                .ok_or_else(|| err(format!("unknown generator `{name}`")))?;
            let sign = if exp > 0 { 1 } else { -1 };
            letters.extend(std::iter::repeat_n((g, sign), exp.unsigned_abs() as usize));
            column += token.chars().count() + 1;
        }
        Ok(ArtinWord { letters })
    }

    pub fn render(&self, c: &CoxeterSystem) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                let l = &c.generator_labels()[g];
                if e < 0 {
                    format!("{l}^-1")
                } else {
                    l.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
