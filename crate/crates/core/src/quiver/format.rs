//! Reader for quiver spec files.
//!
//! A spec is a TOML document:
//!
//! ```toml
//! [quiver]
//! vertices = [1, 2, 3]                  # integers or strings
//! arrows = ["a: 2 -> 1", "b: 2 -> 3"]   # "id: tail -> head"; "id:" is optional
//!
//! [automorphism]                        # optional
//! vertex_perm = "(1 3)"                 # cycle notation over vertex ids
//! arrow_perm = "(a b)"                  # optional; inferred when unique
//! ```
//!
//! Unknown keys are rejected. Arrows without an id are named `a1, a2, ...`
//! by position.

use serde::Deserialize;
use toml::Spanned;

use super::{Automorphism, Quiver};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuiverSpec {
    pub quiver: Quiver,
    pub automorphism: Option<Automorphism>,
}

impl QuiverSpec {
    /// The declared automorphism, or the identity when none was given.
    pub fn automorphism_or_identity(&self) -> Automorphism {
        self.automorphism
            .clone()
            .unwrap_or_else(|| Automorphism::identity(&self.quiver))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    quiver: RawQuiver,
    automorphism: Option<RawAutomorphism>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuiver {
    vertices: Spanned<Vec<VertexId>>,
    #[serde(default)]
    arrows: Vec<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VertexId {
    Int(i64),
    Str(String),
}

impl VertexId {
    fn into_string(self) -> String {
        match self {
            VertexId::Int(i) => i.to_string(),
            VertexId::Str(s) => s,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAutomorphism {
    vertex_perm: Spanned<String>,
    arrow_perm: Option<Spanned<String>>,
}

/// Line and column (both 1-based) of byte offset `pos` in `text`.
fn line_col(text: &str, pos: usize) -> (usize, usize) {
    let before = &text[..pos.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn at(text: &str, pos: usize, message: impl Into<String>) -> Error {
    let (line, column) = line_col(text, pos);
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Attaches a location to errors that lack one; other errors pass through.
fn locate(text: &str, pos: usize, e: Error) -> Error {
    match e {
        Error::Parse { line: 0, message, .. } => at(text, pos, message),
        other => other,
    }
}

fn parse_arrow(s: &str) -> Option<(Option<String>, String, String)> {
    let (id, body) = match s.split_once(':') {
        Some((id, body)) => (Some(id.trim().to_string()), body),
        None => (None, s),
    };
    let (t, h) = body.split_once("->")?;
    let (t, h) = (t.trim(), h.trim());
    let valid = |x: &str| !x.is_empty() && !x.contains(char::is_whitespace);
    if !valid(t) || !valid(h) || id.as_deref().is_some_and(|i| !valid(i)) {
        return None;
    }
    Some((id, t.to_string(), h.to_string()))
}

pub fn parse_quiver(text: &str) -> Result<QuiverSpec> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let pos = e.span().map_or(0, |s| s.start);
        at(text, pos, e.message().to_string())
    })?;

    let vertices_pos = raw.quiver.vertices.span().start;
    let vertices: Vec<String> = raw
        .quiver
        .vertices
        .into_inner()
        .into_iter()
        .map(VertexId::into_string)
        .collect();
    let mut arrows = Vec::new();
    for (k, a) in raw.quiver.arrows.iter().enumerate() {
        let Some((id, t, h)) = parse_arrow(a.get_ref()) else {
            return Err(at(
                text,
                a.span().start,
                format!("expected \"id: tail -> head\", found {:?}", a.get_ref()),
            ));
        };
        let id = id.unwrap_or_else(|| format!("a{}", k + 1));
        for v in [&t, &h] {
            if !vertices.contains(v) {
                return Err(at(
                    text,
                    a.span().start,
                    format!("arrow {id} uses undeclared vertex {v}"),
                ));
            }
        }
        arrows.push((id, t, h));
    }
    let quiver = Quiver::new(vertices, arrows).map_err(|e| match e {
        Error::InvalidQuiver(m) => at(text, vertices_pos, m),
        other => other,
    })?;

    let automorphism = match raw.automorphism {
        None => None,
        Some(a) => {
            let vpos = a.vertex_perm.span().start;
            let apos = a.arrow_perm.as_ref().map_or(vpos, |p| p.span().start);
            Some(
                Automorphism::from_cycles(
                    &quiver,
                    a.vertex_perm.get_ref(),
                    a.arrow_perm.as_ref().map(|p| p.get_ref().as_str()),
                )
                .map_err(|e| locate(text, if a.arrow_perm.is_some() { apos } else { vpos }, e))?,
            )
        }
    };
    Ok(QuiverSpec { quiver, automorphism })
}
