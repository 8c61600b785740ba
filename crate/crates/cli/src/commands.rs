use std::fmt::Write;

use anyhow::Result;
use foldstab_core::artin::{
    check_relation, check_twist_action, orbit_embedding, orbit_generators_commute, verify_folded_relation, ArtinWord,
    CoxeterSystem, RelationCheck,
};
use foldstab_core::cells::{
    classify_graph, f_constraints, numerical_constraints, same_span, CellClassification, Verdict,
};
use foldstab_core::quiver::{fold as fold_quiver, Automorphism, Quiver, QuiverSpec};
use foldstab_core::rep::Catalog;
use foldstab_core::tilt::{
    build_interval_eg, eg_dot, eg_json, folded_dot, folded_eg, ExchangeGraph, FoldedGraph, Heart,
};
use serde_json::{json, Value};

use crate::{Format, InputError};

fn unsupported(command: &str, f: Format) -> anyhow::Error {
    InputError(format!("{command} has no {f:?} output")).into()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn dynkin_label(q: &Quiver) -> Result<String> {
    Ok(q.dynkin_type()?
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" × "))
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn count(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn fold_value(spec: &QuiverSpec) -> Result<Value> {
    let q = &spec.quiver;
    let s = spec.automorphism_or_identity();
    let vq = fold_quiver(q, &s)?;
    let names = vq.orbit_names(q);
    Ok(json!({
        "quiver": {
            "type": dynkin_label(q)?,
            "vertices": q.vertices(),
            "arrows": q.arrows().iter().map(|a| json!({
                "id": a.id,
                "tail": q.vertex_id(a.tail),
                "head": q.vertex_id(a.head),
            })).collect::<Vec<_>>(),
        },
        "automorphism": s.cycle_notation(q),
        "folded_type": vq.folded_type()?.to_string(),
        "orbits": vq.orbit_vertices.iter().zip(&names).map(|(o, n)| json!({
            "name": n,
            "label": o.label,
            "members": o.members.iter().map(|&v| q.vertex_id(v)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "orbit_arrows": vq.orbit_arrows.iter().map(|a| json!({
            "tail": names[a.tail],
            "head": names[a.head],
            "size": a.size,
            "members": a.members.iter().map(|&k| q.arrows()[k].id.clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "cartan_matrix": vq.cartan_matrix(),
        "table": vq.render_table(q),
    }))
}

fn fold_table(spec: &QuiverSpec) -> Result<String> {
    let q = &spec.quiver;
    let s = spec.automorphism_or_identity();
    let vq = fold_quiver(q, &s)?;
    let mut out = String::new();
    writeln!(
        out,
        "quiver: {} ({}, {})",
        dynkin_label(q)?,
        count(q.vertex_count(), "vertex", "vertices"),
        count(q.arrow_count(), "arrow", "arrows")
    )?;
    writeln!(out, "automorphism: {}", s.cycle_notation(q))?;
    writeln!(out, "folded type: {}", vq.folded_type()?)?;
    writeln!(out, "{}", vq.render_table(q))?;
    Ok(out)
}

pub fn fold(spec: &QuiverSpec, f: Format) -> Result<String> {
    match f {
        Format::Table => fold_table(spec),
        Format::Json => {
            let mut v = fold_value(spec)?;
            v["schema"] = json!(1);
            Ok(pretty(&v))
        }
        Format::Dot => Err(unsupported("fold", f)),
    }
}

struct Graphs {
    s: Automorphism,
    cat: Catalog,
    g: ExchangeGraph,
}

impl Graphs {
    fn build(spec: &QuiverSpec) -> Result<Self> {
        let s = spec.automorphism_or_identity();
        let cat = Catalog::build(&spec.quiver)?;
        let g = build_interval_eg(&cat, &Heart::seed(&cat))?.mark_f_stable(&cat, &s)?;
        Ok(Graphs { s, cat, g })
    }

    fn folded(&self) -> Result<FoldedGraph> {
        Ok(folded_eg(&self.cat, &self.g, &self.s)?)
    }

    fn stable_count(&self) -> usize {
        (0..self.g.node_count()).filter(|&i| self.g.is_marked(i)).count()
    }
}

fn yes(b: bool) -> String {
    (if b { "yes" } else { "no" }).to_string()
}

fn eg_table(gr: &Graphs, folded: Option<&FoldedGraph>) -> String {
    let (cat, g) = (&gr.cat, &gr.g);
    let rows: Vec<Vec<String>> = g
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let targets: Vec<String> = g.out_edges(i).map(|e| e.target.to_string()).collect();
            vec![i.to_string(), h.label(cat), yes(g.is_marked(i)), targets.join(" ")]
        })
        .collect();
    let mut out = table(&["heart", "simples", "F-stable", "tilts to"], &rows);
    let _ = writeln!(
        out,
        "{} hearts, {} edges, {} F-stable, connected: {}",
        g.node_count(),
        g.edge_count(),
        gr.stable_count(),
        yes(g.is_connected())
    );
    if let Some(f) = folded {
        out.push('\n');
        let rows: Vec<Vec<String>> = (0..f.node_count())
            .map(|k| {
                let targets: Vec<String> = f
                    .edges
                    .iter()
                    .filter(|e| e.source == k)
                    .map(|e| e.target.to_string())
                    .collect();
                vec![
                    k.to_string(),
                    f.nodes[k].to_string(),
                    f.label(cat, g, k),
                    targets.join(" "),
                ]
            })
            .collect();
        out.push_str(&table(&["folded", "heart", "orbit simples", "tilts to"], &rows));
        let _ = writeln!(
            out,
            "{} folded hearts, {} orbit tilts, connected: {}",
            f.node_count(),
            f.edge_count(),
            yes(f.is_connected())
        );
    }
    out
}

pub fn eg(spec: &QuiverSpec, f: Format, with_fold: bool) -> Result<String> {
    let gr = Graphs::build(spec)?;
    let folded = if with_fold { Some(gr.folded()?) } else { None };
    Ok(match f {
        Format::Dot => match &folded {
            Some(fg) => folded_dot(&gr.cat, &gr.g, fg),
            None => eg_dot(&gr.cat, &gr.g),
        },
        Format::Json => pretty(&eg_json(&gr.cat, &gr.g, folded.as_ref())),
        Format::Table => eg_table(&gr, folded.as_ref()),
    })
}

struct Classification {
    numerical: Vec<Vec<i64>>,
    f_invariant: Vec<Vec<i64>>,
    cells: Vec<CellClassification>,
}

impl Classification {
    fn run(gr: &Graphs, q: &Quiver, jobs: usize) -> Result<Self> {
        Ok(Classification {
            numerical: numerical_constraints(q),
            f_invariant: f_constraints(q, &gr.s),
            cells: classify_graph(&gr.cat, &gr.g, &gr.s, jobs)?,
        })
    }

    fn feasible(&self) -> usize {
        self.cells.iter().filter(|c| c.numerical_feasible()).count()
    }

    fn matches_f_stable(&self) -> bool {
        self.cells.iter().all(|c| c.numerical_feasible() == c.f_stable)
    }

    fn summary(&self) -> Vec<String> {
        let stable = self.cells.iter().filter(|c| c.f_stable).count();
        let mut out = vec![format!(
            "{} of {} cells meet the numerical constraints; {} hearts are F-stable",
            self.feasible(),
            self.cells.len(),
            stable
        )];
        if self.matches_f_stable() {
            out.push(format!(
                "numerical charges in this interval lie exactly in the cells of the {stable} F-stable hearts"
            ));
        } else {
            out.push("numerical feasibility differs from F-stability on some hearts".to_string());
        }
        out.push(
            "the numerical locus has one component per coset of the folded braid group in the ambient one \
             (stated, not computed)"
                .to_string(),
        );
        out
    }

    fn value(&self) -> Value {
        json!({
            "numerical_constraints": self.numerical,
            "f_invariance_constraints": self.f_invariant,
            "constraints_span_equal": same_span(&self.numerical, &self.f_invariant),
            "cells": self.cells,
            "feasible": self.feasible(),
            "feasible_iff_f_stable": self.matches_f_stable(),
            "summary": self.summary(),
        })
    }

    fn table(&self) -> String {
        let verdict = |v: &Verdict| {
            (match v {
                Verdict::Feasible(_) => "feasible",
                Verdict::Infeasible(_) => "infeasible",
            })
            .to_string()
        };
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                vec![
                    c.heart.to_string(),
                    c.label.clone(),
                    yes(c.f_stable),
                    verdict(&c.numerical),
                    verdict(&c.f_invariant),
                    match c.slices_equal {
                        Some(true) => "equal".to_string(),
                        Some(false) => "differ".to_string(),
                        None => "-".to_string(),
                    },
                ]
            })
            .collect();
        let fmt = |cs: &[Vec<i64>]| {
            let v: Vec<String> = cs.iter().map(|c| format!("{c:?}")).collect();
            if v.is_empty() {
                "none".to_string()
            } else {
                v.join(" ")
            }
        };
        let mut out = String::new();
        let _ = writeln!(out, "numerical constraints: {}", fmt(&self.numerical));
        let _ = writeln!(out, "F-invariance constraints: {}", fmt(&self.f_invariant));
        out.push_str(&table(
            &["heart", "simples", "F-stable", "numerical", "F-invariant", "slices"],
            &rows,
        ));
        for line in self.summary() {
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

pub fn classify(spec: &QuiverSpec, f: Format, jobs: usize) -> Result<String> {
    let gr = Graphs::build(spec)?;
    let c = Classification::run(&gr, &spec.quiver, jobs)?;
    match f {
        Format::Table => Ok(c.table()),
        Format::Json => {
            let mut v = c.value();
            v["schema"] = json!(1);
            Ok(pretty(&v))
        }
        Format::Dot => Err(unsupported("classify", f)),
    }
}

fn rank_two_name(m: u32) -> &'static str {
    match m {
        2 => "A1×A1",
        3 => "A2",
        4 => "B2",
        _ => "G2",
    }
}

struct Braid {
    ambient: CoxeterSystem,
    names: Vec<String>,
    folded_type: String,
    embedding: Vec<String>,
    commute: bool,
    relations: Vec<RelationCheck>,
    check: Option<RelationCheck>,
    twists: foldstab_core::artin::TwistCheck,
}

impl Braid {
    fn run(spec: &QuiverSpec, check: Option<&str>) -> Result<Self> {
        let q = &spec.quiver;
        let s = spec.automorphism_or_identity();
        let ambient = CoxeterSystem::from_quiver(q)?;
        let vq = fold_quiver(q, &s)?;
        let check = match check {
            Some(text) => {
                let (l, r) = text
                    .split_once('=')
                    .ok_or_else(|| InputError(format!("relation `{text}` has no `=`")))?;
                let (l, r) = (
                    ArtinWord::parse(&ambient, l.trim())?,
                    ArtinWord::parse(&ambient, r.trim())?,
                );
                Some(check_relation(&ambient, 0, 0, 0, &l, &r))
            }
            None => None,
        };
        Ok(Braid {
            names: vq.orbit_names(q),
            folded_type: vq.folded_type()?.to_string(),
            embedding: orbit_embedding(q, &s)?.iter().map(|w| w.render(&ambient)).collect(),
            commute: orbit_generators_commute(&ambient, &s),
            relations: verify_folded_relation(q, &s)?,
            twists: check_twist_action(q, &s)?,
            check,
            ambient,
        })
    }

    fn status(b: bool) -> &'static str {
        if b {
            "VERIFIED"
        } else {
            "FAILED"
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ambient type: {}", self.ambient.label());
        let _ = writeln!(out, "folded type: {}", self.folded_type);
        let emb: Vec<String> = self
            .names
            .iter()
            .zip(&self.embedding)
            .map(|(n, w)| format!("{n} ↦ {w}"))
            .collect();
        let _ = writeln!(out, "embedding: {}", emb.join("; "));
        let _ = writeln!(out, "orbit generators commute: {}", yes(self.commute));
        for r in &self.relations {
            let _ = writeln!(
                out,
                "{} relation ({}, {}): {}",
                rank_two_name(r.m),
                self.names[r.i],
                self.names[r.j],
                Self::status(r.holds)
            );
            let _ = writeln!(out, "  {}  ->  {}", r.lhs, r.lhs_normal_form);
            let _ = writeln!(out, "  {}  ->  {}", r.rhs, r.rhs_normal_form);
        }
        if let Some(c) = &self.check {
            let _ = writeln!(out, "check {} = {}: {}", c.lhs, c.rhs, Self::status(c.holds));
            let _ = writeln!(out, "  {}  ->  {}", c.lhs, c.lhs_normal_form);
            let _ = writeln!(out, "  {}  ->  {}", c.rhs, c.rhs_normal_form);
        }
        let t = &self.twists;
        let _ = writeln!(
            out,
            "twist action on K: ambient relations {}, folded relations {}, commutes with F {}, fixes kernel {}",
            yes(t.ambient_relations),
            yes(t.folded_relations),
            yes(t.commutes_with_frobenius),
            yes(t.fixes_kernel)
        );
        out.push_str(
            "relations are checked in the ambient group; injectivity of the folded braid group is not certified\n",
        );
        out
    }

    fn value(&self) -> Value {
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                json!({
                    "name": format!("{} relation", rank_two_name(r.m)),
                    "generators": [self.names[r.i], self.names[r.j]],
                    "m": r.m,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "lhs_normal_form": r.lhs_normal_form,
                    "rhs_normal_form": r.rhs_normal_form,
                    "holds": r.holds,
                })
            })
            .collect();
        let mut v = json!({
            "ambient_type": self.ambient.label(),
            "folded_type": self.folded_type,
            "embedding": self.names.iter().zip(&self.embedding).map(|(n, w)| json!({"generator": n, "word": w})).collect::<Vec<_>>(),
            "orbit_generators_commute": self.commute,
            "relations": relations,
            "twist_action": self.twists,
        });
        if let Some(c) = &self.check {
            v["check"] = json!({
                "lhs": c.lhs,
                "rhs": c.rhs,
                "lhs_normal_form": c.lhs_normal_form,
                "rhs_normal_form": c.rhs_normal_form,
                "holds": c.holds,
            });
        }
        v
    }
}

pub fn braid(spec: &QuiverSpec, f: Format, check: Option<&str>) -> Result<String> {
    let b = Braid::run(spec, check)?;
    match f {
        Format::Table => Ok(b.table()),
        Format::Json => {
            let mut v = b.value();
            v["schema"] = json!(1);
            Ok(pretty(&v))
        }
        Format::Dot => Err(unsupported("braid", f)),
    }
}

pub fn report(spec: &QuiverSpec, f: Format, jobs: usize) -> Result<String> {
    let gr = Graphs::build(spec)?;
    let folded = gr.folded()?;
    let c = Classification::run(&gr, &spec.quiver, jobs)?;
    let b = Braid::run(spec, None)?;
    match f {
        Format::Json => Ok(pretty(&json!({
            "schema": 1,
            "fold": fold_value(spec)?,
            "exchange_graph": eg_json(&gr.cat, &gr.g, Some(&folded)),
            "classification": c.value(),
            "braid": b.value(),
        }))),
        Format::Table => {
            let mut out = String::from("== fold ==\n");
            out.push_str(&fold_table(spec)?);
            out.push_str("\n== exchange graph ==\n");
            out.push_str(&eg_table(&gr, Some(&folded)));
            out.push_str("\n== cells ==\n");
            out.push_str(&c.table());
            out.push_str("\n== braid relations ==\n");
            out.push_str(&b.table());
            Ok(out)
        }
        Format::Dot => Err(unsupported("report", f)),
    }
}
