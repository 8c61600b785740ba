//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each and exits nonzero if any failed.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use foldstab_core::artin::{normal_form, twist_k_matrix, vertex_twists, words_equal, ArtinWord, CoxeterSystem};
use foldstab_core::cells::{classify_graph, f_constraints, verify_certificate, verify_witness, Verdict};
use foldstab_core::lattice::{identity, in_rational_span, integer_kernel, mat_mul, mat_vec, smith_normal_form};
use foldstab_core::linalg::{rat, Matrix, Rational};
use foldstab_core::quiver::{fold, Automorphism, Quiver};
use foldstab_core::rep::{cy3_hom_dims, Catalog, DerivedObject, Representation, Shifted};
use foldstab_core::tilt::{
    build_interval_eg, folded_eg, is_f_stable, multi_tilt, orbit_tilt, orbit_tilt_backward, tilt_backward,
    tilt_forward, ExchangeGraph, Heart,
};
use petgraph::algo::is_isomorphic;
use petgraph::graph::DiGraph;

type Outcome = Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_foldstab"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn quiver(n: usize, edges: &[(usize, usize)]) -> Quiver {
    Quiver::from_edges(n, edges).unwrap()
}

fn orientations(n: usize, edges: &[(usize, usize)]) -> Vec<Quiver> {
    (0..1u32 << edges.len())
        .map(|mask| {
            let e: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            quiver(n, &e)
        })
        .collect()
}

const A2: &[(usize, usize)] = &[(1, 2)];
const A3: &[(usize, usize)] = &[(1, 2), (2, 3)];
const D4: &[(usize, usize)] = &[(1, 2), (3, 2), (4, 2)];

fn corpus() -> Vec<Quiver> {
    [(2, A2), (3, A3), (4, D4)]
        .iter()
        .flat_map(|&(n, e)| orientations(n, e))
        .collect()
}

fn interval(q: &Quiver) -> (Catalog, ExchangeGraph) {
    let c = Catalog::build(q).unwrap();
    let g = build_interval_eg(&c, &Heart::seed(&c)).unwrap();
    (c, g)
}

// 1

fn folding_fixtures() -> Outcome {
    let cases = [
        ("a3.toml", "B2", vec![2, 1]),
        ("d4_triality.toml", "G2", vec![1, 3]),
        ("a5.toml", "C3", vec![2, 2, 1]),
        ("d4_swap.toml", "B3", vec![1, 1, 2]),
    ];
    for (file, ty, labels) in cases {
        let out = cli(&["fold", &fixture(file), "--format", "json"])?;
        let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        let got: Vec<u64> = v["orbits"]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| o["label"].as_u64().unwrap())
            .collect();
        ensure!(
            v["folded_type"] == ty && got == labels,
            "{file}: {} {got:?}",
            v["folded_type"]
        );
    }
    // A7 reflected about its middle vertex
    let a7 = quiver(7, &[(1, 2), (2, 3), (3, 4), (7, 6), (6, 5), (5, 4)]);
    let s = Automorphism::from_cycles(&a7, "(1 7)(2 6)(3 5)", None).unwrap();
    let vq = fold(&a7, &s).unwrap();
    let ty = vq.folded_type().unwrap().to_string();
    ensure!(ty == "C4" && vq.labels() == [2, 2, 2, 1], "A7: {ty} {:?}", vq.labels());
    Ok("A3->B2 (2,1), D4->G2 (1,3), A5->C3, A7->C4, D4->B3 (1,1,2)".into())
}

// 2

fn classic_name(label: &str) -> String {
    let (base, shift) = match label.split_once('^') {
        Some((b, s)) => (b, format!("^{s}")),
        None => (label, String::new()),
    };
    let base = match base {
        "X110" => "X1",
        "X111" => "X2",
        "X011" => "X3",
        t => t,
    };
    format!("{base}{shift}")
}

fn a3_symmetric() -> Quiver {
    quiver(3, &[(2, 1), (2, 3)])
}

fn a3_interval_hearts() -> Outcome {
    let q = a3_symmetric();
    let s = Automorphism::from_cycles(&q, "(1 3)", None).unwrap();
    let (c, g) = interval(&q);
    let g = g.mark_f_stable(&c, &s).unwrap();
    let published: &[(&[&str], bool)] = &[
        (&["T1", "X3^1", "T2"], false),
        (&["T1", "T3^1", "X3"], false),
        (&["T1^1", "X1", "X3^1"], false),
        (&["T3^1", "T1", "T2^1"], false),
        (&["T1^1", "X2", "T3^1"], true),
        (&["T2", "X1^1", "X3^1"], true),
        (&["T1", "T2^1", "T3"], true),
        (&["T1", "T2", "T3"], true),
        (&["X1", "X2^1", "X3"], true),
        (&["T1^1", "T2^1", "T3^1"], true),
        (&["T3", "T1^1", "X1"], false),
        (&["X1^1", "X3", "T3^1"], false),
        (&["T2^1", "T3", "T1^1"], false),
        (&["T2", "X1^1", "T3"], false),
    ];
    let mut want: Vec<(BTreeSet<String>, bool)> = published
        .iter()
        .map(|(xs, m)| (xs.iter().map(|s| s.to_string()).collect(), *m))
        .collect();
    let mut ours: Vec<(BTreeSet<String>, bool)> = g
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            (
                h.simples().iter().map(|x| classic_name(&x.label(&c))).collect(),
                g.is_marked(i),
            )
        })
        .collect();
    want.sort();
    ours.sort();
    let stable = ours.iter().filter(|(_, m)| *m).count();
    ensure!(g.node_count() == 14, "{} hearts", g.node_count());
    ensure!(stable == 6, "{stable} F-stable");
    ensure!(ours == want, "heart labels differ from the published list");
    ensure!(g.is_connected(), "not connected");
    Ok(format!("14 hearts, 6 F-stable, {} edges, connected", g.edge_count()))
}

// 3

fn numerical_kernel() -> Outcome {
    let a3 = a3_symmetric();
    let k = integer_kernel(&a3.euler_form_cy3());
    ensure!(k == [vec![1, 0, -1]], "A3 kernel {k:?}");

    let tri = quiver(4, &[(2, 1), (3, 1), (4, 1)]);
    let form = tri.euler_form_cy3();
    let k = integer_kernel(&form);
    ensure!(k == [vec![0, 1, 0, -1], vec![0, 0, 1, -1]], "D4 kernel {k:?}");
    let snf = smith_normal_form(&form.matrix);
    ensure!(
        k.len() == 4 - snf.rank,
        "kernel rank {} against Smith rank {}",
        k.len(),
        snf.rank
    );
    for v in &k {
        ensure!(
            mat_vec(&form.matrix, v).iter().all(|&x| x == 0),
            "{v:?} not in the kernel"
        );
    }
    let s = Automorphism::from_cycles(&tri, "(2 3 4)", None).unwrap();
    let f = f_constraints(&tri, &s);
    ensure!(
        k.iter().all(|v| in_rational_span(&f, v)),
        "kernel not inside the F-constraints"
    );
    Ok("A3: [1, 0, -1]; D4 3-cycle: [0, 1, 0, -1], [0, 0, 1, -1] inside the F-constraints".into())
}

// 4

/// Constraint functionals on the simple values of `h`.
fn on_simples(cat: &Catalog, h: &Heart, constraints: &[Vec<i64>]) -> Matrix {
    let classes = h.k_classes(cat);
    let n = classes.len();
    let b = Matrix::from_fn(n, n, |r, c| rat(classes[r][c]));
    let bt_inv = b.inverse().unwrap().transpose();
    let rows: Vec<Vec<Rational>> = constraints
        .iter()
        .map(|c| bt_inv.mul_vec(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>()))
        .collect();
    Matrix::from_fn(rows.len(), n, |r, c| rows[r][c].clone())
}

fn cell_classification() -> Outcome {
    let q = a3_symmetric();
    let s = Automorphism::from_cycles(&q, "(1 3)", None).unwrap();
    let (c, g) = interval(&q);
    let g = g.mark_f_stable(&c, &s).unwrap();
    let rows = classify_graph(&c, &g, &s, 1).unwrap();
    let numerical = integer_kernel(&q.euler_form_cy3());
    let (mut feasible, mut infeasible) = (0, 0);
    for r in &rows {
        let h = g.node(r.heart);
        ensure!(r.numerical_feasible() == r.f_stable, "{} disagrees", r.label);
        match &r.numerical {
            Verdict::Feasible(w) => {
                verify_witness(&c, h, &numerical, w).map_err(|e| e.to_string())?;
                feasible += 1;
            }
            Verdict::Infeasible(cert) => {
                ensure!(
                    verify_certificate(&on_simples(&c, h, &numerical), cert),
                    "bad certificate for {}",
                    r.label
                );
                infeasible += 1;
            }
        }
    }
    ensure!(
        (feasible, infeasible) == (6, 8),
        "{feasible} feasible, {infeasible} infeasible"
    );
    Ok("6 feasible with witnesses, 8 infeasible with certificates, feasible iff F-stable".into())
}

// 5

fn braid_relations() -> Outcome {
    let check = |q: &Quiver, lhs: &str, rhs: &str| -> Result<bool, String> {
        let c = CoxeterSystem::from_quiver(q).map_err(|e| e.to_string())?;
        let a = ArtinWord::parse(&c, lhs).map_err(|e| e.to_string())?;
        let b = ArtinWord::parse(&c, rhs).map_err(|e| e.to_string())?;
        Ok(words_equal(&c, &a, &b) && normal_form(&c, &a) == normal_form(&c, &b))
    };
    ensure!(
        check(&a3_symmetric(), "1 3 2 1 3 2", "2 1 3 2 1 3")?,
        "A3 relation fails"
    );
    // centre 1, arms 2 3 4
    let d4 = quiver(4, &[(2, 1), (3, 1), (4, 1)]);
    let abc = "2 3 4";
    let lhs = format!("{abc} 1 {abc} 1 {abc} 1");
    let rhs = format!("1 {abc} 1 {abc} 1 {abc}");
    ensure!(check(&d4, &lhs, &rhs)?, "D4 relation fails");
    ensure!(!check(&quiver(2, A2), "1 2", "2 1")?, "A2 negative control holds");
    Ok("A3 and D4 folded relations hold; 1 2 != 2 1 in A2".into())
}

// 6

fn euler(q: &Quiver, x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(&a, &b)| (a * b) as i64).sum();
    let arrows: i64 = q.arrows().iter().map(|a| (x[a.tail] * y[a.head]) as i64).sum();
    diag - arrows
}

fn orthogonal(c: &Catalog, x: Shifted, y: Shifted) -> bool {
    c.hom_dim(x.id, y.id) + c.ext_dim(x.id, y.id) + c.hom_dim(y.id, x.id) + c.ext_dim(y.id, x.id) == 0
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Conjugates every map by a fixed unitriangular change of basis.
fn scramble(q: &Quiver, r: &Representation) -> Representation {
    let dims = r.dim_vector().to_vec();
    let g: Vec<Matrix> = dims
        .iter()
        .map(|&d| Matrix::from_fn(d, d, |i, j| rat(i64::from(i <= j))))
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| g[a.head].mul(r.map(k)).mul(&g[a.tail].inverse().unwrap()))
        .collect();
    Representation::new(q, dims, maps).unwrap()
}

fn property_suites() -> Outcome {
    let mut counts: Vec<(&str, usize)> = Vec::new();
    let setups: Vec<(Quiver, Catalog, ExchangeGraph)> = corpus()
        .into_iter()
        .map(|q| {
            let (c, g) = interval(&q);
            (q, c, g)
        })
        .collect();

    let mut n = 0;
    for (_, c, g) in &setups {
        for h in g.nodes() {
            for i in 0..h.len() {
                let s = h.simples()[i];
                let f = tilt_forward(c, h, i).unwrap();
                let back = tilt_backward(c, &f, f.position(s.shifted(1)).unwrap()).unwrap();
                let b = tilt_backward(c, h, i).unwrap();
                let fwd = tilt_forward(c, &b, b.position(s.shifted(-1)).unwrap()).unwrap();
                ensure!(&back == h && &fwd == h, "round trip fails at {}", h.label(c));
                n += 1;
            }
        }
    }
    counts.push(("tilt/untilt", n));

    let mut n = 0;
    for (_, c, g) in &setups {
        for h in g.nodes() {
            let k = h.len();
            for mask in 1u32..1 << k {
                let set: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                let pairwise = set.iter().all(|&a| {
                    set.iter()
                        .all(|&b| a == b || orthogonal(c, h.simples()[a], h.simples()[b]))
                });
                if set.len() < 2 || !pairwise {
                    continue;
                }
                let first = multi_tilt(c, h, &set).unwrap();
                for p in permutations(&set) {
                    ensure!(
                        multi_tilt(c, h, &p).unwrap() == first,
                        "order matters at {}",
                        h.label(c)
                    );
                    n += 1;
                }
            }
        }
    }
    counts.push(("multi-tilt order", n));

    let mut n = 0;
    for (q, c, _) in &setups {
        for x in c.entries() {
            for y in c.entries() {
                let lhs = c.hom_dim(x.id, y.id) as i64 - c.ext_dim(x.id, y.id) as i64;
                ensure!(lhs == euler(q, x.dim_vector(), y.dim_vector()), "Euler identity fails");
                n += 1;
            }
        }
    }
    counts.push(("Euler identity", n));

    let mut n = 0;
    for (_, c, _) in &setups {
        for x in 0..c.len() {
            for y in 0..c.len() {
                for (sx, sy) in [(0, 0), (0, 1), (1, 0), (1, 1), (-1, 1)] {
                    let a: DerivedObject = Shifted::new(x, sx).into();
                    let b: DerivedObject = Shifted::new(y, sy).into();
                    let (ab, ba) = (cy3_hom_dims(c, &a, &b), cy3_hom_dims(c, &b, &a));
                    ensure!((0..4).all(|k| ab[k] == ba[3 - k]), "duality fails");
                    n += 1;
                }
            }
        }
    }
    counts.push(("CY3 duality", n));

    let mut n = 0;
    for (q, c, _) in &setups {
        for i in 0..c.len() {
            for j in i..c.len() {
                let sum = c.rep(i).direct_sum(c.rep(j));
                ensure!(c.identify(&scramble(q, &sum)).unwrap() == [i, j], "identify fails");
                n += 1;
            }
        }
    }
    counts.push(("identify additivity", n));

    let mut n = 0;
    for (edges, k, cycles) in [(A3, 3, "(1 3)"), (D4, 4, "(1 3 4)"), (D4, 4, "(3 4)")] {
        for q in orientations(k, edges) {
            let Ok(s) = Automorphism::from_cycles(&q, cycles, None) else {
                continue;
            };
            let (c, g) = interval(&q);
            for h in g.nodes().iter().filter(|h| is_f_stable(&c, h, &s).unwrap()) {
                for i in 0..h.len() {
                    for t in [orbit_tilt(&c, h, i, &s), orbit_tilt_backward(&c, h, i, &s)] {
                        ensure!(
                            is_f_stable(&c, &t.unwrap(), &s).unwrap(),
                            "orbit tilt breaks F-stability"
                        );
                        n += 1;
                    }
                }
            }
        }
    }
    counts.push(("orbit tilts keep F-stability", n));

    let mut n = 0;
    for (q, _, _) in &setups {
        let t = vertex_twists(q);
        let r = t.len();
        let cx = CoxeterSystem::from_quiver(q).unwrap();
        let form = q.euler_form_cy3();
        let neg: Vec<Vec<i64>> = form.matrix.iter().map(|row| row.iter().map(|x| -x).collect()).collect();
        let inv: Vec<_> = (0..r)
            .map(|i| twist_k_matrix(&(0..r).map(|k| i64::from(k == i)).collect::<Vec<_>>(), &neg))
            .collect();
        let letters: Vec<&Vec<Vec<i64>>> = t.iter().chain(&inv).collect();
        let kernel = integer_kernel(&form);
        // prefixes: every word of length at most two
        let mut prefixes = vec![identity(r)];
        for a in &letters {
            prefixes.push((*a).clone());
            for b in &letters {
                prefixes.push(mat_mul(a, b));
            }
        }
        for p in &prefixes {
            for z in &kernel {
                ensure!(&mat_vec(p, z) == z, "kernel moved");
            }
            for i in 0..r {
                for j in i + 1..r {
                    let m = cx.coxeter_matrix()[i][j] as usize;
                    let alt = |x: usize, y: usize| {
                        (0..m).fold(p.clone(), |acc, k| {
                            mat_mul(&acc, if k % 2 == 0 { &t[x] } else { &t[y] })
                        })
                    };
                    ensure!(alt(i, j) == alt(j, i), "twist braid relation fails");
                    n += 1;
                }
            }
        }
    }
    counts.push(("twist relations and kernel", n));

    let low: Vec<String> = counts
        .iter()
        .filter(|(_, n)| *n < 500)
        .map(|(s, n)| format!("{s} {n}"))
        .collect();
    ensure!(low.is_empty(), "too few cases: {}", low.join(", "));
    Ok(counts
        .iter()
        .map(|(s, n)| format!("{s} {n}"))
        .collect::<Vec<_>>()
        .join(", "))
}

// 7

fn digraph(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> DiGraph<(), ()> {
    let mut g = DiGraph::new();
    let v: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for (a, b) in edges {
        g.add_edge(v[a], v[b], ());
    }
    g
}

/// Orbits of `F` on the simples of `h`, found through dimension vectors.
fn oracle_orbits(c: &Catalog, h: &Heart, s: &Automorphism) -> Vec<Vec<usize>> {
    let image = |x: Shifted| {
        let d = c.entry(x.id).dim_vector();
        let mut t = vec![0; d.len()];
        for (i, &k) in d.iter().enumerate() {
            t[s.vertex_image(i)] = k;
        }
        Shifted::new(c.by_dim_vector(&t).unwrap(), x.shift)
    };
    let perm: Vec<usize> = h.simples().iter().map(|&x| h.position(image(x)).unwrap()).collect();
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for i in 0..perm.len() {
        let mut o = Vec::new();
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            o.push(j);
            j = perm[j];
        }
        if !o.is_empty() {
            out.push(o);
        }
    }
    out
}

/// Exhaustive orbit-tilt search from the seed, kept inside the interval.
fn orbit_tilt_oracle(c: &Catalog, s: &Automorphism) -> DiGraph<(), ()> {
    let seed = Heart::seed(c);
    let inside = |h: &Heart| h.simples().iter().all(|x| x.shift == 0 || x.shift == 1);
    let mut ids = HashMap::from([(seed.clone(), 0usize)]);
    let mut order = vec![seed];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let h = order[k].clone();
        for o in oracle_orbits(c, &h, s) {
            let t = multi_tilt(c, &h, &o).unwrap();
            if !inside(&t) {
                continue;
            }
            let id = *ids.entry(t.clone()).or_insert_with(|| {
                order.push(t.clone());
                queue.push_back(order.len() - 1);
                order.len() - 1
            });
            edges.push((k, id));
        }
    }
    digraph(order.len(), edges.into_iter())
}

fn folded_oracle() -> Outcome {
    let mut notes = Vec::new();
    for (q, cycles, nodes) in [
        (a3_symmetric(), "(1 3)", 6),
        (quiver(4, &[(2, 1), (3, 1), (4, 1)]), "(2 3 4)", 8),
    ] {
        let s = Automorphism::from_cycles(&q, cycles, None).unwrap();
        let (c, g) = interval(&q);
        let g = g.mark_f_stable(&c, &s).unwrap();
        let f = folded_eg(&c, &g, &s).unwrap();
        let ours = digraph(f.node_count(), f.edges.iter().map(|e| (e.source, e.target)));
        ensure!(f.node_count() == nodes, "{cycles}: {} folded nodes", f.node_count());
        ensure!(
            is_isomorphic(&ours, &orbit_tilt_oracle(&c, &s)),
            "{cycles}: not isomorphic to the oracle"
        );
        notes.push(format!("{} nodes/{} edges", f.node_count(), f.edge_count()));
    }
    Ok(format!("A3 {}, D4 {} match the oracle", notes[0], notes[1]))
}

// 8

fn determinism() -> Outcome {
    let mut runs = 0;
    let full = ["a1", "a2", "a3", "a3_identity", "a5", "d4_swap", "d4_triality"];
    let mut jobs: Vec<Vec<String>> = Vec::new();
    for f in full.iter().chain(&["e6"]) {
        let path = fixture(&format!("{f}.toml"));
        let mut add = |args: &[&str]| {
            let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            v.insert(1, path.clone());
            jobs.push(v);
        };
        for fmt in ["table", "json"] {
            add(&["fold", "--format", fmt]);
            add(&["braid", "--format", fmt]);
        }
        if *f == "e6" {
            continue;
        }
        for fmt in ["dot", "json", "table"] {
            add(&["eg", "--format", fmt]);
            add(&["eg", "--fold", "--format", fmt]);
        }
        add(&["classify", "--format", "table", "--jobs", "1"]);
        add(&["classify", "--format", "json", "--jobs", "4"]);
        add(&["report", "--jobs", "4"]);
    }
    for args in &jobs {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let (x, y) = (cli(&a)?, cli(&a)?);
        ensure!(x == y, "{a:?} differs between runs");
        runs += 2;
    }
    // thread count must not leak into the output
    let a3 = fixture("a3.toml");
    ensure!(
        cli(&["classify", &a3, "--format", "json", "--jobs", "1"])?
            == cli(&["classify", &a3, "--format", "json", "--jobs", "8"])?,
        "classify output depends on --jobs"
    );
    Ok(format!("{runs} runs of {} invocations byte-identical", jobs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("folding fixtures", folding_fixtures, Some(1)),
        ("A3 interval exchange graph", a3_interval_hearts, Some(5)),
        ("numerical kernel", numerical_kernel, Some(1)),
        ("A3 cell classification", cell_classification, Some(5)),
        ("braid relations", braid_relations, Some(10)),
        ("property suites", property_suites, None),
        ("folded graph oracle", folded_oracle, Some(30)),
        ("CLI determinism", determinism, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > Duration::from_secs(*l) => Err(format!("took longer than {l} s")),
            (o, _) => o,
        };
        let (tag, note) = match &outcome {
            Ok(n) => ("PASS", n.clone()),
            Err(e) => {
                failed += 1;
                ("FAIL", e.clone())
            }
        };
        println!("{tag} {} {name} ({:.2} s): {note}", k + 1, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
