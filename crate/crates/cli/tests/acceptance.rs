//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ricciflat_core::classify::verify_lemma;
use ricciflat_core::generate::{generate, GenerationConfig};
use ricciflat_core::{
    curvature_report, emit_graph6, kappa, kappa_p, mu, named_graph, parse_graph6,
    two_pentagon_condition, w1, w1_uniform_regular, Graph, Rational,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ricciflat(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ricciflat"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "`ricciflat {}` exited with {}",
        args.join(" "),
        out.status
    );
    Ok((
        String::from_utf8(out.stdout).map_err(|e| e.to_string())?,
        start.elapsed(),
    ))
}

fn json(text: &str) -> Result<serde_json::Value, String> {
    serde_json::from_str(text.trim()).map_err(|e| e.to_string())
}

fn flat_names(v: &serde_json::Value) -> Vec<(u64, String)> {
    v["flat"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|f| {
            (
                f["n"].as_u64().unwrap_or(0),
                f["name"].as_str().unwrap_or("UNKNOWN").to_string(),
            )
        })
        .collect()
}

fn desk_tier() -> Check {
    let (text, took) = ricciflat(&[
        "--jobs",
        "1",
        "classify",
        "--generate",
        "10..14",
        "--format",
        "json",
    ])?;
    let v = json(&text)?;
    let per_n: Vec<(String, u64)> = v["per_n"]
        .as_object()
        .ok_or("missing per_n")?
        .iter()
        .map(|(n, t)| (n.clone(), t["inspected"].as_u64().unwrap_or(0)))
        .collect();
    let want = [
        ("10".to_string(), 1),
        ("12".to_string(), 2),
        ("14".to_string(), 9),
    ];
    ensure!(per_n == want, "inspected per n: {per_n:?}");
    let names = flat_names(&v);
    ensure!(
        names == [(10, "petersen".to_string()), (12, "triplex".to_string())],
        "flat graphs: {names:?}"
    );
    ensure!(took < Duration::from_secs(60), "took {took:.2?}");
    Ok(format!(
        "inspected 1+2+9, flat = petersen, triplex ({took:.2?})"
    ))
}

fn full_tier() -> Check {
    let (text, _) = ricciflat(&["curvature", "--named", "dodecahedron", "--format", "json"])?;
    let rows: Vec<serde_json::Value> = text.lines().map(json).collect::<Result<_, _>>()?;
    let edges: Vec<&serde_json::Value> =
        rows.iter().filter(|r| r.get("summary").is_none()).collect();
    ensure!(edges.len() == 30, "{} edge rows", edges.len());
    ensure!(
        edges.iter().all(|r| r["kappa"] == "0/1"),
        "nonzero dodecahedron edge"
    );

    let (text, took) = ricciflat(&["classify", "--search", "--max-n", "20", "--format", "json"])?;
    let v = json(&text)?;
    let names: BTreeSet<String> = flat_names(&v).into_iter().map(|(_, n)| n).collect();
    let want: BTreeSet<String> = ["petersen", "triplex", "dodecahedron"]
        .map(String::from)
        .into();
    ensure!(
        names == want && v["inspected"] == 3,
        "search found {names:?}"
    );
    ensure!(took < Duration::from_secs(600), "search took {took:.2?}");
    Ok(format!(
        "dodecahedron 30 x 0/1; search to n=20 = petersen, triplex, dodecahedron ({took:.2?})"
    ))
}

fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|s| {
            let mut d = vec![usize::MAX; g.order()];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// `κ` of an edge of a regular graph by trying every bijection of the
/// closed neighborhoods.
fn kappa_by_bijections(g: &Graph, x: usize, y: usize) -> Rational {
    let dist = distances(g);
    let bx: Vec<usize> = std::iter::once(x)
        .chain(g.neighbors(x).iter().copied())
        .collect();
    let by: Vec<usize> = std::iter::once(y)
        .chain(g.neighbors(y).iter().copied())
        .collect();
    let k = bx.len();
    let cost = permutations(k)
        .iter()
        .map(|p| (0..k).map(|i| dist[bx[i]][by[p[i]]]).sum::<usize>())
        .min()
        .unwrap();
    let d = (k - 1) as i128;
    (Rational::ONE - Rational::new(cost as i128, d + 1)) * Rational::new(d + 1, d)
}

fn exact_values() -> Check {
    let mut cases: Vec<(String, Rational, bool)> = ["petersen", "triplex", "dodecahedron"]
        .iter()
        .map(|n| (n.to_string(), Rational::ZERO, false))
        .collect();
    cases.extend((6..=12).map(|n| (format!("cycle:{n}"), Rational::ZERO, false)));
    cases.push(("cycle:5".into(), Rational::new(1, 2), true));
    cases.push(("complete:4".into(), Rational::new(4, 3), true));
    cases.push(("bipartite:3:3".into(), Rational::new(2, 3), true));
    let mut edges = 0;
    for (name, want, oracle) in &cases {
        let g = named_graph(name).map_err(|e| e.to_string())?;
        let report = curvature_report(&g).map_err(|e| e.to_string())?;
        for e in &report.edges {
            ensure!(
                e.kappa == *want,
                "{name} edge {}-{}: {} != {want}",
                e.u,
                e.v,
                e.kappa
            );
            if *oracle {
                let o = kappa_by_bijections(&g, e.u, e.v);
                ensure!(o == *want, "{name}: oracle gives {o}");
            }
            edges += 1;
        }
    }
    Ok(format!(
        "{} graphs, {edges} edges, exact equality",
        cases.len()
    ))
}

fn small_graphs() -> Result<Vec<Graph>, String> {
    let mut all = Vec::new();
    for n in [10, 12, 14] {
        all.extend(generate(&GenerationConfig::new(n)).map_err(|e| e.to_string())?);
    }
    Ok(all)
}

fn lemma_suite() -> Check {
    let graphs = small_graphs()?;
    let (mut flat_edges, mut flat_graphs) = (0, 0);
    for g in &graphs {
        let violations = verify_lemma(g).map_err(|e| e.to_string())?;
        ensure!(violations.is_empty(), "{}: {violations:?}", emit_graph6(g));
        let report = curvature_report(g).map_err(|e| e.to_string())?;
        for e in report.edges.iter().filter(|e| e.kappa.is_zero()) {
            ensure!(
                two_pentagon_condition(g, (e.u, e.v)).map_err(|e| e.to_string())?,
                "edge {}-{}",
                e.u,
                e.v
            );
            flat_edges += 1;
        }
        if report.all_flat {
            ensure!(
                g.girth() == Some(5),
                "flat graph {} has girth {:?}",
                emit_graph6(g),
                g.girth()
            );
            flat_graphs += 1;
        }
    }
    Ok(format!("{} graphs, {flat_edges} zero-curvature edges, {flat_graphs} flat graphs of girth 5, 0 violations", graphs.len()))
}

fn random_regular(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Graph {
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(rng);
        if let Ok(g) = Graph::from_edge_list(n, stubs.chunks(2).map(|c| (c[0], c[1]))) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

fn random_regular_graph(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let d = rng.random_range(2..=4);
        let n = rng.random_range(d + 1..=16);
        if n * d % 2 == 0 {
            return random_regular(rng, n, d);
        }
    }
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut per_degree = BTreeMap::new();
    let mut edges = 0;
    while edges < 1000 {
        let g = random_regular_graph(&mut rng);
        let d = g.regular_degree().unwrap();
        let dist = distances(&g);
        let (x, y) = g.edges()[rng.random_range(0..g.size())];
        let p = Rational::new(1, d as i128 + 1);
        let (m1, m2) = (mu(&g, x, p).unwrap(), mu(&g, y, p).unwrap());
        let (flow, plan) = w1(&g, &m1, &m2).map_err(|e| e.to_string())?;
        let assignment = w1_uniform_regular(&g, x, y).map_err(|e| e.to_string())?;
        ensure!(
            flow == assignment,
            "{} edge {x}-{y}: flow {flow} vs assignment {assignment}",
            emit_graph6(&g)
        );
        ensure!(
            plan.has_marginals(&m1, &m2),
            "plan marginals off on {}",
            emit_graph6(&g)
        );
        ensure!(
            plan.cost(|a, b| dist[a][b]) == flow,
            "plan cost differs from value"
        );
        *per_degree.entry(d).or_insert(0) += 1;
        edges += 1;
    }
    Ok(format!(
        "{edges} edges (by degree {per_degree:?}), values equal, marginals exact"
    ))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(2..=12);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.random_range(0..v), v));
    }
    for _ in 0..rng.random_range(0..=2 * n) {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

fn bounds_and_signs() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut lo, mut hi) = (Rational::ONE, -Rational::from(2i64));
    for _ in 0..1000 {
        let g = random_graph(&mut rng);
        let (x, y) = g.edges()[rng.random_range(0..g.size())];
        let den = rng.random_range(1..=12);
        let p = Rational::new(rng.random_range(0..=den), den);
        let k = kappa_p(&g, x, y, p).map_err(|e| e.to_string())?;
        ensure!(
            (Rational::from(-2i64)..=Rational::ONE).contains(&k),
            "κ_{p} = {k} on {}",
            emit_graph6(&g)
        );
        let k1 = kappa_p(&g, x, y, Rational::ONE).map_err(|e| e.to_string())?;
        ensure!(k1.is_zero(), "κ_1 = {k1}");
        lo = lo.min(k);
        hi = hi.max(k);
    }
    let mut cubic = small_graphs()?;
    cubic.extend(
        ["petersen", "triplex", "dodecahedron", "gp:7:2", "gp:8:3"]
            .map(|n| named_graph(n).unwrap()),
    );
    while cubic.len() < 100 {
        let n = 2 * rng.random_range(5..=12);
        let g = random_regular(&mut rng, n, 3);
        if g.girth().is_some_and(|l| l >= 5) {
            cubic.push(g);
        }
    }
    let mut cubic_edges = 0;
    for g in &cubic {
        for &(x, y) in g.edges() {
            let k = kappa(g, x, y).map_err(|e| e.to_string())?;
            ensure!(k <= 0, "κ = {k} on cubic girth-5 graph {}", emit_graph6(g));
            cubic_edges += 1;
        }
    }
    Ok(format!(
        "1000 triples in [{lo}, {hi}], κ_1 = 0; {cubic_edges} edges of {} cubic girth>=5 graphs have κ <= 0",
        cubic.len()
    ))
}

fn format_fidelity() -> Check {
    for (text, n) in [("@", 1), ("A_", 2), ("Bw", 3)] {
        let g = match n {
            1 => Graph::from_edge_list(1, []).unwrap(),
            _ => Graph::complete(n).unwrap(),
        };
        ensure!(
            emit_graph6(&g) == text,
            "K{n} encodes as {}",
            emit_graph6(&g)
        );
        let parsed = parse_graph6(text).map_err(|e| e.to_string())?;
        ensure!(
            parsed == g && emit_graph6(&parsed) == text,
            "{text} does not round-trip"
        );
    }
    let mut total = 0;
    for (girth, orders) in [(3, 4..=12), (4, 4..=14), (5, 10..=16)] {
        for n in orders.step_by(2) {
            for g in
                generate(&GenerationConfig::new(n).with_girth(girth)).map_err(|e| e.to_string())?
            {
                let s = emit_graph6(&g);
                let back = parse_graph6(&s).map_err(|e| e.to_string())?;
                ensure!(
                    back == g && emit_graph6(&back) == s,
                    "{s} does not round-trip"
                );
                total += 1;
            }
        }
    }
    Ok(format!(
        "\"@\", \"A_\", \"Bw\" exact; {total} generated graphs round-trip"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("classification, desk tier", desk_tier),
        ("classification, full tier", full_tier),
        ("exact curvature values", exact_values),
        ("flat edges lie on two pentagons", lemma_suite),
        ("oracle equivalence", oracle_equivalence),
        ("bound and sign properties", bounds_and_signs),
        ("format fidelity", format_fidelity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
