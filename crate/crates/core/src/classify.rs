//! Ricci-flat classification of regular graphs, the two-pentagon check on
//! flat edges, and the constructive search over two-pentagon completions.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::curvature::{curvature_report, kappa_via_flow, render_table};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graph6::emit_graph6;
use crate::named::{named_graph, FLAT_CUBIC_NAMES};
use crate::partial::PartialGraph;
use crate::pentagon::two_pentagon_condition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatGraph {
    pub canonical: CanonicalForm,
    pub n: usize,
    pub degree: usize,
    pub girth: Option<usize>,
    /// Fixture name when the graph is one of the named ones.
    pub name: Option<String>,
    /// graph6 of the graph as it was given.
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub inspected: usize,
    pub flat: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub inspected: usize,
    /// One entry per isomorphism class, ordered by `(n, canonical)`.
    pub flat: Vec<FlatGraph>,
    pub lemma_violations: Vec<LemmaViolation>,
    pub skipped: Vec<Skipped>,
    pub per_n: BTreeMap<usize, Tally>,
}

enum Verdict {
    Skip(String),
    Done {
        n: usize,
        flat: Option<FlatGraph>,
        violations: Vec<Edge>,
    },
}

/// Computes the curvature of every graph, collects the Ricci-flat ones by
/// isomorphism class, and checks on every cubic graph of girth at least
/// five that each zero-curvature edge lies on two pentagons meeting only in
/// that edge. Graphs that are not connected and regular are skipped with a
/// reason. Flat graphs are re-checked with the general transport solver.
pub fn classify<I>(graphs: I) -> ClassificationResult
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let verdicts: Vec<Verdict> = graphs.par_iter().map(inspect).collect();

    let mut result = ClassificationResult::default();
    let mut flat: BTreeMap<(usize, CanonicalForm), FlatGraph> = BTreeMap::new();
    for (index, (g, verdict)) in graphs.iter().zip(verdicts).enumerate() {
        match verdict {
            Verdict::Skip(reason) => {
                result.skipped.push(Skipped {
                    index,
                    graph6: emit_graph6(g),
                    reason,
                });
            }
            Verdict::Done {
                n,
                flat: f,
                violations,
            } => {
                result.inspected += 1;
                let tally = result.per_n.entry(n).or_default();
                tally.inspected += 1;
                if let Some(f) = f {
                    tally.flat += 1;
                    flat.entry((n, f.canonical.clone())).or_insert(f);
                }
                let g6 = emit_graph6(g);
                result
                    .lemma_violations
                    .extend(violations.into_iter().map(|(u, v)| LemmaViolation {
                        graph6: g6.clone(),
                        u,
                        v,
                    }));
            }
        }
    }
    result.flat = flat.into_values().collect();
    result
}

fn inspect(g: &Graph) -> Verdict {
    let report = match curvature_report(g) {
        Ok(r) => r,
        Err(e) => return Verdict::Skip(e.to_string()),
    };
    let girth = g.girth();
    let violations = if report.degree == 3 && girth.is_some_and(|l| l >= 5) {
        report
            .edges
            .iter()
            .filter(|e| e.kappa.is_zero())
            .map(|e| (e.u, e.v))
            .filter(|&e| !two_pentagon_condition(g, e).expect("edge of g"))
            .collect()
    } else {
        Vec::new()
    };
    let flat = if report.all_flat {
        let confirmed = g
            .edges()
            .iter()
            .all(|&(u, v)| kappa_via_flow(g, u, v).is_ok_and(|k| k.is_zero()));
        if !confirmed {
            return Verdict::Skip("transport solver disagrees with assignment route".into());
        }
        let canonical = canonical_form(g);
        Some(FlatGraph {
            name: identify(&canonical, g),
            canonical,
            n: g.order(),
            degree: report.degree,
            girth,
            graph6: emit_graph6(g),
        })
    } else {
        None
    };
    Verdict::Done {
        n: g.order(),
        flat,
        violations,
    }
}

fn fixture_forms() -> &'static [(CanonicalForm, &'static str)] {
    static FORMS: OnceLock<Vec<(CanonicalForm, &'static str)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        FLAT_CUBIC_NAMES
            .iter()
            .map(|&name| (canonical_form(&named_graph(name).expect("fixture")), name))
            .collect()
    })
}

/// Name of the fixture `g` is isomorphic to, if any.
pub fn identify(canonical: &CanonicalForm, g: &Graph) -> Option<String> {
    if g.regular_degree() == Some(2) && g.is_connected() {
        return Some(format!("cycle:{}", g.order()));
    }
    fixture_forms()
        .iter()
        .find(|(cf, _)| cf == canonical)
        .map(|(_, name)| name.to_string())
}

/// Edges with `κ = 0` that do not lie on two pentagons meeting only in that
/// edge. For connected cubic graphs of girth at least five this is expected
/// to be empty.
pub fn verify_lemma(g: &Graph) -> Result<Vec<Edge>> {
    if g.regular_degree() != Some(3) {
        return Err(Error::NotCubic);
    }
    let girth = g.girth();
    if girth.is_some_and(|l| l < 5) {
        return Err(Error::GirthTooSmall {
            found: girth,
            required: 5,
        });
    }
    let report = curvature_report(g)?;
    Ok(report
        .edges
        .iter()
        .filter(|e| e.kappa.is_zero())
        .map(|e| (e.u, e.v))
        .filter(|&e| !two_pentagon_condition(g, e).expect("edge of g"))
        .collect())
}

impl ClassificationResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let rows: Vec<[String; 3]> = self
            .per_n
            .iter()
            .map(|(n, t)| [n.to_string(), t.inspected.to_string(), t.flat.to_string()])
            .collect();
        out.push_str(&render_table(
            &["n".into(), "inspected".into(), "flat".into()],
            &rows,
        ));
        let _ = writeln!(
            out,
            "inspected={} flat_classes={} lemma_violations={} skipped={}",
            self.inspected,
            self.flat.len(),
            self.lemma_violations.len(),
            self.skipped.len()
        );
        for f in &self.flat {
            let girth = f.girth.map_or("-".to_string(), |g| g.to_string());
            let name = f.name.as_deref().unwrap_or("UNKNOWN");
            let _ = writeln!(
                out,
                "flat n={} d={} girth={girth} {name} {}",
                f.n, f.degree, f.graph6
            );
        }
        for v in &self.lemma_violations {
            let _ = writeln!(out, "lemma violation {} edge {}-{}", v.graph6, v.u, v.v);
        }
        out
    }

    pub fn to_graph6_lines(&self) -> String {
        self.flat
            .iter()
            .map(|f| format!("{}\n", f.graph6))
            .collect()
    }
}

/// Node limit for [`search_two_pentagon_completions`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Canonically labeled, sorted by `(order, canonical form)`.
    pub graphs: Vec<Graph>,
    pub nodes: u64,
}

// x, y, x1, x2, y1, y2, v, u
const SEED_ORDER: usize = 8;
const SEED_EDGES: [Edge; 9] = [
    (0, 1), // x - y
    (0, 2), // x - x1
    (0, 3), // x - x2
    (1, 4), // y - y1
    (1, 5), // y - y2
    (2, 6), // x1 - v
    (4, 6), // y1 - v
    (3, 7), // x2 - u
    (5, 7), // y2 - u
];

/// Two pentagons `x x1 v y1 y` and `x x2 u y2 y` sharing only the edge `xy`.
pub fn two_pentagon_seed() -> Graph {
    Graph::from_edge_list(SEED_ORDER, SEED_EDGES).expect("valid seed")
}

/// All connected cubic graphs of girth at least five on at most `max_n`
/// vertices in which every edge lies on two pentagons meeting only in that
/// edge.
///
/// Backtracking from the two-pentagon seed: the lowest open vertex gains a
/// neighbor (an existing open vertex, or a new one while fewer than
/// `max_n` exist), joins closing cycles shorter than five are refused, and
/// a state is abandoned as soon as some edge with both endpoints saturated
/// can no longer end up on two such pentagons. Completed graphs are checked
/// exactly and deduplicated by canonical form.
pub fn search_two_pentagon_completions(max_n: usize) -> Result<Vec<Graph>> {
    Ok(search_two_pentagon_completions_with_budget(max_n, DEFAULT_SEARCH_BUDGET)?.graphs)
}

pub fn search_two_pentagon_completions_with_budget(
    max_n: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    if max_n < 10 {
        return Err(Error::BadParameter(format!(
            "max_n = {max_n}, need at least 10"
        )));
    }
    if max_n > crate::generate::MAX_ORDER {
        return Err(Error::UnsupportedSize(max_n));
    }
    let mut state = PartialGraph::new(max_n, 5);
    for _ in 0..SEED_ORDER {
        state.create_vertex();
    }
    for (u, v) in SEED_EDGES {
        state.add_edge(u, v);
    }
    state.mark_seed();

    let mut search = CompletionSearch {
        budget,
        nodes: 0,
        found: BTreeMap::new(),
    };
    search.extend(&mut state)?;
    Ok(SearchOutcome {
        graphs: search.found.into_values().collect(),
        nodes: search.nodes,
    })
}

struct CompletionSearch {
    budget: u64,
    nodes: u64,
    found: BTreeMap<(usize, CanonicalForm), Graph>,
}

impl CompletionSearch {
    fn extend(&mut self, state: &mut PartialGraph) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let Some(v) = state.first_open() else {
            self.leaf(state);
            return Ok(());
        };
        for w in state.join_floor(v) + 1..state.created() {
            if state.can_join(v, w) {
                state.add_edge(v, w);
                let r = self.step(state);
                state.remove_last_edge(v, w);
                r?;
            }
        }
        if state.can_create() {
            let w = state.create_vertex();
            state.add_edge(v, w);
            let r = self.step(state);
            state.remove_last_edge(v, w);
            state.remove_last_vertex();
            r?;
        }
        Ok(())
    }

    fn step(&mut self, state: &mut PartialGraph) -> Result<()> {
        if state.saturated_edges_can_have_two_pentagons() {
            self.extend(state)
        } else {
            Ok(())
        }
    }

    fn leaf(&mut self, state: &PartialGraph) {
        let g = state.to_graph();
        let all = g
            .edges()
            .iter()
            .all(|&e| two_pentagon_condition(&g, e).expect("edge of g"));
        if all {
            let cf = canonical_form(&g);
            self.found
                .entry((g.order(), cf))
                .or_insert_with(|| canonical_graph(&g));
        }
    }
}
