//! Isomorph-free generation of connected cubic graphs with a girth floor,
//! and filtering of externally generated graph6 streams.
//!
//! The generator grows a labeled graph from vertex 0, always filling a slot
//! of the lowest vertex that still has degree below three, either by
//! joining an existing open vertex or by creating the next vertex. New
//! vertices are therefore always attached, so every completed graph is
//! connected, and the labels follow a breadth-first discovery order.
//! Joins that would close a cycle shorter than the girth floor are never
//! made. A completed graph is kept only if its labeling is a preferred
//! discovery order (root of least vertex signature, each vertex's children
//! in signature order) and its canonical form has not been seen yet.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::parse_graph6;
use crate::partial::PartialGraph;

pub const MAX_ORDER: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationConfig {
    pub n: usize,
    pub girth_min: usize,
    /// Skip partial graphs in which a finished edge can no longer lie on
    /// two pentagons meeting only in that edge. Only Ricci-flat graphs are
    /// guaranteed to survive. Requires `girth_min >= 5`.
    pub prune_two_pentagon: bool,
}

impl GenerationConfig {
    pub fn new(n: usize) -> Self {
        GenerationConfig {
            n,
            girth_min: 5,
            prune_two_pentagon: false,
        }
    }

    pub fn with_girth(mut self, girth_min: usize) -> Self {
        self.girth_min = girth_min;
        self
    }

    pub fn with_two_pentagon_pruning(mut self, on: bool) -> Self {
        self.prune_two_pentagon = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n % 2 == 1 {
            return Err(Error::OddOrder(self.n));
        }
        if self.n < 4 || self.n > MAX_ORDER {
            return Err(Error::UnsupportedSize(self.n));
        }
        if self.girth_min < 3 {
            return Err(Error::BadParameter(format!(
                "girth floor {} below 3",
                self.girth_min
            )));
        }
        if self.prune_two_pentagon && self.girth_min < 5 {
            return Err(Error::BadParameter(
                "two-pentagon pruning needs girth >= 5".into(),
            ));
        }
        Ok(())
    }
}

/// One canonically labeled representative per isomorphism class of
/// connected cubic graphs on `config.n` vertices with girth at least
/// `config.girth_min`, sorted by canonical form.
///
/// Work is split into subtrees and run on the current rayon pool; the
/// output does not depend on the number of threads.
pub fn generate(config: &GenerationConfig) -> Result<Vec<Graph>> {
    Ok(generate_classes(config)?.into_values().collect())
}

pub fn count(config: &GenerationConfig) -> Result<usize> {
    Ok(generate_classes(config)?.len())
}

pub fn generate_classes(config: &GenerationConfig) -> Result<BTreeMap<CanonicalForm, Graph>> {
    config.validate()?;
    let mut root = PartialGraph::new(config.n, config.girth_min);
    root.create_vertex();
    let mut search = Search {
        config,
        leaves: BTreeMap::new(),
        split_depth: Some(SPLIT_DEPTH),
    };
    let mut tasks = Vec::new();
    search.extend(&mut root, 0, &mut tasks);

    let merged = tasks
        .into_par_iter()
        .map(|mut state| {
            let mut local = Search {
                config,
                leaves: BTreeMap::new(),
                split_depth: None,
            };
            local.extend(&mut state, SPLIT_DEPTH, &mut Vec::new());
            local.leaves
        })
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut all = search.leaves;
    all.extend(merged);
    Ok(all)
}

// Edges placed before the search fans out to worker threads.
const SPLIT_DEPTH: usize = 8;

struct Search<'a> {
    config: &'a GenerationConfig,
    leaves: BTreeMap<CanonicalForm, Graph>,
    split_depth: Option<usize>,
}

impl Search<'_> {
    fn extend(&mut self, state: &mut PartialGraph, depth: usize, tasks: &mut Vec<PartialGraph>) {
        if self.split_depth == Some(depth) {
            tasks.push(state.clone());
            return;
        }
        let Some(v) = state.first_open() else {
            if state.created() == self.config.n {
                self.leaf(state);
            }
            return;
        };
        for w in state.join_floor(v) + 1..state.created() {
            if state.can_join(v, w) {
                state.add_edge(v, w);
                if self.admissible(state) {
                    self.extend(state, depth + 1, tasks);
                }
                state.remove_last_edge(v, w);
            }
        }
        if state.can_create() {
            let w = state.create_vertex();
            state.add_edge(v, w);
            if self.admissible(state) {
                self.extend(state, depth + 1, tasks);
            }
            state.remove_last_edge(v, w);
            state.remove_last_vertex();
        }
    }

    fn admissible(&self, state: &PartialGraph) -> bool {
        !self.config.prune_two_pentagon || state.saturated_edges_can_have_two_pentagons()
    }

    fn leaf(&mut self, state: &PartialGraph) {
        let g = state.to_graph();
        if !preferred_discovery_order(&g) {
            return;
        }
        if self.config.prune_two_pentagon && !all_edges_on_two_pentagons(&g) {
            return;
        }
        let cf = canonical_form(&g);
        self.leaves.entry(cf).or_insert_with(|| canonical_graph(&g));
    }
}

fn all_edges_on_two_pentagons(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&e| crate::pentagon::two_pentagon_condition(g, e).expect("edge of g"))
}

/// Labeling-invariant description of the neighborhood structure of `v`:
/// per BFS layer, its size, the edges inside it, and the edges to the next.
pub(crate) fn vertex_signature(g: &Graph, v: Vertex) -> Vec<u32> {
    let dist = g.bfs_distances(v);
    let depth = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut sig = vec![0u32; 3 * (depth + 1)];
    for (u, du) in dist.iter().enumerate() {
        let Some(du) = *du else { continue };
        sig[3 * du] += 1;
        for &w in g.neighbors(u) {
            match dist[w] {
                Some(dw) if dw == du && u < w => sig[3 * du + 1] += 1,
                Some(dw) if dw == du + 1 => sig[3 * du + 2] += 1,
                _ => {}
            }
        }
    }
    sig
}

/// The generator reaches every class through many labelings. Keep only
/// those rooted at a vertex of least signature whose vertices list their
/// children (neighbors they discovered) in nondecreasing signature order.
/// Every class has at least one such labeling among the generated ones.
fn preferred_discovery_order(g: &Graph) -> bool {
    let sigs: Vec<Vec<u32>> = (0..g.order()).map(|v| vertex_signature(g, v)).collect();
    if sigs.iter().any(|s| *s < sigs[0]) {
        return false;
    }
    for p in 0..g.order() {
        let children = g
            .neighbors(p)
            .iter()
            .copied()
            .filter(|&w| w > p && g.neighbors(w)[0] == p);
        let mut last: Option<&Vec<u32>> = None;
        for c in children {
            if last.is_some_and(|l| *l > sigs[c]) {
                return false;
            }
            last = Some(&sigs[c]);
        }
    }
    true
}

/// What a graph6 stream filter keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct IngestFilter {
    pub order: Option<usize>,
    pub regular_degree: Option<usize>,
    pub girth_min: Option<usize>,
    pub require_connected: bool,
}

impl IngestFilter {
    /// Connected cubic graphs with girth at least `girth_min`.
    pub fn cubic(girth_min: usize) -> Self {
        IngestFilter {
            order: None,
            regular_degree: Some(3),
            girth_min: Some(girth_min),
            require_connected: true,
        }
    }

    /// Reason for rejecting `g`, if any.
    pub fn rejection(&self, g: &Graph) -> Option<String> {
        if let Some(n) = self.order {
            if g.order() != n {
                return Some(format!("order {} != {n}", g.order()));
            }
        }
        if self.require_connected && !g.is_connected() {
            return Some("disconnected".into());
        }
        if let Some(d) = self.regular_degree {
            if g.regular_degree() != Some(d) {
                return Some(format!("not {d}-regular"));
            }
        }
        if let Some(floor) = self.girth_min {
            if g.girth().is_some_and(|girth| girth < floor) {
                return Some(format!("girth below {floor}"));
            }
        }
        None
    }
}

impl From<&GenerationConfig> for IngestFilter {
    fn from(c: &GenerationConfig) -> Self {
        IngestFilter {
            order: Some(c.n),
            ..IngestFilter::cubic(c.girth_min)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IngestError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IngestOutcome {
    pub kept: Vec<Graph>,
    pub read: usize,
    pub rejected: usize,
    pub errors: Vec<IngestError>,
}

/// Parses one graph6 string per line and keeps those passing `filter`.
/// Blank lines and an optional `>>graph6<<` header are skipped. With
/// `strict`, the first malformed line aborts with its line number;
/// otherwise it is recorded and reading continues.
pub fn ingest_graph6<R: BufRead>(
    input: R,
    filter: &IngestFilter,
    strict: bool,
) -> Result<IngestOutcome> {
    let mut out = IngestOutcome::default();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        out.read += 1;
        match parse_graph6(text) {
            Ok(g) => match filter.rejection(&g) {
                None => out.kept.push(g),
                Some(_) => out.rejected += 1,
            },
            Err(e) if strict => {
                return Err(Error::AtLine {
                    line: i + 1,
                    source: Box::new(e),
                });
            }
            Err(e) => out.errors.push(IngestError {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}
