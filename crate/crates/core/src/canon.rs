//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell
//! in turn, and recurse. Every node carries a labeling-invariant trace (cell
//! sizes and quotient counts of its equitable partition). A leaf is ranked by
//! its trace path first and then by the graph6 string of the graph relabeled
//! by the leaf's discrete partition; the least leaf wins. Subtrees whose
//! trace prefix is already worse than the best leaf are cut.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, Vertex};
use crate::graph6::emit_graph6;

/// Isomorphism-class identifier: the graph6 string of the canonically
/// relabeled graph. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(emit_graph6(&canonical_graph(g)).into_bytes())
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut search = Search { g, best: None };
    let mut root = Partition::unit(n);
    let mut trace = Vec::new();
    trace.push(root.refine(g));
    search.descend(root, &mut trace);
    let best = search.best.expect("search visits at least one leaf");
    best.perm
}

struct Leaf {
    trace: Vec<Vec<u32>>,
    code: String,
    perm: Vec<Vertex>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition, trace: &mut Vec<Vec<u32>>) {
        if let Some(best) = &self.best {
            let depth = trace.len();
            let prefix = &best.trace[..depth.min(best.trace.len())];
            if trace.as_slice() > prefix {
                return;
            }
        }
        let Some(target) = part.cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&part, trace);
            return;
        };
        for &v in &part.cells[target] {
            let mut child = part.clone();
            child.individualize(target, v);
            trace.push(child.refine(self.g));
            self.descend(child, trace);
            trace.pop();
        }
    }

    fn leaf(&mut self, part: &Partition, trace: &[Vec<u32>]) {
        let mut perm = vec![0; part.cell_of.len()];
        for (label, cell) in part.cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let code = emit_graph6(&self.g.relabel(&perm));
        let better = match &self.best {
            None => true,
            Some(b) => (trace, code.as_str()) < (b.trace.as_slice(), b.code.as_str()),
        };
        if better {
            self.best = Some(Leaf {
                trace: trace.to_vec(),
                code,
                perm,
            });
        }
    }
}

#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<Vertex>>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition {
            cells: vec![(0..n).collect()],
            cell_of: vec![0; n],
        }
    }

    fn individualize(&mut self, target: usize, v: Vertex) {
        let rest: Vec<Vertex> = self.cells[target]
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect();
        self.cells[target] = vec![v];
        self.cells.insert(target + 1, rest);
        self.reindex();
    }

    fn reindex(&mut self) {
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                self.cell_of[v] = i;
            }
        }
    }

    /// Splits cells by neighbor counts into every other cell until the
    /// partition is equitable, then returns its invariant trace.
    fn refine(&mut self, g: &Graph) -> Vec<u32> {
        loop {
            let k = self.cells.len();
            let mut next = Vec::with_capacity(k);
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, Vertex)> =
                    cell.iter().map(|&v| (self.profile(g, v, k), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            let changed = next.len() != k;
            self.cells = next;
            self.reindex();
            if !changed {
                break;
            }
        }
        let k = self.cells.len();
        let mut trace = Vec::with_capacity(k * (k + 1));
        for cell in &self.cells {
            trace.push(cell.len() as u32);
            trace.extend(self.profile(g, cell[0], k));
        }
        trace
    }

    fn profile(&self, g: &Graph, v: Vertex, k: usize) -> Vec<u32> {
        let mut counts = vec![0u32; k];
        for &w in g.neighbors(v) {
            counts[self.cell_of[w]] += 1;
        }
        counts
    }
}
