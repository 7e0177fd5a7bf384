//! Pentagons (5-cycles) through an edge.

use crate::error::Result;
use crate::graph::{Edge, Graph, Vertex};

pub type Pentagon = [Vertex; 5];

/// Rotation/reflection of `c` that is lexicographically least.
pub fn normalize_cycle(c: Pentagon) -> Pentagon {
    let mut best = c;
    for start in 0..5 {
        let fwd: Pentagon = std::array::from_fn(|i| c[(start + i) % 5]);
        let rev: Pentagon = std::array::from_fn(|i| c[(start + 5 - i) % 5]);
        best = best.min(fwd).min(rev);
    }
    best
}

/// Every 5-cycle of `g` through `e`, normalized and sorted.
pub fn five_cycles_through_edge(g: &Graph, e: Edge) -> Result<Vec<Pentagon>> {
    g.check_edge(e)?;
    let (x, y) = e;
    let mut out = Vec::new();
    // x - y - a - b - c - x
    for &a in g.neighbors(y) {
        if a == x {
            continue;
        }
        for &c in g.neighbors(x) {
            if c == y || c == a {
                continue;
            }
            for &b in g.neighbors(a) {
                if b != y && b != x && b != c && g.has_edge(b, c) {
                    out.push(normalize_cycle([x, y, a, b, c]));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Whether `e` lies on two pentagons whose only common vertices are the
/// endpoints of `e` (and hence whose only common edge is `e`).
pub fn two_pentagon_condition(g: &Graph, e: Edge) -> Result<bool> {
    let cycles = five_cycles_through_edge(g, e)?;
    Ok(has_disjoint_pair(&cycles, e))
}

fn has_disjoint_pair(cycles: &[Pentagon], (x, y): Edge) -> bool {
    let inner =
        |c: &Pentagon| -> Vec<Vertex> { c.iter().copied().filter(|&v| v != x && v != y).collect() };
    cycles.iter().enumerate().any(|(i, p)| {
        let pi = inner(p);
        cycles[i + 1..]
            .iter()
            .any(|q| inner(q).iter().all(|v| !pi.contains(v)))
    })
}
