//! Named graph fixtures.
//!
//! Labelings are fixed so that reports are reproducible:
//!
//! * `gp:n:k` — outer cycle `0..n`, spokes `i - (n+i)`, inner edges
//!   `(n+i) - (n + (i+k) mod n)`.
//! * `petersen` is `gp:5:2`, `dodecahedron` is `gp:10:2`.
//! * `triplex` — the 12-cycle `0 - 1 - ... - 11 - 0` with chords
//!   `0-6, 1-9, 2-7, 3-11, 4-8, 5-10`.
//! * `cycle:n` — `0 - 1 - ... - (n-1) - 0`.
//! * `complete:n` and `bipartite:a:b` (parts `0..a` and `a..a+b`).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Names of the three cubic girth-5 graphs that are Ricci-flat.
pub const FLAT_CUBIC_NAMES: [&str; 3] = ["petersen", "triplex", "dodecahedron"];

const TRIPLEX_CHORDS: [(usize, usize); 6] = [(0, 6), (1, 9), (2, 7), (3, 11), (4, 8), (5, 10)];

pub fn named_graph(name: &str) -> Result<Graph> {
    let mut parts = name.trim().split(':');
    let head = parts.next().unwrap_or_default().to_ascii_lowercase();
    let args: Vec<&str> = parts.collect();
    let int = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::BadParameter(format!("`{s}` in `{name}` is not a count")))
    };
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::BadParameter(format!(
                "`{head}` takes {k} parameter(s)"
            )))
        }
    };
    match head.as_str() {
        "petersen" => {
            arity(0)?;
            generalized_petersen(5, 2)
        }
        "dodecahedron" | "dodecahedral" => {
            arity(0)?;
            generalized_petersen(10, 2)
        }
        "triplex" => {
            arity(0)?;
            triplex()
        }
        "cycle" => {
            arity(1)?;
            cycle(int(args[0])?)
        }
        "gp" => {
            arity(2)?;
            generalized_petersen(int(args[0])?, int(args[1])?)
        }
        "complete" => {
            arity(1)?;
            match int(args[0])? {
                0 => Err(Error::BadParameter("complete:0".into())),
                n => Graph::complete(n),
            }
        }
        "bipartite" => {
            arity(2)?;
            match (int(args[0])?, int(args[1])?) {
                (0, _) | (_, 0) => Err(Error::BadParameter(name.to_string())),
                (a, b) => Graph::complete_bipartite(a, b),
            }
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!(
            "cycle:{n} needs at least 3 vertices"
        )));
    }
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::BadParameter(format!(
            "gp:{n}:{k} needs n >= 3 and 1 <= k < n/2"
        )));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    Graph::from_edge_list(2 * n, outer.chain(spokes).chain(inner))
}

pub fn triplex() -> Result<Graph> {
    let rim = (0..12).map(|i| (i, (i + 1) % 12));
    Graph::from_edge_list(12, rim.chain(TRIPLEX_CHORDS))
}
