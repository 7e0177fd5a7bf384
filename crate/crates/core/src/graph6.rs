//! graph6 encoding, as produced by nauty's `geng`.
//!
//! Size prefix `N(n)`, then the upper triangle of the adjacency matrix read
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with zero bits
//! to a multiple of six, each six-bit group written as `value + 63`.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_ORDER: usize = 258_047;

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        assert!(n <= MAX_ORDER, "graph too large for graph6");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            group = (group << 1) | u8::from(col.binary_search(&i).is_ok());
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedGraph6(msg);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(BIAS..=126).contains(&c)) {
        return Err(bad(format!(
            "byte {c} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty string".into())),
        [126, 126, ..] => return Err(bad("8-byte size prefix is not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated size prefix".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &c| (acc << 6) | usize::from(c - BIAS));
            if n <= 62 {
                return Err(bad(format!("non-minimal size prefix for n = {n}")));
            }
            (n, &rest[3..])
        }
        [c, rest @ ..] => (usize::from(c - BIAS), rest),
    };
    if n == 0 {
        return Err(bad("graph with zero vertices".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(bad("nonzero padding bits".into()));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, pairs)
}
