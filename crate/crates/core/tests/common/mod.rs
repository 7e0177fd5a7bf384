//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the transport, canonical-labeling, pentagon or
//! generation code it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::Rng;
use ricciflat_core::{Graph, Rational};

pub fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
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

/// Every simple cycle of length `len`, as its vertex sequence starting at
/// its smallest vertex, in one of the two directions.
pub fn cycles_of_length(g: &Graph, len: usize) -> BTreeSet<Vec<usize>> {
    fn walk(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(last, path[0]) && path[1] < path[len - 1] {
                out.insert(path.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                walk(g, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        walk(g, len, &mut vec![s], &mut out);
    }
    out
}

pub fn cycle_edges(c: &[usize]) -> BTreeSet<(usize, usize)> {
    (0..c.len())
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Girth by checking cycle lengths 3, 4, ... up to `n`.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    (3..=g.order()).find(|&l| !cycles_of_length(g, l).is_empty())
}

pub fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut pg = UnGraph::<(), ()>::with_capacity(g.order(), g.size());
    for _ in 0..g.order() {
        pg.add_node(());
    }
    for &(u, v) in g.edges() {
        pg.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    pg
}

pub fn vf2_isomorphic(a: &Graph, b: &Graph) -> bool {
    petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Minimum over bijections `a[i] -> b[perm[i]]` of the summed distances.
pub fn min_bijection_cost(dist: &[Vec<usize>], a: &[usize], b: &[usize]) -> usize {
    assert_eq!(a.len(), b.len());
    permutations(a.len())
        .into_iter()
        .map(|p| (0..a.len()).map(|i| dist[a[i]][b[p[i]]]).sum())
        .min()
        .unwrap()
}

pub fn closed_ball(g: &Graph, v: usize) -> Vec<usize> {
    std::iter::once(v)
        .chain(g.neighbors(v).iter().copied())
        .collect()
}

/// `κ` of a regular graph by enumerating every bijection of closed balls.
pub fn kappa_by_bijections(g: &Graph, x: usize, y: usize) -> Rational {
    let d = g.degree(x) as i128;
    let dist = all_pairs(g);
    let cost = min_bijection_cost(&dist, &closed_ball(g, x), &closed_ball(g, y)) as i128;
    (Rational::ONE - Rational::new(cost, d + 1)) * Rational::new(d + 1, d)
}

/// W1 through Kantorovich duality: the maximum of `Σ f (m1 - m2)` over
/// integer-valued 1-Lipschitz `f` on the union of the supports, pinned to
/// zero at the first point. The difference-constraint system is totally
/// unimodular with integer right-hand sides, so an integer optimum exists.
pub fn w1_by_duality(
    dist: &[Vec<usize>],
    m1: &[(usize, Rational)],
    m2: &[(usize, Rational)],
) -> Rational {
    let mut pts: Vec<usize> = m1.iter().chain(m2).map(|&(v, _)| v).collect();
    pts.sort_unstable();
    pts.dedup();
    let weight: Vec<Rational> = pts
        .iter()
        .map(|&p| {
            let a: Rational = m1.iter().filter(|(v, _)| *v == p).map(|(_, m)| *m).sum();
            let b: Rational = m2.iter().filter(|(v, _)| *v == p).map(|(_, m)| *m).sum();
            a - b
        })
        .collect();
    let span = pts
        .iter()
        .flat_map(|&a| pts.iter().map(move |&b| dist[a][b]))
        .max()
        .unwrap() as i64;

    let k = pts.len();
    let mut f = vec![0i64; k];
    let mut best: Option<Rational> = None;
    fn go(
        i: usize,
        f: &mut Vec<i64>,
        pts: &[usize],
        dist: &[Vec<usize>],
        weight: &[Rational],
        span: i64,
        best: &mut Option<Rational>,
    ) {
        if i == pts.len() {
            let val: Rational = (0..pts.len())
                .map(|j| weight[j] * Rational::from(f[j]))
                .sum();
            if best.is_none_or(|b| val > b) {
                *best = Some(val);
            }
            return;
        }
        for x in -span..=span {
            if (0..i).all(|j| (x - f[j]).unsigned_abs() as usize <= dist[pts[i]][pts[j]]) {
                f[i] = x;
                go(i + 1, f, pts, dist, weight, span, best);
            }
        }
    }
    // f(pts[0]) = 0
    go(1, &mut f, &pts, dist, &weight, span, &mut best);
    if k == 1 {
        return Rational::ZERO;
    }
    best.unwrap()
}

/// Uniformly random simple connected `d`-regular graph on `n` vertices by
/// rejection sampling of random pairings.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, d: usize) -> Graph {
    assert!(n * d % 2 == 0 && d < n);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edge_list(n, pairs) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// All connected cubic graphs on `n` vertices with girth >= `girth`, one
/// per isomorphism class, by filling the adjacency matrix row by row and
/// deduplicating with VF2.
///
/// Every cubic graph has a labeling with 0 ~ 1, 2, 3, so those edges are
/// fixed. For girth >= 5 and n >= 10 the ten vertices within distance two
/// of vertex 0 form a tree, and 1 ~ 4, 5; 2 ~ 6, 7; 3 ~ 8, 9 are fixed too.
pub fn naive_cubic_classes(n: usize, girth: usize) -> Vec<Graph> {
    let mut adj = vec![Vec::<usize>::new(); n];
    let mut classes: Vec<Graph> = Vec::new();
    let mut prefix = vec![(0, 1), (0, 2), (0, 3)];
    if girth >= 5 && n >= 10 {
        prefix.extend([(1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]);
    }
    for (u, v) in prefix {
        adj[u].push(v);
        adj[v].push(u);
    }

    fn dist_at_most(adj: &[Vec<usize>], a: usize, b: usize, r: usize) -> bool {
        let mut frontier = vec![a];
        let mut seen = vec![false; adj.len()];
        seen[a] = true;
        for _ in 0..r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &adj[u] {
                    if w == b {
                        return true;
                    }
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    fn fill(row: usize, adj: &mut Vec<Vec<usize>>, girth: usize, classes: &mut Vec<Graph>) {
        let n = adj.len();
        if row == n {
            let edges =
                (0..n).flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
            let g = Graph::from_edge_list(n, edges).unwrap();
            if g.is_connected() && !classes.iter().any(|c| vf2_isomorphic(c, &g)) {
                classes.push(g);
            }
            return;
        }
        let need = 3 - adj[row].len();
        let candidates: Vec<usize> = (row + 1..n)
            .filter(|&j| adj[j].len() < 3 && !adj[row].contains(&j))
            .collect();
        choose(row, need, &candidates, 0, adj, girth, classes);
    }

    fn choose(
        row: usize,
        need: usize,
        cand: &[usize],
        from: usize,
        adj: &mut Vec<Vec<usize>>,
        girth: usize,
        classes: &mut Vec<Graph>,
    ) {
        if need == 0 {
            fill(row + 1, adj, girth, classes);
            return;
        }
        for i in from..cand.len() {
            let j = cand[i];
            if adj[j].len() < 3 && !dist_at_most(adj, row, j, girth - 2) {
                adj[row].push(j);
                adj[j].push(row);
                choose(row, need - 1, cand, i + 1, adj, girth, classes);
                adj[row].pop();
                adj[j].pop();
            }
        }
    }

    fill(0, &mut adj, girth, &mut classes);
    classes
}
