//! Partially built cubic graphs for backtracking searches.

use crate::graph::{Graph, Vertex};

const NONE: u8 = u8::MAX;

/// A graph under construction with every degree at most three and no cycle
/// shorter than `girth_min`. Vertices `0..created` exist; at most
/// `capacity` may ever be created.
#[derive(Clone, Debug)]
pub(crate) struct PartialGraph {
    capacity: usize,
    created: usize,
    girth_min: usize,
    adj: Vec<[u8; 3]>,
    deg: Vec<u8>,
    fixed: Vec<u8>,
    // scratch for bounded BFS
    seen: Vec<u32>,
    stamp: u32,
}

impl PartialGraph {
    pub fn new(capacity: usize, girth_min: usize) -> Self {
        assert!(capacity < NONE as usize);
        PartialGraph {
            capacity,
            created: 0,
            girth_min,
            adj: vec![[NONE; 3]; capacity],
            deg: vec![0; capacity],
            fixed: vec![0; capacity],
            seen: vec![0; capacity],
            stamp: 0,
        }
    }

    pub fn created(&self) -> usize {
        self.created
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v][..self.deg[v] as usize]
            .iter()
            .map(|&w| w as usize)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u][..self.deg[u] as usize].contains(&(v as u8))
    }

    pub fn is_open(&self, v: Vertex) -> bool {
        self.deg[v] < 3
    }

    pub fn first_open(&self) -> Option<Vertex> {
        (0..self.created).find(|&v| self.is_open(v))
    }

    /// Freezes the current edges as a seed: they are ignored by
    /// [`PartialGraph::join_floor`].
    pub fn mark_seed(&mut self) {
        self.fixed.copy_from_slice(&self.deg);
    }

    /// While the slots of `v` are being filled, new neighbors are taken in
    /// increasing label order so each labeled graph is built once. Returns
    /// the label the next neighbor of `v` must exceed.
    pub fn join_floor(&self, v: Vertex) -> Vertex {
        let d = self.deg[v] as usize;
        if d > self.fixed[v] as usize {
            let last = self.adj[v][d - 1] as usize;
            if last > v {
                return last;
            }
        }
        v
    }

    pub fn can_create(&self) -> bool {
        self.created < self.capacity
    }

    pub fn create_vertex(&mut self) -> Vertex {
        assert!(self.can_create());
        self.created += 1;
        self.created - 1
    }

    pub fn remove_last_vertex(&mut self) {
        assert!(self.created > 0 && self.deg[self.created - 1] == 0);
        self.created -= 1;
    }

    /// Whether `u - v` can be added without exceeding degree three, creating
    /// a multi-edge, or closing a cycle shorter than `girth_min`.
    pub fn can_join(&mut self, u: Vertex, v: Vertex) -> bool {
        u != v
            && self.is_open(u)
            && self.is_open(v)
            && !self.adjacent(u, v)
            && !self.within(u, v, self.girth_min.saturating_sub(2))
    }

    /// Is `d(u, v) <= radius`?
    fn within(&mut self, u: Vertex, v: Vertex, radius: usize) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.fill(0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        let mut frontier = vec![u];
        self.seen[u] = stamp;
        for _ in 0..radius {
            let mut next = Vec::new();
            for &a in &frontier {
                for i in 0..self.deg[a] as usize {
                    let b = self.adj[a][i] as usize;
                    if b == v {
                        return true;
                    }
                    if self.seen[b] != stamp {
                        self.seen[b] = stamp;
                        next.push(b);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(self.is_open(u) && self.is_open(v) && !self.adjacent(u, v));
        self.adj[u][self.deg[u] as usize] = v as u8;
        self.deg[u] += 1;
        self.adj[v][self.deg[v] as usize] = u as u8;
        self.deg[v] += 1;
    }

    /// Undoes the most recent `add_edge(u, v)`.
    pub fn remove_last_edge(&mut self, u: Vertex, v: Vertex) {
        self.deg[u] -= 1;
        debug_assert_eq!(self.adj[u][self.deg[u] as usize], v as u8);
        self.adj[u][self.deg[u] as usize] = NONE;
        self.deg[v] -= 1;
        debug_assert_eq!(self.adj[v][self.deg[v] as usize], u as u8);
        self.adj[v][self.deg[v] as usize] = NONE;
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.created).flat_map(|u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        });
        Graph::from_edge_list(self.created, edges).expect("partial graphs stay simple")
    }

    /// Optimistic two-pentagon test for every edge whose endpoints are both
    /// saturated: could the edge still end up on two pentagons that share
    /// only that edge, given that open vertices may gain neighbors later?
    /// Exact once the endpoints' neighbors are saturated too. Assumes girth
    /// at least five.
    pub fn saturated_edges_can_have_two_pentagons(&self) -> bool {
        for x in 0..self.created {
            if self.is_open(x) {
                continue;
            }
            for y in self.neighbors(x) {
                if y > x && !self.is_open(y) && !self.edge_can_have_two_pentagons(x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn edge_can_have_two_pentagons(&self, x: Vertex, y: Vertex) -> bool {
        let cs: Vec<Vertex> = self.neighbors(x).filter(|&c| c != y).collect();
        let as_: Vec<Vertex> = self.neighbors(y).filter(|&a| a != x).collect();
        let ok = |c: Vertex, a: Vertex| self.pentagon_possible(x, y, c, a);
        (ok(cs[0], as_[0]) && ok(cs[1], as_[1])) || (ok(cs[0], as_[1]) && ok(cs[1], as_[0]))
    }

    /// Can `x - y - a - b - c - x` exist for some `b`, now or later?
    fn pentagon_possible(&self, x: Vertex, y: Vertex, c: Vertex, a: Vertex) -> bool {
        let c_open = self.is_open(c);
        let a_open = self.is_open(a);
        if c_open && a_open {
            return true;
        }
        let via = |from: Vertex, other: Vertex, other_open: bool, skip: Vertex| {
            self.neighbors(from).any(|b| {
                b != skip
                    && b != other
                    && (self.adjacent(b, other) || (other_open && self.is_open(b)))
            })
        };
        via(a, c, c_open, y) || (a_open && via(c, a, true, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_guard() {
        let mut p = PartialGraph::new(6, 5);
        for _ in 0..5 {
            p.create_vertex();
        }
        for i in 0..3 {
            p.add_edge(i, i + 1);
        }
        // 0-1-2-3 is a path: closing 0-3 makes a square
        assert!(!p.can_join(0, 3));
        assert!(!p.can_join(1, 3));
        p.add_edge(3, 4);
        assert!(p.can_join(0, 4));
        p.add_edge(0, 4);
        let g = p.to_graph();
        assert_eq!(g.girth(), Some(5));
        p.remove_last_edge(0, 4);
        assert_eq!(p.to_graph().girth(), None);
    }

    #[test]
    fn degree_cap() {
        let mut p = PartialGraph::new(5, 3);
        for _ in 0..5 {
            p.create_vertex();
        }
        for v in 1..4 {
            p.add_edge(0, v);
        }
        assert!(!p.is_open(0));
        assert!(!p.can_join(0, 4));
        assert_eq!(p.first_open(), Some(1));
        assert_eq!(p.join_floor(0), 3);
        assert_eq!(p.join_floor(1), 1);
    }

    #[test]
    fn petersen_passes_pentagon_check() {
        let g = crate::named::named_graph("petersen").unwrap();
        let mut p = PartialGraph::new(10, 5);
        for _ in 0..10 {
            p.create_vertex();
        }
        for &(u, v) in g.edges() {
            p.add_edge(u, v);
        }
        assert!(p.saturated_edges_can_have_two_pentagons());
    }

    #[test]
    fn hexagonal_rim_fails_pentagon_check() {
        // gp:7:2 is cubic with girth 5 but not every edge lies on two pentagons
        let g = crate::named::named_graph("gp:7:2").unwrap();
        let mut p = PartialGraph::new(14, 5);
        for _ in 0..14 {
            p.create_vertex();
        }
        for &(u, v) in g.edges() {
            p.add_edge(u, v);
        }
        let exact = g
            .edges()
            .iter()
            .all(|&e| crate::pentagon::two_pentagon_condition(&g, e).unwrap());
        assert_eq!(p.saturated_edges_can_have_two_pentagons(), exact);
    }
}
