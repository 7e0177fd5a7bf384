//! Integer min-cost flow by successive shortest augmenting paths.
//!
//! Shortest paths in the residual network are found with Bellman-Ford
//! (queue-based), which tolerates the negative reverse-arc costs without
//! maintaining potentials. The networks built here have a few dozen arcs.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i128,
    cost: i128,
}

#[derive(Clone, Debug)]
pub struct MinCostFlow {
    out: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
    original_cap: Vec<i128>,
}

/// Handle to a forward arc added with [`MinCostFlow::add_arc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcId(usize);

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            out: vec![Vec::new(); nodes],
            arcs: Vec::new(),
            original_cap: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128, cost: i128) -> ArcId {
        assert!(cap >= 0, "negative capacity");
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
        self.original_cap.extend([cap, 0]);
        self.out[from].push(id);
        self.out[to].push(id + 1);
        ArcId(id)
    }

    pub fn flow_on(&self, arc: ArcId) -> i128 {
        self.original_cap[arc.0] - self.arcs[arc.0].cap
    }

    /// Sends up to `limit` units from `source` to `sink` at minimum cost.
    /// Returns `(flow, cost)`.
    pub fn run(&mut self, source: usize, sink: usize, limit: i128) -> (i128, i128) {
        let n = self.out.len();
        let mut flow = 0;
        let mut cost = 0i128;
        let mut dist = vec![i128::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        while flow < limit {
            dist.fill(i128::MAX);
            via.fill(usize::MAX);
            dist[source] = 0;
            queue.push_back(source);
            queued[source] = true;
            while let Some(u) = queue.pop_front() {
                queued[u] = false;
                for &a in &self.out[u] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && dist[u] + arc.cost < dist[arc.to] {
                        dist[arc.to] = dist[u] + arc.cost;
                        via[arc.to] = a;
                        if !queued[arc.to] {
                            queued[arc.to] = true;
                            queue.push_back(arc.to);
                        }
                    }
                }
            }
            if dist[sink] == i128::MAX {
                break;
            }

            let mut push = limit - flow;
            let mut v = sink;
            while v != source {
                let a = via[v];
                push = push.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let a = via[v];
                self.arcs[a].cap -= push;
                self.arcs[a ^ 1].cap += push;
                v = self.arcs[a ^ 1].to;
            }
            flow += push;
            cost = cost
                .checked_add(push.checked_mul(dist[sink]).expect("flow cost overflow"))
                .expect("flow cost overflow");
        }
        (flow, cost)
    }
}

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// method with potentials). Returns `(cost, assignment)` where row `i` is
/// matched to column `assignment[i]`.
pub fn min_cost_assignment(cost: &[Vec<i64>]) -> (i64, Vec<usize>) {
    let n = cost.len();
    assert!(
        cost.iter().all(|row| row.len() == n),
        "cost matrix must be square"
    );
    if n == 0 {
        return (0, Vec::new());
    }
    // 1-based arrays; column 0 is the virtual start.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut match_of_col = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        match_of_col[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = match_of_col[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[match_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if match_of_col[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            match_of_col[j0] = match_of_col[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[match_of_col[j] - 1] = j - 1;
    }
    let total = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| cost[i][j])
        .sum();
    (total, assignment)
}
