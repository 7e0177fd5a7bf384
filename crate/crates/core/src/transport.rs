//! Exact Wasserstein-1 distance between vertex measures.

use crate::error::{Error, Result};
use crate::flow::{min_cost_assignment, MinCostFlow};
use crate::graph::{Graph, Vertex};
use crate::measure::{ProbMeasure, TransportPlan};
use crate::rational::Rational;

/// Optimal transport cost between `m1` and `m2` under the hop metric of
/// `g`, together with one optimal plan.
///
/// The transportation network only spans the two supports. Masses are
/// scaled by their common denominator to integers, the flow problem is
/// solved exactly, and the plan is scaled back.
pub fn w1(g: &Graph, m1: &ProbMeasure, m2: &ProbMeasure) -> Result<(Rational, TransportPlan)> {
    m1.check_on(g)?;
    m2.check_on(g)?;
    g.require_connected()?;

    let sources: Vec<(Vertex, Rational)> = m1.support().collect();
    let targets: Vec<(Vertex, Rational)> = m2.support().collect();
    let scale = Rational::common_denominator(sources.iter().chain(targets.iter()).map(|(_, m)| m));

    let (s, t) = (0, 1 + sources.len() + targets.len());
    let mut net = MinCostFlow::new(t + 1);
    let mut cells = Vec::with_capacity(sources.len() * targets.len());
    for (i, &(a, ma)) in sources.iter().enumerate() {
        let supply = ma.scaled_to_integer(scale);
        net.add_arc(s, 1 + i, supply, 0);
        let dist = g.bfs_distances(a);
        for (j, &(b, mb)) in targets.iter().enumerate() {
            let d = dist[b].ok_or(Error::DisconnectedGraph)?;
            let cap = supply.min(mb.scaled_to_integer(scale));
            let arc = net.add_arc(1 + i, 1 + sources.len() + j, cap, d as i128);
            cells.push((a, b, arc));
        }
    }
    for (j, &(_, mb)) in targets.iter().enumerate() {
        net.add_arc(1 + sources.len() + j, t, mb.scaled_to_integer(scale), 0);
    }

    let (flow, cost) = net.run(s, t, scale);
    assert_eq!(
        flow, scale,
        "balanced transportation problem must be feasible"
    );

    let unit = Rational::new(1, scale);
    let mut plan = TransportPlan::default();
    for (a, b, arc) in cells {
        let f = net.flow_on(arc);
        if f > 0 {
            plan.add(a, b, Rational::from_integer(f) * unit);
        }
    }
    Ok((Rational::from_integer(cost) * unit, plan))
}

/// Closed ball `{v} ∪ N(v)`.
pub fn closed_ball(g: &Graph, v: Vertex) -> Vec<Vertex> {
    let mut ball = Vec::with_capacity(g.degree(v) + 1);
    ball.push(v);
    ball.extend_from_slice(g.neighbors(v));
    ball
}

/// W1 between the uniform measures on the closed balls of adjacent `x` and
/// `y` in a regular graph.
///
/// Both measures put mass `1/(d+1)` on `d+1` points, so an optimal plan can
/// be taken to be a permutation; the value is the minimum-cost bijection
/// between the balls divided by `d+1`.
pub fn w1_uniform_regular(g: &Graph, x: Vertex, y: Vertex) -> Result<Rational> {
    let (cost, size) = ball_assignment_cost(g, x, y)?;
    Ok(Rational::new(cost as i128, size as i128))
}

/// Minimum total distance of a bijection between the two closed balls, and
/// the ball size.
pub(crate) fn ball_assignment_cost(g: &Graph, x: Vertex, y: Vertex) -> Result<(i64, usize)> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.has_edge(x, y) {
        return Err(Error::NotAdjacent(x, y));
    }
    g.require_connected()?;

    let bx = closed_ball(g, x);
    let by = closed_ball(g, y);
    let cost: Vec<Vec<i64>> = bx
        .iter()
        .map(|&a| {
            let dist = g.bfs_distances(a);
            by.iter()
                .map(|&b| dist[b].expect("connected") as i64)
                .collect()
        })
        .collect();
    let (total, _) = min_cost_assignment(&cost);
    Ok((total, bx.len()))
}
