//! Ollivier-Ricci curvature `κ_p` and the Lin-Lu-Yau curvature `κ`.
//!
//! `κ_p(x, y) = 1 - W1(μ_x^p, μ_y^p)` for an edge `xy`. On a `d`-regular
//! graph the Lin-Lu-Yau curvature has the closed form
//! `κ(x, y) = (d+1)/d · κ_{1/(d+1)}(x, y)`, which is what [`kappa`] computes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::measure::{check_idleness, mu};
use crate::rational::Rational;
use crate::transport::{ball_assignment_cost, w1};

pub fn kappa_p(g: &Graph, x: Vertex, y: Vertex, p: Rational) -> Result<Rational> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    check_idleness(p)?;
    if !g.has_edge(x, y) {
        return Err(Error::NotAdjacent(x, y));
    }
    g.require_connected()?;
    let (dist, _) = w1(g, &mu(g, x, p)?, &mu(g, y, p)?)?;
    Ok(Rational::ONE - dist)
}

/// Idleness at which the regular-graph closed form is evaluated.
pub fn regular_idleness(degree: usize) -> Rational {
    Rational::new(1, degree as i128 + 1)
}

/// Lin-Lu-Yau curvature of an edge of a connected regular graph.
pub fn kappa(g: &Graph, x: Vertex, y: Vertex) -> Result<Rational> {
    Ok(edge_values(g, x, y)?.1)
}

/// `(κ_{1/(d+1)}, κ)` for the edge `xy`, via the closed-ball assignment.
fn edge_values(g: &Graph, x: Vertex, y: Vertex) -> Result<(Rational, Rational)> {
    let (cost, size) = ball_assignment_cost(g, x, y)?;
    let d = size - 1;
    let idle = Rational::ONE - Rational::new(cost as i128, size as i128);
    let k = idle * Rational::new(size as i128, d as i128);
    debug_assert_eq!(
        Ok(k),
        kappa_via_flow(g, x, y),
        "assignment and flow routes disagree"
    );
    Ok((idle, k))
}

/// Same value as [`kappa`], computed through the general transport solver
/// on `μ^{1/(d+1)}` instead of the assignment shortcut.
pub fn kappa_via_flow(g: &Graph, x: Vertex, y: Vertex) -> Result<Rational> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if d == 0 {
        return Err(Error::NotAdjacent(x, y));
    }
    let idle = kappa_p(g, x, y, regular_idleness(d))?;
    Ok(idle * Rational::new(d as i128 + 1, d as i128))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EdgeCurvature {
    pub u: Vertex,
    pub v: Vertex,
    /// `κ_p` at `p = 1/(d+1)`.
    pub kappa_idle: Rational,
    pub kappa: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CurvatureReport {
    pub order: usize,
    pub degree: usize,
    pub edges: Vec<EdgeCurvature>,
    pub min_kappa: Rational,
    pub max_kappa: Rational,
    pub all_flat: bool,
}

pub fn curvature_report(g: &Graph) -> Result<CurvatureReport> {
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    g.require_connected()?;
    if degree == 0 {
        return Err(Error::BadParameter("curvature of an edgeless graph".into()));
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (kappa_idle, kappa) = edge_values(g, u, v)?;
            Ok(EdgeCurvature {
                u,
                v,
                kappa_idle,
                kappa,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let min_kappa = edges
        .iter()
        .map(|e| e.kappa)
        .min()
        .expect("at least one edge");
    let max_kappa = edges
        .iter()
        .map(|e| e.kappa)
        .max()
        .expect("at least one edge");
    let all_flat = edges.iter().all(|e| e.kappa.is_zero());
    Ok(CurvatureReport {
        order: g.order(),
        degree,
        edges,
        min_kappa,
        max_kappa,
        all_flat,
    })
}

/// Ricci-flat: `κ = 0` exactly on every edge.
pub fn is_ricci_flat(g: &Graph) -> Result<bool> {
    Ok(curvature_report(g)?.all_flat)
}

#[derive(Serialize)]
struct EdgeLine {
    u: Vertex,
    v: Vertex,
    kappa: Rational,
}

#[derive(Serialize)]
struct SummaryLine {
    summary: bool,
    order: usize,
    edges: usize,
    min_kappa: Rational,
    max_kappa: Rational,
    all_flat: bool,
}

impl CurvatureReport {
    /// One `{"u","v","kappa"}` object per edge, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let line = EdgeLine {
                u: e.u,
                v: e.v,
                kappa: e.kappa,
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        let summary = SummaryLine {
            summary: true,
            order: self.order,
            edges: self.edges.len(),
            min_kappa: self.min_kappa,
            max_kappa: self.max_kappa,
            all_flat: self.all_flat,
        };
        out.push_str(&serde_json::to_string(&summary).expect("serializable"));
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .edges
            .iter()
            .map(|e| {
                [
                    e.u.to_string(),
                    e.v.to_string(),
                    e.kappa_idle.to_string(),
                    e.kappa.to_string(),
                ]
            })
            .collect();
        let p = regular_idleness(self.degree);
        let header = [
            "u".to_string(),
            "v".to_string(),
            format!("kappa_{p}"),
            "kappa".to_string(),
        ];
        let mut out = render_table(&header, &rows);
        let _ = writeln!(
            out,
            "edges={} min={} max={} all_flat={}",
            self.edges.len(),
            self.min_kappa,
            self.max_kappa,
            self.all_flat
        );
        out
    }
}

/// `κ_p` on every edge of a connected graph, for a fixed idleness `p`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdlenessReport {
    pub idleness: Rational,
    pub edges: Vec<(Vertex, Vertex, Rational)>,
    pub min_kappa_p: Rational,
    pub max_kappa_p: Rational,
}

pub fn idleness_report(g: &Graph, p: Rational) -> Result<IdlenessReport> {
    check_idleness(p)?;
    g.require_connected()?;
    if g.size() == 0 {
        return Err(Error::BadParameter("curvature of an edgeless graph".into()));
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| Ok((u, v, kappa_p(g, u, v, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let min_kappa_p = edges.iter().map(|e| e.2).min().expect("nonempty");
    let max_kappa_p = edges.iter().map(|e| e.2).max().expect("nonempty");
    Ok(IdlenessReport {
        idleness: p,
        edges,
        min_kappa_p,
        max_kappa_p,
    })
}

impl IdlenessReport {
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for &(u, v, k) in &self.edges {
            let line = serde_json::json!({ "u": u, "v": v, "kappa_p": k.to_string() });
            let _ = writeln!(out, "{line}");
        }
        let summary = serde_json::json!({
            "summary": true,
            "idleness": self.idleness.to_string(),
            "edges": self.edges.len(),
            "min_kappa_p": self.min_kappa_p.to_string(),
            "max_kappa_p": self.max_kappa_p.to_string(),
        });
        let _ = writeln!(out, "{summary}");
        out
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 3]> = self
            .edges
            .iter()
            .map(|&(u, v, k)| [u.to_string(), v.to_string(), k.to_string()])
            .collect();
        let header = [
            "u".to_string(),
            "v".to_string(),
            format!("kappa_{}", self.idleness),
        ];
        let mut out = render_table(&header, &rows);
        let _ = writeln!(
            out,
            "edges={} min={} max={}",
            self.edges.len(),
            self.min_kappa_p,
            self.max_kappa_p
        );
        out
    }
}

/// Right-aligned columns, two spaces apart.
pub(crate) fn render_table<const N: usize>(header: &[String; N], rows: &[[String; N]]) -> String {
    let mut width: [usize; N] = std::array::from_fn(|i| header[i].len());
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows) {
        let line: Vec<String> = row
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
