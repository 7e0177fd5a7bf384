//! Probability measures on vertices and transport plans between them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

/// Finitely supported probability measure. Stored masses are strictly
/// positive and sum to exactly one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbMeasure {
    support: BTreeMap<Vertex, Rational>,
}

impl ProbMeasure {
    /// Zero masses are dropped; negative masses or a total other than one
    /// are rejected.
    pub fn new<I>(masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Rational)>,
    {
        let mut support = BTreeMap::new();
        for (v, m) in masses {
            if m.is_negative() {
                return Err(Error::InvalidMeasure(format!(
                    "negative mass {m} at vertex {v}"
                )));
            }
            if m.is_zero() {
                continue;
            }
            if support.insert(v, m).is_some() {
                return Err(Error::InvalidMeasure(format!("vertex {v} listed twice")));
            }
        }
        let total: Rational = support.values().sum();
        if total != Rational::ONE {
            return Err(Error::InvalidMeasure(format!(
                "total mass {total}, expected 1/1"
            )));
        }
        Ok(ProbMeasure { support })
    }

    pub fn dirac(v: Vertex) -> Self {
        ProbMeasure {
            support: BTreeMap::from([(v, Rational::ONE)]),
        }
    }

    /// Uniform on the given distinct vertices.
    pub fn uniform(vertices: &[Vertex]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidMeasure(
                "uniform measure on no vertices".into(),
            ));
        }
        let m = Rational::new(1, vertices.len() as i128);
        ProbMeasure::new(vertices.iter().map(|&v| (v, m)))
    }

    pub fn mass(&self, v: Vertex) -> Rational {
        self.support.get(&v).copied().unwrap_or(Rational::ZERO)
    }

    pub fn support(&self) -> impl Iterator<Item = (Vertex, Rational)> + '_ {
        self.support.iter().map(|(&v, &m)| (v, m))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub(crate) fn check_on(&self, g: &Graph) -> Result<()> {
        match self.support.keys().next_back() {
            Some(&v) if v >= g.order() => Err(Error::InvalidMeasure(format!(
                "vertex {v} outside a graph on {} vertices",
                g.order()
            ))),
            _ => Ok(()),
        }
    }
}

/// Lazy random-walk measure: mass `p` at `x`, `(1 - p) / deg(x)` at each
/// neighbor.
pub fn mu(g: &Graph, x: Vertex, p: Rational) -> Result<ProbMeasure> {
    g.check_vertex(x)?;
    check_idleness(p)?;
    let d = g.degree(x);
    if d == 0 {
        return if p == Rational::ONE {
            Ok(ProbMeasure::dirac(x))
        } else {
            Err(Error::IsolatedVertex(x))
        };
    }
    let spread = (Rational::ONE - p) / Rational::from(d);
    let neighbors = g.neighbors(x).iter().map(|&z| (z, spread));
    ProbMeasure::new(std::iter::once((x, p)).chain(neighbors))
}

pub(crate) fn check_idleness(p: Rational) -> Result<()> {
    if p.is_negative() || p > Rational::ONE {
        Err(Error::IdlenessOutOfRange(p.to_string()))
    } else {
        Ok(())
    }
}

/// Joint measure `(source, target) -> mass`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TransportPlan {
    entries: BTreeMap<(Vertex, Vertex), Rational>,
}

impl TransportPlan {
    pub(crate) fn add(&mut self, from: Vertex, to: Vertex, mass: Rational) {
        if mass.is_zero() {
            return;
        }
        let slot = self.entries.entry((from, to)).or_insert(Rational::ZERO);
        *slot = *slot + mass;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((Vertex, Vertex), Rational)> + '_ {
        self.entries.iter().map(|(&k, &m)| (k, m))
    }

    pub fn get(&self, from: Vertex, to: Vertex) -> Rational {
        self.entries
            .get(&(from, to))
            .copied()
            .unwrap_or(Rational::ZERO)
    }

    pub fn source_marginal(&self) -> BTreeMap<Vertex, Rational> {
        let mut out = BTreeMap::new();
        for (&(a, _), &m) in &self.entries {
            let slot = out.entry(a).or_insert(Rational::ZERO);
            *slot = *slot + m;
        }
        out
    }

    pub fn target_marginal(&self) -> BTreeMap<Vertex, Rational> {
        let mut out = BTreeMap::new();
        for (&(_, b), &m) in &self.entries {
            let slot = out.entry(b).or_insert(Rational::ZERO);
            *slot = *slot + m;
        }
        out
    }

    /// Both marginals equal the given measures exactly.
    pub fn has_marginals(&self, source: &ProbMeasure, target: &ProbMeasure) -> bool {
        let same = |marg: BTreeMap<Vertex, Rational>, m: &ProbMeasure| {
            marg.len() == m.support_len() && marg.iter().all(|(&v, &x)| m.mass(v) == x)
        };
        self.entries.values().all(|m| !m.is_negative())
            && same(self.source_marginal(), source)
            && same(self.target_marginal(), target)
    }

    /// `sum d(a, b) * pi(a, b)` with `d` given by `dist(a, b)`.
    pub fn cost<F>(&self, mut dist: F) -> Rational
    where
        F: FnMut(Vertex, Vertex) -> usize,
    {
        self.entries
            .iter()
            .map(|(&(a, b), &m)| Rational::from(dist(a, b)) * m)
            .sum()
    }
}
