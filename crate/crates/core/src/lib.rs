//! Exact discrete Ricci curvature on finite graphs, isomorph-free
//! generation of cubic graphs, and the classification of Ricci-flat cubic
//! graphs of girth at least five.

pub mod canon;
pub mod classify;
pub mod curvature;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod measure;
pub mod named;
pub mod pentagon;
pub mod rational;
pub mod transport;

mod partial;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm};
pub use curvature::{
    curvature_report, is_ricci_flat, kappa, kappa_p, CurvatureReport, EdgeCurvature,
};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Edge, Graph, Vertex};
pub use graph6::{emit_graph6, parse_graph6};
pub use measure::{mu, ProbMeasure, TransportPlan};
pub use named::named_graph;
pub use pentagon::{five_cycles_through_edge, two_pentagon_condition};
pub use rational::Rational;
pub use transport::{w1, w1_uniform_regular};
