use serde::{Deserialize, Serialize};

use super::propagator::Propagator;
use super::series::{ReturnAnalysis, TimeGrid};
use crate::chiral::{ChiralMatrix, Kind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Slack allowed before a sampled minimum counts as violating the bound.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SedentarityReport {
    pub vertex: usize,
    /// Degree `N` of the start vertex.
    pub degree: usize,
    /// Largest full-graph degree among the other vertices.
    pub d_sup: usize,
    /// `1 - √N/(N - 2 d_sup)`, present when `2 d_sup < N`.
    pub nogo_bound: Option<f64>,
    pub min_return: f64,
    /// Minimum after golden-section polishing of the grid minima.
    pub min_return_refined: f64,
    pub violation: bool,
}

/// `(N, d_sup, bound)` for a chiral Laplacian walk from `v`.
pub fn nogo_bound(g: &Graph, v: usize) -> (usize, usize, Option<f64>) {
    let n = g.degree(v);
    let d_sup = (0..g.n()).filter(|&w| w != v).map(|w| g.degree(w)).max().unwrap_or(0);
    let bound = (2 * d_sup < n).then(|| 1.0 - (n as f64).sqrt() / (n - 2 * d_sup) as f64);
    (n, d_sup, bound)
}

/// Sampled minimum of the return probability of a chiral Laplacian walk
/// against the energy-conservation lower bound.
pub fn sedentarity_report(h: &ChiralMatrix, v: usize, t_max: f64, steps: usize) -> Result<SedentarityReport> {
    if h.kind() != Kind::Laplacian {
        return Err(Error::UnsupportedKind(h.kind().name()));
    }
    h.graph().check_vertex(v)?;
    let grid = TimeGrid::new(t_max, steps)?;
    let prop = Propagator::new(h);
    Ok(sedentarity_with(h.graph(), &prop, v, &grid))
}

pub(crate) fn sedentarity_with(g: &Graph, prop: &Propagator, v: usize, grid: &TimeGrid) -> SedentarityReport {
    let (degree, d_sup, nogo_bound) = nogo_bound(g, v);
    let analysis = ReturnAnalysis::compute(prop, v, grid);
    SedentarityReport {
        vertex: v,
        degree,
        d_sup,
        nogo_bound,
        min_return: analysis.grid_min,
        min_return_refined: analysis.refined_min,
        violation: nogo_bound.is_some_and(|b| analysis.refined_min < b - BOUND_SLACK),
    }
}
