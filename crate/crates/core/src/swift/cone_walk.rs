use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::constructive::synthesize_auto;
use super::report::SwiftReport;
use crate::chiral::{build_chiral, gauge_fix_cone, ChiralMatrix, Kind, PhaseAssignment};
use crate::graph::{analyze, Graph};

/// Why no swift walk from the requested vertex could be built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum ConeWalkRefusal {
    VertexOutOfRange { vertex: usize },
    NotConnected,
    /// `vertex` is not adjacent to the start but shares exactly one
    /// neighbour with it.
    SingleCommonNeighbour { vertex: usize, common_neighbour: usize },
    /// The subgraph induced by the start's neighbours has no swift
    /// configuration (or none was found).
    NeighbourhoodNotSwift { report: Box<SwiftReport> },
}

/// Chiral adjacency matrix whose walk from `v` has return probability
/// `cos²(√deg(v) t)`.
///
/// Spokes from `v` carry phase `0`; the induced neighbourhood gets a swift
/// configuration; a vertex outside the neighbourhood with `c ≥ 2`
/// neighbours inside it gets the `c`-th roots of unity on those edges, in
/// increasing neighbour order; edges between outside vertices carry `0`.
pub fn synthesize_cone_walk(g: &Graph, v: usize) -> Result<ChiralMatrix, ConeWalkRefusal> {
    if v >= g.n() {
        return Err(ConeWalkRefusal::VertexOutOfRange { vertex: v });
    }
    if !analyze(g).is_connected {
        return Err(ConeWalkRefusal::NotConnected);
    }
    let nbrs = g.neighbors(v);
    let mut is_nbr = vec![false; g.n()];
    for &u in nbrs {
        is_nbr[u] = true;
    }

    let outside: Vec<usize> = (0..g.n()).filter(|&w| w != v && !is_nbr[w]).collect();
    let mut blocks = Vec::new();
    for &w in &outside {
        let common: Vec<usize> = g.neighbors(w).iter().copied().filter(|&u| is_nbr[u]).collect();
        if common.len() == 1 {
            return Err(ConeWalkRefusal::SingleCommonNeighbour {
                vertex: w,
                common_neighbour: common[0],
            });
        }
        blocks.push((w, common));
    }

    let report = synthesize_auto(&g.induced_subgraph(nbrs));
    let Some(local) = report.phases.as_ref().filter(|_| report.is_feasible()) else {
        return Err(ConeWalkRefusal::NeighbourhoodNotSwift { report: Box::new(report) });
    };

    let mut phases = PhaseAssignment::zero(g);
    phases.extend(&local.relabel(|i| nbrs[i]));
    for (w, common) in blocks {
        let c = common.len() as f64;
        for (s, &u) in common.iter().enumerate() {
            phases.set(w, u, TAU * s as f64 / c);
        }
    }
    Ok(build_chiral(g, &phases, Kind::Adjacency, None).expect("phases cover every edge"))
}

/// `max_{w ≠ v} |Σ_{u ∈ N(v)} H'_wu|` in the gauge where row `v` is real
/// and positive. Zero exactly when `e_v` and the flat neighbour vector
/// span an invariant subspace, i.e. when the walk from `v` is swift.
pub fn cone_walk_residual(h: &ChiralMatrix, v: usize) -> crate::Result<f64> {
    let (fixed, _) = gauge_fix_cone(h, v)?;
    let m = fixed.matrix();
    let nbrs = h.graph().neighbors(v);
    Ok((0..h.n())
        .filter(|&w| w != v)
        .map(|w| nbrs.iter().map(|&u| m[(w, u)]).sum::<num_complex::Complex64>().norm())
        .fold(0.0, f64::max))
}
