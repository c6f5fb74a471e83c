use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::propagator::Propagator;
use crate::chiral::ChiralMatrix;
use crate::error::Result;

/// Speed limit for leaving a localised state `e_v`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QslReport {
    pub vertex: usize,
    pub degree: usize,
    pub mean_energy: f64,
    pub delta_h: f64,
    pub ground_energy: f64,
    /// `max(π/(2ΔH), π/(2(⟨H⟩ - E₀)))`; infinite when a denominator
    /// vanishes.
    pub tau_qsl: f64,
    /// `π/(2√deg(v))`.
    pub tau_s: f64,
}

/// Mandelstam-Tamm and Margolus-Levitin bounds from `e_v`.
///
/// `⟨H⟩ = H_vv` and `⟨H²⟩ - ⟨H⟩²` is the squared norm of the off-diagonal
/// part of row `v`.
pub fn qsl(h: &ChiralMatrix, v: usize) -> Result<QslReport> {
    h.graph().check_vertex(v)?;
    let prop = Propagator::new(h);
    Ok(qsl_with(h, &prop, v))
}

pub(crate) fn qsl_with(h: &ChiralMatrix, prop: &Propagator, v: usize) -> QslReport {
    let m = h.matrix();
    let mean_energy = m[(v, v)].re;
    let variance: f64 = (0..h.n()).filter(|&k| k != v).map(|k| m[(v, k)].norm_sqr()).sum();
    let delta_h = variance.sqrt();
    let ground_energy = prop.ground_energy();
    let bound = |x: f64| if x > 0.0 { FRAC_PI_2 / x } else { f64::INFINITY };
    let degree = h.graph().degree(v);
    QslReport {
        vertex: v,
        degree,
        mean_energy,
        delta_h,
        ground_energy,
        tau_qsl: bound(delta_h).max(bound(mean_energy - ground_energy)),
        tau_s: bound((degree as f64).sqrt()),
    }
}
