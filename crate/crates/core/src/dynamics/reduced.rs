use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::closed_form::two_level_return;
use crate::chiral::{ChiralMatrix, Kind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::CVector;

/// Largest `‖H e_E - (c e_v + k e_E)‖` accepted as an invariant subspace.
pub const INVARIANCE_TOL: f64 = 1e-10;

/// `H` restricted to `span{e_v, e_E}`, where `e_E` is the normalised
/// off-diagonal part of column `v`:
///
/// ```text
/// [[a, coupling],
///  [coupling, k]]
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedBlock {
    pub source: usize,
    pub a: f64,
    pub k: f64,
    /// `√deg(source)`.
    pub coupling: f64,
    /// `e_E` in the vertex basis.
    pub flat: Vec<Complex64>,
}

impl ReducedBlock {
    pub fn return_probability(&self, t: f64) -> f64 {
        two_level_return(self.a, self.k, self.coupling * self.coupling, t)
    }
}

/// The two-level reduction from `v`, present only when `span{e_v, e_E}` is
/// invariant under `H` to [`INVARIANCE_TOL`].
pub fn reduce_to_block(h: &ChiralMatrix, v: usize) -> Option<ReducedBlock> {
    if v >= h.n() {
        return None;
    }
    let m = h.matrix();
    let mut flat: CVector = m.column(v).into_owned();
    flat[v] = Complex64::new(0.0, 0.0);
    let norm = flat.norm();
    if norm == 0.0 {
        return None;
    }
    flat /= Complex64::new(norm, 0.0);
    let image = m * &flat;
    let coupling = image[v].re;
    let k = flat.dotc(&image).re;
    let mut rest = image;
    rest[v] -= Complex64::new(coupling, 0.0);
    rest -= &flat * Complex64::new(k, 0.0);
    (rest.norm() < INVARIANCE_TOL).then(|| ReducedBlock {
        source: v,
        a: m[(v, v)].re,
        k,
        coupling,
        flat: flat.iter().copied().collect(),
    })
}

/// Classical Laplacian with the apex diagonal lowered by `N - 1`, `N` the
/// apex degree; its walk from the apex is `cos²(√N t)`.
pub fn grover_oracle_laplacian(g: &Graph, apex: usize) -> Result<ChiralMatrix> {
    g.check_vertex(apex)?;
    let n = g.degree(apex);
    if n + 1 != g.n() {
        return Err(Error::NotApex { vertex: apex, degree: n, n: g.n() });
    }
    let lap = ChiralMatrix::classical(g, Kind::Laplacian);
    let mut diagonal = lap.diagonal().to_vec();
    diagonal[apex] -= n as f64 - 1.0;
    lap.with_diagonal(&diagonal)
}
