//! Swift phase configurations: edge phases for which every row of the
//! chiral adjacency matrix sums to zero.
//!
//! Constructive routes cover graphs with all degrees even, odd-regular
//! graphs with a perfect matching and complete bipartite graphs; disjoint
//! unions are handled component by component and anything else falls back
//! to a numerical search. Only structural criteria (a degree-1 vertex, a
//! cubic graph without a perfect matching) yield an `infeasible` verdict.

mod cone_walk;
mod constructive;
mod numeric;
mod report;

pub use cone_walk::{cone_walk_residual, synthesize_cone_walk, ConeWalkRefusal};
pub use constructive::{
    complete_bipartite_parts, synthesize, synthesize_auto, synthesize_auto_with,
    synthesize_complete_bipartite, synthesize_even_degree, synthesize_odd_regular,
    synthesize_union, MethodChoice,
};
pub use numeric::{numeric_search, numeric_swift_solver, NumericOptions, NumericOutcome};
pub use report::{Certificate, Infeasibility, Method, SwiftReport, Verdict, CONSTRUCTIVE_TOL};

use crate::chiral::{row_sums, ChiralMatrix};

/// `‖H · 1‖_∞ ≤ tol`.
///
/// Any kind is accepted; a classical Laplacian passes trivially, which is
/// not a swift adjacency configuration.
pub fn check_swift_configuration(h: &ChiralMatrix, tol: f64) -> bool {
    row_sums(h).iter().map(|z| z.norm()).fold(0.0, f64::max) <= tol
}

/// `‖Ã · 1‖₂` of the adjacency-kind matrix.
pub fn residual(h: &ChiralMatrix) -> f64 {
    row_sums(h).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
