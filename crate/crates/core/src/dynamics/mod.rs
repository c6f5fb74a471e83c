//! Unitary evolution `e^{-iHt}` generated by chiral Hamiltonians, with the
//! two-level reductions, closed-form return probabilities, speed limits and
//! sedentarity bounds that go with walks from highly connected vertices.
//!
//! Time and energy are in units with `ħ = 1`.

mod closed_form;
mod propagator;
mod qsl;
mod reduced;
mod sedentarity;
mod series;

pub use closed_form::{
    closed_form_cone_adjacency, closed_form_laplacian_cone, closed_form_laplacian_reduced,
    closed_form_swift, two_level_return,
};
pub use propagator::{propagator_column, return_probability, transport_probability, Propagator};
pub use qsl::{qsl, QslReport};
pub use reduced::{grover_oracle_laplacian, reduce_to_block, ReducedBlock, INVARIANCE_TOL};
pub use sedentarity::{nogo_bound, sedentarity_report, SedentarityReport};
pub use series::{return_series, EvolutionSeries, ReturnAnalysis, TimeGrid};
