//! Continuous-time chiral quantum walks on graphs.
//!
//! - [`graph`]: simple graphs, standard families, cones, disjoint unions,
//!   perfect matchings and Eulerian orientations.
//! - [`chiral`]: chiral adjacency matrices, Laplacians and Hamiltonians,
//!   gauge transformations and spectral bounds.
//! - [`swift`]: synthesis of phase configurations with vanishing row sums,
//!   and of swift walks from a chosen vertex.
//! - [`dynamics`]: exact evolution, return probabilities, closed forms,
//!   speed limits and the Laplacian sedentarity bound.

pub mod chiral;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod swift;

pub use error::{Error, Result};
