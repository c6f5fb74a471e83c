use serde::{Deserialize, Serialize};

use super::{cone, Graph};
use crate::error::{Error, Result};

/// Named graph families. Centres and apexes are vertex `0`; the two sides of
/// a complete bipartite graph are `0..n1` and `n1..n1+n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Centre `0` with `n` leaves.
    Star(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Cone over `Cycle(n)`.
    Wheel(usize),
    Path(usize),
    Empty(usize),
    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    Petersen,
    Hypercube(usize),
    /// Connected cubic graph on 16 vertices without a perfect matching: hub
    /// `0` joined to three copies of K4 with one edge subdivided.
    NoMatchingCubic,
}

fn too_small(family: &'static str, reason: &str) -> Error {
    Error::InvalidFamilyParameter {
        family,
        reason: reason.to_string(),
    }
}

pub fn generate_family(family: Family) -> Result<Graph> {
    match family {
        Family::Star(n) => {
            if n < 1 {
                return Err(too_small("star", "needs at least one leaf"));
            }
            Graph::new(n + 1, (1..=n).map(|v| (0, v)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(too_small("cycle", "needs at least 3 vertices"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(too_small("complete", "needs at least 1 vertex"));
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(too_small("complete_bipartite", "both sides need a vertex"));
            }
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Wheel(n) => {
            if n < 3 {
                return Err(too_small("wheel", "rim needs at least 3 vertices"));
            }
            Ok(cone(&generate_family(Family::Cycle(n))?))
        }
        Family::Path(n) => {
            if n < 1 {
                return Err(too_small("path", "needs at least 1 vertex"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Empty(n) => Ok(Graph::empty(n)),
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        Family::Hypercube(d) => {
            if d < 1 {
                return Err(too_small("hypercube", "dimension must be at least 1"));
            }
            let n = 1usize << d;
            Graph::new(
                n,
                (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))),
            )
        }
        Family::NoMatchingCubic => {
            let mut edges = Vec::new();
            for block in 0..3 {
                let base = 1 + 5 * block;
                let (a, b, c, d, s) = (base, base + 1, base + 2, base + 3, base + 4);
                // K4 on a, b, c, d without a--b, which is subdivided by s.
                edges.extend([(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s), (0, s)]);
            }
            Graph::new(16, edges)
        }
    }
}
