use serde::{Deserialize, Serialize};

use crate::chiral::PhaseAssignment;
use crate::graph::{EulerianOrientation, Matching};

/// Residual tolerance declared by the constructive routes.
pub const CONSTRUCTIVE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible,
    Infeasible,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    EvenEulerian,
    OddRegularMatching,
    CompleteBipartite,
    Union,
    ConeWalk,
    Numeric,
}

/// Structural reason for an infeasible verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "criterion")]
pub enum Infeasibility {
    /// A degree-1 vertex can never have a zero row sum.
    DegreeOne { vertex: usize },
    /// Cubic graph without a perfect matching.
    NoPerfectMatching,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<Matching>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<EulerianOrientation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasibility: Option<Infeasibility>,
}

impl Certificate {
    pub fn is_empty(&self) -> bool {
        self.matching.is_none() && self.orientation.is_none() && self.infeasibility.is_none()
    }

    pub(crate) fn relabel(&self, map: impl Fn(usize) -> usize) -> Certificate {
        let canon = |u: usize, v: usize| (u.min(v), u.max(v));
        Certificate {
            matching: self.matching.as_ref().map(|m| {
                let mut pairs: Vec<_> = m.pairs.iter().map(|&(u, v)| canon(map(u), map(v))).collect();
                pairs.sort_unstable();
                Matching { pairs }
            }),
            orientation: self.orientation.as_ref().map(|o| EulerianOrientation {
                arcs: o.arcs.iter().map(|&(u, v)| (map(u), map(v))).collect(),
                circuits: o.circuits.iter().map(|c| c.iter().map(|&v| map(v)).collect()).collect(),
            }),
            infeasibility: self.infeasibility.as_ref().map(|i| match i {
                Infeasibility::DegreeOne { vertex } => Infeasibility::DegreeOne { vertex: map(*vertex) },
                Infeasibility::NoPerfectMatching => Infeasibility::NoPerfectMatching,
            }),
        }
    }

    /// Union of two certificates on disjoint vertex sets.
    pub(crate) fn merge(&mut self, other: Certificate) {
        if let Some(m) = other.matching {
            let pairs = &mut self.matching.get_or_insert_with(|| Matching { pairs: Vec::new() }).pairs;
            pairs.extend(m.pairs);
            pairs.sort_unstable();
        }
        if let Some(o) = other.orientation {
            let mine = self
                .orientation
                .get_or_insert_with(|| EulerianOrientation { arcs: Vec::new(), circuits: Vec::new() });
            mine.arcs.extend(o.arcs);
            mine.circuits.extend(o.circuits);
        }
        if self.infeasibility.is_none() {
            self.infeasibility = other.infeasibility;
        }
    }
}

/// Outcome of a synthesis attempt on a graph of order `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwiftReport {
    pub verdict: Verdict,
    pub method: Method,
    pub n: usize,
    /// `‖Ã · 1‖₂` of the returned phases (best found for `unknown`).
    pub residual: Option<f64>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phases: Option<PhaseAssignment>,
    #[serde(skip_serializing_if = "Certificate::is_empty", default)]
    pub certificate: Certificate,
}

impl SwiftReport {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }

    pub(crate) fn not_applicable(method: Method, n: usize) -> Self {
        SwiftReport {
            verdict: Verdict::Unknown,
            method,
            n,
            residual: None,
            tolerance: CONSTRUCTIVE_TOL,
            phases: None,
            certificate: Certificate::default(),
        }
    }

    pub(crate) fn infeasible(method: Method, n: usize, why: Infeasibility) -> Self {
        SwiftReport {
            verdict: Verdict::Infeasible,
            certificate: Certificate {
                infeasibility: Some(why),
                ..Certificate::default()
            },
            ..Self::not_applicable(method, n)
        }
    }
}
