use std::collections::BTreeMap;
use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Antisymmetric edge phases. Only the canonical orientation `u -> v`,
/// `u < v`, is stored; the reverse orientation carries `-θ`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PhaseAssignment {
    theta: BTreeMap<(usize, usize), f64>,
}

impl PhaseAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// All phases zero on the edges of `g` (the classical generator).
    pub fn zero(g: &Graph) -> Self {
        Self::from_fn(g, |_, _| 0.0)
    }

    /// `f(u, v)` gives the phase of the canonical orientation `u -> v`.
    pub fn from_fn(g: &Graph, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let theta = g
            .edges()
            .iter()
            .map(|&(u, v)| ((u, v), wrap_angle(f(u, v))))
            .collect();
        PhaseAssignment { theta }
    }

    /// Independent uniform phases on every edge.
    pub fn random<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Self {
        Self::from_fn(g, |_, _| rng.gen_range(0.0..TAU))
    }

    /// Sets the phase of orientation `from -> to`.
    pub fn set(&mut self, from: usize, to: usize, theta: f64) {
        if from < to {
            self.theta.insert((from, to), wrap_angle(theta));
        } else {
            self.theta.insert((to, from), wrap_angle(-theta));
        }
    }

    /// Phase of orientation `from -> to`, if the edge carries one.
    pub fn get(&self, from: usize, to: usize) -> Option<f64> {
        if from < to {
            self.theta.get(&(from, to)).copied()
        } else {
            self.theta.get(&(to, from)).map(|&t| wrap_angle(-t))
        }
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    /// Canonical `(u, v, θ_uv)` triples in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.theta.iter().map(|(&(u, v), &t)| (u, v, t))
    }

    /// Checks that the domain is exactly the edge set of `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        for (u, v, t) in self.iter() {
            if !g.has_edge(u, v) {
                return Err(Error::PhaseOnNonEdge(u, v));
            }
            if !t.is_finite() {
                return Err(Error::NonFinitePhase(u, v));
            }
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !self.theta.contains_key(&(u, v))) {
            return Err(Error::MissingPhase(u, v));
        }
        Ok(())
    }

    /// Copies every phase with both endpoints relabelled through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut out = PhaseAssignment::new();
        for (u, v, t) in self.iter() {
            out.set(map(u), map(v), t);
        }
        out
    }

    /// Adds all phases of `other` (disjoint domains expected).
    pub fn extend(&mut self, other: &PhaseAssignment) {
        for (u, v, t) in other.iter() {
            self.theta.insert((u, v), t);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PhaseEntry {
    u: usize,
    v: usize,
    theta: f64,
}

#[derive(Serialize, Deserialize)]
struct PhaseFile {
    edges: Vec<PhaseEntry>,
}

impl Serialize for PhaseAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PhaseFile {
            edges: self.iter().map(|(u, v, theta)| PhaseEntry { u, v, theta }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PhaseAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = PhaseFile::deserialize(d)?;
        let mut out = PhaseAssignment::new();
        for e in file.edges {
            if e.u == e.v {
                return Err(serde::de::Error::custom(format!("loop phase at vertex {}", e.u)));
            }
            if !e.theta.is_finite() {
                return Err(serde::de::Error::custom(format!(
                    "non-finite phase on ({}, {})",
                    e.u, e.v
                )));
            }
            out.set(e.u, e.v, e.theta);
        }
        Ok(out)
    }
}
