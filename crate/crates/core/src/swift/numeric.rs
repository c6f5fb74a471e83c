//! Numerical search for swift phases: damped Gauss-Newton on the torus of
//! edge angles with random restarts.
//!
//! The objective is `f(θ) = ‖Ã(θ) · 1‖₂²`, written as a real least-squares
//! problem with residuals `Re r_v, Im r_v`, `r_v = Σ_{w ~ v} e^{iθ_vw}`.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::{Certificate, Infeasibility, Method, SwiftReport, Verdict};
use crate::chiral::PhaseAssignment;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericOptions {
    pub restarts: usize,
    pub max_iters: usize,
    /// Target for `‖Ã · 1‖₂`.
    pub tol: f64,
    pub seed: u64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions {
            restarts: 50,
            max_iters: 5000,
            tol: 1e-10,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericOutcome {
    /// Final residual of each restart that was run, in order.
    pub restart_residuals: Vec<f64>,
    /// Index of the first restart that reached the tolerance.
    pub converged_restart: Option<usize>,
    pub best_residual: f64,
    pub best_phases: PhaseAssignment,
}

struct Problem<'g> {
    g: &'g Graph,
}

impl Problem<'_> {
    fn residuals(&self, theta: &[f64]) -> DVector<f64> {
        let n = self.g.n();
        let mut r = DVector::zeros(2 * n);
        for (&(u, v), &t) in self.g.edges().iter().zip(theta) {
            let (s, c) = t.sin_cos();
            r[2 * u] += c;
            r[2 * u + 1] += s;
            r[2 * v] += c;
            r[2 * v + 1] -= s;
        }
        r
    }

    fn jacobian(&self, theta: &[f64]) -> DMatrix<f64> {
        let mut j = DMatrix::zeros(2 * self.g.n(), theta.len());
        for (e, (&(u, v), &t)) in self.g.edges().iter().zip(theta).enumerate() {
            let (s, c) = t.sin_cos();
            j[(2 * u, e)] = -s;
            j[(2 * u + 1, e)] = c;
            j[(2 * v, e)] = -s;
            j[(2 * v + 1, e)] = -c;
        }
        j
    }

    /// One restart; returns the final angles and residual norm.
    fn descend(&self, mut theta: Vec<f64>, opts: &NumericOptions) -> (Vec<f64>, f64) {
        let m = theta.len();
        let mut r = self.residuals(&theta);
        let mut f = r.norm_squared();
        let mut damping = 1e-3;
        for _ in 0..opts.max_iters {
            if f.sqrt() < opts.tol {
                break;
            }
            let jac = self.jacobian(&theta);
            let grad = jac.transpose() * &r;
            if grad.norm() < 1e-15 {
                break;
            }
            let mut normal = jac.transpose() * &jac;
            for i in 0..m {
                normal[(i, i)] += damping;
            }
            let Some(chol) = normal.cholesky() else {
                damping *= 10.0;
                continue;
            };
            let step = chol.solve(&(-&grad));
            let slope = grad.dot(&step);

            // Backtracking line search with an Armijo condition.
            let mut alpha = 1.0;
            let mut accepted = None;
            while alpha > 1e-10 {
                let trial: Vec<f64> = theta.iter().zip(step.iter()).map(|(t, s)| t + alpha * s).collect();
                let tr = self.residuals(&trial);
                let tf = tr.norm_squared();
                if tf <= f + 1e-4 * alpha * 2.0 * slope {
                    accepted = Some((trial, tr, tf));
                    break;
                }
                alpha *= 0.5;
            }
            match accepted {
                Some((t, tr, tf)) => {
                    theta = t;
                    r = tr;
                    f = tf;
                    damping = if alpha == 1.0 { (damping * 0.3).max(1e-12) } else { damping * 2.0 };
                }
                None => {
                    damping *= 10.0;
                    if damping > 1e12 {
                        break;
                    }
                }
            }
        }
        (theta, f.sqrt())
    }
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn to_phases(g: &Graph, theta: &[f64]) -> PhaseAssignment {
    let mut p = PhaseAssignment::new();
    for (&(u, v), &t) in g.edges().iter().zip(theta) {
        p.set(u, v, t);
    }
    p
}

/// Random-restart search; stops at the first restart reaching `opts.tol`.
/// Restart `i` draws its starting angles from a generator seeded by
/// `opts.seed` and `i`.
pub fn numeric_search(g: &Graph, opts: &NumericOptions) -> NumericOutcome {
    let problem = Problem { g };
    let mut outcome = NumericOutcome {
        restart_residuals: Vec::new(),
        converged_restart: None,
        best_residual: f64::INFINITY,
        best_phases: PhaseAssignment::zero(g),
    };
    for restart in 0..opts.restarts {
        let mut rng = restart_rng(opts.seed, restart);
        let start: Vec<f64> = (0..g.edge_count()).map(|_| rng.gen_range(0.0..TAU)).collect();
        let (theta, res) = problem.descend(start, opts);
        outcome.restart_residuals.push(res);
        if res < outcome.best_residual {
            outcome.best_residual = res;
            outcome.best_phases = to_phases(g, &theta);
        }
        if res < opts.tol {
            outcome.converged_restart = Some(restart);
            break;
        }
    }
    outcome
}

/// Numerical fallback. A failed search yields `unknown`, never
/// `infeasible`; only a degree-1 vertex short-circuits to `infeasible`.
pub fn numeric_swift_solver(g: &Graph, opts: &NumericOptions) -> SwiftReport {
    if let Some(vertex) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return SwiftReport {
            tolerance: opts.tol,
            ..SwiftReport::infeasible(Method::Numeric, g.n(), Infeasibility::DegreeOne { vertex })
        };
    }
    let outcome = numeric_search(g, opts);
    let converged = outcome.best_residual < opts.tol;
    SwiftReport {
        verdict: if converged { Verdict::Feasible } else { Verdict::Unknown },
        method: Method::Numeric,
        n: g.n(),
        residual: Some(outcome.best_residual),
        tolerance: opts.tol,
        phases: converged.then_some(outcome.best_phases),
        certificate: Certificate::default(),
    }
}
