use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::propagator::Propagator;
use crate::chiral::ChiralMatrix;
use crate::error::{Error, Result};

/// Uniform grid on `[0, t_max]` with `steps` samples, both endpoints
/// included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub t_max: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::InvalidGrid(format!("steps must be at least 2, got {steps}")));
        }
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::InvalidGrid(format!("t_max must be positive, got {t_max}")));
        }
        Ok(TimeGrid { t_max, steps })
    }

    pub fn dt(&self) -> f64 {
        self.t_max / (self.steps - 1) as f64
    }

    pub fn times(&self) -> Vec<f64> {
        let dt = self.dt();
        (0..self.steps)
            .map(|i| if i + 1 == self.steps { self.t_max } else { i as f64 * dt })
            .collect()
    }
}

/// Sampled transport probability `p_{source -> target}(t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvolutionSeries {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub source: usize,
    pub target: usize,
    pub generator: String,
}

impl EvolutionSeries {
    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `t,p` CSV with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,p\n");
        for (t, p) in self.times.iter().zip(&self.values) {
            writeln!(out, "{t:.16e},{p:.16e}").unwrap();
        }
        out
    }
}

pub fn return_series(h: &ChiralMatrix, v: usize, t_max: f64, steps: usize) -> Result<EvolutionSeries> {
    h.graph().check_vertex(v)?;
    let grid = TimeGrid::new(t_max, steps)?;
    let prop = Propagator::new(h);
    Ok(series_from(&prop, v, &grid, h.kind().name()))
}

pub(crate) fn series_from(prop: &Propagator, v: usize, grid: &TimeGrid, generator: &str) -> EvolutionSeries {
    let curve = prop.return_curve(v);
    let times = grid.times();
    let values = times.iter().map(|&t| curve.at(t)).collect();
    EvolutionSeries {
        times,
        values,
        source: v,
        target: v,
        generator: generator.to_string(),
    }
}

/// Below this a refined return probability counts as a zero.
pub const ZERO_TOL: f64 = 1e-8;

/// Grid statistics of a return series, with every interior grid minimum
/// polished by golden-section search on the exact curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReturnAnalysis {
    pub grid_min: f64,
    pub grid_min_time: f64,
    pub refined_min: f64,
    pub refined_min_time: f64,
    /// Earliest refined minimum below [`ZERO_TOL`].
    pub first_zero_time: Option<f64>,
}

fn golden_section(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..100 {
        if (b - a).abs() < 1e-14 {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

impl ReturnAnalysis {
    pub fn compute(prop: &Propagator, v: usize, grid: &TimeGrid) -> Self {
        let curve = prop.return_curve(v);
        let f = |t: f64| curve.at(t);
        let times = grid.times();
        let values: Vec<f64> = times.iter().map(|&t| f(t)).collect();

        let (gi, &grid_min) = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("grid has at least two samples");
        let mut refined_min = grid_min;
        let mut refined_min_time = times[gi];
        let mut first_zero_time = None;
        if grid_min < ZERO_TOL && values[..gi].iter().all(|&p| p >= ZERO_TOL) {
            first_zero_time = Some(times[gi]);
        }
        for i in 1..values.len() - 1 {
            if values[i] < values[i - 1] && values[i] <= values[i + 1] {
                let (t, p) = golden_section(&f, times[i - 1], times[i + 1]);
                let (t, p) = if p < values[i] { (t, p) } else { (times[i], values[i]) };
                if p < refined_min {
                    refined_min = p;
                    refined_min_time = t;
                }
                if p < ZERO_TOL && first_zero_time.is_none_or(|z| t < z) {
                    first_zero_time = Some(t);
                }
            }
        }
        ReturnAnalysis {
            grid_min,
            grid_min_time: times[gi],
            refined_min,
            refined_min_time,
            first_zero_time,
        }
    }
}
