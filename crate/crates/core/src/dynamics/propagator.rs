use num_complex::Complex64;

use crate::chiral::ChiralMatrix;
use crate::linalg::{hermitian_eigen, CMatrix, CVector, HermitianEigen};

/// `e^{-iHt}` through a cached eigendecomposition `H = V Λ V^†`.
#[derive(Debug, Clone)]
pub struct Propagator {
    eigen: HermitianEigen,
}

impl Propagator {
    pub fn new(h: &ChiralMatrix) -> Self {
        Self::from_matrix(h.matrix())
    }

    pub fn from_matrix(m: &CMatrix) -> Self {
        Propagator { eigen: hermitian_eigen(m) }
    }

    pub fn n(&self) -> usize {
        self.eigen.values.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigen.values
    }

    pub fn ground_energy(&self) -> f64 {
        self.eigen.values.first().copied().unwrap_or(0.0)
    }

    fn phases(&self, t: f64) -> impl Iterator<Item = Complex64> + '_ {
        self.eigen.values.iter().map(move |&l| Complex64::from_polar(1.0, -l * t))
    }

    /// `e^{-iHt} e_source`.
    pub fn column(&self, source: usize, t: f64) -> CVector {
        let v = &self.eigen.vectors;
        let coeffs = CVector::from_iterator(
            self.n(),
            self.phases(t).enumerate().map(|(j, p)| p * v[(source, j)].conj()),
        );
        v * coeffs
    }

    /// `e_target^† e^{-iHt} e_source`.
    pub fn amplitude(&self, source: usize, target: usize, t: f64) -> Complex64 {
        let v = &self.eigen.vectors;
        self.phases(t)
            .enumerate()
            .map(|(j, p)| v[(target, j)] * p * v[(source, j)].conj())
            .sum()
    }

    pub fn transport_probability(&self, source: usize, target: usize, t: f64) -> f64 {
        self.amplitude(source, target, t).norm_sqr()
    }

    /// Evaluator for the return probability to `source`, reusing the
    /// spectral weights `|V_{source,j}|²` across times.
    pub fn return_curve(&self, source: usize) -> ReturnCurve<'_> {
        let weights = (0..self.n())
            .map(|j| self.eigen.vectors[(source, j)].norm_sqr())
            .collect();
        ReturnCurve { values: &self.eigen.values, weights }
    }
}

pub struct ReturnCurve<'a> {
    values: &'a [f64],
    weights: Vec<f64>,
}

impl ReturnCurve<'_> {
    pub fn at(&self, t: f64) -> f64 {
        let a: Complex64 = self
            .values
            .iter()
            .zip(&self.weights)
            .map(|(&l, &w)| Complex64::from_polar(w, -l * t))
            .sum();
        a.norm_sqr()
    }
}

pub fn propagator_column(h: &ChiralMatrix, source: usize, t: f64) -> CVector {
    Propagator::new(h).column(source, t)
}

/// `|e_k^† e^{-itH} e_j|²`.
pub fn transport_probability(h: &ChiralMatrix, j: usize, k: usize, t: f64) -> f64 {
    Propagator::new(h).transport_probability(j, k, t)
}

pub fn return_probability(h: &ChiralMatrix, v: usize, t: f64) -> f64 {
    transport_probability(h, v, v, t)
}
