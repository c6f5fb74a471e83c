//! Chiral adjacency matrices, chiral Laplacians and general chiral
//! Hamiltonians built from a graph and antisymmetric edge phases.

mod phases;

pub use phases::{wrap_angle, PhaseAssignment};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{hermitian_eigenvalues, CMatrix, CVector};

/// Which diagonal the generator carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Zero diagonal, entry `(u, v) = e^{iθ_uv}` on edges.
    Adjacency,
    /// Degree diagonal, entry `(u, v) = -e^{iθ_uv}` on edges.
    Laplacian,
    /// Free real diagonal, entry `(u, v) = e^{iθ_uv}` on edges.
    General,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Adjacency => "adjacency",
            Kind::Laplacian => "laplacian",
            Kind::General => "general",
        }
    }

    fn off_diagonal_sign(self) -> f64 {
        match self {
            Kind::Laplacian => -1.0,
            Kind::Adjacency | Kind::General => 1.0,
        }
    }
}

/// A Hermitian generator supported on a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiralMatrix {
    graph: Graph,
    phases: PhaseAssignment,
    kind: Kind,
    diagonal: Vec<f64>,
    matrix: CMatrix,
}

/// Builds the chiral generator of `kind` on `g`.
///
/// `diagonal` is required for [`Kind::General`] (zero when omitted) and
/// rejected otherwise.
pub fn build_chiral(
    g: &Graph,
    phases: &PhaseAssignment,
    kind: Kind,
    diagonal: Option<&[f64]>,
) -> Result<ChiralMatrix> {
    phases.validate_for(g)?;
    let n = g.n();
    let diagonal = match (kind, diagonal) {
        (Kind::General, Some(d)) => {
            if d.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: d.len() });
            }
            d.to_vec()
        }
        (Kind::General, None) | (Kind::Adjacency, None) => vec![0.0; n],
        (Kind::Laplacian, None) => g.degrees().into_iter().map(|d| d as f64).collect(),
        (_, Some(_)) => return Err(Error::UnexpectedDiagonal),
    };
    let sign = kind.off_diagonal_sign();
    let mut matrix = CMatrix::zeros(n, n);
    for (i, &d) in diagonal.iter().enumerate() {
        matrix[(i, i)] = d.into();
    }
    for (u, v, theta) in phases.iter() {
        let z = Complex64::new(sign * theta.cos(), sign * theta.sin());
        matrix[(u, v)] = z;
        matrix[(v, u)] = z.conj();
    }
    Ok(ChiralMatrix {
        graph: g.clone(),
        phases: phases.clone(),
        kind,
        diagonal,
        matrix,
    })
}

impl ChiralMatrix {
    /// Classical adjacency matrix or Laplacian (all phases zero).
    pub fn classical(g: &Graph, kind: Kind) -> Self {
        build_chiral(g, &PhaseAssignment::zero(g), kind, None).expect("zero phases cover every edge")
    }

    /// Uniformly random phases.
    pub fn random<R: Rng + ?Sized>(g: &Graph, kind: Kind, rng: &mut R) -> Self {
        build_chiral(g, &PhaseAssignment::random(g, rng), kind, None).expect("phases cover every edge")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn phases(&self) -> &PhaseAssignment {
        &self.phases
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Same graph and phases with a different diagonal, as a general
    /// chiral Hamiltonian.
    pub fn with_diagonal(&self, diagonal: &[f64]) -> Result<ChiralMatrix> {
        let phases = match self.kind {
            // Laplacian off-diagonals are -e^{iθ} = e^{i(θ+π)}.
            Kind::Laplacian => {
                PhaseAssignment::from_fn(&self.graph, |u, v| self.phases.get(u, v).unwrap() + std::f64::consts::PI)
            }
            _ => self.phases.clone(),
        };
        build_chiral(&self.graph, &phases, Kind::General, Some(diagonal))
    }
}

/// `H · 1`.
pub fn row_sums(h: &ChiralMatrix) -> Vec<Complex64> {
    let ones = CVector::from_element(h.n(), Complex64::new(1.0, 0.0));
    (h.matrix() * ones).iter().copied().collect()
}

/// Diagonal unitary `diag(e^{iα_v})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeTransform {
    pub angles: Vec<f64>,
}

impl GaugeTransform {
    pub fn identity(n: usize) -> Self {
        GaugeTransform { angles: vec![0.0; n] }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        GaugeTransform {
            angles: (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        GaugeTransform {
            angles: self.angles.iter().map(|a| -a).collect(),
        }
    }

    pub fn unitary(&self) -> CMatrix {
        let d = CVector::from_iterator(self.angles.len(), self.angles.iter().map(|&a| Complex64::from_polar(1.0, a)));
        CMatrix::from_diagonal(&d)
    }

    pub fn is_identity(&self) -> bool {
        self.angles.iter().all(|&a| wrap_angle(a) == 0.0)
    }
}

/// `U H U^†`: the phase of every orientation `j -> k` shifts by
/// `α_j - α_k`; kind and diagonal are unchanged.
pub fn gauge_transform(h: &ChiralMatrix, u: &GaugeTransform) -> Result<ChiralMatrix> {
    if u.angles.len() != h.n() {
        return Err(Error::DimensionMismatch { expected: h.n(), got: u.angles.len() });
    }
    let phases = PhaseAssignment::from_fn(&h.graph, |j, k| {
        h.phases.get(j, k).unwrap() + u.angles[j] - u.angles[k]
    });
    let diagonal = (h.kind == Kind::General).then_some(h.diagonal.as_slice());
    build_chiral(&h.graph, &phases, h.kind, diagonal)
}

/// Gauge in which every off-diagonal entry of row `apex` equals `1`.
///
/// Vertices not adjacent to `apex` keep angle `0`. Laplacians are rejected,
/// since their off-diagonal entries are `-e^{iθ}`.
pub fn gauge_fix_cone(h: &ChiralMatrix, apex: usize) -> Result<(ChiralMatrix, GaugeTransform)> {
    h.graph.check_vertex(apex)?;
    if h.kind == Kind::Laplacian {
        return Err(Error::UnsupportedKind("laplacian"));
    }
    if h.graph.degree(apex) == 0 {
        return Err(Error::NoNeighbours(apex));
    }
    let mut angles = vec![0.0; h.n()];
    for &w in h.graph.neighbors(apex) {
        angles[w] = h.phases.get(apex, w).unwrap();
    }
    let gauge = GaugeTransform { angles };
    let fixed = gauge_transform(h, &gauge)?;
    Ok((fixed, gauge))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralBoundReport {
    pub max_abs_eigenvalue: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Compares the spectral radius with `d_max` (adjacency) or `2 d_max`
/// (Laplacian). No bound is claimed for the general kind.
pub fn verify_spectral_bounds(h: &ChiralMatrix) -> Result<SpectralBoundReport> {
    let d_max = h.graph.degrees().into_iter().max().unwrap_or(0) as f64;
    let bound = match h.kind {
        Kind::Adjacency => d_max,
        Kind::Laplacian => 2.0 * d_max,
        Kind::General => return Err(Error::UnsupportedKind("general")),
    };
    let max_abs_eigenvalue = hermitian_eigenvalues(h.matrix())
        .into_iter()
        .map(f64::abs)
        .fold(0.0, f64::max);
    Ok(SpectralBoundReport {
        max_abs_eigenvalue,
        bound,
        pass: max_abs_eigenvalue <= bound + 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};
    use crate::linalg::hermiticity_defect;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_phase_triangle_is_classical() {
        let g = generate_family(Family::Cycle(3)).unwrap();
        let h = ChiralMatrix::classical(&g, Kind::Adjacency);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.0 } else { 1.0 };
                assert_eq!(h.matrix()[(i, j)], c(want, 0.0));
            }
        }
        let l = ChiralMatrix::classical(&g, Kind::Laplacian);
        assert_eq!(l.matrix()[(0, 0)], c(2.0, 0.0));
        assert_eq!(l.matrix()[(0, 1)], c(-1.0, 0.0));
    }

    #[test]
    fn single_edge_quarter_phase() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let mut p = PhaseAssignment::new();
        p.set(0, 1, FRAC_PI_2);
        let h = build_chiral(&g, &p, Kind::Adjacency, None).unwrap();
        assert!((h.matrix()[(0, 1)] - c(0.0, 1.0)).norm() < 1e-15);
        assert!((h.matrix()[(1, 0)] - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn oriented_c4_laplacian() {
        let g = generate_family(Family::Cycle(4)).unwrap();
        let mut p = PhaseAssignment::new();
        for i in 0..4 {
            p.set(i, (i + 1) % 4, FRAC_PI_2);
        }
        let l = build_chiral(&g, &p, Kind::Laplacian, None).unwrap();
        assert_eq!(l.diagonal(), &[2.0; 4]);
        for i in 0..4 {
            let j = (i + 1) % 4;
            assert!((l.matrix()[(i, j)] - c(0.0, -1.0)).norm() < 1e-15);
            assert!((l.matrix()[(j, i)] - c(0.0, 1.0)).norm() < 1e-15);
        }
        assert_eq!(l.matrix()[(0, 2)], c(0.0, 0.0));
        // L̃ = D - Ã entrywise.
        let a = build_chiral(&g, &p, Kind::Adjacency, None).unwrap();
        let d = CMatrix::from_diagonal(&CVector::from_element(4, c(2.0, 0.0)));
        assert!((l.matrix() - (d - a.matrix())).norm() < 1e-15);
    }

    #[test]
    fn construction_errors() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let p = PhaseAssignment::zero(&g);
        assert_eq!(
            build_chiral(&g, &p, Kind::General, Some(&[1.0])).unwrap_err(),
            Error::DimensionMismatch { expected: 3, got: 1 }
        );
        assert_eq!(
            build_chiral(&g, &p, Kind::Adjacency, Some(&[0.0; 3])).unwrap_err(),
            Error::UnexpectedDiagonal
        );
        let mut q = PhaseAssignment::new();
        q.set(0, 1, 0.0);
        assert!(matches!(build_chiral(&g, &q, Kind::Adjacency, None), Err(Error::MissingPhase(1, 2))));
    }

    #[test]
    fn row_sum_examples() {
        let g = generate_family(Family::Cycle(4)).unwrap();
        let a = ChiralMatrix::classical(&g, Kind::Adjacency);
        assert!(row_sums(&a).iter().all(|z| *z == c(2.0, 0.0)));
        let mut p = PhaseAssignment::new();
        for i in 0..4 {
            p.set(i, (i + 1) % 4, FRAC_PI_2);
        }
        let a = build_chiral(&g, &p, Kind::Adjacency, None).unwrap();
        assert!(row_sums(&a).iter().all(|z| z.norm() < 1e-15));
        let pet = generate_family(Family::Petersen).unwrap();
        let l = ChiralMatrix::classical(&pet, Kind::Laplacian);
        assert!(row_sums(&l).iter().all(|z| *z == c(0.0, 0.0)));
    }

    #[test]
    fn gauge_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = generate_family(Family::Wheel(5)).unwrap();
        let h = ChiralMatrix::random(&g, Kind::Adjacency, &mut rng);
        let same = gauge_transform(&h, &GaugeTransform::identity(g.n())).unwrap();
        assert!((same.matrix() - h.matrix()).norm() < 1e-15);

        let u = GaugeTransform::random(g.n(), &mut rng);
        let hu = gauge_transform(&h, &u).unwrap();
        let direct = u.unitary() * h.matrix() * u.unitary().adjoint();
        assert!((hu.matrix() - &direct).norm() < 1e-13);
        for (x, y) in hu.matrix().iter().zip(h.matrix().iter()) {
            assert!((x.norm() - y.norm()).abs() < 1e-15);
        }
        let back = gauge_transform(&hu, &u.inverse()).unwrap();
        assert!((back.matrix() - h.matrix()).norm() < 1e-13);

        let e = Graph::new(2, [(0, 1)]).unwrap();
        let mut p = PhaseAssignment::new();
        p.set(0, 1, 1.0);
        let h = build_chiral(&e, &p, Kind::Adjacency, None).unwrap();
        let moved = gauge_transform(&h, &GaugeTransform { angles: vec![0.0, FRAC_PI_2] }).unwrap();
        assert!((moved.phases().get(0, 1).unwrap() - (1.0 - FRAC_PI_2 + 2.0 * PI)).abs() < 1e-14);

        assert_eq!(
            gauge_transform(&h, &GaugeTransform::identity(3)).unwrap_err(),
            Error::DimensionMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn gauge_fix_wheel() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = generate_family(Family::Wheel(6)).unwrap();
        let h = ChiralMatrix::random(&g, Kind::Adjacency, &mut rng);
        let (fixed, u) = gauge_fix_cone(&h, 0).unwrap();
        for k in 1..g.n() {
            assert!((fixed.matrix()[(0, k)] - c(1.0, 0.0)).norm() < 1e-14);
        }
        assert!((gauge_transform(&h, &u).unwrap().matrix() - fixed.matrix()).norm() < 1e-15);
        let (_, again) = gauge_fix_cone(&fixed, 0).unwrap();
        assert!(again.is_identity());

        let lap = ChiralMatrix::classical(&g, Kind::Laplacian);
        assert_eq!(gauge_fix_cone(&lap, 0).unwrap_err(), Error::UnsupportedKind("laplacian"));
        let iso = ChiralMatrix::classical(&Graph::empty(2), Kind::Adjacency);
        assert_eq!(gauge_fix_cone(&iso, 1).unwrap_err(), Error::NoNeighbours(1));
    }

    #[test]
    fn spectral_bound_examples() {
        for n in 3..12 {
            let g = generate_family(Family::Cycle(n)).unwrap();
            let r = verify_spectral_bounds(&ChiralMatrix::classical(&g, Kind::Adjacency)).unwrap();
            assert!((r.max_abs_eigenvalue - 2.0).abs() < 1e-12);
            assert_eq!(r.bound, 2.0);
            assert!(r.pass);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pet = generate_family(Family::Petersen).unwrap();
        for _ in 0..100 {
            let h = ChiralMatrix::random(&pet, Kind::Adjacency, &mut rng);
            assert_eq!(hermiticity_defect(h.matrix()), 0.0);
            let r = verify_spectral_bounds(&h).unwrap();
            assert!(r.pass && r.bound == 3.0, "{r:?}");
        }
        for n in 1..10 {
            let star = generate_family(Family::Star(n)).unwrap();
            let r = verify_spectral_bounds(&ChiralMatrix::classical(&star, Kind::Laplacian)).unwrap();
            assert!((r.max_abs_eigenvalue - (n as f64 + 1.0)).abs() < 1e-12);
            assert!(r.pass);
        }
        let h = ChiralMatrix::classical(&pet, Kind::Adjacency).with_diagonal(&[1.0; 10]).unwrap();
        assert_eq!(verify_spectral_bounds(&h).unwrap_err(), Error::UnsupportedKind("general"));
    }

    #[test]
    fn laplacian_as_general() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = generate_family(Family::Petersen).unwrap();
        let l = ChiralMatrix::random(&g, Kind::Laplacian, &mut rng);
        let gen = l.with_diagonal(l.diagonal()).unwrap();
        assert!((gen.matrix() - l.matrix()).norm() < 1e-14);
    }
}
