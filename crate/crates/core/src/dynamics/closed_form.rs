//! Closed-form return probabilities of two-level reductions.
//!
//! A block `[[a, c], [c, k]]` in the basis `{e_v, e_E}` gives
//! `p(t) = 1 - 2c²/Ω² · (1 - cos Ωt)` with `Ω² = (a - k)² + 4c²`.

/// Return probability of the two-level block `[[a, √c2], [√c2, k]]` from
/// its first basis vector.
pub fn two_level_return(a: f64, k: f64, coupling_sq: f64, t: f64) -> f64 {
    let omega_sq = (a - k).powi(2) + 4.0 * coupling_sq;
    if omega_sq == 0.0 {
        return 1.0;
    }
    1.0 - 2.0 * coupling_sq / omega_sq * (1.0 - (omega_sq.sqrt() * t).cos())
}

/// Adjacency walk from the apex of a cone over an `m`-regular graph on
/// `n` vertices.
pub fn closed_form_cone_adjacency(m: f64, n: f64, t: f64) -> f64 {
    two_level_return(0.0, m, n, t)
}

/// `cos²(√n t)`.
pub fn closed_form_swift(n: f64, t: f64) -> f64 {
    (n.sqrt() * t).cos().powi(2)
}

/// Classical Laplacian walk from a vertex adjacent to all `n` others:
/// block `[[n, √n], [√n, 1]]`, so `Ω = n + 1`.
pub fn closed_form_laplacian_cone(n: f64, t: f64) -> f64 {
    1.0 - 2.0 * n / (n + 1.0).powi(2) * (1.0 - ((n + 1.0) * t).cos())
}

/// Laplacian-type block `[[n, √n], [√n, k]]` with free lower-right entry.
pub fn closed_form_laplacian_reduced(k: f64, n: f64, t: f64) -> f64 {
    two_level_return(n, k, n, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cone_over_petersen_at_pi_over_7() {
        // √(9 + 40) = 7, so p = 1 - (20/49)(1 - cos π) = 9/49.
        let p = closed_form_cone_adjacency(3.0, 10.0, PI / 7.0);
        assert!((p - 9.0 / 49.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_cases() {
        assert!(closed_form_cone_adjacency(0.0, 4.0, PI / 4.0).abs() < 1e-15);
        for &(m, n) in &[(0.0, 1.0), (3.0, 10.0), (7.0, 2.0)] {
            assert_eq!(closed_form_cone_adjacency(m, n, 0.0), 1.0);
        }
        assert!(closed_form_swift(6.0, PI / (2.0 * 6f64.sqrt())) < 1e-30);
        assert!((closed_form_swift(1.0, PI) - 1.0).abs() < 1e-15);
        for &t in &[0.0, 0.4, 2.9] {
            assert!((closed_form_laplacian_reduced(5.0, 5.0, t) - closed_form_swift(5.0, t)).abs() < 1e-15);
            assert!((closed_form_cone_adjacency(0.0, 3.0, t) - closed_form_swift(3.0, t)).abs() < 1e-15);
        }
        assert_eq!(closed_form_laplacian_reduced(2.0, 7.0, 0.0), 1.0);
    }

    #[test]
    fn laplacian_forms_agree() {
        for i in 0..50 {
            let t = 0.13 * i as f64;
            let a = closed_form_laplacian_reduced(1.0, 4.0, t);
            let b = closed_form_laplacian_cone(4.0, t);
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn laplacian_cone_minimum() {
        // Two leaves: p = 5/9 + 4/9 cos 3t.
        let t = PI / 3.0;
        assert!((closed_form_laplacian_cone(2.0, t) - 1.0 / 9.0).abs() < 1e-15);
        for i in 0..40 {
            let t = 0.07 * i as f64;
            let direct = 5.0 / 9.0 + 4.0 / 9.0 * (3.0 * t).cos();
            assert!((closed_form_laplacian_cone(2.0, t) - direct).abs() < 1e-15);
        }
        // Minimum ((n-1)/(n+1))² approaches 1 as n grows.
        let mins: Vec<f64> = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&n| closed_form_laplacian_cone(n, PI / (n + 1.0)))
            .collect();
        assert!(mins.windows(2).all(|w| w[1] > w[0]));
        assert!((mins[2] - (999.0f64 / 1001.0).powi(2)).abs() < 1e-12);
    }
}
