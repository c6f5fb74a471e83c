//! Test-only graph generators and brute-force oracles.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use swiftwalk::graph::{analyze, Graph};

/// Exhaustive perfect-matching search: match the lowest free vertex with
/// each free neighbour in turn.
pub fn brute_force_has_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, free: &mut Vec<bool>) -> bool {
        let Some(v) = free.iter().position(|&f| f) else {
            return true;
        };
        free[v] = false;
        for &w in g.neighbors(v) {
            if free[w] {
                free[w] = false;
                if go(g, free) {
                    free[w] = true;
                    free[v] = true;
                    return true;
                }
                free[w] = true;
            }
        }
        free[v] = true;
        false
    }
    g.n().is_multiple_of(2) && go(g, &mut vec![true; g.n()])
}

/// Maximum matching size by exhaustive search over edge subsets (small
/// graphs only).
pub fn brute_force_matching_size(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, from: usize) -> usize {
        let mut best = 0;
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                best = best.max(1 + go(edges, used, i + 1));
                used[u] = false;
                used[v] = false;
            }
        }
        best
    }
    go(g.edges(), &mut vec![false; g.n()], 0)
}

/// Backtracking search for a spanning 2-regular subgraph.
pub fn brute_force_has_two_factor(g: &Graph) -> bool {
    let edges = g.edges();
    let mut last = vec![None; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        last[u] = Some(i);
        last[v] = Some(i);
    }
    if last.iter().any(Option::is_none) {
        return false;
    }
    fn go(i: usize, edges: &[(usize, usize)], last: &[Option<usize>], count: &mut Vec<u8>) -> bool {
        if i == edges.len() {
            return count.iter().all(|&c| c == 2);
        }
        let (u, v) = edges[i];
        for take in [true, false] {
            if take {
                if count[u] == 2 || count[v] == 2 {
                    continue;
                }
                count[u] += 1;
                count[v] += 1;
            }
            let closed_ok = [u, v].iter().all(|&w| last[w] != Some(i) || count[w] == 2);
            if closed_ok && go(i + 1, edges, last, count) {
                return true;
            }
            if take {
                count[u] -= 1;
                count[v] -= 1;
            }
        }
        false
    }
    go(0, edges, &last, &mut vec![0; g.n()])
}

/// Random simple connected cubic graph on `n` (even) vertices from the
/// pairing model with rejection.
pub fn random_connected_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let Ok(b) = swiftwalk::graph::build_graph(n, pairs) else { continue };
        if b.duplicates_collapsed > 0 {
            continue;
        }
        if analyze(&b.graph).is_connected {
            return b.graph;
        }
    }
}

/// Cubic graph with a Hamiltonian cycle `0, 1, .., n-1` plus random chords.
pub fn random_hamiltonian_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let chords: Vec<(usize, usize)> = order.chunks(2).map(|c| (c[0], c[1])).collect();
        let cycle = (0..n).map(|i| (i, (i + 1) % n));
        let b = swiftwalk::graph::build_graph(n, cycle.chain(chords)).unwrap();
        if b.duplicates_collapsed == 0 {
            return b.graph;
        }
    }
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Prism `C_k × K_2`.
pub fn prism(k: usize) -> Graph {
    let outer = (0..k).map(|i| (i, (i + 1) % k));
    let inner = (0..k).map(|i| (k + i, k + (i + 1) % k));
    let rungs = (0..k).map(|i| (i, k + i));
    Graph::new(2 * k, outer.chain(inner).chain(rungs)).unwrap()
}

/// Two copies of K4 with a subdivided edge, the subdivision vertices joined
/// by a bridge: cubic, has a bridge and a perfect matching.
pub fn bridged_cubic() -> Graph {
    let mut edges = Vec::new();
    for base in [0, 5] {
        let (a, b, c, d, s) = (base, base + 1, base + 2, base + 3, base + 4);
        edges.extend([(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s)]);
    }
    edges.push((4, 9));
    Graph::new(10, edges).unwrap()
}

/// `exp(-i m t) e_source` by scaling and squaring of a truncated Taylor
/// series; shares no code with the eigendecomposition path.
pub fn taylor_expm_column(
    m: &nalgebra::DMatrix<num_complex::Complex64>,
    source: usize,
    t: f64,
) -> nalgebra::DVector<num_complex::Complex64> {
    use nalgebra::DMatrix;
    use num_complex::Complex64;
    let n = m.nrows();
    let norm: f64 = m.iter().map(|z| z.norm()).sum::<f64>() * t.abs();
    let squarings = (norm.max(1.0).log2().ceil() as u32) + 4;
    let scale = t / f64::from(1u32 << squarings);
    let a = m.map(|z| z * Complex64::new(0.0, -scale));
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &a / Complex64::from(k as f64);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum.column(source).into_owned()
}

/// Base graphs that carry a swift configuration.
pub fn swift_bases() -> Vec<Graph> {
    use swiftwalk::graph::{generate_family, Family};
    let mut out = Vec::new();
    for k in 3..9 {
        out.push(generate_family(Family::Cycle(k)).unwrap());
    }
    for k in 3..7 {
        out.push(generate_family(Family::Complete(k)).unwrap());
    }
    out.push(generate_family(Family::CompleteBipartite(2, 3)).unwrap());
    out.push(generate_family(Family::CompleteBipartite(3, 4)).unwrap());
    out.push(generate_family(Family::Petersen).unwrap());
    out.push(generate_family(Family::Hypercube(3)).unwrap());
    out
}

/// A graph where vertex `0` is joined to a swift base on `1..=b` and every
/// further vertex has at least two neighbours in the base. With `violate`,
/// one extra vertex has exactly one base neighbour; its index and that
/// neighbour are returned.
pub fn cone_walk_instance<R: Rng>(base: &Graph, violate: bool, rng: &mut R) -> (Graph, Option<(usize, usize)>) {
    let b = base.n();
    let mut edges: Vec<(usize, usize)> = (1..=b).map(|u| (0, u)).collect();
    edges.extend(base.edges().iter().map(|&(u, v)| (u + 1, v + 1)));
    let outside = rng.gen_range(1..=3);
    let base_vertices: Vec<usize> = (1..=b).collect();
    for i in 0..outside {
        let w = b + 1 + i;
        let c = rng.gen_range(2..=b.min(4));
        for &u in base_vertices.choose_multiple(rng, c) {
            edges.push((u, w));
        }
        for j in 0..i {
            if rng.gen_bool(0.5) {
                edges.push((b + 1 + j, w));
            }
        }
    }
    let mut n = b + 1 + outside;
    let mut witness = None;
    if violate {
        let w = n;
        let u = *base_vertices.choose(rng).unwrap();
        edges.push((u, w));
        edges.push((b + 1, w));
        n += 1;
        witness = Some((w, u));
    }
    (Graph::new(n, edges).unwrap(), witness)
}
