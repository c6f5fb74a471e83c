use std::collections::VecDeque;
use std::f64::consts::{FRAC_PI_2, TAU};

use serde::{Deserialize, Serialize};

use super::numeric::{numeric_swift_solver, NumericOptions};
use super::report::{Certificate, Infeasibility, Method, SwiftReport, Verdict, CONSTRUCTIVE_TOL};
use super::residual;
use crate::chiral::{build_chiral, ChiralMatrix, Kind, PhaseAssignment};
use crate::graph::{analyze, eulerian_circuit, generate_family, perfect_matching, Family, Graph};

/// Which synthesis route to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodChoice {
    Auto,
    Even,
    OddRegular,
    Bipartite,
    Numeric,
}

/// Evaluates `phases` on `g` and marks the report feasible when the
/// residual is within `tol`.
fn finish(g: &Graph, method: Method, phases: PhaseAssignment, certificate: Certificate, tol: f64) -> SwiftReport {
    let h = build_chiral(g, &phases, Kind::Adjacency, None).expect("synthesised phases cover every edge");
    let r = residual(&h);
    SwiftReport {
        verdict: if r <= tol { Verdict::Feasible } else { Verdict::Unknown },
        method,
        n: g.n(),
        residual: Some(r),
        tolerance: tol,
        phases: Some(phases),
        certificate,
    }
}

fn degree_one(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == 1)
}

/// Phase `+π/2` along every arc of an Eulerian orientation, so each vertex
/// collects equally many `i` and `-i` entries.
pub fn synthesize_even_degree(g: &Graph) -> SwiftReport {
    let Ok(orientation) = eulerian_circuit(g) else {
        return SwiftReport::not_applicable(Method::EvenEulerian, g.n());
    };
    let mut phases = PhaseAssignment::new();
    for &(u, v) in &orientation.arcs {
        phases.set(u, v, FRAC_PI_2);
    }
    let certificate = Certificate {
        orientation: Some(orientation),
        ..Certificate::default()
    };
    finish(g, Method::EvenEulerian, phases, certificate, CONSTRUCTIVE_TOL)
}

/// Odd `d`-regular graphs: a perfect matching `M` gets phase `0` and the
/// `(d-1)`-regular remainder is oriented along Eulerian circuits with phase
/// `φ = arccos(-1/(d-1))`, giving row sums `1 + (d-1) cos φ = 0`.
///
/// For `d = 3` a missing perfect matching proves infeasibility; for larger
/// odd `d` it only makes the route inapplicable.
pub fn synthesize_odd_regular(g: &Graph) -> SwiftReport {
    let d = match analyze(g).regular_degree {
        Some(d) if d % 2 == 1 && d >= 3 => d,
        _ => return SwiftReport::not_applicable(Method::OddRegularMatching, g.n()),
    };
    let Some(matching) = perfect_matching(g) else {
        return if d == 3 {
            SwiftReport::infeasible(Method::OddRegularMatching, g.n(), Infeasibility::NoPerfectMatching)
        } else {
            SwiftReport::not_applicable(Method::OddRegularMatching, g.n())
        };
    };
    let rest = Graph::new(
        g.n(),
        g.edges().iter().copied().filter(|e| matching.pairs.binary_search(e).is_err()),
    )
    .expect("subgraph of a simple graph");
    let orientation = eulerian_circuit(&rest).expect("removing a perfect matching leaves even degrees");
    let phi = (-1.0 / (d as f64 - 1.0)).acos();
    let mut phases = PhaseAssignment::new();
    for &(u, v) in &matching.pairs {
        phases.set(u, v, 0.0);
    }
    for &(u, v) in &orientation.arcs {
        phases.set(u, v, phi);
    }
    let certificate = Certificate {
        matching: Some(matching),
        orientation: Some(orientation),
        infeasibility: None,
    };
    finish(g, Method::OddRegularMatching, phases, certificate, CONSTRUCTIVE_TOL)
}

/// Product-of-roots phases `e^{2πi j/|A|} e^{2πi k/|B|}` on the edge from the
/// `j`-th vertex of `left` to the `k`-th vertex of `right`.
fn bipartite_phases(left: &[usize], right: &[usize]) -> PhaseAssignment {
    let mut phases = PhaseAssignment::new();
    let (a, b) = (left.len() as f64, right.len() as f64);
    for (j, &u) in left.iter().enumerate() {
        for (k, &v) in right.iter().enumerate() {
            phases.set(u, v, TAU * j as f64 / a + TAU * k as f64 / b);
        }
    }
    phases
}

/// Swift configuration of `K_{n1,n2}` with sides `0..n1` and `n1..n1+n2`.
pub fn synthesize_complete_bipartite(n1: usize, n2: usize) -> SwiftReport {
    let n = n1 + n2;
    if n1 < 2 || n2 < 2 {
        let vertex = if n1 < 2 && n2 >= 1 && n1 >= 1 { n1 } else { 0 };
        return SwiftReport::infeasible(Method::CompleteBipartite, n, Infeasibility::DegreeOne { vertex });
    }
    let g = generate_family(Family::CompleteBipartite(n1, n2)).expect("sides are nonempty");
    let left: Vec<_> = (0..n1).collect();
    let right: Vec<_> = (n1..n).collect();
    finish(&g, Method::CompleteBipartite, bipartite_phases(&left, &right), Certificate::default(), CONSTRUCTIVE_TOL)
}

/// The two sides, if `g` is a connected complete bipartite graph.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.n() < 2 {
        return None;
    }
    let mut side = vec![u8::MAX; g.n()];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if side[w] == side[v] {
                return None;
            }
        }
    }
    if side.contains(&u8::MAX) {
        return None;
    }
    let left: Vec<_> = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let right: Vec<_> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    (left.len() * right.len() == g.edge_count()).then_some((left, right))
}

fn synthesize_bipartite_graph(g: &Graph) -> SwiftReport {
    match complete_bipartite_parts(g) {
        Some((left, right)) if left.len() >= 2 && right.len() >= 2 => finish(
            g,
            Method::CompleteBipartite,
            bipartite_phases(&left, &right),
            Certificate::default(),
            CONSTRUCTIVE_TOL,
        ),
        _ => match degree_one(g) {
            Some(vertex) => SwiftReport::infeasible(Method::CompleteBipartite, g.n(), Infeasibility::DegreeOne { vertex }),
            None => SwiftReport::not_applicable(Method::CompleteBipartite, g.n()),
        },
    }
}

/// Stitches per-part reports into one report on `n` vertices; `maps[i]`
/// sends vertices of part `i` to the combined labelling.
fn combine(parts: &[SwiftReport], maps: &[Vec<usize>], n: usize, method: Option<Method>) -> SwiftReport {
    let method = method.unwrap_or_else(|| match parts.first() {
        Some(first) if parts.iter().all(|p| p.method == first.method) => first.method,
        _ => Method::Union,
    });
    let verdict = if parts.iter().any(|p| p.verdict == Verdict::Infeasible) {
        Verdict::Infeasible
    } else if parts.iter().any(|p| p.verdict == Verdict::Unknown) {
        Verdict::Unknown
    } else {
        Verdict::Feasible
    };
    let mut certificate = Certificate::default();
    let mut phases = PhaseAssignment::new();
    let mut complete = true;
    for (part, map) in parts.iter().zip(maps) {
        certificate.merge(part.certificate.relabel(|v| map[v]));
        match &part.phases {
            Some(p) => phases.extend(&p.relabel(|v| map[v])),
            None => complete = false,
        }
    }
    let residual = parts
        .iter()
        .map(|p| p.residual)
        .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)));
    SwiftReport {
        verdict,
        method,
        n,
        residual,
        tolerance: parts.iter().map(|p| p.tolerance).fold(CONSTRUCTIVE_TOL, f64::max),
        phases: (complete && verdict == Verdict::Feasible).then_some(phases),
        certificate,
    }
}

/// Phases on the disjoint union of the graphs the reports were computed
/// for, in order; part `i` is offset by the orders of the parts before it.
/// The residual is the largest part residual.
pub fn synthesize_union(reports: &[SwiftReport]) -> SwiftReport {
    let mut offset = 0;
    let maps: Vec<Vec<usize>> = reports
        .iter()
        .map(|r| {
            let map = (offset..offset + r.n).collect();
            offset += r.n;
            map
        })
        .collect();
    combine(reports, &maps, offset, Some(Method::Union))
}

fn synthesize_component(g: &Graph, opts: &NumericOptions) -> SwiftReport {
    if let Some(vertex) = degree_one(g) {
        return SwiftReport::infeasible(Method::EvenEulerian, g.n(), Infeasibility::DegreeOne { vertex });
    }
    let stats = analyze(g);
    if stats.degrees.iter().all(|d| d % 2 == 0) {
        return synthesize_even_degree(g);
    }
    if let Some(d) = stats.regular_degree {
        if d % 2 == 1 {
            let r = synthesize_odd_regular(g);
            if r.verdict != Verdict::Unknown {
                return r;
            }
        }
    }
    if let Some((left, right)) = complete_bipartite_parts(g) {
        if left.len() >= 2 && right.len() >= 2 {
            return synthesize_bipartite_graph(g);
        }
    }
    numeric_swift_solver(g, opts)
}

/// Dispatches each connected component to the first applicable route:
/// degree-1 check, Eulerian, odd-regular matching, complete bipartite, then
/// the numerical search.
pub fn synthesize_auto(g: &Graph) -> SwiftReport {
    synthesize_auto_with(g, &NumericOptions::default())
}

pub fn synthesize_auto_with(g: &Graph, opts: &NumericOptions) -> SwiftReport {
    let components = g.components();
    if components.len() == 1 {
        return synthesize_component(g, opts);
    }
    let parts: Vec<SwiftReport> = components
        .iter()
        .map(|c| synthesize_component(&g.induced_subgraph(c), opts))
        .collect();
    let mut report = combine(&parts, &components, g.n(), None);
    if let Some(phases) = &report.phases {
        let h: ChiralMatrix = build_chiral(g, phases, Kind::Adjacency, None).expect("components cover every edge");
        report.residual = Some(residual(&h));
    }
    report
}

/// Runs one route on the whole graph.
pub fn synthesize(g: &Graph, choice: MethodChoice, opts: &NumericOptions) -> SwiftReport {
    match choice {
        MethodChoice::Auto => synthesize_auto_with(g, opts),
        MethodChoice::Even => synthesize_even_degree(g),
        MethodChoice::OddRegular => synthesize_odd_regular(g),
        MethodChoice::Bipartite => synthesize_bipartite_graph(g),
        MethodChoice::Numeric => numeric_swift_solver(g, opts),
    }
}
