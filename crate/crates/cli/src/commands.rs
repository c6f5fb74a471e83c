use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use swiftwalk::chiral::{
    build_chiral, gauge_transform, row_sums, verify_spectral_bounds, ChiralMatrix, GaugeTransform, Kind,
    PhaseAssignment, SpectralBoundReport,
};
use swiftwalk::dynamics::{
    closed_form_swift, grover_oracle_laplacian, nogo_bound, qsl, sedentarity_report, Propagator, QslReport,
    ReturnAnalysis, TimeGrid,
};
use swiftwalk::graph::{cone, generate_family, Family, Graph};
use swiftwalk::io::{read_graph, read_phases, to_edge_list};
use swiftwalk::swift::{
    cone_walk_residual, synthesize, synthesize_cone_walk, ConeWalkRefusal, Method, NumericOptions, SwiftReport,
    Verdict,
};

use crate::args::{BoundArgs, GenerateArgs, Generator, SimulateArgs, SynthesizeArgs, VerifyArgs};
use crate::config::{envelope, write_file, write_json, RunConfig};
use crate::error::{CliError, CliResult};

fn load_phases(path: Option<&Path>) -> CliResult<Option<PhaseAssignment>> {
    Ok(path.map(read_phases).transpose()?)
}

/// Generator matrix for `kind`; phases are required exactly for the
/// chiral kinds.
fn build_generator(
    g: &Graph,
    phases: Option<&PhaseAssignment>,
    generator: Generator,
    from: usize,
) -> CliResult<ChiralMatrix> {
    g.check_vertex(from)?;
    match (generator.is_chiral(), phases) {
        (true, None) => {
            return Err(CliError::Usage(format!(
                "--generator {} needs --phases",
                generator_name(generator)
            )))
        }
        (false, Some(_)) => {
            return Err(CliError::Usage(format!(
                "--phases only applies to chiral generators, not {}",
                generator_name(generator)
            )))
        }
        _ => {}
    }
    Ok(match generator {
        Generator::Adjacency => ChiralMatrix::classical(g, Kind::Adjacency),
        Generator::Laplacian => ChiralMatrix::classical(g, Kind::Laplacian),
        Generator::ChiralAdjacency => build_chiral(g, phases.unwrap(), Kind::Adjacency, None)?,
        Generator::ChiralLaplacian => build_chiral(g, phases.unwrap(), Kind::Laplacian, None)?,
        Generator::GroverOracle => grover_oracle_laplacian(g, from)?,
    })
}

fn generator_name(g: Generator) -> &'static str {
    match g {
        Generator::Adjacency => "adjacency",
        Generator::Laplacian => "laplacian",
        Generator::ChiralAdjacency => "chiral-adjacency",
        Generator::ChiralLaplacian => "chiral-laplacian",
        Generator::GroverOracle => "grover-oracle",
    }
}

fn finite(label: &str, x: f64) -> CliResult<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Numerical(format!("{label} is not finite")))
    }
}

#[derive(Serialize)]
struct SimulateSummary {
    n: usize,
    degree: usize,
    min_return: f64,
    min_return_time: f64,
    refined_min_return: f64,
    refined_min_time: f64,
    first_zero_time: Option<f64>,
    final_return: f64,
    qsl: QslReport,
}

pub fn simulate(args: &SimulateArgs) -> CliResult<String> {
    let mut config = RunConfig::new("simulate", &args.input.graph, args.tol, args.seed, &args.out)?
        .with_grid(&args.grid)?
        .with_phases(args.input.phases.as_ref());
    config.generator = Some(args.generator);
    config.from = Some(args.from);

    let g = read_graph(&args.input.graph)?;
    let phases = load_phases(args.input.phases.as_deref())?;
    let h = build_generator(&g, phases.as_ref(), args.generator, args.from)?;
    let grid = TimeGrid::new(args.grid.t_max, args.grid.steps)?;
    let prop = Propagator::new(&h);

    let curve = prop.return_curve(args.from);
    let times = grid.times();
    let mut csv = String::from("t,p\n");
    let mut final_return = 1.0;
    for &t in &times {
        let p = finite("return probability", curve.at(t))?;
        csv.push_str(&format!("{t:.16e},{p:.16e}\n"));
        final_return = p;
    }
    let analysis = ReturnAnalysis::compute(&prop, args.from, &grid);
    finite("refined minimum", analysis.refined_min)?;
    let report = qsl(&h, args.from)?;

    let summary = SimulateSummary {
        n: g.n(),
        degree: g.degree(args.from),
        min_return: analysis.grid_min,
        min_return_time: analysis.grid_min_time,
        refined_min_return: analysis.refined_min,
        refined_min_time: analysis.refined_min_time,
        first_zero_time: analysis.first_zero_time,
        final_return,
        qsl: report,
    };
    write_file(&args.out, "series.csv", &csv)?;
    write_json(&args.out, "summary.json", &envelope(&config, &summary))?;
    let zero = match summary.first_zero_time {
        Some(t) => format!("first zero at t={t:.6}"),
        None => "no zero".to_string(),
    };
    Ok(format!(
        "simulate: {} walk from {} on {} vertices, min return {:.6e} at t={:.6}, {zero}",
        generator_name(args.generator),
        args.from,
        g.n(),
        summary.refined_min_return,
        summary.refined_min_time
    ))
}

/// Outcome of building a swift walk from one vertex.
#[derive(Serialize)]
struct ConeWalkReport {
    verdict: Verdict,
    method: Method,
    vertex: usize,
    degree: usize,
    residual: Option<f64>,
    tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    refusal: Option<ConeWalkRefusal>,
}

#[derive(Serialize)]
struct SynthesisOutput<T: Serialize> {
    report: T,
}

pub fn synthesize_cmd(args: &SynthesizeArgs) -> CliResult<String> {
    let mut config = RunConfig::new("synthesize", &args.graph, args.tol, args.seed, &args.out)?;
    let g = read_graph(&args.graph)?;
    let (summary, phases) = match args.from {
        None => {
            config.method = Some(args.method);
            let opts = NumericOptions { tol: args.tol, seed: args.seed, ..NumericOptions::default() };
            let report: SwiftReport = synthesize(&g, args.method.into(), &opts);
            let phases = report.phases.clone().filter(|_| report.is_feasible());
            let residual = report.residual.map_or("none".to_string(), |r| format!("{r:.3e}"));
            let line = format!(
                "synthesize: {} via {}, residual {residual}",
                verdict_name(report.verdict),
                method_name(report.method),
            );
            write_json(&args.out, "report.json", &envelope(&config, SynthesisOutput { report }))?;
            (line, phases)
        }
        Some(v) => {
            config.from = Some(v);
            g.check_vertex(v)?;
            let (report, phases) = match synthesize_cone_walk(&g, v) {
                Ok(h) => {
                    let residual = cone_walk_residual(&h, v)?;
                    let verdict = if residual <= args.tol { Verdict::Feasible } else { Verdict::Unknown };
                    let report = ConeWalkReport {
                        verdict,
                        method: Method::ConeWalk,
                        vertex: v,
                        degree: g.degree(v),
                        residual: Some(residual),
                        tolerance: args.tol,
                        refusal: None,
                    };
                    let phases = (verdict == Verdict::Feasible).then(|| h.phases().clone());
                    (report, phases)
                }
                Err(refusal) => {
                    let verdict = match refusal {
                        ConeWalkRefusal::NeighbourhoodNotSwift { ref report } => report.verdict,
                        _ => Verdict::Infeasible,
                    };
                    let report = ConeWalkReport {
                        verdict,
                        method: Method::ConeWalk,
                        vertex: v,
                        degree: g.degree(v),
                        residual: None,
                        tolerance: args.tol,
                        refusal: Some(refusal),
                    };
                    (report, None)
                }
            };
            let line = format!(
                "synthesize: swift walk from {v} {}{}",
                verdict_name(report.verdict),
                report.residual.map_or(String::new(), |r| format!(", residual {r:.3e}"))
            );
            write_json(&args.out, "report.json", &envelope(&config, SynthesisOutput { report }))?;
            (line, phases)
        }
    };
    match phases {
        Some(p) => {
            write_json(&args.out, "phases.json", &envelope(&config, &p))?;
            Ok(format!("{summary}; phases written"))
        }
        None => Ok(summary),
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Feasible => "feasible",
        Verdict::Infeasible => "infeasible",
        Verdict::Unknown => "unknown",
    }
}

fn method_name(m: Method) -> String {
    serde_json::to_value(m).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

#[derive(Serialize)]
struct Check {
    value: f64,
    tolerance: f64,
    pass: bool,
}

impl Check {
    fn new(value: f64, tolerance: f64) -> Self {
        Check { value, tolerance, pass: value <= tolerance }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    vertex: usize,
    degree: usize,
    /// `‖H · 1‖∞` over the whole graph; informational.
    full_row_sum_residual: f64,
    /// Neighbour row sums after fixing the gauge at the start vertex;
    /// absent for Laplacian generators.
    row_sums: Option<Check>,
    swift_profile: Check,
    spectral_bounds: Option<SpectralBoundReport>,
    gauge_invariance: Check,
    energy_variance: Check,
    all_pass: bool,
}

pub fn verify(args: &VerifyArgs) -> CliResult<String> {
    let mut config = RunConfig::new("verify", &args.input.graph, args.tol, args.seed, &args.out)?
        .with_grid(&args.grid)?
        .with_phases(args.input.phases.as_ref());
    config.generator = Some(args.generator);
    config.from = Some(args.from);

    let g = read_graph(&args.input.graph)?;
    let phases = load_phases(args.input.phases.as_deref())?;
    let h = build_generator(&g, phases.as_ref(), args.generator, args.from)?;
    let v = args.from;
    let n = g.degree(v) as f64;
    let grid = TimeGrid::new(args.grid.t_max, args.grid.steps)?;
    let times = grid.times();

    let row_sums_check = match h.kind() {
        Kind::Laplacian => None,
        _ if g.degree(v) == 0 => None,
        _ => Some(Check::new(cone_walk_residual(&h, v)?, args.tol)),
    };
    let full = row_sums(&h).iter().map(|z| z.norm()).fold(0.0, f64::max);

    let prop = Propagator::new(&h);
    let curve = prop.return_curve(v);
    let mut profile: f64 = 0.0;
    for &t in &times {
        profile = profile.max((curve.at(t) - closed_form_swift(n, t)).abs());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let gauged = gauge_transform(&h, &GaugeTransform::random(g.n(), &mut rng))?;
    let gauged_prop = Propagator::new(&gauged);
    let mut gauge_dev: f64 = 0.0;
    for &t in &times {
        let (a, b) = (prop.column(v, t), gauged_prop.column(v, t));
        for k in 0..g.n() {
            gauge_dev = gauge_dev.max((a[k].norm_sqr() - b[k].norm_sqr()).abs());
        }
    }

    let spectral = match h.kind() {
        Kind::General => None,
        _ => Some(verify_spectral_bounds(&h)?),
    };
    let q = qsl(&h, v)?;
    let report = VerifyReport {
        vertex: v,
        degree: g.degree(v),
        full_row_sum_residual: full,
        swift_profile: Check::new(finite("swift profile deviation", profile)?, args.tol),
        gauge_invariance: Check::new(finite("gauge deviation", gauge_dev)?, args.tol),
        energy_variance: Check::new((q.delta_h - n.sqrt()).abs(), args.tol),
        all_pass: false,
        row_sums: row_sums_check,
        spectral_bounds: spectral,
    };
    let all_pass = report.row_sums.as_ref().is_none_or(|c| c.pass)
        && report.swift_profile.pass
        && report.spectral_bounds.as_ref().is_none_or(|s| s.pass)
        && report.gauge_invariance.pass
        && report.energy_variance.pass;
    let report = VerifyReport { all_pass, ..report };
    write_json(&args.out, "verify.json", &envelope(&config, &report))?;

    let mut failed = Vec::new();
    if report.row_sums.as_ref().is_some_and(|c| !c.pass) {
        failed.push("row_sums");
    }
    if !report.swift_profile.pass {
        failed.push("swift_profile");
    }
    if report.spectral_bounds.as_ref().is_some_and(|s| !s.pass) {
        failed.push("spectral_bounds");
    }
    if !report.gauge_invariance.pass {
        failed.push("gauge_invariance");
    }
    if !report.energy_variance.pass {
        failed.push("energy_variance");
    }
    Ok(if failed.is_empty() {
        format!("verify: PASS from vertex {v}, swift profile deviation {profile:.3e}")
    } else {
        format!(
            "verify: FAIL from vertex {v} ({}), swift profile deviation {profile:.3e}",
            failed.join(", ")
        )
    })
}

#[derive(Serialize)]
struct NogoReport {
    degree: usize,
    d_sup: usize,
    /// `1 - √N/(N - 2 d_sup)`; absent when `2 d_sup ≥ N`.
    bound: Option<f64>,
    /// Set when `2 d_sup ≥ N`, so the bound does not apply.
    not_applicable: bool,
    samples: usize,
    observed_min: Option<f64>,
    violations: usize,
}

#[derive(Serialize)]
struct BoundReport {
    qsl: QslReport,
    nogo: Option<NogoReport>,
}

pub fn bound(args: &BoundArgs) -> CliResult<String> {
    let mut config = RunConfig::new("bound", &args.input.graph, args.tol, args.seed, &args.out)?
        .with_grid(&args.grid)?
        .with_phases(args.input.phases.as_ref());
    config.generator = Some(args.generator);
    config.from = Some(args.from);
    config.samples = Some(args.samples);

    let g = read_graph(&args.input.graph)?;
    let phases = load_phases(args.input.phases.as_deref())?;
    let h = build_generator(&g, phases.as_ref(), args.generator, args.from)?;
    let v = args.from;
    let q = qsl(&h, v)?;

    let nogo = if args.generator.is_laplacian() {
        let (degree, d_sup, b) = nogo_bound(&g, v);
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut observed: Option<f64> = None;
        let mut violations = 0;
        for _ in 0..args.samples {
            let draw = ChiralMatrix::random(&g, Kind::Laplacian, &mut rng);
            let r = sedentarity_report(&draw, v, args.grid.t_max, args.grid.steps)?;
            let m = finite("sampled minimum", r.min_return_refined.min(r.min_return))?;
            observed = Some(observed.map_or(m, |o| o.min(m)));
            if r.violation {
                violations += 1;
            }
        }
        Some(NogoReport {
            degree,
            d_sup,
            bound: b,
            not_applicable: b.is_none(),
            samples: args.samples,
            observed_min: observed,
            violations,
        })
    } else {
        None
    };

    let line = match &nogo {
        Some(NogoReport { bound: Some(b), observed_min, .. }) => format!(
            "bound: tau_s {:.6}, delta_h {:.6}, no-go bound {b:.6}, observed min {}",
            q.tau_s,
            q.delta_h,
            observed_min.map_or("none".to_string(), |m| format!("{m:.6}"))
        ),
        Some(_) => format!(
            "bound: tau_s {:.6}, delta_h {:.6}, no-go bound not applicable (2 d_sup >= N)",
            q.tau_s, q.delta_h
        ),
        None => format!("bound: tau_s {:.6}, tau_qsl {:.6}, delta_h {:.6}", q.tau_s, q.tau_qsl, q.delta_h),
    };
    write_json(&args.out, "bound.json", &envelope(&config, BoundReport { qsl: q, nogo }))?;
    Ok(line)
}

fn parse_family(text: &str) -> CliResult<Family> {
    let (name, params) = text.split_once(':').unwrap_or((text, ""));
    let nums: Vec<usize> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| CliError::Usage(format!("bad family parameter {p:?}"))))
            .collect::<CliResult<_>>()?
    };
    let bad = || CliError::Usage(format!("unknown family or wrong parameter count: {text:?}"));
    Ok(match (name, &nums[..]) {
        ("star", &[n]) => Family::Star(n),
        ("cycle", &[n]) => Family::Cycle(n),
        ("complete", &[n]) => Family::Complete(n),
        ("complete-bipartite", &[a, b]) => Family::CompleteBipartite(a, b),
        ("wheel", &[n]) => Family::Wheel(n),
        ("path", &[n]) => Family::Path(n),
        ("empty", &[n]) => Family::Empty(n),
        ("petersen", []) => Family::Petersen,
        ("hypercube", &[d]) => Family::Hypercube(d),
        ("no-matching-cubic", []) => Family::NoMatchingCubic,
        _ => return Err(bad()),
    })
}

pub fn generate(args: &GenerateArgs) -> CliResult<String> {
    let family = parse_family(&args.family)?;
    let mut g = generate_family(family)?;
    if args.cone {
        g = cone(&g);
    }
    let text = to_edge_list(&g);
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(format!(
                "generate: {} with {} vertices and {} edges -> {}",
                args.family,
                g.n(),
                g.edge_count(),
                path.display()
            ))
        }
        None => Ok(text.trim_end().to_string()),
    }
}
