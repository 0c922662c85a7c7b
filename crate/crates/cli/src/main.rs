//! Subcommand front end: graph/metric generation, distance matrices,
//! spectral summaries, bound verification, exact and floating solves, the
//! spectral solvability condition, asymptotic constants, Monte Carlo runs,
//! and family scans.
//!
//! Exit status: 0 on success, 1 on domain errors (disconnected graph,
//! invalid metric, failed verification), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use distmat::asymptotics::{
    finite_alignment, path_limit_constant, solve_c, solve_theta, star_min_entry_expansion,
    sun_limit_constant,
};
use distmat::experiments::{
    export_csv, family_grid, run_family_scan, run_mc_unsolvability, ConnectivityPolicy, McConfig,
    McResult, ScanOptions,
};
use distmat::spectral::{SpectralOptions, DEFAULT_MAX_ITER, DEFAULT_TOL};
use distmat::{
    gen_broom, gen_cluster_plus_point, gen_complete, gen_cycle, gen_erdos_renyi, gen_path,
    gen_star, gen_sun, graph_distance_matrix, metric_distance_matrix, prop1_condition, read_graph,
    read_metric, solve_exact, solve_float, spectral_summary, verify_theorem, write_graph,
    DistanceMatrix, Graph,
};

#[derive(Parser)]
#[command(
    name = "distmat",
    version,
    about = "Distance matrices of graphs and metric spaces: Perron eigenvectors, solvability of Dx = 1, and experiments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph and print it as edge-list text
    Gen(GenArgs),
    /// Print the distance matrix of the input as a numeric table
    Distmat(DistmatArgs),
    /// Perron eigenpair summary: lambda1, lambda2, min entry, alignment
    Spectrum(SpectrumArgs),
    /// Check the Perron-vector bounds min v >= 1/(2 sqrt(n)) and
    /// <v,1> >= sqrt(n/2); exit 0 iff both hold
    Verify(SpectrumArgs),
    /// Solve D x = 1: exact rational elimination on integer matrices,
    /// minimum-norm least squares otherwise
    Solve(SolveArgs),
    /// Spectral sufficient condition for solvability of D x = 1
    Prop1(SolveArgs),
    /// Asymptotic constants: c, theta(n), path limit, sun limit
    Asymptotics(AsymptoticsArgs),
    /// Monte Carlo unsolvability rates over G(n, p)
    Mc(McArgs),
    /// Scan graph families and report per-graph spectral statistics
    Scan(ScanArgs),
}

/// Where the analyzed matrix comes from: a file, a generated family, or the
/// cluster metric. Exactly one source must be given.
#[derive(Args, Debug)]
struct InputArgs {
    /// Edge-list file ("n m" header, then "u v" lines)
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
    /// Metric table file ("n" header, then n rows of n reals)
    #[arg(long, value_name = "PATH")]
    metric: Option<PathBuf>,
    /// Generate a family: path | star | cycle | complete | sun | broom | er
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Vertex count (path, cycle, complete, er)
    #[arg(long)]
    n: Option<usize>,
    /// Leaf count (star, broom)
    #[arg(long)]
    leaves: Option<usize>,
    /// Tail length (broom)
    #[arg(long)]
    tail: Option<usize>,
    /// Hub size (sun)
    #[arg(long)]
    hub: Option<usize>,
    /// Edge probability (er)
    #[arg(long)]
    p: Option<f64>,
    /// Random seed (er)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cluster size for the cluster-plus-far-point metric
    #[arg(long)]
    cluster: Option<usize>,
    /// Cluster spread for the cluster metric (default 0)
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
    /// Write to a file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistmatArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Residual tolerance for the power iteration
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Iteration cap for the power iteration
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AsymptoticsArgs {
    /// Print only the path-graph limit and the constant c
    #[arg(long)]
    path_limit: bool,
    /// Print only the sun-graph limit
    #[arg(long)]
    sun_limit: bool,
    /// Also solve the theta equation and finite alignment at this path size
    #[arg(long)]
    n: Option<usize>,
    /// Also evaluate the star center-entry expansion at this leaf count
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct McArgs {
    /// Graph size
    #[arg(long, default_value_t = 50)]
    n: usize,
    /// Probability grid entries; defaults to 0.05, 0.10, ..., 0.95
    #[arg(long = "p", value_name = "P")]
    ps: Vec<f64>,
    /// Connected trials per probability
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Count disconnected samples instead of resampling
    #[arg(long)]
    skip_disconnected: bool,
    /// Worker threads (output is independent of this)
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Families to scan (repeatable); "all" covers every family
    #[arg(long = "family", value_name = "NAME", default_values_t = [String::from("all")])]
    families: Vec<String>,
    /// Largest total vertex count in the grid
    #[arg(long, default_value_t = 60)]
    n: usize,
    /// Worker threads (output is independent of this)
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    /// Emit JSON records instead of CSV
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Usage problems exit with status 2, domain problems with status 1.
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<distmat::Error> for CliError {
    fn from(e: distmat::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Distmat(args) => cmd_distmat(args),
        Cmd::Spectrum(args) => cmd_spectrum(args, false),
        Cmd::Verify(args) => cmd_spectrum(args, true),
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Prop1(args) => cmd_prop1(args),
        Cmd::Asymptotics(args) => cmd_asymptotics(args),
        Cmd::Mc(args) => cmd_mc(args),
        Cmd::Scan(args) => cmd_scan(args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn build_family_graph(input: &InputArgs, family: &str) -> CliResult<Graph> {
    let need = |opt: Option<usize>, flag: &str| {
        opt.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
    };
    let g = match family {
        "path" => gen_path(need(input.n, "n")?)?,
        "star" => gen_star(need(input.leaves, "leaves")?)?,
        "cycle" => gen_cycle(need(input.n, "n")?)?,
        "complete" => gen_complete(need(input.n, "n")?)?,
        "sun" => gen_sun(need(input.hub, "hub")?)?,
        "broom" => gen_broom(need(input.leaves, "leaves")?, need(input.tail, "tail")?)?,
        "er" => {
            let p = input
                .p
                .ok_or_else(|| CliError::Usage("--family er requires --p".into()))?;
            gen_erdos_renyi(need(input.n, "n")?, p, input.seed)?
        }
        other => return usage(format!("unknown family: {other}")),
    };
    Ok(g)
}

/// Resolves the one input source into a distance matrix.
fn load_matrix(input: &InputArgs) -> CliResult<DistanceMatrix> {
    let sources = [
        input.graph.is_some(),
        input.metric.is_some(),
        input.family.is_some(),
        input.cluster.is_some(),
    ];
    match sources.iter().filter(|&&s| s).count() {
        0 => return usage("no input: give one of --graph, --metric, --family, --cluster"),
        1 => {}
        _ => {
            return usage(
                "conflicting inputs: give exactly one of --graph, --metric, --family, --cluster",
            )
        }
    }
    if let Some(path) = &input.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
        return Ok(graph_distance_matrix(&read_graph(&text)?)?);
    }
    if let Some(path) = &input.metric {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
        return Ok(metric_distance_matrix(&read_metric(&text)?));
    }
    if let Some(k) = input.cluster {
        let m = gen_cluster_plus_point(k, input.eps.unwrap_or(0.0))?;
        return Ok(metric_distance_matrix(&m));
    }
    let family = input.family.as_deref().expect("checked above");
    Ok(graph_distance_matrix(&build_family_graph(input, family)?)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Formats with 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let decimals = (11 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

fn cmd_gen(args: GenArgs) -> CliResult<ExitCode> {
    let family = match args.input.family.as_deref() {
        Some(f) => f.to_string(),
        None => return usage("gen requires --family"),
    };
    let g = build_family_graph(&args.input, &family)?;
    let text = if args.json {
        let edges: Vec<[u32; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
        let value = serde_json::json!({
            "n": g.n(),
            "m": g.edge_count(),
            "edges": edges,
        });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        write_graph(&g)
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_distmat(args: DistmatArgs) -> CliResult<ExitCode> {
    let d = load_matrix(&args.input)?;
    let text = if args.json {
        let rows: Vec<&[f64]> = (0..d.n()).map(|i| d.row(i)).collect();
        let value = serde_json::json!({ "n": d.n(), "rows": rows });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        d.write_table()
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(args: SpectrumArgs, verify: bool) -> CliResult<ExitCode> {
    let d = load_matrix(&args.input)?;
    let opts = SpectralOptions {
        tol: args.tol,
        max_iter: args.max_iter,
        ..SpectralOptions::default()
    };
    let summary = spectral_summary(&d, &opts)?;
    let check = verify_theorem(&summary);

    let text = if args.json {
        if verify {
            #[derive(serde::Serialize)]
            struct VerifyJson<'a> {
                summary: &'a distmat::SpectralSummary,
                min_entry_margin: f64,
                alignment_margin: f64,
                passes: bool,
            }
            let value = VerifyJson {
                summary: &summary,
                min_entry_margin: check.min_entry_margin,
                alignment_margin: check.alignment_margin,
                passes: check.passes,
            };
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        } else {
            format!("{}\n", serde_json::to_string_pretty(&summary).unwrap())
        }
    } else {
        let mut s = String::new();
        s.push_str(&format!("n          {}\n", summary.n));
        s.push_str(&format!("lambda1    {}\n", sig12(summary.lambda1)));
        match summary.lambda2 {
            Some(l2) => s.push_str(&format!("lambda2    {}\n", sig12(l2))),
            None => s.push_str("lambda2    (skipped: n above Jacobi cap)\n"),
        }
        s.push_str(&format!("min_entry  {}\n", sig12(summary.min_entry)));
        s.push_str(&format!("alignment  {}\n", sig12(summary.alignment)));
        s.push_str(&format!("residual   {:e}\n", summary.residual));
        s.push_str(&format!("iterations {}\n", summary.iterations));
        if verify {
            s.push_str(&format!(
                "margin min_entry - 1/(2 sqrt(n))  {}\n",
                sig12(check.min_entry_margin)
            ));
            s.push_str(&format!(
                "margin alignment - 1/sqrt(2)      {}\n",
                sig12(check.alignment_margin)
            ));
            s.push_str(&format!(
                "verdict {}\n",
                if check.passes { "PASS" } else { "FAIL" }
            ));
        }
        s
    };
    emit(&args.out, &text)?;
    if verify && !check.passes {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: SolveArgs) -> CliResult<ExitCode> {
    let d = load_matrix(&args.input)?;
    let report = if d.integer_view().is_some() {
        solve_exact(&d)?
    } else {
        solve_float(&d)
    };
    let text = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&report).unwrap())
    } else {
        let mut s = String::new();
        s.push_str(&format!("n          {}\n", report.n));
        s.push_str(&format!("consistent {}\n", report.consistent));
        s.push_str(&format!("rank_D     {}\n", report.rank_d));
        s.push_str(&format!("rank_aug   {}\n", report.rank_aug));
        s.push_str(&format!("invertible {}\n", report.invertible));
        match &report.solution {
            Some(distmat::Solution::Exact(x)) => {
                let parts: Vec<String> = x.iter().map(|r| r.to_string()).collect();
                s.push_str(&format!("solution   [{}]\n", parts.join(", ")));
            }
            Some(distmat::Solution::Float(x)) => {
                let parts: Vec<String> = x.iter().map(|v| format!("{v}")).collect();
                s.push_str(&format!("solution   [{}]\n", parts.join(", ")));
            }
            None => s.push_str("solution   (none: system is inconsistent)\n"),
        }
        if let Some(r) = report.residual {
            s.push_str(&format!("residual   {r:e}\n"));
        }
        if let Some(sum) = &report.sum_x {
            match sum {
                distmat::Scalar::Exact(v) => s.push_str(&format!("sum_x      {v}\n")),
                distmat::Scalar::Float(v) => s.push_str(&format!("sum_x      {v}\n")),
            }
        }
        s
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_prop1(args: SolveArgs) -> CliResult<ExitCode> {
    let d = load_matrix(&args.input)?;
    let report = prop1_condition(&d)?;
    let text = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&report).unwrap())
    } else {
        format!(
            "lambda1        {}\nlambda2        {}\nhypothesis_ok  {}\nlhs            {}\nrhs            {}\ncondition      {}\n",
            sig12(report.lambda1),
            sig12(report.lambda2),
            report.hypothesis_ok,
            sig12(report.lhs),
            sig12(report.rhs),
            if report.condition_holds { "holds" } else { "does not hold" },
        )
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_asymptotics(args: AsymptoticsArgs) -> CliResult<ExitCode> {
    let c = solve_c();
    let limit = path_limit_constant();
    let sun = sun_limit_constant();
    let theta = args.n.map(solve_theta).transpose()?;
    let align = args.n.map(finite_alignment).transpose()?;
    let star = args.leaves.map(star_min_entry_expansion);

    let text = if args.json {
        let value = serde_json::json!({
            "c": c,
            "theta": theta,
            "limit_constant": limit,
            "sun_limit": sun,
        });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        let mut s = String::new();
        if args.path_limit || !args.sun_limit {
            s.push_str(&format!("path limit constant  {}\n", sig12(limit)));
            s.push_str(&format!("c (root of c tanh c = 1)  {}\n", sig12(c)));
        }
        if args.sun_limit || !args.path_limit {
            s.push_str(&format!("sun limit constant   {}\n", sig12(sun)));
        }
        if let (Some(n), Some(t), Some(a)) = (args.n, theta, align) {
            s.push_str(&format!("theta({n})  {}\n", sig12(t)));
            s.push_str(&format!(
                "alignment of the cosh profile at n = {n}  {}\n",
                sig12(a)
            ));
        }
        if let (Some(k), Some(v)) = (args.leaves, star) {
            s.push_str(&format!(
                "star center-entry expansion at {k} leaves  {}\n",
                sig12(v)
            ));
        }
        s
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_mc(args: McArgs) -> CliResult<ExitCode> {
    let cfg = McConfig {
        n: args.n,
        p_grid: if args.ps.is_empty() {
            McConfig::default_p_grid()
        } else {
            args.ps.clone()
        },
        trials_per_p: args.trials,
        master_seed: args.seed,
        policy: if args.skip_disconnected {
            ConnectivityPolicy::Skip
        } else {
            ConnectivityPolicy::RejectResample
        },
        threads: args.threads,
    };
    let result: McResult = run_mc_unsolvability(&cfg)?;
    let text = if args.json {
        let value = serde_json::json!({ "config": cfg, "cells": result.cells });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        let mut s = String::from("p     attempted connected unsolvable rate      wilson95\n");
        for cell in &result.cells {
            let (rate, lo, hi) = match (cell.rate, cell.wilson_low, cell.wilson_high) {
                (Some(r), Some(lo), Some(hi)) => {
                    (format!("{r:.6}"), format!("{lo:.6}"), format!("{hi:.6}"))
                }
                _ => ("-".into(), "-".into(), "-".into()),
            };
            s.push_str(&format!(
                "{:<5} {:<9} {:<9} {:<10} {:<9} [{}, {}]\n",
                cell.p, cell.attempted, cell.connected, cell.unsolvable, rate, lo, hi
            ));
            for seed in &cell.unsolvable_seeds {
                s.push_str(&format!("  unsolvable graph seed: {seed}\n"));
            }
        }
        s.push_str(&format!("elapsed: {:.2}s\n", result.elapsed.as_secs_f64()));
        s
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(args: ScanArgs) -> CliResult<ExitCode> {
    let all = ["path", "star", "cycle", "complete", "sun", "broom"];
    let mut kinds: Vec<&str> = Vec::new();
    for f in &args.families {
        if f == "all" {
            kinds.extend(all);
        } else {
            kinds.push(f.as_str());
        }
    }
    kinds.dedup();
    let items = family_grid(&kinds, args.n)?;
    let opts = ScanOptions {
        spectral: SpectralOptions {
            tol: args.tol,
            max_iter: args.max_iter,
            ..SpectralOptions::default()
        },
        threads: args.threads,
    };
    let out = run_family_scan(&items, &opts);
    let text = if args.json {
        let value = serde_json::json!({ "records": out.records, "summary": out.summary });
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else {
        export_csv(&out.records)
    };
    emit(&args.out, &text)?;
    eprintln!(
        "scanned {} graphs: mean alignment {:.6}, min {:.6} at {}",
        out.summary.count,
        out.summary.mean_alignment,
        out.summary.min_alignment,
        out.summary.argmin
    );
    Ok(ExitCode::SUCCESS)
}
