//! Benchmark plans and the parallel runner behind `mlbp bench`.
//!
//! A plan is a key=value file ('#' comments and blank lines allowed):
//!
//! ```text
//! n = 10, 20
//! labels = n            # or a comma list; "n" matches the vertex count
//! density = 0.3, 0.8
//! instances = 3
//! methods = exact, greedy, grasp
//! mode = edge
//! seed = 7
//! time_limit_ms = 60000
//! grasp_iterations = 50
//! grasp_alpha = 3
//! ensure = auto         # auto | none | edge | vertex
//! ```
//!
//! `n`, `density`, `methods`, and `mode` are required; the values shown
//! for the rest are the defaults. `ensure = auto` regenerates instances
//! until they are bi-connected in the plan's mode, so heuristic rows
//! measure construction rather than infeasibility detection.

use core::time::Duration;

use mlbp_core::{
    brute_force_optimum, grasp, greedy_solve, solve_exact, GraspConfig, LabeledGraph, Mode,
    OracleError, SolverConfig, SolverResult,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::clock::WallClock;
use crate::instance::{generate, GenerateError, InstanceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Exact,
    Greedy,
    Grasp,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::Grasp => "grasp",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchPlan {
    pub n_values: Vec<usize>,
    /// None means one label per vertex (q = n).
    pub label_values: Option<Vec<usize>>,
    pub densities: Vec<f64>,
    pub instances: usize,
    pub methods: Vec<Method>,
    pub mode: Mode,
    pub seed: u64,
    pub time_limit: Option<Duration>,
    pub grasp_iterations: usize,
    pub grasp_alpha: usize,
    pub ensure_feasible: Option<Mode>,
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum PlanError {
    #[error("line {line}: {reason}")]
    Invalid { line: usize, reason: String },
    #[error("plan is missing required key '{0}'")]
    MissingKey(&'static str),
}

fn invalid(line: usize, reason: impl Into<String>) -> PlanError {
    PlanError::Invalid {
        line,
        reason: reason.into(),
    }
}

fn parse_list<T: core::str::FromStr>(
    line: usize,
    value: &str,
    what: &str,
) -> Result<Vec<T>, PlanError> {
    let items: Result<Vec<T>, _> = value
        .split(',')
        .map(|item| item.trim().parse::<T>())
        .collect();
    match items {
        Ok(items) if !items.is_empty() => Ok(items),
        _ => Err(invalid(line, format!("expected a comma list of {what}"))),
    }
}

fn parse_mode(line: usize, value: &str) -> Result<Mode, PlanError> {
    match value {
        "edge" => Ok(Mode::Edge),
        "vertex" => Ok(Mode::Vertex),
        other => Err(invalid(line, format!("unknown mode '{other}'"))),
    }
}

pub fn parse_plan(text: &str) -> Result<BenchPlan, PlanError> {
    let mut n_values: Option<Vec<usize>> = None;
    let mut label_values: Option<Option<Vec<usize>>> = None;
    let mut densities: Option<Vec<f64>> = None;
    let mut instances = 1usize;
    let mut methods: Option<Vec<Method>> = None;
    let mut mode: Option<Mode> = None;
    let mut seed = 0u64;
    let mut time_limit = None;
    let mut grasp_iterations = 50usize;
    let mut grasp_alpha = 3usize;
    let mut ensure_raw: Option<String> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let stripped = match content.split_once('#') {
            Some((data, _comment)) => data.trim(),
            None => content,
        };
        let (key, value) = stripped
            .split_once('=')
            .ok_or_else(|| invalid(line, "expected 'key = value'"))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "n" => n_values = Some(parse_list(line, value, "vertex counts")?),
            "labels" => {
                label_values = Some(if value == "n" {
                    None
                } else {
                    Some(parse_list(line, value, "label counts")?)
                });
            }
            "density" => densities = Some(parse_list(line, value, "densities")?),
            "instances" => {
                instances = value
                    .parse()
                    .map_err(|_| invalid(line, "instances must be a positive integer"))?;
            }
            "methods" => {
                let parsed: Result<Vec<Method>, PlanError> = value
                    .split(',')
                    .map(|item| match item.trim() {
                        "exact" => Ok(Method::Exact),
                        "greedy" => Ok(Method::Greedy),
                        "grasp" => Ok(Method::Grasp),
                        "oracle" => Ok(Method::Oracle),
                        other => Err(invalid(line, format!("unknown method '{other}'"))),
                    })
                    .collect();
                methods = Some(parsed?);
            }
            "mode" => mode = Some(parse_mode(line, value)?),
            "seed" => {
                seed = value
                    .parse()
                    .map_err(|_| invalid(line, "seed must be an unsigned integer"))?;
            }
            "time_limit_ms" => {
                let ms: u64 = value
                    .parse()
                    .map_err(|_| invalid(line, "time_limit_ms must be an unsigned integer"))?;
                time_limit = Some(Duration::from_millis(ms));
            }
            "grasp_iterations" => {
                grasp_iterations = value
                    .parse()
                    .map_err(|_| invalid(line, "grasp_iterations must be a positive integer"))?;
            }
            "grasp_alpha" => {
                grasp_alpha = value
                    .parse()
                    .map_err(|_| invalid(line, "grasp_alpha must be a positive integer"))?;
            }
            "ensure" => ensure_raw = Some(value.to_string()),
            other => return Err(invalid(line, format!("unknown key '{other}'"))),
        }
        if let Some(values) = &n_values {
            if values.iter().any(|&n| n == 0) {
                return Err(invalid(line, "n values must be positive"));
            }
        }
        if let Some(Some(values)) = &label_values {
            if values.iter().any(|&q| q == 0) {
                return Err(invalid(line, "label counts must be positive"));
            }
        }
        if let Some(values) = &densities {
            if values.iter().any(|&d| !(d > 0.0 && d <= 1.0)) {
                return Err(invalid(line, "densities must be in (0, 1]"));
            }
        }
        if instances == 0 {
            return Err(invalid(line, "instances must be positive"));
        }
        if grasp_iterations == 0 {
            return Err(invalid(line, "grasp_iterations must be positive"));
        }
        if grasp_alpha == 0 {
            return Err(invalid(line, "grasp_alpha must be positive"));
        }
    }

    let mode = mode.ok_or(PlanError::MissingKey("mode"))?;
    let ensure_feasible = match ensure_raw.as_deref() {
        None | Some("auto") => Some(mode),
        Some("none") => None,
        Some("edge") => Some(Mode::Edge),
        Some("vertex") => Some(Mode::Vertex),
        Some(other) => {
            return Err(invalid(0, format!("unknown ensure value '{other}'")));
        }
    };

    Ok(BenchPlan {
        n_values: n_values.ok_or(PlanError::MissingKey("n"))?,
        label_values: label_values.unwrap_or(None),
        densities: densities.ok_or(PlanError::MissingKey("density"))?,
        instances,
        methods: methods.ok_or(PlanError::MissingKey("methods"))?,
        mode,
        seed,
        time_limit,
        grasp_iterations,
        grasp_alpha,
        ensure_feasible,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub q: usize,
    pub density: f64,
    pub seed: u64,
    pub method: Method,
    pub mode: Mode,
    pub status: &'static str,
    pub objective: usize,
    pub time_ms: u64,
    pub nodes: u64,
}

pub const BENCH_CSV_HEADER: &str = "n,q,density,seed,method,mode,status,objective,time_ms,nodes";

impl BenchRow {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.q,
            self.density,
            self.seed,
            self.method.as_str(),
            self.mode.as_str(),
            self.status,
            self.objective,
            self.time_ms,
            self.nodes
        )
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("generating n={n} q={q} density={density} seed={seed}: {source}")]
    Generate {
        n: usize,
        q: usize,
        density: f64,
        seed: u64,
        source: GenerateError,
    },
    #[error("oracle with q={q} labels: {source}")]
    Oracle { q: usize, source: OracleError },
}

#[derive(Clone, Copy)]
struct Task {
    n: usize,
    q: usize,
    density: f64,
    seed: u64,
}

fn plan_tasks(plan: &BenchPlan) -> Vec<Task> {
    let mut tasks = Vec::new();
    let mut counter = 0u64;
    for &n in &plan.n_values {
        let labels: Vec<usize> = match &plan.label_values {
            Some(values) => values.clone(),
            None => vec![n],
        };
        for q in labels {
            for &density in &plan.densities {
                for _ in 0..plan.instances {
                    tasks.push(Task {
                        n,
                        q,
                        density,
                        seed: plan.seed.wrapping_add(counter),
                    });
                    counter += 1;
                }
            }
        }
    }
    tasks
}

fn run_method(
    graph: &LabeledGraph,
    task: &Task,
    method: Method,
    plan: &BenchPlan,
) -> Result<SolverResult, BenchError> {
    let clock = WallClock::start();
    match method {
        Method::Exact => {
            let mut config = SolverConfig::new(plan.mode);
            config.time_limit = plan.time_limit;
            Ok(solve_exact(graph, &config, &clock))
        }
        Method::Greedy => Ok(greedy_solve(graph, plan.mode, &clock)),
        Method::Grasp => {
            let mut config =
                GraspConfig::new(plan.mode, plan.grasp_iterations, plan.grasp_alpha, task.seed);
            config.time_limit = plan.time_limit;
            Ok(grasp(graph, &config, &clock))
        }
        Method::Oracle => {
            use mlbp_core::Stopwatch;
            let mut result = brute_force_optimum(graph, plan.mode, None).map_err(|source| {
                BenchError::Oracle {
                    q: graph.num_labels(),
                    source,
                }
            })?;
            result.elapsed = clock.elapsed();
            Ok(result)
        }
    }
}

/// Runs every (cell, instance, method) combination, instances in
/// parallel. Each instance is generated once and shared across methods;
/// instance seeds are `plan.seed + k` with `k` counting tasks in plan
/// order, so a plan is reproducible regardless of thread scheduling.
pub fn run_bench(
    plan: &BenchPlan,
    progress: impl Fn(&BenchRow) + Sync,
) -> Result<Vec<BenchRow>, BenchError> {
    let tasks = plan_tasks(plan);
    let nested: Result<Vec<Vec<BenchRow>>, BenchError> = tasks
        .par_iter()
        .map(|task| {
            let mut spec = InstanceSpec::new(task.n, task.q, task.density, task.seed);
            spec.ensure_feasible = plan.ensure_feasible;
            let graph = generate(&spec).map_err(|source| BenchError::Generate {
                n: task.n,
                q: task.q,
                density: task.density,
                seed: task.seed,
                source,
            })?;
            let mut rows = Vec::with_capacity(plan.methods.len());
            for &method in &plan.methods {
                let result = run_method(&graph, task, method, plan)?;
                let row = BenchRow {
                    n: task.n,
                    q: task.q,
                    density: task.density,
                    seed: task.seed,
                    method,
                    mode: plan.mode,
                    status: result.status.as_str(),
                    objective: result.objective,
                    time_ms: result.elapsed.as_millis() as u64,
                    nodes: result.nodes_explored,
                };
                progress(&row);
                rows.push(row);
            }
            Ok(rows)
        })
        .collect();
    let mut rows: Vec<BenchRow> = nested?.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        (a.n, a.q)
            .cmp(&(b.n, b.q))
            .then(a.density.total_cmp(&b.density))
            .then((a.seed, a.method).cmp(&(b.seed, b.method)))
    });
    Ok(rows)
}
