use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use mlbp_cli::bench::{parse_plan, run_bench, BENCH_CSV_HEADER};
use mlbp_cli::clock::WallClock;
use mlbp_cli::instance::{generate, parse_instance, serialize_instance, InstanceSpec};
use mlbp_cli::report::{ResultRecord, RESULT_CSV_HEADER};
use mlbp_core::{
    analyze_graph, grasp, greedy_solve, is_biconnected, solve_exact, GraspConfig, LabeledGraph,
    Mode, SolverConfig, SolverResult, SolverStatus,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_INFEASIBLE: i32 = 2;
const EXIT_NOT_BICONNECTED: i32 = 3;
const EXIT_LIMIT: i32 = 4;

#[derive(Parser)]
#[command(
    name = "mlbp",
    version,
    about = "Minimum labelling bi-connectivity toolkit",
    long_about = "Find label sets whose induced subgraph is edge- or \
                  vertex-bi-connected: exact branch-and-prune, greedy \
                  construction, GRASP, plus instance generation, structural \
                  checks, and a benchmark harness."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Edge,
    Vertex,
}

impl From<ModeArg> for Mode {
    fn from(arg: ModeArg) -> Mode {
        match arg {
            ModeArg::Edge => Mode::Edge,
            ModeArg::Vertex => Mode::Vertex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an instance: components, bridges, cut-vertices, blocks
    Check {
        file: PathBuf,
        /// Bi-connectivity flavour the exit code reports on
        #[arg(long, value_enum, default_value_t = ModeArg::Edge)]
        mode: ModeArg,
    },
    /// Solve to proven optimality with branch-and-prune
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Edge)]
        mode: ModeArg,
        /// Wall-clock budget in milliseconds; on expiry the best
        /// incumbent is reported with status "feasible"
        #[arg(long, value_name = "MS")]
        time_limit: Option<u64>,
        /// Start from the trivial incumbent instead of the greedy one
        #[arg(long)]
        no_greedy_seed: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the deterministic greedy constructor (no pruning pass)
    Greedy {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Edge)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the GRASP metaheuristic
    Grasp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Edge)]
        mode: ModeArg,
        /// Construction + local-search rounds
        #[arg(long)]
        iterations: usize,
        /// Restricted candidate list size; 1 is deterministic greedy
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "MS")]
        time_limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a random instance file
    Gen {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Label count
        #[arg(long)]
        labels: usize,
        /// Fraction of the n(n-1)/2 possible edges, in (0, 1]
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        /// Retry with stepped seeds until the instance is bi-connected
        /// in this mode
        #[arg(long, value_enum)]
        ensure: Option<ModeArg>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a benchmark plan and write one CSV row per (instance, method)
    Bench {
        /// Plan file (key = value lines; see the bench module docs)
        #[arg(long)]
        plan: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                process::exit(EXIT_OK);
            }
            eprint!("{e}");
            process::exit(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            process::exit(EXIT_USAGE);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Check { file, mode } => check(&file, mode.into()),
        Command::Solve {
            file,
            mode,
            time_limit,
            no_greedy_seed,
            format,
        } => solve(&file, mode.into(), time_limit, no_greedy_seed, format),
        Command::Greedy { file, mode, format } => greedy(&file, mode.into(), format),
        Command::Grasp {
            file,
            mode,
            iterations,
            alpha,
            seed,
            time_limit,
            format,
        } => run_grasp(&file, mode.into(), iterations, alpha, seed, time_limit, format),
        Command::Gen {
            n,
            labels,
            density,
            seed,
            ensure,
            output,
        } => gen(n, labels, density, seed, ensure.map(Into::into), &output),
        Command::Bench { plan, output } => bench(&plan, &output),
    }
}

fn load(file: &Path) -> Result<LabeledGraph> {
    let text =
        fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let graph =
        parse_instance(&text).with_context(|| format!("parsing {}", file.display()))?;
    Ok(graph)
}

fn emit(mode: Mode, result: &SolverResult, format: Format) {
    let record = ResultRecord::new(mode, result);
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => {
            println!("{RESULT_CSV_HEADER}");
            println!("{}", record.to_csv_row());
        }
    }
}

/// For the exact solver, "feasible" means a limit stopped the proof.
fn exact_exit(status: SolverStatus) -> i32 {
    match status {
        SolverStatus::Optimal => EXIT_OK,
        SolverStatus::Feasible => EXIT_LIMIT,
        SolverStatus::Infeasible => EXIT_INFEASIBLE,
    }
}

/// Heuristics never prove optimality, so "feasible" is their success.
fn heuristic_exit(status: SolverStatus) -> i32 {
    match status {
        SolverStatus::Infeasible => EXIT_INFEASIBLE,
        _ => EXIT_OK,
    }
}

fn check(file: &Path, mode: Mode) -> Result<i32> {
    let graph = load(file)?;
    let report = analyze_graph(&graph);
    let bridges: Vec<(usize, usize)> = report
        .bridges
        .iter()
        .map(|&e| graph.edges()[e].endpoints())
        .collect();
    println!(
        "vertices: {}  edges: {}  labels: {}",
        graph.num_vertices(),
        graph.num_edges(),
        graph.num_labels()
    );
    println!("components: {}", report.num_components);
    println!("isolated vertices: {}", report.isolated_vertices.len());
    println!("bridges: {} {:?}", bridges.len(), bridges);
    println!(
        "cut-vertices: {} {:?}",
        report.cut_vertices.len(),
        report.cut_vertices
    );
    println!("vertex-blocks: {}", report.num_vertex_blocks);
    println!("edge-blocks: {}", report.num_edge_blocks);
    println!("edge-biconnected: {}", report.edge_biconnected);
    println!("vertex-biconnected: {}", report.vertex_biconnected);
    Ok(if is_biconnected(&report, mode) {
        EXIT_OK
    } else {
        EXIT_NOT_BICONNECTED
    })
}

fn solve(
    file: &Path,
    mode: Mode,
    time_limit: Option<u64>,
    no_greedy_seed: bool,
    format: Format,
) -> Result<i32> {
    let graph = load(file)?;
    let mut config = SolverConfig::new(mode);
    config.time_limit = time_limit.map(Duration::from_millis);
    config.seed_incumbent_with_greedy = !no_greedy_seed;
    let clock = WallClock::start();
    let result = solve_exact(&graph, &config, &clock);
    emit(mode, &result, format);
    Ok(exact_exit(result.status))
}

fn greedy(file: &Path, mode: Mode, format: Format) -> Result<i32> {
    let graph = load(file)?;
    let clock = WallClock::start();
    let result = greedy_solve(&graph, mode, &clock);
    emit(mode, &result, format);
    Ok(heuristic_exit(result.status))
}

fn run_grasp(
    file: &Path,
    mode: Mode,
    iterations: usize,
    alpha: usize,
    seed: u64,
    time_limit: Option<u64>,
    format: Format,
) -> Result<i32> {
    if iterations == 0 {
        bail!("--iterations must be at least 1");
    }
    if alpha == 0 {
        bail!("--alpha must be at least 1");
    }
    let graph = load(file)?;
    let mut config = GraspConfig::new(mode, iterations, alpha, seed);
    config.time_limit = time_limit.map(Duration::from_millis);
    let clock = WallClock::start();
    let result = grasp(&graph, &config, &clock);
    emit(mode, &result, format);
    Ok(heuristic_exit(result.status))
}

fn gen(
    n: usize,
    labels: usize,
    density: f64,
    seed: u64,
    ensure: Option<Mode>,
    output: &Path,
) -> Result<i32> {
    let mut spec = InstanceSpec::new(n, labels, density, seed);
    spec.ensure_feasible = ensure;
    let graph = generate(&spec)?;
    fs::write(output, serialize_instance(&graph))
        .with_context(|| format!("writing {}", output.display()))?;
    eprintln!(
        "wrote {} ({} vertices, {} edges, {} labels)",
        output.display(),
        graph.num_vertices(),
        graph.num_edges(),
        graph.num_labels()
    );
    Ok(EXIT_OK)
}

fn bench(plan_path: &Path, output: &Path) -> Result<i32> {
    let text = fs::read_to_string(plan_path)
        .with_context(|| format!("reading {}", plan_path.display()))?;
    let plan = parse_plan(&text).with_context(|| format!("parsing {}", plan_path.display()))?;
    let rows = run_bench(&plan, |row| {
        eprintln!(
            "n={} q={} density={} seed={} {}: {} objective={} ({} ms)",
            row.n,
            row.q,
            row.density,
            row.seed,
            row.method.as_str(),
            row.status,
            row.objective,
            row.time_ms
        );
    })?;
    let mut csv = String::from(BENCH_CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv_row());
        csv.push('\n');
    }
    fs::write(output, csv).with_context(|| format!("writing {}", output.display()))?;
    eprintln!("wrote {} rows to {}", rows.len(), output.display());
    Ok(EXIT_OK)
}
