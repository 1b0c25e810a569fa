use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::info;

use topk_miner::bench::{run_bench, write_bench_csv, BenchSpec, SweepParam};
use topk_miner::miner::{mine_topk_observed, CandidateCheck, Phase};
use topk_miner::oracle::{exact_topk, recall_metrics, OracleLimits};
use topk_miner::report::OracleJson;
use topk_miner::{generate_preferential, read_lg_file, write_lg, DataGraph, Error, ErrorKind, MinerConfig, MiningResult};

#[derive(Parser)]
#[command(name = "topk-miner", version, about = "Top-k frequent pattern mining on a single labeled graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine the top-k patterns and write the result as JSON.
    Mine(MineArgs),
    /// Exact top-k by exhaustive search, optionally compared with a mining result.
    Oracle(OracleArgs),
    /// Sweep one parameter and write one CSV row per value.
    Bench(BenchArgs),
    /// Generate a preferential-attachment graph in .lg format.
    Gen(GenArgs),
}

#[derive(Args)]
struct Common {
    /// Input graph in .lg format.
    #[arg(long)]
    graph: PathBuf,
    /// Minimum support.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    theta: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MineArgs {
    #[command(flatten)]
    common: Common,
    /// Revisit budget per traversal level.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
    /// Seed for --shuffle-candidates.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Log every support check to stderr.
    #[arg(long)]
    trace: bool,
    /// One round of backward expansion per tree pattern.
    #[arg(long)]
    single_backward: bool,
    /// Visit traversal candidates in seeded random order.
    #[arg(long)]
    shuffle_candidates: bool,
    #[arg(long, env = "MINER_THREADS", default_value_t = 1)]
    threads: usize,
    /// Include wall-clock time in the output.
    #[arg(long)]
    timing: bool,
    /// Write each returned pattern's domain as CSV into this directory.
    #[arg(long)]
    dump_domains: Option<PathBuf>,
    /// Largest pattern to generate, in nodes.
    #[arg(long, default_value_t = 12)]
    max_nodes: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    /// Mining result JSON to score against the exact answer.
    #[arg(long)]
    compare: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    max_nodes: usize,
    /// Abort (exit 3) once the frequent set grows past this size.
    #[arg(long, default_value_t = 50_000)]
    max_frequent: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Input graph; not used when sweeping `nodes`.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Variable to sweep: theta, k, m or nodes.
    #[arg(long)]
    sweep: String,
    /// Comma-separated values for the sweep variable.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    theta: usize,
    #[arg(long, default_value_t = 10)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Generator seed for a `nodes` sweep.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    labels: usize,
    #[arg(long, default_value_t = 3)]
    edges_per_node: usize,
    /// Skip the exact oracle columns.
    #[arg(long)]
    no_oracle: bool,
    #[arg(long, env = "MINER_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    nodes: usize,
    #[arg(long)]
    edges: usize,
    #[arg(long)]
    labels: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(path: &Path) -> Result<DataGraph, Error> {
    read_lg_file(path).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        Error::Validation { line, message } => Error::Validation {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn mine(args: MineArgs) -> Result<(), Error> {
    let graph = load(&args.common.graph)?;
    let mut config = MinerConfig::new(args.common.theta as usize, args.common.k as usize, args.m as usize);
    config.single_backward = args.single_backward;
    config.shuffle_seed = args.shuffle_candidates.then_some(args.seed);
    config.threads = args.threads;
    config.max_pattern_nodes = args.max_nodes;
    info!(
        "mining {} nodes / {} edges with theta={} k={} m={}",
        graph.node_count(),
        graph.edge_count(),
        config.theta,
        config.k,
        config.budget
    );
    let trace = args.trace;
    let mut observer = |c: &CandidateCheck| {
        if trace {
            let phase = match c.phase {
                Phase::Tree => "tree",
                Phase::Closure => "closure",
            };
            eprintln!("{phase} {} support {}", c.code, c.support);
        }
    };
    let result = mine_topk_observed(&graph, &config, &mut observer)?;
    info!(
        "{} patterns, {} support checks, termination {}",
        result.patterns.len(),
        result.stats.frqchk_calls,
        result.termination.as_str()
    );
    if let Some(dir) = &args.dump_domains {
        fs::create_dir_all(dir)?;
        for (rank, p) in result.patterns.iter().enumerate() {
            if let Some(domain) = &p.domain {
                let file = fs::File::create(dir.join(format!("pattern_{rank}.csv")))?;
                domain.write_csv(&graph, file)?;
            }
        }
    }
    emit(args.common.out.as_deref(), result.to_json(&graph, args.timing).as_bytes())
}

fn oracle(args: OracleArgs) -> Result<(), Error> {
    let graph = load(&args.common.graph)?;
    let limits = OracleLimits {
        max_pattern_nodes: args.max_nodes,
        max_frequent: args.max_frequent,
        ..OracleLimits::default()
    };
    // parse the comparison first so a bad file fails before the long search
    let approx = match &args.compare {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
            Some(MiningResult::from_json(&text, &graph)?)
        }
        None => None,
    };
    let (theta, k) = (args.common.theta as usize, args.common.k as usize);
    if let Some(a) = &approx {
        if a.config.theta != theta || a.config.k != k {
            return Err(Error::Contract(format!(
                "comparison was mined with theta={} k={}, oracle asked for theta={theta} k={k}",
                a.config.theta, a.config.k
            )));
        }
    }
    let exact = exact_topk(&graph, theta, k, &limits)?;
    let comparison = approx.as_ref().map(|a| recall_metrics(a, &exact)).transpose()?;
    emit(
        args.common.out.as_deref(),
        OracleJson::new(&graph, &exact, comparison).to_string_pretty().as_bytes(),
    )
}

fn bench(args: BenchArgs) -> Result<(), Error> {
    let param: SweepParam = args.sweep.parse()?;
    let graph = match (&args.graph, param) {
        (_, SweepParam::Nodes) => None,
        (Some(path), _) => Some(load(path)?),
        (None, _) => return Err(Error::Parameter(format!("--graph is required to sweep {}", args.sweep))),
    };
    let mut spec = BenchSpec::new(param, args.values);
    spec.theta = args.theta;
    spec.k = args.k;
    spec.m = args.m;
    spec.seed = args.seed;
    spec.labels = args.labels;
    spec.edges_per_node = args.edges_per_node;
    spec.oracle = !args.no_oracle;
    spec.threads = args.threads;
    let rows = run_bench(graph.as_ref(), &spec)?;
    let mut buf = Vec::new();
    write_bench_csv(&rows, &mut buf)?;
    emit(args.out.as_deref(), &buf)
}

fn gen(args: GenArgs) -> Result<(), Error> {
    let graph = generate_preferential(args.nodes, args.edges, args.labels, args.seed)?;
    let mut buf = Vec::new();
    write_lg(&graph, &mut buf)?;
    emit(args.out.as_deref(), &buf)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Mine(a) => mine(a),
        Command::Oracle(a) => oracle(a),
        Command::Bench(a) => bench(a),
        Command::Gen(a) => gen(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Capacity => 3,
                ErrorKind::Internal => 1,
            })
        }
    }
}
