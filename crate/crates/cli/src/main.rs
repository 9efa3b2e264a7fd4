use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};

use numvc::bench::{self, TABLE_HEADER};
use numvc::graph::{parse_dimacs, Graph, VertexSet};
use numvc::oracle::{exact_mvc, DEFAULT_LIMIT};
use numvc::solver::{solve, Gamma, SolverConfig, Variant};
use numvc::stats::{fit_exponential_rtd, summarize};
use numvc::targets::{self, Suite};

/// Used when neither --cutoff nor --max-steps is given.
const DEFAULT_CUTOFF_SECS: f64 = 2000.0;

#[derive(Parser, Debug)]
#[command(name = "numvc", version, about = "Minimum vertex cover local search solver and benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the solver once and print the solution.
    Solve(SolveArgs),
    /// Run many seeded runs and print a summary row.
    Bench(BenchArgs),
    /// Benchmark a grid of (gamma, rho) settings and write CSV.
    Sweep(SweepArgs),
    /// Solve a small instance exactly.
    Exact(ExactArgs),
    /// Export per-run times and steps for run-time distribution plots.
    Rtd(RtdArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// Minimum vertex cover.
    Vc,
    /// Maximum independent set: the complement of the cover.
    Mis,
    /// Maximum clique: a cover of the complement graph, complemented.
    Mc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum VariantName {
    Numvc,
    Pair,
    Noforget,
    Pd,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// DIMACS graph file.
    #[arg(long = "instance", value_name = "PATH")]
    instance_flag: Option<PathBuf>,
    #[arg(value_name = "INSTANCE", conflicts_with = "instance_flag")]
    instance_pos: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Problem::Vc)]
    problem: Problem,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = VariantName::Numvc)]
    variant: VariantName,
    /// Forgetting period for the pd variant, in exchange steps.
    #[arg(long, value_name = "N")]
    pd: Option<u64>,
    /// Forgetting threshold as a multiple of |V|.
    #[arg(long, value_name = "F", conflicts_with = "gamma")]
    gamma_factor: Option<f64>,
    /// Absolute forgetting threshold.
    #[arg(long, value_name = "ABS")]
    gamma: Option<u64>,
    #[arg(long, default_value_t = 0.3)]
    rho: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Wall-clock budget per run, in seconds.
    #[arg(long, value_name = "SECONDS")]
    cutoff: Option<f64>,
    /// Step budget per run.
    #[arg(long, value_name = "N")]
    max_steps: Option<u64>,
    /// Target cover size of the searched graph (for mc: of the complement).
    #[arg(long, value_name = "SIZE")]
    target: Option<usize>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    search: SearchArgs,
    /// Write the solution here instead of standard output.
    #[arg(long, value_name = "PATH")]
    solution_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    #[arg(long, default_value_t = 100)]
    runs: usize,
    /// Worker threads; defaults to one per core.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    batch: BatchArgs,
    /// Per-run CSV output.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Per-run time CSV output.
    #[arg(long, value_name = "PATH")]
    rtd_out: Option<PathBuf>,
    /// Also print steps per second over the batch.
    #[arg(long)]
    report_throughput: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    batch: BatchArgs,
    /// Gamma values as multiples of |V|.
    #[arg(long, value_delimiter = ',', default_value = "0.3,0.4,0.5,0.6,0.7")]
    gammas: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5")]
    rhos: Vec<f64>,
    /// CSV output; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Largest vertex count to attempt.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long, value_name = "PATH")]
    solution_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RtdArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    batch: BatchArgs,
    /// CSV output; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    rtd_out: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Instance(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

/// The graph the solver searches, plus how to present its covers.
struct Loaded {
    name: String,
    problem: Problem,
    /// Vertex count of the file as given.
    vertices: usize,
    graph: Graph,
}

impl Loaded {
    fn open(args: &InstanceArgs) -> Result<Self, Failure> {
        let path = args
            .instance_flag
            .as_ref()
            .or(args.instance_pos.as_ref())
            .ok_or_else(|| Failure::Usage(anyhow!("no instance given (use --instance PATH)")))?;
        let file = File::open(path)
            .with_context(|| format!("cannot open {}", path.display()))
            .map_err(Failure::Instance)?;
        let g = parse_dimacs(BufReader::new(file))
            .with_context(|| format!("cannot parse {}", path.display()))
            .map_err(Failure::Instance)?;
        let vertices = g.num_vertices();
        let graph = match args.problem {
            Problem::Mc => g
                .complement()
                .with_context(|| format!("cannot complement {}", path.display()))
                .map_err(Failure::Instance)?,
            Problem::Vc | Problem::Mis => g,
        };
        info!(
            "{}: {} vertices, {} edges searched",
            path.display(),
            graph.num_vertices(),
            graph.num_edges()
        );
        Ok(Loaded {
            name: targets::instance_name(path),
            problem: args.problem,
            vertices,
            graph,
        })
    }

    /// The explicit target, else the bundled one when it fits this instance and problem.
    fn target(&self, explicit: Option<usize>) -> Option<usize> {
        explicit.or_else(|| {
            let known = targets::lookup(&self.name)?;
            let suite_fits = match known.suite {
                Suite::Dimacs => self.problem == Problem::Mc,
                Suite::Bhoslib => self.problem != Problem::Mc,
            };
            (suite_fits && known.vertices == self.vertices).then(|| {
                info!("using bundled target {} for {}", known.cover_size, self.name);
                known.cover_size
            })
        })
    }

    /// Turns a cover of the searched graph into an answer for the problem.
    fn answer(&self, cover: &VertexSet) -> VertexSet {
        match self.problem {
            Problem::Vc => cover.clone(),
            Problem::Mis | Problem::Mc => cover.complement(),
        }
    }
}

fn config(args: &SearchArgs, target: Option<usize>) -> Result<SolverConfig, Failure> {
    let variant = match args.variant {
        VariantName::Numvc => Variant::NuMvc,
        VariantName::Pair => Variant::Pair,
        VariantName::Noforget => Variant::NoForget,
        VariantName::Pd => Variant::Pd {
            period: args.pd.ok_or_else(|| anyhow!("--variant pd requires --pd N"))?,
        },
    };
    if args.pd.is_some() && args.variant != VariantName::Pd {
        return Err(anyhow!("--pd only applies to --variant pd").into());
    }
    let gamma = match (args.gamma, args.gamma_factor) {
        (Some(abs), _) => Gamma::Absolute(abs),
        (None, Some(f)) => Gamma::Factor(f),
        (None, None) => Gamma::Factor(0.5),
    };
    let cutoff = args
        .cutoff
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| anyhow!("invalid --cutoff {s}")))
        .transpose()?;
    let cutoff = match (cutoff, args.max_steps) {
        (None, None) => Some(Duration::from_secs_f64(DEFAULT_CUTOFF_SECS)),
        (c, _) => c,
    };
    let cfg = SolverConfig {
        variant,
        gamma,
        rho: args.rho,
        seed: args.seed,
        cutoff,
        max_steps: args.max_steps,
        target_size: target,
    };
    cfg.validate().map_err(anyhow::Error::from)?;
    Ok(cfg)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run_solve(args: SolveArgs) -> Result<(), Failure> {
    let inst = Loaded::open(&args.instance)?;
    let cfg = config(&args.search, inst.target(args.search.target))?;
    let (cover, rec) = solve(&inst.graph, &cfg).map_err(anyhow::Error::from)?;
    let answer = inst.answer(&cover);
    info!(
        "cover {} found after {} steps ({:.3} s), {} steps total",
        rec.best_size,
        rec.steps_to_best,
        rec.time_to_best.as_secs_f64(),
        rec.total_steps
    );
    let mut out = output(args.solution_out.as_deref())?;
    answer.write_solution(&mut out)?;
    out.flush()?;
    Ok(())
}

fn run_bench(args: BenchArgs) -> Result<(), Failure> {
    let inst = Loaded::open(&args.instance)?;
    let target = inst.target(args.search.target);
    let cfg = config(&args.search, target)?;
    let records = bench::run_batch(
        &inst.graph,
        &cfg,
        args.batch.runs,
        cfg.seed,
        args.batch.threads,
    )
    .map_err(anyhow::Error::from)?;
    let target = target.unwrap_or_else(|| {
        let best = records.iter().map(|r| r.best_size).min().unwrap_or(0);
        warn!("no target known for {}; counting runs that reach {best}", inst.name);
        best
    });
    let summary = summarize(&records, cfg.cutoff, target);

    let mut stdout = io::stdout().lock();
    writeln!(stdout, "{TABLE_HEADER}")?;
    writeln!(
        stdout,
        "{}",
        bench::table_row(&inst.name, inst.vertices, target, &summary)
    )?;
    if args.report_throughput {
        writeln!(stdout, "throughput\t{:.0} steps/s", bench::throughput(&records))?;
    }
    if let Some(path) = &args.csv {
        let mut out = output(Some(path))?;
        bench::write_runs_csv(&mut out, &records, cfg.cutoff.is_some())?;
        out.flush()?;
    }
    if let Some(path) = &args.rtd_out {
        let mut out = output(Some(path))?;
        bench::write_rtd_csv(&mut out, &records)?;
        out.flush()?;
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    if args.gammas.is_empty() || args.rhos.is_empty() {
        return Err(anyhow!("--gammas and --rhos must be nonempty").into());
    }
    let inst = Loaded::open(&args.instance)?;
    let target = inst
        .target(args.search.target)
        .ok_or_else(|| anyhow!("sweep needs --target for {}", inst.name))?;
    let cfg = config(&args.search, Some(target))?;
    let gammas: Vec<Gamma> = args.gammas.iter().map(|&f| Gamma::Factor(f)).collect();
    let cells = bench::sweep(
        &inst.graph,
        &gammas,
        &args.rhos,
        args.batch.runs,
        &cfg,
        target,
        args.batch.threads,
    )
    .map_err(anyhow::Error::from)?;
    let mut out = output(args.csv.as_deref())?;
    bench::write_sweep_csv(&mut out, &cells, cfg.cutoff.is_some())?;
    out.flush()?;
    Ok(())
}

fn run_exact(args: ExactArgs) -> Result<(), Failure> {
    let inst = Loaded::open(&args.instance)?;
    let result = exact_mvc(&inst.graph, args.limit).map_err(|e| Failure::Instance(e.into()))?;
    info!("minimum cover size {}", result.optimum);
    let mut out = output(args.solution_out.as_deref())?;
    inst.answer(&result.witness).write_solution(&mut out)?;
    out.flush()?;
    Ok(())
}

fn run_rtd(args: RtdArgs) -> Result<(), Failure> {
    let inst = Loaded::open(&args.instance)?;
    let target = inst
        .target(args.search.target)
        .ok_or_else(|| anyhow!("rtd needs --target for {}", inst.name))?;
    let cfg = config(&args.search, Some(target))?;
    let records = bench::run_batch(
        &inst.graph,
        &cfg,
        args.batch.runs,
        cfg.seed,
        args.batch.threads,
    )
    .map_err(anyhow::Error::from)?;
    let times: Vec<f64> = records
        .iter()
        .filter(|r| r.best_size <= target)
        .map(|r| r.time_to_best.as_secs_f64())
        .collect();
    match fit_exponential_rtd(&times) {
        Ok(fit) => info!(
            "exponential fit: m = {:.4} s, D = {:.4}, {}",
            fit.median,
            fit.d,
            if fit.pass { "not rejected" } else { "rejected" }
        ),
        Err(e) => warn!("no exponential fit: {e}"),
    }
    let mut out = output(args.rtd_out.as_deref())?;
    bench::write_rtd_csv(&mut out, &records)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Bench(a) => run_bench(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Exact(a) => run_exact(a),
        Command::Rtd(a) => run_rtd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Instance(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
