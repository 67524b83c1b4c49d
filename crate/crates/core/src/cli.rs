//! Command-line front end. [`run`] takes the argument vector and output sinks
//! so it can be driven from tests; the `tricount` binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 runtime error, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::access::QueryLedger;
use crate::dense::{estimate_additive, estimate_dense, estimate_relative_with_advice, DenseMode, DenseParams};
use crate::error::{Error, Result};
use crate::estimate::{advice_width, Algorithm};
use crate::generate::{gen_gnp, gen_planted};
use crate::graph::{read_edge_list, Graph};
use crate::kernel::{count_triangles_exact, Kernel, MatMulConfig};
use crate::oracle::OracleReport;
use crate::rng::RandomSource;
use crate::sparse::{estimate_sparse, estimate_sparse_with_advice, SparseParams};

pub const THREADS_ENV: &str = "TRICOUNT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "tricount", version, about = "Approximate and exact triangle counting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random graph as an edge list.
    Gen(GenArgs),
    /// Count triangles exactly with the matrix kernel.
    Exact(RunArgs),
    /// Relative-error dense estimator.
    Dense(RunArgs),
    /// Additive-error dense estimator (needs --A).
    DenseAdditive(RunArgs),
    /// Sparse (heavy/light degree split) estimator.
    Sparse(RunArgs),
    /// Brute-force report: T, per-vertex counts, diamonds, butterflies, heavy/light sets.
    Oracle(OracleArgs),
    /// Run an estimator over a range of seeds and summarize.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Model {
    Gnp,
    Planted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KernelArg {
    Cubic,
    Strassen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EstimatorArg {
    Exact,
    Dense,
    DenseAdditive,
    Sparse,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "gnp")]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    /// Clique size for the planted model (on vertices 0..clique).
    #[arg(long, default_value_t = 0)]
    clique: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.1)]
    q: f64,
    /// Matrix-multiplication exponent used in parameter formulas; defaults to the kernel's.
    #[arg(long)]
    omega: Option<f64>,
    /// Scale factor on sampling trial counts.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, value_enum, default_value = "cubic")]
    kernel: KernelArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    /// Additive error budget.
    #[arg(long = "A")]
    additive: Option<f64>,
    /// Advice T̃; skips the geometric search.
    #[arg(long)]
    advice: Option<f64>,
    /// Also compute the exact count and include it.
    #[arg(long)]
    with_exact: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct OracleArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    tau: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "dense")]
    estimator: EstimatorArg,
    /// Number of seeds.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_start: u64,
    /// Known triangle count (single file only); otherwise computed exactly.
    #[arg(long)]
    truth: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long = "A")]
    additive: Option<f64>,
    #[arg(long)]
    advice: Option<f64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub q: f64,
    pub omega: f64,
    pub scale: f64,
    pub kernel: Kernel,
    pub base_cutoff: usize,
    pub median_width: usize,
    pub advice_width: usize,
    pub core_width: usize,
}

/// Machine-readable outcome of one estimator invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub estimate: f64,
    pub exact: Option<u64>,
    pub epsilon: Option<f64>,
    #[serde(rename = "A")]
    pub additive_error: Option<f64>,
    pub advice: Option<f64>,
    pub advice_trace: Vec<f64>,
    pub max_depth: usize,
    pub seed: u64,
    pub params: ParamsEcho,
    pub queries: QueryLedger,
    pub wall_time_ms: f64,
}

impl RunResult {
    fn text(&self) -> String {
        let mut s = format!(
            "{}: estimate={} n={} m={} seed={}",
            self.algorithm, self.estimate, self.n, self.m, self.seed
        );
        if let Some(e) = self.exact {
            s += &format!(" exact={e}");
        }
        s + &format!(" queries={} time={:.3}ms", self.queries.total(), self.wall_time_ms)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchInput {
    pub path: String,
    pub n: usize,
    pub m: usize,
    pub truth: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MeanQueries {
    pub degree: f64,
    pub neighbor: f64,
    pub pair: f64,
    pub random_vertex: f64,
    pub random_edge: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub estimator: String,
    pub inputs: Vec<BenchInput>,
    pub runs: Vec<RunResult>,
    /// Fraction of runs within tolerance of the truth; absent with zero runs.
    pub success_fraction: Option<f64>,
    pub mean_queries: MeanQueries,
    pub mean_wall_time_ms: Option<f64>,
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gen(args) => gen(args, out),
        Command::Exact(args) => single(EstimatorArg::Exact, args, out),
        Command::Dense(args) => single(EstimatorArg::Dense, args, out),
        Command::DenseAdditive(args) => single(EstimatorArg::DenseAdditive, args, out),
        Command::Sparse(args) => single(EstimatorArg::Sparse, args, out),
        Command::Oracle(args) => oracle(args, out),
        Command::Bench(args) => bench(args, out),
    }
}

fn emit(doc: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, doc)?,
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(())
}

/// Key-sorted compact JSON plus a trailing newline.
fn to_json<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap, which sorts them.
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string(&v).expect("serializable") + "\n"
}

fn load(path: &Path) -> Result<Graph, Failure> {
    if !path.is_file() {
        return Err(Failure::Usage(format!("input file `{}` not found", path.display())));
    }
    Ok(read_edge_list(BufReader::new(File::open(path)?))?)
}

fn gen(args: GenArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let mut rng = RandomSource::new(args.seed);
    let g = match args.model {
        Model::Gnp => gen_gnp(args.n, args.p, &mut rng)?,
        Model::Planted => gen_planted(args.n, args.p, args.clique, &mut rng)?,
    };
    emit(&g.to_edge_list(), &args.output, out)
}

struct Settings {
    dense: DenseParams,
    sparse: SparseParams,
}

fn settings(common: &Common) -> Settings {
    let mut matmul = match common.kernel {
        KernelArg::Cubic => MatMulConfig::default(),
        KernelArg::Strassen => MatMulConfig::strassen(),
    };
    if let Some(w) = common.omega {
        matmul.omega = w;
    }
    let dense = DenseParams {
        q: common.q,
        scale: common.scale,
        matmul,
        ..DenseParams::default()
    };
    let sparse = SparseParams {
        scale: common.scale,
        dense: dense.clone(),
        ..SparseParams::default()
    };
    Settings { dense, sparse }
}

struct Job<'a> {
    estimator: EstimatorArg,
    graph: &'a Graph,
    epsilon: f64,
    additive: Option<f64>,
    advice: Option<f64>,
    with_exact: bool,
}

fn run_one(job: &Job<'_>, s: &Settings, seed: u64) -> Result<RunResult, Failure> {
    let g = job.graph;
    let rng = RandomSource::new(seed);
    let start = Instant::now();
    let mut epsilon = None;
    let mut additive_error = None;
    let mut advice_trace = Vec::new();
    let mut queries = QueryLedger::default();
    let mut max_depth = 0;

    let (algorithm, estimate) = match job.estimator {
        EstimatorArg::Exact => (Algorithm::Exact, count_triangles_exact(g, &s.dense.matmul) as f64),
        EstimatorArg::Dense => {
            epsilon = Some(job.epsilon);
            match job.advice {
                Some(advice) => {
                    let r = estimate_relative_with_advice(g, job.epsilon, advice, &s.dense, &rng)?;
                    queries = r.ledger;
                    max_depth = r.max_depth();
                    advice_trace.push(advice);
                    (Algorithm::Dense, r.value)
                }
                None => {
                    let e = estimate_dense(g, DenseMode::Relative(job.epsilon), &s.dense, &rng)?;
                    queries = e.ledger;
                    max_depth = e.max_depth;
                    advice_trace = e.advice_trace;
                    (Algorithm::Dense, e.value)
                }
            }
        }
        EstimatorArg::DenseAdditive => {
            let a = job
                .additive
                .ok_or_else(|| Failure::Usage("dense-additive requires --A".into()))?;
            additive_error = Some(a);
            match job.advice {
                Some(advice) => {
                    let r = estimate_additive(g, a, advice, &s.dense, &rng)?;
                    queries = r.ledger;
                    max_depth = r.max_depth();
                    advice_trace.push(advice);
                    (Algorithm::DenseAdditive, r.value)
                }
                None => {
                    let e = estimate_dense(g, DenseMode::Additive(a), &s.dense, &rng)?;
                    queries = e.ledger;
                    max_depth = e.max_depth;
                    advice_trace = e.advice_trace;
                    (Algorithm::DenseAdditive, e.value)
                }
            }
        }
        EstimatorArg::Sparse => {
            epsilon = Some(job.epsilon);
            match job.advice {
                Some(advice) => {
                    let r = estimate_sparse_with_advice(g, job.epsilon, advice, &s.sparse, &rng)?;
                    queries = r.ledger;
                    max_depth = r.max_depth;
                    advice_trace.push(advice);
                    (Algorithm::Sparse, r.value)
                }
                None => {
                    let e = estimate_sparse(g, job.epsilon, &s.sparse, &rng)?;
                    queries = e.ledger;
                    max_depth = e.max_depth;
                    advice_trace = e.advice_trace;
                    (Algorithm::Sparse, e.value)
                }
            }
        }
    };
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let exact = job.with_exact.then(|| count_triangles_exact(g, &s.dense.matmul));

    Ok(RunResult {
        algorithm: algorithm.name().to_string(),
        n: g.n(),
        m: g.m(),
        estimate,
        exact,
        epsilon,
        additive_error,
        advice: job.advice,
        advice_trace,
        max_depth,
        seed,
        params: ParamsEcho {
            q: s.dense.q,
            omega: s.dense.matmul.omega,
            scale: s.dense.scale,
            kernel: s.dense.matmul.kernel,
            base_cutoff: s.dense.base_cutoff,
            median_width: s.dense.median_width,
            advice_width: s.dense.advice_width.unwrap_or_else(|| advice_width(g.n())),
            core_width: s.sparse.core_width,
        },
        queries,
        wall_time_ms,
    })
}

fn single(estimator: EstimatorArg, args: RunArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let graph = load(&args.file)?;
    let s = settings(&args.common);
    let job = Job {
        estimator,
        graph: &graph,
        epsilon: args.epsilon,
        additive: args.additive,
        advice: args.advice,
        with_exact: args.with_exact,
    };
    let result = run_one(&job, &s, args.common.seed)?;
    let doc = match args.common.format {
        Format::Json => to_json(&result),
        Format::Text => result.text() + "\n",
    };
    emit(&doc, &args.common.output, out)
}

#[derive(Serialize)]
struct OracleDoc<'a> {
    algorithm: &'static str,
    n: usize,
    m: usize,
    #[serde(rename = "T")]
    triangles: u64,
    #[serde(rename = "D")]
    diamonds: u64,
    #[serde(rename = "B")]
    butterflies: u64,
    tau: f64,
    per_vertex: &'a [u64],
    heavy: &'a [usize],
    light: &'a [usize],
    neither: &'a [usize],
}

fn oracle(args: OracleArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if !(args.tau > 0.0) {
        return Err(Failure::Usage("--tau must be positive".into()));
    }
    let g = load(&args.file)?;
    let r = OracleReport::compute(&g, args.tau);
    let doc = match args.format {
        Format::Json => to_json(&OracleDoc {
            algorithm: "oracle",
            n: g.n(),
            m: g.m(),
            triangles: r.triangles,
            diamonds: r.diamonds,
            butterflies: r.butterflies,
            tau: r.tau,
            per_vertex: &r.per_vertex,
            heavy: &r.classification.heavy,
            light: &r.classification.light,
            neither: &r.classification.neither,
        }),
        Format::Text => format!(
            "oracle: T={} D={} B={} heavy={} light={} n={} m={}\n",
            r.triangles,
            r.diamonds,
            r.butterflies,
            r.classification.heavy.len(),
            r.classification.light.len(),
            g.n(),
            g.m()
        ),
    };
    emit(&doc, &args.output, out)
}

fn worker_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn bench(args: BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if args.truth.is_some() && args.files.len() > 1 {
        return Err(Failure::Usage("--truth applies to a single input file".into()));
    }
    if args.estimator == EstimatorArg::DenseAdditive && args.additive.is_none() {
        return Err(Failure::Usage("dense-additive requires --A".into()));
    }
    let s = settings(&args.common);
    let mut graphs = Vec::new();
    let mut inputs = Vec::new();
    for path in &args.files {
        let g = load(path)?;
        let truth = args
            .truth
            .unwrap_or_else(|| count_triangles_exact(&g, &s.dense.matmul) as f64);
        inputs.push(BenchInput {
            path: path.display().to_string(),
            n: g.n(),
            m: g.m(),
            truth,
        });
        graphs.push(g);
    }

    let tasks: Vec<(usize, u64)> = (0..graphs.len())
        .flat_map(|i| (args.seed_start..args.seed_start + args.seeds).map(move |seed| (i, seed)))
        .collect();
    let job_for = |i: usize| Job {
        estimator: args.estimator,
        graph: &graphs[i],
        epsilon: args.epsilon,
        additive: args.additive,
        advice: args.advice,
        with_exact: false,
    };
    let exec = |&(i, seed): &(usize, u64)| run_one(&job_for(i), &s, seed);
    let threads = worker_threads();
    let results: Vec<Result<RunResult, Failure>> = if threads == 0 {
        tasks.iter().map(exec).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::Runtime(Error::Contract(e.to_string())))?;
        pool.install(|| tasks.par_iter().map(exec).collect())
    };
    let runs = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let ok = |(&(i, _), r): (&(usize, u64), &RunResult)| {
        let truth = inputs[i].truth;
        match args.estimator {
            EstimatorArg::Exact => r.estimate == truth,
            EstimatorArg::DenseAdditive => (r.estimate - truth).abs() <= args.additive.unwrap_or(0.0),
            _ => (r.estimate - truth).abs() <= args.epsilon * truth,
        }
    };
    let count = runs.len() as f64;
    let (success_fraction, mean_wall_time_ms, mean_queries) = if runs.is_empty() {
        (None, None, MeanQueries::default())
    } else {
        let good = tasks.iter().zip(&runs).filter(|p| ok(*p)).count() as f64;
        let total: QueryLedger = runs.iter().map(|r| r.queries).sum();
        (
            Some(good / count),
            Some(runs.iter().map(|r| r.wall_time_ms).sum::<f64>() / count),
            MeanQueries {
                degree: total.degree as f64 / count,
                neighbor: total.neighbor as f64 / count,
                pair: total.pair as f64 / count,
                random_vertex: total.random_vertex as f64 / count,
                random_edge: total.random_edge as f64 / count,
            },
        )
    };
    let estimator = match args.estimator {
        EstimatorArg::Exact => Algorithm::Exact,
        EstimatorArg::Dense => Algorithm::Dense,
        EstimatorArg::DenseAdditive => Algorithm::DenseAdditive,
        EstimatorArg::Sparse => Algorithm::Sparse,
    };
    let summary = BenchSummary {
        estimator: estimator.name().to_string(),
        inputs,
        runs,
        success_fraction,
        mean_queries,
        mean_wall_time_ms,
    };
    let doc = match args.common.format {
        Format::Json => to_json(&summary),
        Format::Text => format!(
            "bench {}: runs={} success_fraction={}\n",
            summary.estimator,
            summary.runs.len(),
            summary
                .success_fraction
                .map_or("n/a".to_string(), |f| format!("{f:.3}"))
        ),
    };
    emit(&doc, &args.common.output, out)
}
