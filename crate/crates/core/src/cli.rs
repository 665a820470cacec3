//! `wspan` command-line front end.
//!
//! Exit codes: 0 success, 1 violations found, 2 usage error, 3 I/O or
//! format error. Every command except `replay` writes a run manifest next
//! to its main output (`<out>.manifest.json`) recording the argv, resolved
//! parameters and the SHA-256 of each deterministic output.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::{generate_gnp, load_graph, save_graph, EdgeSet, Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::shortest_paths::APSP_DEFAULT_CAP;
use crate::spanners::{build, Algorithm, BuildParams};
use crate::verify::{verify_stretch, Bound, Pairs};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wspan", version, about = "Additive spanners for weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random weighted graph.
    Gen(GenArgs),
    /// Build a spanner of a graph.
    Build(BuildArgs),
    /// Check a spanner's stretch against a bound.
    Verify(VerifyArgs),
    /// Time builders over a grid of random graphs and write a CSV.
    Bench(BenchArgs),
    /// Re-run a recorded command and compare its outputs.
    Replay(ReplayArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Model {
    Gnp,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "gnp")]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1.0)]
    wmin: f64,
    #[arg(long, default_value_t = 10.0)]
    wmax: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[arg(long)]
    alg: String,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Vertex subset file for `2w-subset`.
    #[arg(long)]
    subset: Option<PathBuf>,
    /// Required by `6eps-wmax`.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Where to write the build report (JSON).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Override the light-initialization degree.
    #[arg(long)]
    d: Option<usize>,
    /// Override the heavy-vertex threshold.
    #[arg(long)]
    heavy: Option<usize>,
    /// Override the missing-edge split point of `4w-fast`.
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    spanner: PathBuf,
    /// One of 6w, 2w-subset, 6wmax, 6eps-wmax, 4wmax, custom.
    #[arg(long)]
    bound: String,
    #[arg(long)]
    epsilon: Option<f64>,
    /// `W_st` coefficient of the custom bound.
    #[arg(long)]
    a: Option<f64>,
    /// `W_max` coefficient of the custom bound.
    #[arg(long)]
    b: Option<f64>,
    /// Restrict to pairs inside this subset.
    #[arg(long)]
    subset: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Largest n accepted by the all-pairs check.
    #[arg(long, default_value_t = APSP_DEFAULT_CAP)]
    cap: usize,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated algorithm names; all six by default.
    #[arg(long, value_delimiter = ',')]
    algs: Vec<String>,
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1.0)]
    wmin: f64,
    #[arg(long, default_value_t = 10.0)]
    wmax: f64,
    /// Comma-separated seeds; each seed generates and builds one instance.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    seeds: Vec<u64>,
    /// Used by `6eps-wmax`.
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    #[arg(long)]
    manifest: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub path: PathBuf,
    /// Absent for outputs containing timings.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sha256: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub argv: Vec<String>,
    pub version: String,
    /// Working directory of the run; relative paths resolve against it.
    pub cwd: PathBuf,
    pub seed: Option<u64>,
    pub params: serde_json::Value,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<OutputRecord>,
}

impl RunManifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            line: e.line(),
            reason: e.to_string(),
        })
    }
}

/// Where the manifest of a run whose main output is `out` is written.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn sha256_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Reads a subset file: one 0-based vertex id per line, `#` comments.
pub fn load_subset(path: &Path) -> Result<Vec<VertexId>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = line.parse().map_err(|_| Error::Parse {
            path: path.display().to_string(),
            line: idx + 1,
            reason: format!("expected a vertex id, found `{line}`"),
        })?;
        out.push(v);
    }
    Ok(out)
}

/// Maps `h`'s edges onto G's edge ids. Fails if any edge of H is absent
/// from G or carries a different weight.
pub fn embed_spanner<'g>(g: &'g Graph, h: &Graph) -> Result<SpannerBuild<'g>> {
    if h.n() != g.n() {
        return Err(Error::NotSubgraph(format!(
            "spanner has {} vertices, graph has {}",
            h.n(),
            g.n()
        )));
    }
    let mut set = EdgeSet::empty(g.m());
    for e in h.edges() {
        match g.find_edge(e.u, e.v) {
            Some(id) if g.edge(id).w == e.w => {
                set.insert(id);
            }
            Some(id) => {
                return Err(Error::NotSubgraph(format!(
                    "edge ({}, {}) has weight {} in the spanner but {} in the graph",
                    e.u,
                    e.v,
                    e.w,
                    g.edge(id).w
                )))
            }
            None => {
                return Err(Error::NotSubgraph(format!(
                    "edge ({}, {}) is not in the graph",
                    e.u, e.v
                )))
            }
        }
    }
    SpannerBuild::from_edge_set(g, set)
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::CapExceeded { .. } => EXIT_USAGE,
        Error::Parse { .. } | Error::Io { .. } | Error::InvalidPath(_) | Error::NotSubgraph(_) => EXIT_IO,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let argv: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, &argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wspan: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, argv: &[String]) -> Result<i32> {
    match command {
        Command::Gen(a) => cmd_gen(a, argv),
        Command::Build(a) => cmd_build(a, argv),
        Command::Verify(a) => cmd_verify(a, argv),
        Command::Bench(a) => cmd_bench(a, argv),
        Command::Replay(a) => cmd_replay(a),
    }
}

fn finish_manifest(
    command: &str,
    argv: &[String],
    seed: Option<u64>,
    params: serde_json::Value,
    inputs: Vec<PathBuf>,
    outputs: &[(&Path, bool)],
    main_out: &Path,
) -> Result<()> {
    let outputs = outputs
        .iter()
        .map(|&(path, deterministic)| {
            Ok(OutputRecord {
                path: path.to_path_buf(),
                sha256: if deterministic { Some(sha256_file(path)?) } else { None },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let manifest = RunManifest {
        command: command.to_string(),
        argv: argv.to_vec(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        cwd: std::env::current_dir().map_err(|e| Error::io(".", e))?,
        seed,
        params,
        inputs,
        outputs,
    };
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_text(&manifest_path(main_out), &(text + "\n"))
}

fn cmd_gen(a: GenArgs, argv: &[String]) -> Result<i32> {
    if a.n == 0 {
        return Err(Error::invalid("--n must be at least 1"));
    }
    let g = match a.model {
        Model::Gnp => generate_gnp(a.n, a.p, a.wmin, a.wmax, a.seed)?,
    };
    save_graph(&g, &a.out)?;
    let params = serde_json::json!({
        "model": a.model, "n": a.n, "p": a.p, "wmin": a.wmin, "wmax": a.wmax, "m": g.m(),
    });
    finish_manifest("gen", argv, Some(a.seed), params, vec![], &[(&a.out, true)], &a.out)?;
    Ok(EXIT_OK)
}

fn cmd_build(a: BuildArgs, argv: &[String]) -> Result<i32> {
    let alg: Algorithm = a.alg.parse()?;
    if alg == Algorithm::SixEpsWMax && a.epsilon.is_none() {
        return Err(Error::invalid("--epsilon is required for 6eps-wmax"));
    }
    if alg == Algorithm::TwoWSubset && a.subset.is_none() {
        return Err(Error::invalid("--subset is required for 2w-subset"));
    }
    let g = load_graph(&a.input)?;
    let subset = a.subset.as_deref().map(load_subset).transpose()?;
    let params = BuildParams {
        seed: a.seed,
        epsilon: a.epsilon,
        subset,
        d: a.d,
        heavy: a.heavy,
        ell: a.ell,
    };
    let (h, report) = build(&g, alg, &params)?;
    save_graph(&h.to_graph(), &a.out)?;
    let mut outputs: Vec<(&Path, bool)> = vec![(&a.out, true)];
    if let Some(path) = &a.report {
        write_text(path, &(report.to_json() + "\n"))?;
        outputs.push((path, false));
    }
    println!(
        "{}: n={} m={} spanner_edges={}",
        alg, report.n, report.m, report.spanner_edges
    );
    let mut inputs = vec![a.input.clone()];
    inputs.extend(a.subset.clone());
    let resolved = serde_json::json!({
        "algorithm": alg,
        "resolved": report.params,
    });
    finish_manifest("build", argv, Some(a.seed), resolved, inputs, &outputs, &a.out)?;
    Ok(EXIT_OK)
}

fn parse_bound(a: &VerifyArgs) -> Result<Bound> {
    match a.bound.as_str() {
        "6eps-wmax" => {
            let epsilon = a
                .epsilon
                .ok_or_else(|| Error::invalid("--epsilon is required for the 6eps-wmax bound"))?;
            Ok(Bound::FourWPlusEpsWMax { epsilon })
        }
        "custom" => match (a.a, a.b) {
            (Some(a), Some(b)) => Ok(Bound::Custom { a, b }),
            _ => Err(Error::invalid("--a and --b are required for the custom bound")),
        },
        other => other.parse(),
    }
}

fn cmd_verify(a: VerifyArgs, argv: &[String]) -> Result<i32> {
    let bound = parse_bound(&a)?;
    if bound.requires_subset() && a.subset.is_none() {
        return Err(Error::invalid("--subset is required for the 2w-subset bound"));
    }
    let g = load_graph(&a.graph)?;
    let h_graph = load_graph(&a.spanner)?;
    let h = embed_spanner(&g, &h_graph)?;
    let subset = a.subset.as_deref().map(load_subset).transpose()?;
    let pairs = match &subset {
        Some(s) => Pairs::Subset(s),
        None => Pairs::All,
    };
    let report = verify_stretch(&g, &h, bound, pairs, a.cap)?;
    println!(
        "bound={} pairs={} violations={} tree_violations={} max_excess_ratio={}",
        report.bound,
        report.pairs_checked,
        report.violations.len(),
        report.tree_violations,
        report.max_excess_ratio
    );
    let mut inputs = vec![a.graph.clone(), a.spanner.clone()];
    inputs.extend(a.subset.clone());
    let main_out = match &a.report {
        Some(path) => {
            write_text(path, &(report.to_json() + "\n"))?;
            path.clone()
        }
        None => {
            let mut s = a.spanner.as_os_str().to_owned();
            s.push(".verify");
            PathBuf::from(s)
        }
    };
    let outputs: Vec<(&Path, bool)> = a.report.iter().map(|p| (p.as_path(), true)).collect();
    let params = serde_json::json!({ "bound": bound, "cap": a.cap });
    finish_manifest("verify", argv, None, params, inputs, &outputs, &main_out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
}

/// Default `2w-subset` input used by `bench`: the first `ceil(sqrt n)` ids.
fn bench_subset(n: usize) -> Vec<VertexId> {
    (0..crate::spanners::ceil_root(n, 1, 2)).collect()
}

fn cmd_bench(a: BenchArgs, argv: &[String]) -> Result<i32> {
    let algs: Vec<Algorithm> = if a.algs.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        a.algs.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let file = fs::File::create(&a.out).map_err(|e| Error::io(&a.out, e))?;
    let mut w = std::io::BufWriter::new(file);
    let io_err = |e| Error::io(&a.out, e);
    writeln!(w, "algorithm,n,m,edges,millis,seed").map_err(io_err)?;
    for &n in &a.n {
        if n == 0 {
            return Err(Error::invalid("grid sizes must be at least 1"));
        }
        for &seed in &a.seeds {
            let g = generate_gnp(n, a.p, a.wmin, a.wmax, seed)?;
            for &alg in &algs {
                let params = BuildParams {
                    seed,
                    epsilon: Some(a.epsilon),
                    subset: Some(bench_subset(n)),
                    ..Default::default()
                };
                let start = Instant::now();
                let (h, _) = build(&g, alg, &params)?;
                let millis = start.elapsed().as_secs_f64() * 1e3;
                writeln!(w, "{},{},{},{},{:.3},{}", alg, n, g.m(), h.len(), millis, seed)
                    .map_err(io_err)?;
            }
        }
    }
    w.flush().map_err(io_err)?;
    drop(w);
    let params = serde_json::json!({
        "algorithms": algs, "n": a.n, "p": a.p, "wmin": a.wmin, "wmax": a.wmax,
        "seeds": a.seeds, "epsilon": a.epsilon,
    });
    finish_manifest("bench", argv, None, params, vec![], &[(&a.out, false)], &a.out)?;
    Ok(EXIT_OK)
}

/// Re-runs the manifest's argv from its recorded working directory and
/// checks every hashed output.
fn cmd_replay(a: ReplayArgs) -> Result<i32> {
    let manifest = RunManifest::load(&a.manifest)?;
    if manifest.argv.is_empty() {
        return Err(Error::invalid("manifest has an empty argv"));
    }
    let cli = Cli::try_parse_from(&manifest.argv)
        .map_err(|e| Error::invalid(format!("manifest argv does not parse: {e}")))?;
    if matches!(cli.command, Command::Replay(_)) {
        return Err(Error::invalid("cannot replay a replay"));
    }
    std::env::set_current_dir(&manifest.cwd).map_err(|e| Error::io(&manifest.cwd, e))?;
    let code = dispatch(cli.command, &manifest.argv)?;
    let mut mismatches = 0;
    for out in &manifest.outputs {
        if let Some(expected) = &out.sha256 {
            let actual = sha256_file(&out.path)?;
            if &actual != expected {
                eprintln!("wspan: {} differs from the recorded run", out.path.display());
                mismatches += 1;
            }
        }
    }
    println!("replayed `{}`: {} output(s) differ", manifest.command, mismatches);
    Ok(if mismatches > 0 { EXIT_VIOLATIONS } else { code })
}
