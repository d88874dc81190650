//! The `lhg` command line.
//!
//! Exit codes: 0 on success, 1 when a check or verification fails on valid
//! input, 2 on usage errors (bad flags, unreadable or invalid input files,
//! parameters outside the search caps).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{aes_degree_check, fan_upper_bound, link_graph, proof_bounds, verify_extremal_structure};
use crate::configurations::{contains_fan, find_embedding, ConfigName, Configuration};
use crate::constructions::{
    ag23, binary_factorization, c52_graph, design_from_factorization, extend_colored_graph, standard_factorization,
    transversal_design, truncate, wagner_graph, ColoredGraph,
};
use crate::hypergraph::{Hypergraph, LinearHypergraph, Vertex};
use crate::io::{self, Format};
use crate::reductions::{linearize, tripartite_subsystem};
use crate::search::{max_free, verify_claim, Claim, SearchError, SearchOptions};

/// Environment variable overriding the default search caps.
pub const CAP_ENV: &str = "LHG_SEARCH_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "lhg",
    version,
    about = "Linear hypergraphs without fans: construct, check, bound, reduce, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named hypergraph and write it as .lhg or JSON
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Look for configurations in a hypergraph file
    Check {
        file: PathBuf,
        /// Configuration name (triangle, fanK, pasch, c14, w); repeatable
        #[arg(long = "config", required = true, value_parser = parse_config)]
        configs: Vec<ConfigName>,
        /// Exit 1 if any configuration is present
        #[arg(long)]
        expect_free: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Fan-free edge bounds, for parameters or for a given hypergraph
    Bounds {
        /// Hypergraph to evaluate the degree bounds on
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file", requires = "k")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "file", requires = "n")]
        k: Option<usize>,
        /// Vertex to evaluate at (default: the smallest vertex of maximum degree)
        #[arg(long, requires = "file")]
        vertex: Option<Vertex>,
        /// Also certify the group structure of an extremal input
        #[arg(long, requires = "file")]
        structure: bool,
        /// Also build the link graph at the vertex (triple systems)
        #[arg(long, requires = "file")]
        link: bool,
    },
    /// Linearize or take a 3-partite subsystem of a triple system
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: ReduceMode,
        /// Declare the input free of Pasch and C14 and check the consequences
        #[arg(long)]
        assume_pasch_c14_free: bool,
        /// Write the reduced system here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact maximum of a linear k-graph avoiding configurations
    Search {
        #[command(flatten)]
        params: SearchParams,
        /// Forbidden configuration; repeatable or comma separated
        #[arg(long = "forbid", value_delimiter = ',', value_parser = parse_config)]
        forbid: Vec<ConfigName>,
        /// Write each extremal system as witness-NNN.lhg here
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        run: RunOptions,
    },
    /// Check a statement about fan-free maxima by search
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

#[derive(Args, Debug)]
struct SearchParams {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug, Clone)]
struct RunOptions {
    /// Worker threads (0: one per core)
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Largest n to search (default 12, or 14 for graphs; env LHG_SEARCH_CAP)
    #[arg(long)]
    cap: Option<usize>,
    /// Lift the search cap
    #[arg(long)]
    i_have_time: bool,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Transversal design with k groups of size m
    Td {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A design (or --input file) with one vertex and its edges removed
    Truncate {
        #[arg(long, required_unless_present = "input")]
        m: Option<usize>,
        #[arg(long, required_unless_present = "input")]
        k: Option<usize>,
        #[arg(long, conflicts_with_all = ["m", "k"])]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        vertex: Vertex,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Triple system from the cyclic factorization of K_{s,s}, s odd
    StdFact {
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Triple system from the XOR factorization of K_{2^t,2^t}
    BinFact {
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Extension of an edge-colored graph given as JSON {n, matchings}
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Extension of the 3-colored Wagner graph (11 points, 12 triples)
    Wagner {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Extension of a 1-factorization of C_{5,2} (14 points, 20 triples)
    C52 {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The affine plane of order 3
    Ag23 {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output file (.json for JSON, otherwise .lhg); stdout if absent
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Format for stdout
    #[arg(long, value_enum, default_value_t = FileFormat::Lhg)]
    format: FileFormat,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// n = km: maximum m^2, every extremal system a transversal design
    #[command(alias = "thm1")]
    Divisible {
        #[command(flatten)]
        params: SearchParams,
        #[command(flatten)]
        run: RunOptions,
    },
    /// n = k(m+1) - 1: maximum m^2 + m
    #[command(alias = "thm2")]
    OneShort {
        #[command(flatten)]
        params: SearchParams,
        #[command(flatten)]
        run: RunOptions,
    },
    /// Triple systems on 3m + 2 points: extremal systems are the reference classes
    #[command(alias = "thm3")]
    OneShortClasses {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        run: RunOptions,
    },
    /// Every 4 triples on at most 7 points contain a fan, Pasch, C14 or W
    F74Classify,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Lhg,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReduceMode {
    Linearize,
    Tripartite,
}

fn parse_config(s: &str) -> Result<ConfigName, String> {
    s.parse()
        .map_err(|_| format!("unknown configuration {s:?}; expected one of triangle, fanK (K >= 2), pasch, c14, w"))
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::Falsified { .. } => domain(e),
        _ => usage(e),
    }
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(domain)?;
    writeln!(out, "{text}").map_err(domain)
}

fn emit(out: &mut dyn Write, h: &Hypergraph, args: &OutputArgs) -> Outcome {
    match &args.output {
        Some(path) => io::write(path, h).map_err(usage),
        None => {
            let format = match args.format {
                FileFormat::Lhg => Format::Lhg,
                FileFormat::Json => Format::Json,
            };
            write!(out, "{}", io::render(h, format)).map_err(domain)
        }
    }
}

fn read(path: &Path) -> Result<Hypergraph, Failure> {
    io::read(path).map_err(usage)
}

fn read_linear(path: &Path) -> Result<LinearHypergraph, Failure> {
    LinearHypergraph::try_from(read(path)?).map_err(usage)
}

fn options(run: &RunOptions) -> Result<SearchOptions, Failure> {
    let cap = match run.cap {
        Some(c) => Some(c),
        None => match std::env::var(CAP_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .map_err(|_| usage(format!("{CAP_ENV}={v:?} is not a number")))?,
            ),
            Err(_) => None,
        },
    };
    Ok(SearchOptions {
        workers: run.workers,
        cap,
        i_have_time: run.i_have_time,
        ..Default::default()
    })
}

fn construct(what: Construct, out: &mut dyn Write) -> Outcome {
    let (h, args): (Hypergraph, OutputArgs) = match what {
        Construct::Td { m, k, out } => (transversal_design(m, k).map_err(usage)?.into_inner(), out),
        Construct::Truncate {
            m,
            k,
            input,
            vertex,
            out,
        } => {
            let base = match input {
                Some(path) => read_linear(&path)?,
                None => transversal_design(m.expect("required"), k.expect("required")).map_err(usage)?,
            };
            (truncate(&base, vertex).map_err(usage)?.into_inner(), out)
        }
        Construct::StdFact { s, out } => (
            design_from_factorization(&standard_factorization(s).map_err(usage)?).into_inner(),
            out,
        ),
        Construct::BinFact { t, out } => (
            design_from_factorization(&binary_factorization(t).map_err(usage)?).into_inner(),
            out,
        ),
        Construct::Extend { input, out } => {
            let text = std::fs::read_to_string(&input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
            let g: ColoredGraph = serde_json::from_str(&text).map_err(usage)?;
            (extend_colored_graph(&g).map_err(usage)?.into_inner(), out)
        }
        Construct::Wagner { out } => (extend_colored_graph(&wagner_graph()).map_err(domain)?.into_inner(), out),
        Construct::C52 { out } => (extend_colored_graph(&c52_graph()).map_err(domain)?.into_inner(), out),
        Construct::Ag23 { out } => (ag23().into_inner(), out),
    };
    emit(out, &h, &args)
}

#[derive(Serialize)]
struct CheckResult {
    config: ConfigName,
    found: bool,
    embedding: Option<crate::hypergraph::Embedding>,
}

fn check(file: &Path, configs: &[ConfigName], expect_free: bool, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let h = read(file)?;
    let mut results = Vec::new();
    for &name in configs {
        let c = Configuration::with_uniformity(name, h.k()).map_err(usage)?;
        let embedding = match LinearHypergraph::try_from(h.clone()) {
            Ok(lin) if name == ConfigName::Fan(h.k()) => contains_fan(&lin, h.k()).map_err(usage)?,
            _ => find_embedding(&h, &c).map_err(usage)?,
        };
        results.push(CheckResult {
            config: name,
            found: embedding.is_some(),
            embedding,
        });
    }
    match format {
        OutputFormat::Json => json(out, &results)?,
        OutputFormat::Text => {
            for r in &results {
                match &r.embedding {
                    None => writeln!(out, "{}: absent", r.config),
                    Some(e) => {
                        let edges: Vec<String> = e
                            .edge_map
                            .iter()
                            .map(|x| x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                            .collect();
                        writeln!(
                            out,
                            "{}: found at {{{}}} (vertex map {:?})",
                            r.config,
                            edges.join("; "),
                            e.vertex_map
                        )
                    }
                }
                .map_err(domain)?;
            }
        }
    }
    match results.iter().find(|r| r.found) {
        Some(r) if expect_free => Err(domain(format!("{} contains {}", file.display(), r.config))),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    report: crate::bounds::BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    groups: Option<crate::hypergraph::GroupPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    link: Option<LinkOutput>,
}

#[derive(Serialize)]
struct LinkOutput {
    graph: crate::bounds::LinkGraph,
    degree_check: crate::bounds::AesCheck,
}

fn bounds(
    file: Option<PathBuf>,
    n: Option<usize>,
    k: Option<usize>,
    vertex: Option<Vertex>,
    structure: bool,
    link: bool,
    out: &mut dyn Write,
) -> Outcome {
    let Some(file) = file else {
        let (n, k) = (
            n.ok_or_else(|| usage("give a file or --n and --k"))?,
            k.expect("paired"),
        );
        if k < 2 {
            return Err(usage("k must be at least 2"));
        }
        return json(out, &fan_upper_bound(n, k));
    };
    let h = read_linear(&file)?;
    let v = match vertex {
        Some(v) => v,
        None => h.max_degree().1.ok_or_else(|| usage("hypergraph has no vertices"))?,
    };
    let report = proof_bounds(&h, v).map_err(usage)?;
    let groups = if structure {
        Some(verify_extremal_structure(&h).map_err(domain)?)
    } else {
        None
    };
    let link = if link {
        let graph = link_graph(&h, v).map_err(usage)?;
        let degree_check = aes_degree_check(&graph.graph.graph());
        Some(LinkOutput { graph, degree_check })
    } else {
        None
    };
    json(out, &BoundsOutput { report, groups, link })
}

fn reduce(file: &Path, mode: ReduceMode, assume: bool, output: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    let h = read(file)?;
    let report = match mode {
        ReduceMode::Linearize => linearize(&h),
        ReduceMode::Tripartite => tripartite_subsystem(&h, assume),
    }
    .map_err(domain)?;
    if let Some(path) = output {
        io::write(&path, &report.output).map_err(usage)?;
    }
    json(out, &report)?;
    if report.guarantee_met {
        Ok(())
    } else {
        Err(domain("guarantee not met"))
    }
}

fn search(
    params: SearchParams,
    forbid: &[ConfigName],
    out_dir: Option<PathBuf>,
    run: &RunOptions,
    out: &mut dyn Write,
) -> Outcome {
    let opts = options(run)?;
    let report = max_free(params.n, params.k, forbid, &opts).map_err(search_failure)?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        for (i, w) in report.witnesses.iter().enumerate() {
            io::write(&dir.join(format!("witness-{:03}.lhg", i + 1)), &w.to_hypergraph()).map_err(usage)?;
        }
    }
    json(out, &report)
}

fn verify(what: Verify, out: &mut dyn Write) -> Outcome {
    let default_run = RunOptions {
        workers: 0,
        cap: None,
        i_have_time: false,
    };
    let (claim, run) = match what {
        Verify::Divisible { params, run } => (
            Claim::DivisibleEquality {
                n: params.n,
                k: params.k,
            },
            run,
        ),
        Verify::OneShort { params, run } => (
            Claim::OneShortEquality {
                n: params.n,
                k: params.k,
            },
            run,
        ),
        Verify::OneShortClasses { m, run } => (Claim::OneShortClassification { m }, run),
        Verify::F74Classify => (Claim::F74Classification, default_run),
    };
    let verification = verify_claim(claim, &options(&run)?).map_err(search_failure)?;
    json(out, &verification)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Construct { what } => construct(what, out),
        Command::Check {
            file,
            configs,
            expect_free,
            format,
        } => check(&file, &configs, expect_free, format, out),
        Command::Bounds {
            file,
            n,
            k,
            vertex,
            structure,
            link,
        } => bounds(file, n, k, vertex, structure, link, out),
        Command::Reduce {
            file,
            mode,
            assume_pasch_c14_free,
            output,
        } => reduce(&file, mode, assume_pasch_c14_free, output, out),
        Command::Search {
            params,
            forbid,
            out_dir,
            run,
        } => search(params, &forbid, out_dir, &run, out),
        Command::Verify { what } => verify(what, out),
    }
}

/// Run the command line with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "lhg: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "lhg: {msg}");
            2
        }
    }
}

/// Run against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(args, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
