mod plot;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use dimcrit::geometry::{
    cycle_on_circle_feasible, embed_cycle_on_sphere, embed_join_clique_cycle,
    embed_join_minus_edge, parse_rational, regular_simplex, verify_embedding, Embedding,
    VERIFY_TOL,
};
use dimcrit::graph::{build_join_clique_cycle, Graph, JoinSpec, PartitionSpec};
use dimcrit::multipartite::{
    classify_multipartite_criticality, multipartite_deletion_table, multipartite_dimension,
};
use dimcrit::reproduce::{resolve_check, run_all, run_check};
use dimcrit::search::{
    estimate_dimension, hunt_edge_drop, hunt_vertex_drop, prune_to_critical, test_criticality,
    SearchConfig,
};

/// Unit-distance dimension and dimension-criticality of graphs.
///
/// Inputs marked JSON accept inline JSON, a file path, or `-` for stdin.
/// Reports go to stdout (or `--output`); errors go to stderr as JSON.
#[derive(Parser, Debug)]
#[command(name = "dimcrit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the embedding search (required by `reproduce`)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Random restarts per dimension
    #[arg(long, global = true)]
    restarts: Option<usize>,

    /// Edge-length tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Write the report to this file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of a complete multipartite graph, e.g. '{"parts":[2,3]}'
    DimFormula { spec: String },
    /// Criticality of a complete multipartite graph
    CriticalFormula { spec: String },
    /// Dimension bounds after deleting one edge of each orbit
    DeletionTable { spec: String },
    /// Closed-form embedding of a graph family
    Embed {
        #[arg(long, value_enum)]
        family: Family,
        /// Clique or simplex size
        #[arg(long)]
        n: Option<usize>,
        /// Cycle length
        #[arg(long)]
        m: Option<usize>,
        /// Sphere radius for `cycle-sphere`
        #[arg(long)]
        r: Option<f64>,
        /// Print an `x y` projection onto axes `i,j` instead of JSON
        #[arg(long, value_name = "I,J")]
        plot: Option<String>,
    },
    /// Check an embedding against a graph
    Verify { graph: String, embedding: String },
    /// Certified bounds on the dimension of a graph
    Estimate { graph: String },
    /// Edge-by-edge criticality of a connected graph
    CriticalTest { graph: String },
    /// Delete edges while the dimension provably stays at `target`
    Prune {
        graph: String,
        #[arg(long)]
        target: usize,
    },
    /// Search small connected graphs for an edge whose deletion drops the dimension by 2
    HuntEdge {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
    /// Search small connected graphs for vertex deletions that drop the dimension by 2 or more
    HuntVertex {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
    /// Whether C_m fits on a circle of squared radius r2 with unit edges
    CycleCircle {
        /// Squared radius as an exact rational `p/q`
        #[arg(long)]
        r2: String,
        #[arg(long)]
        m: usize,
    },
    /// Run an acceptance check by id or name, or `all`
    Reproduce { check: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Simplex,
    Join,
    JoinMinusEdge,
    CycleSphere,
}

enum Failure {
    /// Well-formed input that violates a precondition.
    Domain { code: &'static str, message: String },
    /// Unreadable input or output.
    Io(String),
    /// Malformed JSON.
    Parse(String),
    /// Bad or missing command-line arguments.
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain { .. } => 1,
            Failure::Io(_) | Failure::Parse(_) | Failure::Usage(_) => 2,
        }
    }

    fn payload(&self) -> serde_json::Value {
        let (code, message) = match self {
            Failure::Domain { code, message } => (*code, message.as_str()),
            Failure::Io(m) => ("io", m.as_str()),
            Failure::Parse(m) => ("parse", m.as_str()),
            Failure::Usage(m) => ("usage", m.as_str()),
        };
        json!({ "error": { "code": code, "message": message } })
    }
}

impl From<dimcrit::Error> for Failure {
    fn from(e: dimcrit::Error) -> Self {
        use dimcrit::Error::*;
        let code = match &e {
            InvalidGraph(_) => "invalid-graph",
            InvalidPartition(_) => "invalid-partition",
            InvalidJoin { .. } => "invalid-join",
            MissingEdge(..) => "missing-edge",
            MissingVertex(_) => "missing-vertex",
            FormulaNotApplicable(_) => "formula-not-applicable",
            NotConnectedNonEmpty => "not-connected",
            OutOfRange(_) => "out-of-range",
            NoApex { .. } => "no-apex",
            Degenerate(_) => "degenerate",
            DimensionMismatch(_) => "dimension-mismatch",
            BudgetExceeded(_) => "budget-exceeded",
            Precondition(_) => "precondition",
        };
        Failure::Domain {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

/// Reads inline JSON, `-` for stdin, or a file path.
fn load<T: DeserializeOwned>(source: &str) -> Result<T, Failure> {
    let trimmed = source.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        source.to_string()
    } else if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| Failure::Io(format!("{source}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| {
        if e.is_data() {
            // Valid JSON that the library rejected, such as an empty part list.
            Failure::Domain {
                code: "invalid-input",
                message: e.to_string(),
            }
        } else {
            Failure::Parse(e.to_string())
        }
    })
}

fn search_config(cli: &Cli) -> Result<SearchConfig, Failure> {
    let mut cfg = SearchConfig::default();
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(r) = cli.restarts {
        cfg.restarts = r;
    }
    if let Some(t) = cli.tol {
        cfg.tolerance = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn required(value: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("--family {family:?} needs --{flag}").to_lowercase()))
}

fn embed_family(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    r: Option<f64>,
) -> Result<(Graph, Embedding), Failure> {
    Ok(match family {
        Family::Simplex => {
            let n = required(n, "n", family)?;
            if n == 0 {
                return Err(dimcrit::Error::OutOfRange("simplex needs n >= 1".into()).into());
            }
            (Graph::complete(n), regular_simplex(n))
        }
        Family::Join | Family::JoinMinusEdge => {
            let spec = JoinSpec::new(required(n, "n", family)?, required(m, "m", family)?)?;
            let g = build_join_clique_cycle(&spec);
            if let Family::Join = family {
                (g, embed_join_clique_cycle(&spec)?)
            } else {
                let (a, b) = (spec.cycle_vertex(1), spec.cycle_vertex(spec.cycle_length()));
                (g.delete_edge(a, b)?, embed_join_minus_edge(&spec)?)
            }
        }
        Family::CycleSphere => {
            let m = required(m, "m", family)?;
            let r = r.ok_or_else(|| usage("--family cycle-sphere needs --r"))?;
            (Graph::cycle(m)?, embed_cycle_on_sphere(m, r)?)
        }
    })
}

/// Runs the command; the flag says whether the reported result passed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let report = match &cli.command {
        Command::DimFormula { spec } => {
            let spec: PartitionSpec = load(spec)?;
            to_json(&json!({ "dimension": multipartite_dimension(&spec)? }))?
        }
        Command::CriticalFormula { spec } => {
            to_json(&classify_multipartite_criticality(&load(spec)?)?)?
        }
        Command::DeletionTable { spec } => to_json(&multipartite_deletion_table(&load(spec)?)?)?,
        Command::Embed {
            family,
            n,
            m,
            r,
            plot,
        } => {
            let (g, emb) = embed_family(*family, *n, *m, *r)?;
            match plot {
                Some(axes) => {
                    let axes = plot::parse_axes(axes)
                        .ok_or_else(|| usage(format!("--plot expects i,j, got {axes:?}")))?;
                    plot::emit_plot_data(&emb, axes, g.edges())?
                }
                None => to_json(&emb)?,
            }
        }
        Command::Verify { graph, embedding } => {
            let g: Graph = load(graph)?;
            let emb: Embedding = load(embedding)?;
            let report = verify_embedding(&g, &emb, cli.tol.unwrap_or(VERIFY_TOL))?;
            return Ok((to_json(&report)?, report.passed));
        }
        Command::Estimate { graph } => {
            to_json(&estimate_dimension(&load(graph)?, &search_config(cli)?))?
        }
        Command::CriticalTest { graph } => {
            to_json(&test_criticality(&load(graph)?, &search_config(cli)?)?)?
        }
        Command::Prune { graph, target } => to_json(&prune_to_critical(
            &load(graph)?,
            *target,
            &search_config(cli)?,
        )?)?,
        Command::HuntEdge { max_vertices } => {
            to_json(&hunt_edge_drop(*max_vertices, &search_config(cli)?)?)?
        }
        Command::HuntVertex { max_vertices } => {
            to_json(&hunt_vertex_drop(*max_vertices, &search_config(cli)?)?)?
        }
        Command::CycleCircle { r2, m } => {
            to_json(&cycle_on_circle_feasible(&parse_rational(r2)?, *m)?)?
        }
        Command::Reproduce { check } => {
            if cli.seed.is_none() {
                return Err(usage("reproduce requires an explicit --seed"));
            }
            let cfg = search_config(cli)?;
            if check == "all" {
                let r = run_all(&cfg)?;
                return Ok((to_json(&r)?, r.passed));
            }
            let r = run_check(resolve_check(check)?, &cfg)?;
            return Ok((to_json(&r)?, r.passed));
        }
    };
    Ok((report, true))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("{}", f.payload());
    ExitCode::from(f.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(Failure::Usage(e.to_string().trim_end().to_string())),
    };
    match run(&cli).and_then(|(text, passed)| emit(&cli, &text).map(|_| passed)) {
        Ok(true) => ExitCode::SUCCESS,
        // A check that ran but did not pass: the report is still written.
        Ok(false) => ExitCode::from(1),
        Err(f) => fail(f),
    }
}
