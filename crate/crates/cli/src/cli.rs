//! Command-line interface.
//!
//! Exit codes: `0` pass, `1` the checked property fails, `2` usage, input or
//! resource errors.

use std::io::Read;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twistcube_core::arcs::{execute, find_chain_twist, validate, ViolationKind};
use twistcube_core::forcing::closure;
use twistcube_core::minority::build_recursive;
use twistcube_core::solver::{upper_bound, SolveOptions};
use twistcube_core::{CubeGraph, Detector, Error as CoreError, SolveStatus};

use crate::document::GraphDocument;
use crate::dot::to_dot;
use crate::error::CliError;
use crate::parallel::{solve_parallel, ParallelOptions};
use crate::spec_file::parse_spec;

#[derive(Debug, Parser)]
#[command(
    name = "twistcube",
    version,
    about = "Zero forcing on twisted hypercubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph document.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Check a vertex set, an arc set or look for a chain twist.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Same as `verify set`.
    VerifySet(SetArgs),
    /// Compute the zero forcing number.
    Solve(SolveArgs),
    /// Convert a document to DOT or normalised JSON.
    Export(ExportArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Build(BuildCommand::Hypercube { .. }) => "build hypercube",
            Command::Build(BuildCommand::Minority { .. }) => "build minority",
            Command::Build(BuildCommand::Twisted { .. }) => "build twisted",
            Command::Verify(VerifyCommand::Set(_)) | Command::VerifySet(_) => "verify set",
            Command::Verify(VerifyCommand::Arcs(_)) => "verify arcs",
            Command::Verify(VerifyCommand::Twist(_)) => "verify twist",
            Command::Solve(_) => "solve",
            Command::Export(_) => "export",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum BuildCommand {
    /// The hypercube `Q_n`.
    Hypercube {
        #[arg(short)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// The minority cube with its forcing arc set.
    Minority {
        #[arg(short)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// A twisted hypercube from a specification file.
    Twisted {
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Whether a vertex set is zero forcing.
    Set(SetArgs),
    /// Whether the document's arc set is valid and forcing.
    Arcs(InputArgs),
    /// Search the document's arc set for a chain twist.
    Twist(TwistArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph document, `-` for stdin.
    #[arg(short, long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated vertex labels; defaults to the document's `set`.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct TwistArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = DetectorArg::Auto)]
    pub detector: DetectorArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DetectorArg {
    Auto,
    Exhaustive,
    Walk,
}

impl From<DetectorArg> for Detector {
    fn from(d: DetectorArg) -> Self {
        match d {
            DetectorArg::Auto => Detector::Auto,
            DetectorArg::Exhaustive => Detector::Exhaustive,
            DetectorArg::Walk => Detector::Walk,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Stop after certifying sizes up to this one.
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget_secs: Option<f64>,
    /// Budget in closure evaluations.
    #[arg(long)]
    pub budget_subsets: Option<u64>,
    /// Worker threads; `0` uses every core.
    #[arg(long, env = "TWISTCUBE_WORKERS", default_value_t = 0)]
    pub workers: usize,
    /// Allow graphs with 33 to 64 vertices.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

/// What a successful run produced.
#[derive(Debug)]
pub struct Done {
    pub stdout: String,
    pub exit_code: i32,
    pub input_sha256: Option<String>,
}

pub fn run(cli: &Cli) -> Result<Done, CliError> {
    match &cli.command {
        Command::Build(b) => build(b),
        Command::Verify(VerifyCommand::Set(a)) | Command::VerifySet(a) => verify_set(a),
        Command::Verify(VerifyCommand::Arcs(a)) => verify_arcs(a),
        Command::Verify(VerifyCommand::Twist(a)) => verify_twist(a),
        Command::Solve(a) => solve(a),
        Command::Export(a) => export(a),
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

fn load(args: &InputArgs) -> Result<(GraphDocument, String), CliError> {
    let bytes = read_input(&args.input)?;
    let sha = crate::manifest::sha256_hex(&bytes);
    let text =
        String::from_utf8(bytes).map_err(|_| CliError::Usage("input is not UTF-8".into()))?;
    Ok((GraphDocument::from_json(&text)?, sha))
}

fn emit(text: String, out: &Output, input_sha256: Option<String>) -> Result<Done, CliError> {
    let stdout = match &out.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            String::new()
        }
        None => text,
    };
    Ok(Done {
        stdout,
        exit_code: 0,
        input_sha256,
    })
}

fn report(value: Value, pass: bool, sha: String) -> Done {
    Done {
        stdout: format!("{value}\n"),
        exit_code: if pass { 0 } else { 1 },
        input_sha256: Some(sha),
    }
}

fn build(cmd: &BuildCommand) -> Result<Done, CliError> {
    match cmd {
        BuildCommand::Hypercube { n, out } => emit(
            GraphDocument::cube(&CubeGraph::hypercube(*n)?).to_json(),
            out,
            None,
        ),
        BuildCommand::Minority { n, out } => emit(
            GraphDocument::minority(&build_recursive(*n)?).to_json(),
            out,
            None,
        ),
        BuildCommand::Twisted { spec, out } => {
            let bytes = read_input(spec)?;
            let sha = crate::manifest::sha256_hex(&bytes);
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Usage("spec is not UTF-8".into()))?;
            let cube = CubeGraph::twisted(&parse_spec(&text)?)?;
            emit(GraphDocument::cube(&cube).to_json(), out, Some(sha))
        }
    }
}

fn verify_set(args: &SetArgs) -> Result<Done, CliError> {
    let (doc, sha) = load(&args.input)?;
    let set = match &args.set {
        Some(labels) => labels
            .iter()
            .map(|l| {
                doc.vertex(l.trim())
                    .ok_or_else(|| CliError::Usage(format!("unknown vertex {l:?}")))
            })
            .collect::<Result<Vec<usize>, _>>()?,
        None => doc
            .set
            .clone()
            .ok_or_else(|| CliError::Usage("no set given and the document has none".into()))?,
    };
    let (derived, trace) = closure(&doc.graph, &set)?;
    let unforced: Vec<usize> = (0..doc.graph.order())
        .filter(|&v| !derived.contains(v))
        .collect();
    let pass = unforced.is_empty();
    let initial = derived.len() - trace.forces.len();
    Ok(report(
        json!({
            "zero_forcing": pass,
            "initial": initial,
            "forced": trace.forces.len(),
            "unforced": unforced.len(),
            "unforced_vertices": doc.labels_of(&unforced),
        }),
        pass,
        sha,
    ))
}

fn verify_arcs(args: &InputArgs) -> Result<Done, CliError> {
    let (doc, sha) = load(args)?;
    let arcs = doc
        .arcs
        .as_ref()
        .ok_or_else(|| CliError::Usage("the document has no arcs".into()))?;
    let pair = |t: usize, h: usize| json!([doc.label(t), doc.label(h)]);
    if let Err(violations) = validate(&doc.graph, arcs) {
        let list: Vec<Value> = violations
            .iter()
            .map(|v| {
                let kind = match v.kind {
                    ViolationKind::VertexOutOfRange => "vertex_out_of_range",
                    ViolationKind::NotAnEdge => "not_an_edge",
                    ViolationKind::BothOrientations => "both_orientations",
                };
                json!({"arc": pair(v.arc.tail, v.arc.head), "kind": kind})
            })
            .collect();
        return Ok(report(
            json!({"valid": false, "forcing": false, "violations": list}),
            false,
            sha,
        ));
    }
    let execution = match execute(&doc.graph, arcs) {
        Ok(e) => e,
        Err(CoreError::Structure { vertex, kind }) => {
            return Ok(report(
                json!({
                    "valid": true,
                    "forcing": false,
                    "structure": format!("{kind:?}"),
                    "vertex": doc.label(vertex),
                }),
                false,
                sha,
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let pass = execution.is_complete();
    Ok(report(
        json!({
            "valid": true,
            "forcing": pass,
            "arcs": arcs.len(),
            "executed": execution.performed.len(),
            "initial": arcs.initial_vertices(doc.graph.order()).len(),
            "blocked": execution.blocked.iter().map(|a| pair(a.tail, a.head)).collect::<Vec<_>>(),
        }),
        pass,
        sha,
    ))
}

fn verify_twist(args: &TwistArgs) -> Result<Done, CliError> {
    let (doc, sha) = load(&args.input)?;
    let arcs = doc
        .arcs
        .as_ref()
        .ok_or_else(|| CliError::Usage("the document has no arcs".into()))?;
    if let Err(v) = validate(&doc.graph, arcs) {
        return Err(CliError::Usage(format!(
            "invalid arc set ({} violations)",
            v.len()
        )));
    }
    let twist = match find_chain_twist(&doc.graph, arcs, args.detector.into()) {
        Ok(t) => t,
        Err(CoreError::Structure { vertex, kind }) => {
            return Err(CliError::Usage(format!(
                "arc set is not a dipath forest: {kind:?} at {}",
                doc.label(vertex)
            )));
        }
        Err(e) => return Err(e.into()),
    };
    let pass = twist.is_none();
    Ok(report(
        json!({"chain_twist": twist.map(|c| doc.labels_of(&c))}),
        pass,
        sha,
    ))
}

fn solve(args: &SolveArgs) -> Result<Done, CliError> {
    let (doc, sha) = load(&args.input)?;
    let time_budget = match args.budget_secs {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(CliError::Usage(format!("invalid budget {s}")));
        }
        s => s.map(Duration::from_secs_f64),
    };
    let known_upper = doc
        .cube_graph()
        .filter(|c| c.dimension() > 0)
        .and_then(|c| upper_bound(&c).ok())
        .map(|(_, w)| w);
    let opts = ParallelOptions {
        core: SolveOptions {
            max_k: args.max_k,
            subset_budget: args.budget_subsets,
            allow_large: args.allow_large,
        },
        time_budget,
        workers: args.workers,
        known_upper,
    };
    let r = solve_parallel(&doc.graph, &opts)?.result;
    let exact = r.status == SolveStatus::Exact;
    Ok(report(
        json!({
            "z": r.z(),
            "status": if exact { "exact" } else { "inconclusive" },
            "bounds": [r.lower, r.upper],
            "witness": doc.labels_of(&r.witness),
            "subsets_tested": r.subsets_tested,
        }),
        true,
        sha,
    ))
}

fn export(args: &ExportArgs) -> Result<Done, CliError> {
    let (doc, sha) = load(&args.input)?;
    let text = match args.format {
        Format::Dot => to_dot(&doc),
        Format::Json => doc.to_json(),
    };
    emit(text, &args.out, Some(sha))
}
