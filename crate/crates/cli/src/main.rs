//! `cmt`: classify bipartite graphs by the least `t` with `Ind(G)` CM_t.
//!
//! Every command prints one JSON run report on standard output. Exit codes:
//! 0 ok, 2 disagreement (verify only), 1 error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use cmt_core::bigraph::{parse_document, parse_graph, write_document, write_graph, BipartiteGraph};
use cmt_core::classify::{classify, verify_against_oracle, verify_exhaustive, VerificationStatus};
use cmt_core::complex::oracle_report;
use cmt_core::construct::{contract, expand, predicted_codim, Expansion};
use cmt_core::enumerate::{cm_output, sharp_cmt_output, EnumerationOutput, SharpCmtOptions};
use cmt_core::fixtures;

#[derive(Parser, Debug)]
#[command(name = "cmt", version, about = "Cohen-Macaulay in codimension t for bipartite graphs")]
struct Cli {
    /// Emit JSON (the only format; accepted for scripts that pass it).
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on standard output; rely on the exit code.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Serialize)]
struct Input {
    /// Graph document to read.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    path: Option<PathBuf>,
    /// Built-in fixture: fig1, fig2, fig3, k22, chain, hexagon.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
enum Command {
    /// Structural classification from the pure order and its blocks.
    Classify(Input),
    /// Homological oracle on the independence complex.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Largest t in the CM_t table.
        #[arg(long)]
        max_t: Option<usize>,
    },
    /// Compare classifier and oracle on one graph, or on every unmixed graph with `--d` pairs.
    Verify {
        #[arg(long, conflicts_with_all = ["path", "builtin"])]
        d: Option<usize>,
        #[arg(required_unless_present_any = ["d", "builtin"])]
        path: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Replace matched pairs by complete blocks; multiplicities come from the `M:` line or `--mult`.
    Expand {
        #[command(flatten)]
        input: Input,
        /// Multiplicities in left-vertex order, e.g. `1,3`.
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<usize>>,
    },
    /// Collapse complete blocks to the Cohen-Macaulay base.
    Contract(Input),
    /// Enumerate Cohen-Macaulay graphs of a dimension, or sharp CM_t graphs.
    Enumerate {
        /// Dimension of the Cohen-Macaulay graphs.
        #[arg(long, conflicts_with = "cmt", required_unless_present = "cmt")]
        cm: Option<usize>,
        /// Sharp codimension t.
        #[arg(long)]
        cmt: Option<usize>,
        /// Largest number of matched pairs after expansion.
        #[arg(long, requires = "cmt")]
        max_total: Option<usize>,
        /// Directory for graph documents and manifest.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::Oracle { .. } => "oracle",
            Command::Verify { .. } => "verify",
            Command::Expand { .. } => "expand",
            Command::Contract(_) => "contract",
            Command::Enumerate { .. } => "enumerate",
        }
    }
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    Disagreement,
    Error,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    args: Value,
    input_digest: String,
    status: Status,
    timing_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read_source(path: Option<&Path>, builtin: Option<&str>) -> anyhow::Result<String> {
    match (path, builtin) {
        (_, Some(name)) => fixtures::builtin_source(name)
            .map(str::to_owned)
            .with_context(|| format!("unknown builtin {name:?}; choose one of {}", fixtures::BUILTIN_NAMES.join(", "))),
        (Some(p), None) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        (None, None) => bail!("no input graph given"),
    }
}

fn load(input: &Input) -> anyhow::Result<(String, BipartiteGraph)> {
    let text = read_source(input.path.as_deref(), input.builtin.as_deref())?;
    let g = parse_graph(&text)?;
    Ok((text, g))
}

fn to_value<T: Serialize>(v: &T) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(v)?)
}

fn write_output(dir: &Path, out: &EnumerationOutput) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for f in &out.files {
        fs::write(dir.join(&f.name), &f.document)?;
    }
    fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&out.manifest)? + "\n")?;
    Ok(())
}

/// Runs one command; returns the digested input, status and payload.
fn run(command: &Command) -> anyhow::Result<(String, Status, Value)> {
    match command {
        Command::Classify(input) => {
            let (text, g) = load(input)?;
            Ok((text, Status::Ok, to_value(&classify(&g)?)?))
        }
        Command::Oracle { input, max_t } => {
            let (text, g) = load(input)?;
            Ok((text, Status::Ok, to_value(&oracle_report(&g, *max_t)?)?))
        }
        Command::Verify { d: Some(d), .. } => {
            let run = verify_exhaustive(*d)?;
            let status = if run.all_agree() { Status::Ok } else { Status::Disagreement };
            Ok((format!("verify --d {d}"), status, to_value(&run)?))
        }
        Command::Verify { path, builtin, .. } => {
            let text = read_source(path.as_deref(), builtin.as_deref())?;
            let report = verify_against_oracle(&parse_graph(&text)?);
            let status = match report.status {
                VerificationStatus::Disagreement => Status::Disagreement,
                _ => Status::Ok,
            };
            Ok((text, status, to_value(&report)?))
        }
        Command::Expand { input, mult } => {
            let text = read_source(input.path.as_deref(), input.builtin.as_deref())?;
            let doc = parse_document(&text)?;
            let m = mult.clone().or(doc.multiplicities).context("no multiplicities: add an M: line or pass --mult")?;
            let e = Expansion::new(doc.graph, m)?;
            let expanded = expand(&e)?;
            let result = json!({
                "graph": write_graph(&expanded.graph),
                "pairs": expanded.graph.left().len(),
                "edges": expanded.graph.num_edges(),
                "predicted_codim": predicted_codim(&e).ok(),
            });
            Ok((text, Status::Ok, result))
        }
        Command::Contract(input) => {
            let (text, g) = load(input)?;
            let e = contract(&g)?;
            let result = json!({
                "base": write_document(e.base(), e.multiplicities()),
                "multiplicities": e.multiplicities(),
                "predicted_codim": predicted_codim(&e)?,
            });
            Ok((text, Status::Ok, result))
        }
        Command::Enumerate { cm, cmt, max_total, out } => {
            let output = match (cm, cmt) {
                (Some(dim), _) => cm_output(*dim)?,
                (None, Some(t)) => {
                    sharp_cmt_output(&SharpCmtOptions { max_total: *max_total, ..SharpCmtOptions::new(*t) })?
                }
                (None, None) => bail!("pass --cm or --cmt"),
            };
            if let Some(dir) = out {
                write_output(dir, &output)?;
            }
            let key = serde_json::to_string(command)?;
            Ok((key, Status::Ok, to_value(&output.manifest)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli.command);
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let args = serde_json::to_value(&cli.command).unwrap_or(Value::Null);
    let report = match outcome {
        Ok((input, status, result)) => RunReport {
            command: cli.command.name(),
            args,
            input_digest: digest(input.as_bytes()),
            status,
            timing_ms,
            result: Some(result),
            error: None,
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            RunReport {
                command: cli.command.name(),
                args,
                input_digest: digest(b""),
                status: Status::Error,
                timing_ms,
                result: None,
                error: Some(format!("{e:#}")),
            }
        }
    };
    if !cli.quiet {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        // a closed pipe downstream is not an error of this run
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
    match report.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Disagreement => ExitCode::from(2),
        Status::Error => ExitCode::FAILURE,
    }
}
