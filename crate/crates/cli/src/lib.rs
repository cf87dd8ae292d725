//! Command-line front end for finitely presented modules.
//!
//! Each subcommand reads presentation or morphism files in the format of
//! [`format`], computes with the `freyd` crate and prints the result as a
//! canonical form, a presentation, or JSON.

pub mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use freyd::arith::Ring;
use freyd::monoidal::CoherenceReport;
use freyd::presentation::Presentation;
use serde_json::{json, Value};

use commands::{Answer, DemoReport};
pub use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "freyd", version, about = "Compute with finitely presented modules")]
pub struct Cli {
    /// Require inputs over this ring (`Z`, `Q` or `Z/<n>`); for
    /// `check-axioms`, the ring to sample over.
    #[arg(long, global = true)]
    pub ring: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Canonical)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Canonical,
    Presentation,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tensor product of two presented modules.
    Tensor { left: PathBuf, right: PathBuf },
    /// Internal hom from the first module to the second.
    Hom { source: PathBuf, target: PathBuf },
    /// Kernel of a morphism file.
    Kernel { morphism: PathBuf },
    /// Cokernel of a morphism file.
    Cokernel { morphism: PathBuf },
    /// Canonical form of a presented module.
    Canonical { module: PathBuf },
    /// Coherence diagrams of the tensor on random modules.
    CheckAxioms {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Builds the free abelian category over Rows_Z and checks coherence.
    FreeAbelianDemo {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn presentation(path: &Path, ring: Option<&Ring>) -> Result<Presentation, CliError> {
    let p = format::parse_presentation(&read(path)?)
        .map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    check_ring(p.ring(), ring)?;
    Ok(p)
}

fn morphism(path: &Path, ring: Option<&Ring>) -> Result<format::MorphismFile, CliError> {
    let m = format::parse_morphism(&read(path)?)
        .map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    check_ring(m.source.ring(), ring)?;
    Ok(m)
}

fn check_ring(found: &Ring, wanted: Option<&Ring>) -> Result<(), CliError> {
    match wanted {
        Some(r) if r != found => Err(CliError::Ring(format!("input is over {found}, but --ring {r} was given"))),
        _ => Ok(()),
    }
}

pub fn answer_json(a: &Answer) -> Value {
    let m = &a.presentation.relations;
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|e| e.to_string()).collect()).collect();
    json!({
        "presentation": {
            "ring": a.presentation.ring().to_string(),
            "rows": m.rows(),
            "cols": m.cols(),
            "relations": rows,
        },
        "canonical": {
            "free_rank": a.canonical.free_rank,
            "torsion": a.canonical.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        },
    })
}

pub fn report_json(r: &CoherenceReport) -> Value {
    let failures: Vec<Value> = r
        .entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| json!({ "diagram": e.diagram, "sample": e.sample, "detail": e.detail }))
        .collect();
    json!({ "checks": r.checked(), "failed": failures.len(), "failures": failures })
}

fn render_answer(a: &Answer, output: Output) -> String {
    match output {
        Output::Canonical => format!("{}\n", a.canonical),
        Output::Presentation => format::render_presentation(&a.presentation),
        Output::Json => format!("{}\n", answer_json(a)),
    }
}

fn render_report(r: &CoherenceReport, output: Output) -> String {
    match output {
        Output::Json => format!("{}\n", report_json(r)),
        _ => format!("{r}\n"),
    }
}

fn render_demo(d: &DemoReport, output: Output) -> String {
    match output {
        Output::Json => {
            let mut v = serde_json::to_value(d).expect("demo report serializes");
            v["coherence"] = report_json(&d.coherence);
            format!("{v}\n")
        }
        _ => {
            let mut out = String::new();
            for line in d.steps.iter().chain(&d.compatibility) {
                out.push_str(line);
                out.push('\n');
            }
            out.push_str(&format!("{}\n", d.coherence));
            out
        }
    }
}

/// Runs a parsed command line, returning what goes to standard output.
/// Failed checks are reported as [`CliError::Failed`] carrying the output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let ring = cli.ring.as_deref().map(str::parse::<Ring>).transpose().map_err(|e| CliError::Usage(e.to_string()))?;
    let ring = ring.as_ref();
    let out = cli.output;
    match &cli.command {
        Command::Tensor { left, right } => {
            Ok(render_answer(&commands::cmd_tensor(&presentation(left, ring)?, &presentation(right, ring)?)?, out))
        }
        Command::Hom { source, target } => {
            Ok(render_answer(&commands::cmd_hom(&presentation(source, ring)?, &presentation(target, ring)?)?, out))
        }
        Command::Kernel { morphism: path } => Ok(render_answer(&commands::cmd_kernel(&morphism(path, ring)?)?, out)),
        Command::Cokernel { morphism: path } => Ok(render_answer(&commands::cmd_cokernel(&morphism(path, ring)?)?, out)),
        Command::Canonical { module } => Ok(render_answer(&commands::cmd_canonical(&presentation(module, ring)?)?, out)),
        Command::CheckAxioms { seed, count } => {
            let report = commands::cmd_check_axioms(ring.unwrap_or(&Ring::Integers), *seed, *count)?;
            let text = render_report(&report, out);
            if report.passed() { Ok(text) } else { Err(CliError::Failed(text)) }
        }
        Command::FreeAbelianDemo { seed } => {
            let demo = commands::cmd_free_abelian_demo(*seed)?;
            let text = render_demo(&demo, out);
            if demo.passed() { Ok(text) } else { Err(CliError::Failed(text)) }
        }
    }
}

/// Parses `args` and runs; returns the text for standard output, the text
/// for standard error and the exit code.
pub fn run<I, T>(args: I) -> (String, String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return if code == 0 { (e.to_string(), String::new(), 0) } else { (String::new(), e.to_string(), code) };
        }
    };
    match execute(&cli) {
        Ok(text) => (text, String::new(), 0),
        Err(CliError::Failed(text)) => (text, String::new(), 4),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}
