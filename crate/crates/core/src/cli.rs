//! Command-line front end. The binary is a thin wrapper around [`execute`].

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classes::structure_constants;
use crate::error::Error;
use crate::exterior::ModuleSpec;
use crate::presentation::presentation;
use crate::report;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    version,
    about = "Schubert calculus on G(k,n) via derivations on an exterior algebra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators and relations of the cohomology ring
    Present {
        #[command(flatten)]
        common: Common,
    },
    /// Product of two Schubert classes
    Multiply {
        #[command(flatten)]
        common: Common,
        /// Left factor, e.g. "2,1" ("" or "0" for the unit class)
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        /// Right factor
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Action of D_h on a Schubert class
    Pieri {
        #[command(flatten)]
        common: Common,
        /// The order h of the derivation
        #[arg(long)]
        order: u32,
        /// The class acted on
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Evaluate the Schur determinant of a partition on the lowest wedge
    Giambelli {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Table of products of Schubert classes
    Constants {
        #[command(flatten)]
        common: Common,
        /// Only pairs with |lambda| + |mu| <= this bound (default: all pairs)
        #[arg(long)]
        max_weight: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'n')]
    pub n: u32,
    /// `classical` (X^n), `quantum` (X^n + q, declares q of degree n), or a
    /// monic polynomial in X over the declared ring
    #[arg(long = "p", default_value = "classical")]
    pub p: String,
    /// Coefficient generators, `name:degree,...`
    #[arg(long, default_value = "")]
    pub ring: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the document here instead of standard output
    #[arg(long, short = 'o')]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            code: if e.is_input_error() {
                EXIT_USAGE
            } else {
                EXIT_COMPUTATION
            },
            message: e.to_string(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl Common {
    pub fn module_spec(&self) -> Result<Arc<ModuleSpec>, Error> {
        if self.k == 0 || self.k > self.n as usize {
            return Err(Error::KOutOfRange {
                k: self.k,
                n: self.n,
            });
        }
        report::module_from_description(&self.p, self.n, &self.ring)
    }
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Present { common }
            | Command::Multiply { common, .. }
            | Command::Pieri { common, .. }
            | Command::Giambelli { common, .. }
            | Command::Constants { common, .. } => common,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Runs one command and returns the document it emits.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let common = cli.command.common();
    let format = common.format;
    let doc = match &cli.command {
        Command::Present { .. } => {
            let spec = common.module_spec()?;
            let pres = presentation(&spec, common.k)?;
            match format {
                Format::Json => to_json(&pres.to_json()),
                Format::Text => pres.to_text(),
            }
        }
        Command::Multiply { lhs, rhs, .. } => {
            let doc = report::product_document(&common.module_spec()?, common.k, lhs, rhs)?;
            match format {
                Format::Json => to_json(&doc),
                Format::Text => format!("σ({}) * σ({}) = {}\n", doc.lhs, doc.rhs, doc.result_text),
            }
        }
        Command::Pieri { order, class, .. } => {
            let doc = report::pieri_document(&common.module_spec()?, common.k, *order, class)?;
            match format {
                Format::Json => to_json(&doc),
                Format::Text => format!("D{order} σ({}) = {}\n", doc.class, doc.result_text),
            }
        }
        Command::Giambelli { partition, .. } => {
            let doc = report::giambelli_document(&common.module_spec()?, common.k, partition)?;
            match format {
                Format::Json => to_json(&doc),
                Format::Text => {
                    let index: Vec<String> = doc.index.iter().map(u32::to_string).collect();
                    let lowest: Vec<String> = (1..=common.k).map(|i| i.to_string()).collect();
                    format!(
                        "partition ({}) <-> I = ({})\nDelta_I(D) = {}\nDelta_I(D) e({}) = {}\n",
                        doc.partition,
                        index.join(","),
                        doc.delta,
                        lowest.join(","),
                        doc.vector_text
                    )
                }
            }
        }
        Command::Constants { max_weight, .. } => {
            let spec = common.module_spec()?;
            let full = 2 * common.k as u32 * (common.n - common.k as u32);
            let table = structure_constants(&spec, common.k, max_weight.unwrap_or(full))?;
            match format {
                Format::Json => {
                    let rows: Vec<_> = table.iter().map(|r| r.to_json()).collect();
                    to_json(&rows)
                }
                Format::Text => {
                    let mut s = String::new();
                    writeln!(
                        s,
                        "k = {}, n = {}, p = {}",
                        common.k,
                        common.n,
                        spec.polynomial_string()
                    )
                    .unwrap();
                    for row in &table {
                        writeln!(s, "σ({}) * σ({}) = {}", row.lhs, row.rhs, row.result).unwrap();
                    }
                    s
                }
            }
        }
    };
    Ok(doc)
}

/// Parses `args`, runs the command and writes the document. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let doc = match execute(&cli) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return e.code;
        }
    };
    match &cli.command.common().output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_COMPUTATION;
            }
        }
        None => print!("{doc}"),
    }
    0
}
