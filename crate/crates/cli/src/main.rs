//! `mnewton` — batch verification front end.
//!
//! Exit status: 0 when every requested check passes, 1 when at least one
//! check fails (the report carries margins and witnesses), 2 when the run
//! could not be performed (usage error, unreadable or malformed input).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mnewton::forms::FormKind;
use mnewton::mclass::GeneratorKind;

#[derive(Debug, Parser)]
#[command(name = "mnewton", version, about = "Newton's inequalities for M- and inverse M-matrices, and NIEP screening")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Relative tolerance used by every check.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Report format. JSON is the stable contract; text is for humans.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Lift the combinatorial size caps (enumeration, form dimension).
    #[arg(long, global = true)]
    pub override_caps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Matrix JSON file `{"n": .., "rows": [[..], ..]}`.
    #[arg(long, conflicts_with = "spectrum", required_unless_present = "spectrum")]
    pub input: Option<PathBuf>,

    /// Spectrum JSON file `{"values": [[re, im], ..]}`.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Z-, P-, M- and inverse-M-matrix classification.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Normalized characteristic coefficients c_0..c_n.
    Coeffs {
        #[command(flatten)]
        source: Source,
    },
    /// Newton's inequalities c_j² ≥ c_{j−1} c_{j+1}.
    Newton {
        #[command(flatten)]
        source: Source,
    },
    /// Minor-product inequalities and expansion identities.
    Sfunc {
        #[arg(long)]
        input: PathBuf,
        /// Restrict to one m (default: all feasible).
        #[arg(long)]
        m: Option<usize>,
        /// Restrict to one overlap size k (default: all feasible).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Quadratic forms on m-subsets: PSD and structure checks, or export.
    Forms {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_form_kind, default_value = "psi")]
        kind: FormKind,
        /// Write the form matrix instead of checking it.
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Exact evaluation of the binomial identity behind Ψ e = 0.
    Identity {
        #[arg(long)]
        n: usize,
        /// Single m (default: every 1 ≤ m ≤ n − 1).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Necessary conditions for a realizable nonnegative spectrum.
    NiepScreen {
        /// Spectrum JSON file, or a directory of `*.json` spectra.
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long, default_value_t = 30)]
        jll_bound: usize,
        #[arg(long, default_value_t = 20)]
        moment_k: usize,
    },
    /// Seeded test matrix, written as matrix JSON.
    Gen {
        #[arg(long, value_parser = parse_generator_kind)]
        kind: GeneratorKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        margin: f64,
    },
    /// Roots of a polynomial JSON `{"coeffs": [..]}`, written as spectrum JSON.
    Roots {
        #[arg(long)]
        input: PathBuf,
    },
}

fn from_json_name<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, String> {
    serde_json::from_value(serde_json::Value::String(s.to_owned())).map_err(|e| e.to_string())
}

fn parse_form_kind(s: &str) -> Result<FormKind, String> {
    from_json_name(s)
}

fn parse_generator_kind(s: &str) -> Result<GeneratorKind, String> {
    from_json_name(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.common.format));
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
