//! Command-line front end: argument parsing, dispatch and exit codes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opalg_core::check::CheckOptions;
use opalg_core::ratfield::Rational;
use opalg_core::report::Report;
use opalg_core::systems::Params;

use crate::dsl::{self, Arg, Directive, Script, Statement, Stmt};
use crate::runner::{parameter, run_script};

/// Every check passed.
pub const EXIT_PASS: i32 = 0;
/// At least one entry failed.
pub const EXIT_FAIL: i32 = 1;
/// The script or the command line could not be parsed.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "opalg", version, about = "Exact verification of operator identities and eigenfunction ladders")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a script of bindings, assertions and directives.
    Run {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run every built-in check.
    PaperSuite {
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify one row of the polynomial lattice.
    Lattice {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify a highest-weight module.
    Hw {
        /// Highest weight, a rational such as 2 or 3/2.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        n: Rational,
        /// Truncation length; required unless the weight is a non-negative integer.
        #[arg(long)]
        len: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify an eigenfunction chain.
    Ef {
        /// Exponent of y: a rational or a parameter name.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_arg)]
        p: Arg,
        /// Weight: a rational or a parameter name.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_arg)]
        w: Arg,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized pre-filter.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Skip the randomized pre-filter.
    #[arg(long)]
    pub exact_only: bool,
    #[arg(long, value_enum, default_value_t = Switch::Off)]
    pub parallel: Switch,
    /// Record per-entry wall time; reports are then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
    /// Specialize a parameter, e.g. `--set alpha=1/2`.
    #[arg(long = "set", value_name = "NAME=VALUE", value_parser = parse_assignment)]
    pub set: Vec<(String, Rational)>,
}

impl Common {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            seed: self.seed,
            exact_only: self.exact_only,
            parallel: self.parallel == Switch::On,
            timing: self.timing,
        }
    }

    fn params(&self) -> Params {
        self.set
            .iter()
            .fold(Params::standard(), |p, (name, v)| p.with_value(name, v.clone()))
    }

    fn emit(&self, report: &Report) -> String {
        match self.format {
            Format::Text => report.to_text(),
            Format::Json => format!("{}\n", report.to_json()),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not a rational number");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if den == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_arg(s: &str) -> Result<Arg, String> {
    match parameter(s) {
        Some(p) => Ok(Arg::Name(p.to_string())),
        None => parse_rational(s).map(Arg::Value),
    }
}

fn parse_assignment(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let name = parameter(name.trim()).ok_or_else(|| format!("`{}` is not a parameter", name.trim()))?;
    Ok((name.to_string(), parse_rational(value)?))
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn directive_script(d: Directive) -> Script {
    Script {
        statements: vec![Statement {
            stmt: Stmt::Directive(d),
            line: 1,
        }],
    }
}

fn report_outcome(common: &Common, script: &Script) -> Outcome {
    let report = run_script(script, &common.params(), &common.options());
    Outcome {
        stdout: common.emit(&report),
        stderr: String::new(),
        code: if report.passed() { EXIT_PASS } else { EXIT_FAIL },
    }
}

fn usage_error(message: String) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
        code: EXIT_USAGE,
    }
}

/// Runs a parsed command line.
pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Run { file, common } => {
            let src = match std::fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => return usage_error(format!("{}: {e}", file.display())),
            };
            match dsl::parse(&src) {
                Ok(script) => report_outcome(&common, &script),
                Err(e) => usage_error(format!("{}:{e}", file.display())),
            }
        }
        Command::PaperSuite { common } => report_outcome(&common, &directive_script(Directive::PaperSuite)),
        Command::Lattice { n, common } => report_outcome(&common, &directive_script(Directive::BuildLattice(n))),
        Command::Hw { n, len, common } => report_outcome(&common, &directive_script(Directive::Hw(n, len))),
        Command::Ef { p, w, len, common } => report_outcome(&common, &directive_script(Directive::EfChain { p, w, len })),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}
