//! Command-line driver for the pole-skipping toolkit.

pub mod commands;
pub mod report;
pub mod spec;

use clap::{Args, Parser, Subcommand};
use report::Format;
use std::fmt;
use std::path::PathBuf;

/// Failure of a CLI run, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or model specification (exit 2).
    Config(String),
    /// Numerical non-convergence or an evaluation failure (exit 3).
    Numeric(String),
    /// Degenerate Mobius fit (exit 4).
    Fit(String),
    /// Output could not be written (exit 1).
    Io(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(msg: impl Into<String>) -> Self {
        CliError::Io(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Fit(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Numeric(m) => write!(f, "numerical failure: {m}"),
            CliError::Fit(m) => write!(f, "degenerate fit: {m}"),
            CliError::Io(m) => write!(f, "output error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<poleskip::Error> for CliError {
    fn from(e: poleskip::Error) -> Self {
        match e {
            poleskip::Error::InvalidArgument(m) => CliError::Config(m),
            poleskip::Error::FitDegenerate { .. } => CliError::Fit(e.to_string()),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "poleskip", version, about = "Pole-skipping catalogs, scans, locators, cutoff studies and horizon checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Model selection shared by the model-based subcommands.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// coulomb, pt1 (1/sinh^2), pt2 (1/cosh^2), onepole or free.
    #[arg(long, default_value = "pt1")]
    pub model: String,
    /// Model parameter, repeatable, e.g. `--param nu=0.75 --param k=1+0.2i`.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    /// Shorthand for `--param nu=..`.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    /// Shorthand for `--param kappa=..`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Shorthand for `--param e2=..`.
    #[arg(long, allow_hyphen_values = true)]
    pub e2: Option<String>,
}

impl ModelArgs {
    pub fn spec(&self) -> Result<spec::ModelSpec, CliError> {
        let mut pairs = Vec::new();
        for p in &self.params {
            pairs.push(spec::parse_assignment(p)?);
        }
        for (key, v) in [("nu", &self.nu), ("kappa", &self.kappa), ("e2", &self.e2)] {
            if let Some(v) = v {
                pairs.push(spec::parse_assignment(&format!("{key}={v}"))?);
            }
        }
        spec::ModelSpec::new(&self.model, &pairs)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pole-skipping points of an analytic model.
    Catalog {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// S and |F+-| on a grid of one or two axes.
    Scan {
        #[command(flatten)]
        model: ModelArgs,
        /// `axis:min:max:count`, repeatable; complex endpoints allowed.
        #[arg(long = "grid", required = true, allow_hyphen_values = true)]
        grids: Vec<String>,
        /// Use the numerical solver instead of the closed forms.
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1.0)]
        k_im_max: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Newton search for a pole-skipping point from a seed.
    Locate {
        #[command(flatten)]
        model: ModelArgs,
        /// Seed, e.g. `nu=-1.05,k=0+0.48i`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = poleskip::locator::FIND_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mobius form of S around a located point.
    Slope {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = poleskip::locator::FIND_TOL)]
        tol: f64,
        #[arg(long, default_value_t = poleskip::locator::PROBE_RADIUS)]
        delta: f64,
        #[arg(long, default_value_t = poleskip::locator::PROBE_ANGLES)]
        angles: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// IR truncation and UV regularization of a short-range potential.
    Cutoff {
        #[command(flatten)]
        model: ModelArgs,
        /// Truncation radius R.
        #[arg(long)]
        ir: Option<f64>,
        /// Regularization radius a.
        #[arg(long)]
        uv: Option<f64>,
        /// Probe momentum, e.g. `k=0+1i`.
        #[arg(long, allow_hyphen_values = true)]
        probe: String,
        /// Radius of the argument-principle contour.
        #[arg(long, default_value_t = 0.2)]
        radius: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Near-horizon fit of the effective potential.
    Holo {
        /// btz-like or rindler.
        #[arg(long, default_value = "btz-like")]
        metric: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long = "T", alias = "temperature")]
        temperature: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        m2: f64,
        /// Also run the Frobenius check at this Matsubara index.
        #[arg(long)]
        matsubara: Option<i64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Runs one command and returns the rendered document.
pub fn render(cmd: &Command) -> Result<String, CliError> {
    commands::run(cmd)
}

/// Runs one command, writes its output and returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let result = render(&cli.command).and_then(|text| {
        let out = match &cli.command {
            Command::Catalog { output, .. }
            | Command::Scan { output, .. }
            | Command::Locate { output, .. }
            | Command::Slope { output, .. }
            | Command::Cutoff { output, .. }
            | Command::Holo { output, .. } => output.out.as_ref(),
        };
        match out {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("poleskip: {e}");
            e.exit_code()
        }
    }
}
