use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use ising_core::Params;

#[derive(Debug, Parser)]
#[command(
    name = "ising2q",
    version,
    about = "CSV datasets for two-qubit Ising dynamics in an inhomogeneous field"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Energies E1..E4 for the given fields, or over a (B-, B+) grid.
    Spectrum,
    /// Amplitudes and entropy of an evolved state.
    Evolve,
    /// Entropy of an evolved state for one or more B- values.
    EntropySweep,
    /// Witness values and verdicts for reference and sampled product states.
    Witness,
    /// Evolution-loop designs and their closure check.
    Loop,
    /// Exchange designs and their closure check.
    Swap,
    /// |F| over scaled time, or its roots with --roots.
    Periodicity,
    /// Data behind figures 1-6 (select with --figure).
    Figure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitialState {
    #[value(name = "00")]
    Ket00,
    #[value(name = "01")]
    Ket01,
    #[value(name = "10")]
    Ket10,
    #[value(name = "11")]
    Ket11,
    Bell01,
    Bell10,
    /// sin θ β01 - cos θ β10 (uses --theta)
    Theta,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Opts {
    /// Coupling J (reduced coupling j for `periodicity`).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub j: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true, conflicts_with_all = ["b_plus", "b_minus"])]
    pub b1: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true, conflicts_with_all = ["b_plus", "b_minus"])]
    pub b2: Option<f64>,
    #[arg(long = "b-plus", global = true, allow_negative_numbers = true)]
    pub b_plus: Option<f64>,
    /// Field difference; a comma-separated list for `entropy-sweep`.
    #[arg(
        long = "b-minus",
        global = true,
        allow_negative_numbers = true,
        value_delimiter = ','
    )]
    pub b_minus: Vec<f64>,
    #[arg(long = "t-max", global = true, allow_negative_numbers = true)]
    pub t_max: Option<f64>,
    /// Number of time intervals (rows per curve minus one).
    #[arg(long, global = true)]
    pub steps: Option<usize>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Family parameter p in [0, 1].
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub s: Option<i64>,
    /// Sign of B- for loop designs (+1 or -1).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub sign: Option<i8>,
    #[arg(long, global = true)]
    pub figure: Option<u8>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Number of sampled product states for `witness`.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,
    /// Amplitude ratio |β/γ| for `periodicity`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Phase of β/γ for `periodicity`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Emit root times instead of the |F| trace.
    #[arg(long, global = true)]
    pub roots: bool,
    #[arg(long, global = true, value_enum)]
    pub state: Option<InitialState>,
    /// Significant digits in the CSV output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(6..=17))]
    pub precision: u8,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Opts {
    pub fn coupling(&self) -> f64 {
        self.j.unwrap_or(1.0)
    }

    pub fn single_b_minus(&self) -> Result<Option<f64>, CliError> {
        match self.b_minus.as_slice() {
            [] => Ok(None),
            [x] => Ok(Some(*x)),
            _ => Err(CliError::Usage(
                "--b-minus takes a single value for this command".into(),
            )),
        }
    }

    pub fn uses_individual_fields(&self) -> bool {
        self.b1.is_some() || self.b2.is_some()
    }

    pub fn uses_sum_diff(&self) -> bool {
        self.b_plus.is_some() || !self.b_minus.is_empty()
    }

    pub fn any_field(&self) -> bool {
        self.uses_individual_fields() || self.uses_sum_diff()
    }

    /// Parameters from either `--b1/--b2` or `--b-plus/--b-minus`; missing
    /// values default to zero and `J` defaults to one.
    pub fn params(&self) -> Result<Params, CliError> {
        if self.uses_individual_fields() && self.uses_sum_diff() {
            return Err(CliError::Usage(
                "--b1/--b2 cannot be combined with --b-plus/--b-minus".into(),
            ));
        }
        let j = self.coupling();
        let p = if self.uses_individual_fields() {
            Params::new(j, self.b1.unwrap_or(0.0), self.b2.unwrap_or(0.0))?
        } else {
            Params::from_sum_diff(j, self.b_plus.unwrap_or(0.0), self.single_b_minus()?.unwrap_or(0.0))?
        };
        Ok(p)
    }

    pub fn steps_or(&self, default: usize) -> Result<usize, CliError> {
        let steps = self.steps.unwrap_or(default);
        if steps < 2 {
            return Err(CliError::Usage(format!("--steps must be >= 2, got {steps}")));
        }
        Ok(steps)
    }

    pub fn t_max_or(&self, default: f64) -> Result<f64, CliError> {
        let t = self.t_max.unwrap_or(default);
        if !(t > 0.0) || !t.is_finite() {
            return Err(CliError::Usage(format!("--t-max must be finite and > 0, got {t}")));
        }
        Ok(t)
    }

    pub fn family_p(&self) -> Result<Option<f64>, CliError> {
        match self.p {
            Some(p) if !(0.0..=1.0).contains(&p) => Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}"))),
            other => Ok(other),
        }
    }
}

/// `count + 1` evenly spaced points on `[0, t_max]`.
pub fn time_grid(t_max: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..=count).map(move |k| t_max * k as f64 / count as f64)
}
