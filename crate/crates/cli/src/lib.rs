//! Command-line front end: every subcommand builds a [`Table`] that renders
//! to deterministic CSV.

// `!(x > 0)` style guards deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod figures;
pub mod table;

pub use args::{Cli, Command, InitialState, Opts};
pub use commands::run;
pub use error::CliError;
pub use figures::figure_dataset;
pub use table::{format_float, Cell, Table};

/// Runs a parsed invocation and renders its CSV.
pub fn render(cli: &Cli) -> Result<String, CliError> {
    run(cli.command, &cli.opts)?.render(cli.opts.precision as usize)
}
