//! `emwave` command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod output;
mod units;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{bounce, boundary, guide, line, matching, smith, state, wave};
use output::{CliResult, Format, Payload};

/// Transmission-line, plane-wave and waveguide calculations.
#[derive(Debug, Parser)]
#[command(name = "emwave", version, about)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Line constants and cross-section impedances.
    #[command(subcommand)]
    Line(line::LineCmd),
    /// Reflection, input impedance, standing waves and power on a line.
    State(state::StateArgs),
    /// Single-stub or quarter-wave matching.
    Match(matching::MatchArgs),
    /// Smith chart values and SVG rendering.
    Smith(smith::SmithArgs),
    /// Step and pulse transients.
    Bounce(bounce::BounceArgs),
    /// Plane waves in a medium.
    #[command(subcommand)]
    Wave(wave::WaveCmd),
    /// Reflection and transmission at planar boundaries.
    #[command(subcommand)]
    Boundary(boundary::BoundaryCmd),
    /// Waveguide modes and losses.
    #[command(subcommand)]
    Guide(guide::GuideCmd),
}

fn run(cli: &Cli) -> CliResult<Payload> {
    match &cli.command {
        Command::Line(c) => line::run(c, cli.format),
        Command::State(a) => state::run(a, cli.format),
        Command::Match(a) => matching::run(a, cli.format),
        Command::Smith(a) => smith::run(a, cli.format),
        Command::Bounce(a) => bounce::run(a, cli.format),
        Command::Wave(c) => wave::run(c, cli.format),
        Command::Boundary(c) => boundary::run(c, cli.format),
        Command::Guide(c) => guide::run(c, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(payload) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(payload.render().as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
