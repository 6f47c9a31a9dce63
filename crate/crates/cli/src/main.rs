//! `ydcoh`: Davydov-Yetter cohomology computations from the command line.

mod algebra;
mod commands;
mod report;

use algebra::{AlgebraSpec, Loaded};
use clap::{Parser, ValueEnum};
use commands::{ModeArg, Route};
use serde_json::json;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Check every Hopf algebra axiom.
    Validate,
    /// Dimension of DY cohomology by the chosen route.
    DyDim,
    /// Cocycle representatives of a cohomology basis.
    DyBasis,
    /// Certify the relatively projective cover of the unit object.
    Cover,
    /// Relative-Ext dimension formula with all intermediate dimensions.
    DimFormula,
    /// Yoneda composite of the shipped allowable sequences as a DY cocycle.
    SequenceToCocycle,
    /// Block decomposition and the principal-block formula.
    Blocks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "ydcoh", version, about = "Exact Davydov-Yetter cohomology of finite-dimensional Hopf algebras")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// bk:K, taft:N, barUi, uq:P, or a path to an algebra file.
    #[arg(long, short)]
    algebra: AlgebraSpec,
    /// A degree, an inclusive range A..B, or a comma-separated list.
    #[arg(long, short, value_parser = commands::parse_degrees)]
    degree: Option<commands::Degrees>,
    #[arg(long, value_enum)]
    via: Option<Route>,
    #[arg(long, value_enum, default_value = "identity")]
    mode: ModeArg,
    /// Sequence indices `i,j` for the B_k product S_i^- o S_j^+.
    #[arg(long, value_parser = parse_pair, default_value = "1,1")]
    pair: (usize, usize),
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, env = "YDCOH_THREADS", default_value_t = 0)]
    threads: usize,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected i,j, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad index {t:?}"));
    Ok((num(a)?, num(b)?))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<ydcoh::Error>() {
        Some(ydcoh::Error::Parse(_)) => 2,
        Some(ydcoh::Error::Validation { .. }) => 3,
        _ => 4,
    }
}

fn run(cli: &Cli) -> anyhow::Result<(report::Report, Loaded)> {
    let alg = Loaded::load(&cli.algebra)?;
    let degrees = || cli.degree.clone().map(|d| d.0).ok_or_else(|| anyhow::anyhow!("--degree is required for this command"));
    let report = match cli.command {
        Command::Validate => commands::validate(&alg),
        Command::DyDim => commands::dy_dim(&alg, &degrees()?, cli.via.unwrap_or(Route::Direct), cli.mode.into())?,
        Command::DyBasis => commands::dy_basis(&alg, &degrees()?, cli.mode.into()),
        Command::Cover => commands::cover(&alg)?,
        Command::DimFormula => commands::dim_formula_cmd(&alg, &degrees()?, cli.via.unwrap_or(Route::Cover))?,
        Command::SequenceToCocycle => commands::sequence_to_cocycle(&alg, cli.pair)?,
        Command::Blocks => commands::blocks(&alg, &cli.degree.clone().map(|d| d.0).unwrap_or_default())?,
    };
    Ok((report, alg))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global().expect("thread pool is set once");
    }
    match run(&cli) {
        Ok((report, alg)) => {
            let failed = report.failed;
            let command = cli.command.to_possible_value().expect("named command").get_name().to_string();
            let out = match cli.format {
                Format::Text => {
                    let h = alg.algebra();
                    report.render_text(&format!("{} (dim {}) :: {command}", h.name(), h.dim()))
                }
                Format::Json => report.render_json(json!({
                    "command": command,
                    "algebra": commands::describe(&cli.algebra, &alg),
                    "mode": cli.mode.to_possible_value().expect("named mode").get_name(),
                })),
            };
            print!("{out}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
