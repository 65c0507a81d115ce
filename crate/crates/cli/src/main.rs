use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod render;

use commands::{Failure, Output};

#[derive(Parser)]
#[command(
    name = "cluster-scatter",
    version,
    about = "Exact cluster scattering diagrams, folding, theta functions and DT transformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Seed JSON: {"rank", "skew", "d", "frozen", "labels"}.
    #[arg(long)]
    pub seed_file: Option<PathBuf>,
    /// Truncation order.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    /// Mutation depth for chamber exploration.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for deterministic sampling of general points and loops.
    #[arg(long, default_value_t = 5)]
    pub sample_seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Scattering diagram of a finite-type or rank-2 seed.
    Scatter {
        #[command(flatten)]
        common: Common,
    },
    /// Fold a seed and its diagram by a group action and check the result.
    Fold {
        #[command(flatten)]
        common: Common,
        /// Group action JSON: {"generators": [cycles, ...]}, 1-based.
        #[arg(long)]
        action_file: PathBuf,
    },
    /// Theta function from broken lines.
    Theta {
        #[command(flatten)]
        common: Common,
        /// Initial exponent (m, n) in the rank-2 principal lattice.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        p0: Vec<i64>,
        /// Endpoint in M_R.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        point: Vec<i64>,
        /// Two 1-based indices spanning a rank-2 sub-seed, for seeds of higher rank.
        #[arg(long, value_delimiter = ',')]
        subseed: Option<Vec<usize>>,
    },
    /// DT transformation from a maximal green sequence.
    Dt {
        #[command(flatten)]
        common: Common,
        /// Fold the results by this group action.
        #[arg(long)]
        action_file: Option<PathBuf>,
        /// 1-based mutation sequence; defaults to "green_sequence" in the seed file.
        #[arg(long, value_delimiter = ',')]
        sequence: Option<Vec<usize>>,
    },
    /// Run the twelve reproduction checks.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// SVG of the wall traces of a rank-2 diagram, or of a rank-3 diagram on a plane.
    Render {
        #[command(flatten)]
        common: Common,
        /// Normal u of the projection plane u·x = 1 (rank 3).
        #[arg(long, value_delimiter = ',', default_value = "1,1,1")]
        plane: Vec<i64>,
    },
}

fn emit(common: &Common, out: &Output) -> Result<(), Failure> {
    let text = match &out.svg {
        Some(svg) => svg.clone(),
        None => {
            let mut s = serde_json::to_string_pretty(&out.json)
                .map_err(|e| Failure::Input(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    match &common.out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        None => print!("{text}"),
    }
    eprintln!("{}", out.summary);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (common, result) = match cli.command {
        Command::Scatter { common } => {
            let r = commands::scatter(&common);
            (common, r)
        }
        Command::Fold {
            common,
            action_file,
        } => {
            let r = commands::fold(&common, &action_file);
            (common, r)
        }
        Command::Theta {
            common,
            p0,
            point,
            subseed,
        } => {
            let r = commands::theta(&common, &p0, &point, subseed.as_deref());
            (common, r)
        }
        Command::Dt {
            common,
            action_file,
            sequence,
        } => {
            let r = commands::dt(&common, action_file.as_deref(), sequence.as_deref());
            (common, r)
        }
        Command::Verify { common } => {
            let r = commands::verify();
            (common, r)
        }
        Command::Render { common, plane } => {
            let r = commands::render(&common, &plane);
            (common, r)
        }
    };
    let out = match result.and_then(|o| emit(&common, &o).map(|_| o)) {
        Ok(o) => o,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
