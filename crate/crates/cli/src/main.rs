use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use blattice_cli::{
    parse_format, parse_gamma, parse_suites, run, Command, Format, RunConfig, EXIT_USAGE,
};

/// Build and verify the Bruhat lattice B_γ of γ-sortable elements of a
/// Coxeter group.
///
/// Diagrams: named types (`A3`, `B4`, `D5`, `E6`..`E8`, `F4`, `H3`, `H4`,
/// `I2(7)`), the affine `tC2`, or an explicit edge list such as
/// `rank=3; 1-2:3; 2-3:5` (labels `inf` allowed). γ words are comma
/// separated 1-based permutations like `1,3,2`; `all` iterates every
/// Coxeter element.
#[derive(Parser)]
#[command(name = "blattice", version)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Print the minimal polynomial of 2cos(pi/N) over the rationals.
    Field {
        /// The denominator N.
        n: String,
    },
    /// List the γ-sortable elements.
    Enumerate {
        diagram: String,
        #[arg(long)]
        gamma: String,
        /// Length cap; required for infinite-type diagrams.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Emit B_γ with its SB-labeling as DOT, JSON or text.
    Lattice {
        diagram: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        cap: Option<usize>,
        /// dot | json | text
        #[arg(long, default_value = "text")]
        format: String,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites against B_γ.
    Verify {
        diagram: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        cap: Option<usize>,
        /// Comma-separated subset of sb,mobius,properties,antimatroid,birkhoff — or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// json | text
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Scan every Coxeter element: forbidden patterns vs distributivity.
    Scan {
        diagram: String,
        /// json | text
        #[arg(long, default_value = "text")]
        format: String,
        /// Refuse groups larger than this.
        #[arg(long, default_value_t = 100_000)]
        max_order: u128,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the fast paths against the naive oracles.
    OracleDiff {
        diagram: String,
        #[arg(long)]
        gamma: String,
    },
}

fn config_from(cli: Cli) -> Result<RunConfig, String> {
    Ok(match cli.command {
        CliCommand::Field { n } => RunConfig::new(Command::Field, &n),
        CliCommand::Enumerate { diagram, gamma, cap } => {
            let mut config = RunConfig::new(Command::Enumerate, &diagram);
            config.gamma = Some(parse_gamma(&gamma)?);
            config.cap = cap;
            config
        }
        CliCommand::Lattice {
            diagram,
            gamma,
            cap,
            format,
            output,
        } => {
            let mut config = RunConfig::new(Command::Lattice, &diagram);
            config.gamma = Some(parse_gamma(&gamma)?);
            config.cap = cap;
            config.format = parse_format(&format)?;
            config.output = output;
            config
        }
        CliCommand::Verify {
            diagram,
            gamma,
            cap,
            suite,
            format,
            output,
        } => {
            let mut config = RunConfig::new(Command::Verify, &diagram);
            config.gamma = Some(parse_gamma(&gamma)?);
            config.cap = cap;
            config.suites = parse_suites(&suite)?;
            config.format = match parse_format(&format)? {
                Format::Dot => return Err("verify emits json or text, not dot".into()),
                other => other,
            };
            config.output = output;
            config
        }
        CliCommand::Scan {
            diagram,
            format,
            max_order,
            output,
        } => {
            let mut config = RunConfig::new(Command::Scan, &diagram);
            config.format = match parse_format(&format)? {
                Format::Dot => return Err("scan emits json or text, not dot".into()),
                other => other,
            };
            config.max_order = max_order;
            config.output = output;
            config
        }
        CliCommand::OracleDiff { diagram, gamma } => {
            let mut config = RunConfig::new(Command::OracleDiff, &diagram);
            config.gamma = Some(parse_gamma(&gamma)?);
            config
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match config_from(cli) {
        Ok(config) => config,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let mut stdout = std::io::stdout();
    ExitCode::from(run(&config, &mut stdout) as u8)
}
