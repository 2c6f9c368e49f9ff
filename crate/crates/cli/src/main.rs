use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polydisc_cli::{cmd_analyze, cmd_ehrhart, cmd_verify, CliError, Options, Outcome, Source};

/// Degree of the discriminant of toric varieties from lattice polytopes.
#[derive(Parser)]
#[command(name = "polydisc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute c(P) both ways and cross-check every identity.
    Analyze(InputArgs),
    /// Print E_k(t) per face dimension and the interior point table.
    Ehrhart(InputArgs),
    /// Run a seeded property suite.
    Verify {
        /// involution, dehn-sommerville, reciprocity, theorem-nill,
        /// theorem-degree, symfun, brion or all
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Polytope file: {"name": ..., "vertices": [[...], ...]}
    path: Option<PathBuf>,
    /// Built-in family, e.g. cube:3, simplex:2:3, product:2,3, segment:5, prism:3
    #[arg(long, conflicts_with = "path")]
    family: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    max_dilation: Option<u64>,
    #[arg(long)]
    require_simple: bool,
    /// Scan bounding boxes above the default limit.
    #[arg(long)]
    force: bool,
}

impl InputArgs {
    fn source(&self) -> Result<Source<'_>, CliError> {
        match (&self.path, &self.family) {
            (Some(path), None) => Ok(Source::File(path)),
            (None, Some(spec)) => Ok(Source::Family(spec)),
            _ => Err(CliError::Usage("give either a polytope file or --family SPEC".into())),
        }
    }

    fn options(&self) -> Options {
        Options {
            json: self.json,
            max_dilation: self.max_dilation,
            require_simple: self.require_simple,
            force: self.force,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args.source()?, &args.options()),
        Command::Ehrhart(args) => cmd_ehrhart(&args.source()?, &args.options()),
        Command::Verify { suite, seed, json } => cmd_verify(&suite, seed, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
