//! Command-line frontend for `tracelab-core`.

pub mod commands;
pub mod error;
pub mod input;
pub mod poly;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "tracelab", version, about = "Trace ideals, syzygies and Ulrich certificates")]
pub struct Cli {
    /// Emit the machine-readable block: to PATH if given, else to stdout
    /// instead of the table.
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    pub json: Option<Option<PathBuf>>,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Suppress the human-readable table.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerical semigroup rings.
    #[command(subcommand)]
    Sgp(SgpCommand),
    /// Artinian local algebras.
    #[command(subcommand)]
    Art(ArtCommand),
    /// Symbolic Koszul complexes.
    Koszul(KoszulArgs),
    /// Property suites.
    #[command(subcommand)]
    Suite(SuiteCommand),
}

#[derive(Debug, Subcommand)]
pub enum SgpCommand {
    /// Invariants and classification flags of a semigroup.
    Info { semigroup: PathBuf },
    /// Trace of an ideal or of a direct sum of ideals.
    Trace { module: PathBuf },
    /// All full-trace Ulrich ideals up to isomorphism.
    EnumFtu { semigroup: PathBuf },
    /// Canonical ideal, its trace, and the nearly Gorenstein test.
    Canonical { semigroup: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ArtCommand {
    /// Minimal free resolution of a module (the residue field by default).
    Resolve {
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Trace and Hom data of a module.
    Trace { algebra: PathBuf, module: PathBuf },
    /// Ring predicates and the full-trace pattern of the syzygies of k.
    Check {
        algebra: PathBuf,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
}

#[derive(Debug, Args)]
pub struct KoszulArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
    /// Verify the complex and the variable ideals instead of printing the
    /// differentials.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Subcommand)]
pub enum SuiteCommand {
    /// Run suites by id, or all of them.
    Run {
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        ids: Vec<String>,
    },
    /// List suite ids.
    List,
}

/// Result of a command: the table, the machine block, and whether a check
/// failed.
#[derive(Debug)]
pub struct Rendered {
    pub lines: Vec<String>,
    pub machine: serde_json::Value,
    pub failed: bool,
}

/// Parses `args` and runs the command, writing to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli).and_then(|r| emit(&cli, &r, out).map(|()| r)) {
        Ok(r) => i32::from(r.failed),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Sgp(c) => commands::sgp(c),
        Command::Art(c) => commands::art(c),
        Command::Koszul(a) => commands::koszul(a),
        Command::Suite(c) => commands::suite(c, cli.seed),
    }
}

fn emit(cli: &Cli, r: &Rendered, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    let machine = serde_json::to_string_pretty(&r.machine).expect("JSON values serialize");
    match &cli.json {
        Some(None) => writeln!(out, "{machine}").map_err(io)?,
        Some(Some(path)) => {
            std::fs::write(path, format!("{machine}\n")).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            if !cli.quiet {
                write_lines(out, &r.lines).map_err(io)?;
            }
        }
        None if !cli.quiet => write_lines(out, &r.lines).map_err(io)?,
        None => {}
    }
    Ok(())
}

fn write_lines(out: &mut dyn Write, lines: &[String]) -> std::io::Result<()> {
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}
