//! Command line front end. Every command produces a [`Report`].

mod commands;
mod settings;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{
    chow_verify, config_exclude, config_verify, fibration_contact, fibration_discriminant,
    fibration_strata, gin_enumerate, gin_invariants, gin_theorem_sextic, gin_validate,
    lattice_sextic, lattice_splittings, paper, wiring, StrataOptions,
};
pub use settings::{PaperSettings, Settings, SETTINGS_FILE};

use crate::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("invalid settings: {0}")]
    Settings(String),
    #[error("invalid input: {0}")]
    Input(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "gmdeg",
    version,
    about = "Exact and finite-field checks for degenerations of GM fourfolds"
)]
pub struct Cli {
    /// Do not print the report or the summary.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Settings file (default: ./gmdeg.toml if present).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern character and Riemann-Roch computations on P^3.
    Chow {
        #[command(subcommand)]
        cmd: ChowCmd,
    },
    /// Generic initial ideal diagrams.
    Gin {
        #[command(subcommand)]
        cmd: GinCmd,
    },
    /// Divisor classes on the resolved Kummer surface.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// The node and trope incidence configuration.
    Config {
        #[command(subcommand)]
        cmd: ConfigCmd,
    },
    /// Quadric fibration and conic bundle experiments over F_p.
    Fibration {
        #[command(subcommand)]
        cmd: FibrationCmd,
    },
    /// Run every check with the pinned settings.
    Paper,
}

#[derive(Debug, Subcommand)]
pub enum ChowCmd {
    /// Contact curve degree and genus from the Chern data.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum GinCmd {
    /// Check the monotonicity conditions of a diagram file.
    Validate { file: PathBuf },
    /// Degree, genus, circle counts and hypersurface degrees of a diagram file.
    Invariants { file: PathBuf },
    /// All circle arrangements of a given degree.
    Enumerate {
        #[arg(long)]
        degree: u32,
    },
    /// Case analysis for sextic curves on irreducible cubic surfaces.
    TheoremSextic,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Node multiplicities of the contact sextic class.
    Sextic,
    /// Splittings of the contact class into two cubic sections.
    Splittings {
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        genus_bound: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConfigCmd {
    /// Exhaustive incidence census.
    Verify,
    /// Line-counting exclusion (all of 2, 5, 9 when --lines is omitted).
    Exclude {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["2", "5", "9"]))]
        lines: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FibrationCmd {
    /// Sampled rank census, optionally with the exact strata.
    Strata {
        #[arg(long, default_value_t = 32003)]
        prime: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Also compute the rank strata ideals.
        #[arg(long)]
        exact: bool,
    },
    /// Discriminant sextic and its zero set on sampled points.
    Discriminant {
        #[arg(long, default_value_t = 32003)]
        prime: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        points: u64,
    },
    /// Symbolic local identities at the contact curve.
    Contact,
}

/// Builds the report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Chow {
            cmd: ChowCmd::Verify,
        } => Ok(chow_verify()),
        Command::Gin { cmd } => match cmd {
            GinCmd::Validate { file } => gin_validate(&read(file)?),
            GinCmd::Invariants { file } => gin_invariants(&read(file)?),
            GinCmd::Enumerate { degree } => gin_enumerate(*degree),
            GinCmd::TheoremSextic => Ok(gin_theorem_sextic()),
        },
        Command::Lattice { cmd } => match cmd {
            LatticeCmd::Sextic => Ok(lattice_sextic()),
            LatticeCmd::Splittings { genus_bound } => Ok(lattice_splittings(*genus_bound)),
        },
        Command::Config { cmd } => match cmd {
            ConfigCmd::Verify => Ok(config_verify()),
            ConfigCmd::Exclude { lines } => {
                let lines = lines
                    .as_ref()
                    .map(|l| l.parse::<u32>().expect("validated by clap"));
                config_exclude(lines)
            }
        },
        Command::Fibration { cmd } => match cmd {
            FibrationCmd::Strata {
                prime,
                seed,
                trials,
                exact,
            } => fibration_strata(&StrataOptions {
                prime: *prime,
                seed: *seed,
                trials: *trials,
                exact: *exact,
            }),
            FibrationCmd::Discriminant {
                prime,
                seed,
                points,
            } => fibration_discriminant(*prime, *seed, *points),
            FibrationCmd::Contact => Ok(fibration_contact()),
        },
        Command::Paper => {
            let (settings, path) = Settings::load(cli.config.as_deref())?;
            let mut report = paper(&settings.paper)?;
            let source = path.map_or("built-in defaults".to_string(), |p| p.display().to_string());
            report.input("settings", source);
            Ok(report)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report and summary. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_PASS;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let json = report.to_json();
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    } else if !cli.quiet {
        let _ = writeln!(stdout, "{json}");
    }
    if !cli.quiet {
        let _ = write!(stderr, "{}", report.summary());
    }
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
