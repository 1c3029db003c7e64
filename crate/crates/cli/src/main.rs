use std::path::PathBuf;
use std::process::ExitCode;

use brauerkit::stt::DEFAULT_MAX_STRINGS;
use brauerkit_cli::commands::{self, Output, SttArgs, SttMode};
use brauerkit_cli::verify::{Level, DEFAULT_SEED};
use brauerkit_cli::CliError;
use clap::{Parser, Subcommand, ValueEnum};

/// Gentle algebras, Brauer graph algebras and support τ-tilting pairs.
///
/// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 unsupported
/// construction, 4 infinite type, 5 verification failure. The environment
/// variable BRAUERKIT_MAX_PATH_LEN overrides the path length cap used to
/// detect admissible ideals.
#[derive(Parser)]
#[command(name = "brauerkit", version)]
struct Cli {
    /// Print the JSON run report instead of the plain text output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Count,
    List,
    Hasse,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Check a presentation or Brauer graph file.
    Validate { file: PathBuf },
    /// Brauer graph and trivial extension of a gentle presentation.
    Trivext {
        file: PathBuf,
        /// Also write the Brauer graph as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Graph class and τ-tilting finiteness of a Brauer graph (or of the
    /// trivial extension of a gentle presentation).
    Classify { file: PathBuf },
    /// Support τ-tilting pairs of a special biserial algebra.
    Stt {
        mode: Mode,
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_STRINGS)]
        max_strings: usize,
        /// Longest string tried for algebras with bands (default 2n+6).
        #[arg(long)]
        max_string_len: Option<usize>,
        /// Write the Hasse quiver here instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Use the trivial extension of a gentle input.
        #[arg(long)]
        trivext: bool,
    },
    /// Run the reproduction suite and print one row per criterion.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Trivext { file, dot } => commands::trivext(file, dot.as_deref()),
        Command::Classify { file } => commands::classify(file),
        Command::Stt {
            mode,
            file,
            max_strings,
            max_string_len,
            dot,
            trivext,
        } => {
            let args = SttArgs {
                mode: match mode {
                    Mode::Count => SttMode::Count,
                    Mode::List => SttMode::List,
                    Mode::Hasse => SttMode::Hasse,
                },
                max_strings: *max_strings,
                max_string_len: *max_string_len,
                dot: dot.clone(),
                trivext: *trivext,
            };
            commands::stt(file, &args)
        }
        Command::VerifyPaper { level, seed } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            commands::verify_paper(level, *seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.report).expect("report serializes")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
