use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symplectic_qec_cli::commands::{self, Method};
use symplectic_qec_cli::{exit, parse_code_file, render, CliError};

#[derive(Parser)]
#[command(
    name = "sgsop",
    version,
    about = "Symplectic Gram-Schmidt analysis of quantum codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a pauli, css or crss code file and cross-check the rank formulas.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decompose the generators of a pauli file into symplectic pairs and isotropic part.
    Sgsop {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Undo the step log and check that the input comes back.
        #[arg(long)]
        reverse: bool,
    },
    /// Compute the ebit count c with the generator-side and/or check-side formula.
    Entanglement {
        path: PathBuf,
        #[arg(long, value_enum, ignore_case = true, default_value = "both")]
        method: Method,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the oracle checks on a file, or on random codes with --random N TRIALS [SEED].
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        path: Option<PathBuf>,
        #[arg(long, num_args = 2..=3, value_names = ["N", "TRIALS", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => print!("{}", render::json(value)),
        Format::Text => print!("{}", text(value)),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let status = |ok: bool| if ok { exit::OK } else { exit::CHECK_FAILED };
    match cli.command {
        Command::Analyze { path, format } => {
            let file = parse_code_file(&read(&path)?)?;
            let out = commands::analyze(&file)?;
            emit(format, &out, render::analyze_text);
            Ok(status(out.all_checks_pass))
        }
        Command::Sgsop {
            path,
            format,
            reverse,
        } => {
            let file = parse_code_file(&read(&path)?)?;
            let out = commands::run_sgsop(&file, reverse)?;
            emit(format, &out, render::sgsop_text);
            Ok(status(out.round_trip != Some(false)))
        }
        Command::Entanglement {
            path,
            method,
            repeats,
            format,
        } => {
            let file = parse_code_file(&read(&path)?)?;
            let out = commands::entanglement(&file, method, repeats)?;
            emit(format, &out, render::entanglement_text);
            Ok(status(out.agree))
        }
        Command::Verify {
            path,
            random,
            seed,
            format,
        } => {
            let out = match (path, random) {
                (Some(path), _) => commands::verify_source(&read(&path)?)?,
                (None, Some(args)) => {
                    let seed = args.get(2).copied().or(seed).unwrap_or(0);
                    commands::verify_random(args[0] as usize, args[1] as usize, seed)?
                }
                (None, None) => unreachable!("clap requires one of path or --random"),
            };
            emit(format, &out, render::verify_text);
            Ok(status(out.all_pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
