use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cpw_cli::commands::{cmd_analyze, cmd_eval, cmd_witness, CommandError, WitnessMode};
use cpw_cli::config::{parse_config, ConfigError, SystemConfig};
use cpw_cli::report::EXIT_USAGE;
use cpw_cli::suites::{run_suite, CheckOptions, Suite};

#[derive(Parser)]
#[command(name = "cpw", version, about = "Exact checks on crossed products by the integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dynamical properties and the periodic-point table.
    Analyze {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(long, default_value_t = 4)]
        per_bound: usize,
    },
    /// Run a check suite.
    Check {
        suite: SuiteArg,
        #[arg(short, long)]
        config: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        radius: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report to a file, or `-` for stdout.
        #[arg(long)]
        json: Option<String>,
        /// Include per-item elapsed times in the JSON report.
        #[arg(long)]
        timings: bool,
    },
    /// Fold `<expr> (<op> <expr>)...` with op `mul` or `add`.
    Eval {
        #[arg(short, long)]
        config: PathBuf,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Print a witness element with a replayable certificate.
    Witness {
        mode: ModeArg,
        #[arg(short, long)]
        config: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Triquiv,
    Commint,
    Simplicity,
    Primeness,
    Baire,
    Algebra,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Triquiv => Suite::Triquiv,
            SuiteArg::Commint => Suite::Commint,
            SuiteArg::Simplicity => Suite::Simplicity,
            SuiteArg::Primeness => Suite::Primeness,
            SuiteArg::Baire => Suite::Baire,
            SuiteArg::Algebra => Suite::Algebra,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    InA,
    InCommutant,
}

fn load(path: &Path) -> Result<SystemConfig, CommandError> {
    let text = fs::read_to_string(path).map_err(|e| {
        CommandError::Config(ConfigError {
            path: "$".into(),
            message: format!("cannot read {}: {e}", path.display()),
        })
    })?;
    Ok(parse_config(&text)?)
}

fn run(cli: Cli) -> Result<i32, CommandError> {
    match cli.command {
        Command::Analyze { config, per_bound } => {
            let out = cmd_analyze(&load(&config)?, per_bound);
            println!("{}", out.stdout);
            Ok(out.code)
        }
        Command::Check {
            suite,
            config,
            degree,
            radius,
            samples,
            seed,
            json,
            timings,
        } => {
            let cfg = load(&config)?;
            let opts = CheckOptions {
                degree: degree as usize,
                radius: radius as usize,
                samples: samples as usize,
                seed,
            };
            let result = run_suite(suite.into(), &cfg, &opts);
            let report = serde_json::to_string_pretty(&result.to_json(timings)).expect("JSON values serialize");
            match json.as_deref() {
                Some("-") => println!("{report}"),
                Some(path) => {
                    fs::write(path, report + "\n").map_err(|e| CommandError::Usage(format!("cannot write {path}: {e}")))?;
                    result.summary_lines().iter().for_each(|l| println!("{l}"));
                }
                None => result.summary_lines().iter().for_each(|l| println!("{l}")),
            }
            Ok(result.status().exit_code())
        }
        Command::Eval { config, args } => {
            println!("{}", cmd_eval(&load(&config)?, &args)?);
            Ok(0)
        }
        Command::Witness { mode, config, expr } => {
            let mode = match mode {
                ModeArg::InA => WitnessMode::InA,
                ModeArg::InCommutant => WitnessMode::InCommutant,
            };
            let out = cmd_witness(&load(&config)?, mode, &expr)?;
            println!("{}", out.stdout);
            Ok(out.code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
