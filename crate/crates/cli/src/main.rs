use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hlq_cli::{render_catalog, render_report, render_suite, run, suite, Format, Profile, RunArgs, RunConfig};

/// Exact verification of Hall-Littlewood and q-series identities.
#[derive(Parser)]
#[command(name = "hlq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List identity ids with descriptions and quick defaults
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one identity check
    Run {
        identity_id: String,
        #[command(flatten)]
        args: RunArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// which default table fills unset parameters
        #[arg(long, value_enum, default_value_t = Profile::Quick)]
        profile: Profile,
    },
    /// Run every identity once with the profile's defaults
    Suite {
        #[arg(long, value_enum, default_value_t = Profile::Quick)]
        profile: Profile,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("HLQ_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| format!("HLQ_THREADS={v:?} is not a thread count"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = init_threads() {
        eprintln!("usage: {e}");
        return ExitCode::from(2);
    }
    let code = match cli.command {
        Command::List { format } => {
            emit(render_catalog(format).trim_end());
            0
        }
        Command::Run { identity_id, args, format, profile } => {
            match run(&RunConfig { identity_id, overrides: args, profile }) {
                Ok(report) => {
                    emit(render_report(&report, format).trim_end());
                    hlq_cli::exit_code(&report)
                }
                Err(e) => {
                    eprintln!("{e}");
                    e.exit_code()
                }
            }
        }
        Command::Suite { profile, seed, format } => {
            let s = suite(profile, seed);
            emit(render_suite(&s, format).trim_end());
            s.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
