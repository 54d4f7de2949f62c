use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k3verify::export::{export_data, Format, Kind};
use k3verify::{run_checks, Context, Options, Report, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "k3verify", version, about = "Verify the Leech-root K3 model and export its data")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Suites to run (default: all).
    #[arg(value_enum)]
    suites: Vec<Suite>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    #[command(flatten)]
    common: Common,

    /// Record per-check wall-clock time (makes the report nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(clap::Args)]
struct Common {
    /// Field-extension scan depth for the surface checks: 1 = F4, 2 = F16, 3 = F64.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=3))]
    ext_degree: u32,

    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,

    /// Minimal-vector cache directory.
    #[arg(long, env = "K3V_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write one data set to a file.
    Export {
        #[arg(value_enum)]
        kind: Kind,
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
}

fn setup(common: &Common, timings: bool) -> Result<Context, String> {
    if let Some(n) = common.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(Context::new(Options { ext_degree: common.ext_degree, cache: common.cache.clone(), timings }))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Some(Command::Export { kind, path, format, common }) => {
            let result = setup(&common, false).and_then(|ctx| export_data(&ctx, kind, format, &path));
            match result {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("k3verify: {e}");
                    ExitCode::from(1)
                }
            }
        }
        None => {
            let ctx = match setup(&cli.common, cli.timings) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("k3verify: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = Report::new(run_checks(&cli.suites, &ctx));
            let text = match cli.format {
                OutputFormat::Json => report.to_json().expect("report serializes"),
                OutputFormat::Text => report.to_text(),
            };
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &text) {
                        eprintln!("k3verify: {}: {e}", p.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
