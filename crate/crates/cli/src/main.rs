use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mvverify::tables::{self, TableFormat, TableKind, TableOptions, Variant};
use mvverify::{run_suites, CheckConfig, CliError, Format, CATALOG};

#[derive(Parser)]
#[command(
    name = "mvverify",
    version,
    about = "Exact checks of the one-leg vertex identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and write a report. Exits 1 if any check fails.
    Check(CheckArgs),
    /// Export a table as CSV or JSON.
    Table {
        kind: TableKind,
        #[command(flatten)]
        args: TableArgs,
    },
    /// Export the free-energy table of one amplitude.
    FreeEnergy(TableArgs),
    /// List check ids.
    List,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CheckArgs {
    /// `key = value` file applied before the flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// check id to run (repeatable; default all)
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    q_order: Option<u32>,
    /// framing to use (repeatable)
    #[arg(long = "framing")]
    framings: Vec<i32>,
    #[arg(long)]
    char_n_max: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// record elapsed milliseconds per check
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    #[arg(long, default_value_t = TableOptions::default().n)]
    n: u32,
    #[arg(long, default_value_t = TableOptions::default().max_size)]
    max_size: u32,
    #[arg(long, default_value_t = 0)]
    framing: i32,
    #[arg(long, value_enum, default_value_t = Variant::A)]
    variant: Variant,
    #[arg(long, default_value_t = TableOptions::default().max_degree)]
    max_degree: u32,
    #[arg(long, default_value_t = TableOptions::default().q_order)]
    q_order: u32,
    #[arg(long, default_value_t = TableOptions::default().lambda_order)]
    lambda_order: i32,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl TableArgs {
    fn options(&self) -> TableOptions {
        TableOptions {
            n: self.n,
            max_size: self.max_size,
            framing: self.framing,
            variant: self.variant,
            max_degree: self.max_degree,
            q_order: self.q_order,
            lambda_order: self.lambda_order,
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn build_config(args: CheckArgs) -> Result<CheckConfig, CliError> {
    let mut cfg = CheckConfig::default();
    if let Some(path) = &args.config {
        cfg.apply_file(&std::fs::read_to_string(path)?)?;
    }
    if !args.suites.is_empty() {
        cfg.suites = args.suites;
    }
    if !args.framings.is_empty() {
        cfg.framings = args.framings;
    }
    if let Some(d) = args.max_degree {
        cfg.max_degree = d;
    }
    if let Some(k) = args.q_order {
        cfg.q_order = k;
    }
    if let Some(n) = args.char_n_max {
        cfg.char_n_max = n;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(f) = args.format {
        cfg.format = f.parse()?;
    }
    if args.out.is_some() {
        cfg.out = args.out;
    }
    cfg.timings |= args.timings;
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Check(args) => {
            let cfg = build_config(args)?;
            let report = run_suites(&cfg)?;
            let text = match cfg.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            write_output(cfg.out.as_deref(), &text)?;
            Ok(report.all_passed())
        }
        Command::Table { kind, args } => {
            let table = tables::build(kind, &args.options())?;
            write_output(args.out.as_deref(), &table.render(args.format)?)?;
            Ok(true)
        }
        Command::FreeEnergy(args) => {
            let table = tables::build(TableKind::FreeEnergy, &args.options())?;
            write_output(args.out.as_deref(), &table.render(args.format)?)?;
            Ok(true)
        }
        Command::List => {
            for c in CATALOG {
                println!("{:<22} {}", c.id, c.anchor);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mvverify: {e}");
            ExitCode::from(2)
        }
    }
}
