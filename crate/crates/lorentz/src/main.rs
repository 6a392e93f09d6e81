use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use lorentz::{
    emit_norm_table, emit_report, parse_input_path, Format, HarnessError, Input, NormRow, Suite, SuiteConfig,
};
use lorentz_core::norms::lorentz_norm;
use lorentz_core::sequence::{seq_lorentz_norm, seq_rearrange};
use lorentz_core::{ExtReal, LorentzIndex};

/// Lorentz quasi-norms of simple functions and sequences, and randomized
/// checks of the embedding inequalities between Lorentz spaces.
#[derive(Parser)]
#[command(name = "lorentz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the L_{p,q} (or l_{p,q}) quasi-norm of the input.
    Norm {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        p: ExtReal,
        #[arg(long)]
        q: ExtReal,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a table of quasi-norms over a grid of indices.
    Grid {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_delimiter = ',', required = true)]
        p_list: Vec<ExtReal>,
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<ExtReal>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the decreasing rearrangement: f* segments or the sorted terms.
    Rearrange {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run randomized checks; exits 1 if any trial fails.
    Check(CheckArgs),
}

#[derive(Args)]
struct InputArg {
    /// JSON input document, or `-` for stdin.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["suite", "all"]))]
struct CheckArgs {
    /// Suite to run.
    #[arg(long, value_parser = parse_suite)]
    suite: Option<Suite>,
    /// Run every suite.
    #[arg(long)]
    all: bool,
    /// Number of trials (default 1000, or the config file's value).
    #[arg(long)]
    trials: Option<u64>,
    /// Generator seed (default 0, or the config file's value).
    #[arg(long)]
    seed: Option<u64>,
    /// First trial offset, for replaying a reported failure.
    #[arg(long)]
    offset: Option<u64>,
    /// TOML file with generator ranges and tolerances.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Norm { input, p, q, format } => {
            let doc = parse_input_path(&input.input)?;
            emit_norm_table(&[norm_row(&doc, p, q)?], format, &mut out)?;
        }
        Command::Grid { input, p_list, q_list, format } => {
            let doc = parse_input_path(&input.input)?;
            let mut rows = Vec::with_capacity(p_list.len() * q_list.len());
            for &p in &p_list {
                for &q in &q_list {
                    rows.push(norm_row(&doc, p, q)?);
                }
            }
            emit_norm_table(&rows, format, &mut out)?;
        }
        Command::Rearrange { input, format } => {
            let doc = parse_input_path(&input.input)?;
            rearrange(&doc, format, &mut out)?;
        }
        Command::Check(args) => return check(args, &mut out),
    }
    Ok(ExitCode::SUCCESS)
}

fn norm_row(input: &Input, p: ExtReal, q: ExtReal) -> Result<NormRow, HarnessError> {
    let norm = match input {
        Input::Step(f) => lorentz_norm(f, LorentzIndex::new(p, q)?),
        Input::Sequence(s) => seq_lorentz_norm(s, p, q)?,
    };
    Ok(NormRow { p, q, norm })
}

fn rearrange<W: Write>(input: &Input, format: Format, out: &mut W) -> anyhow::Result<()> {
    match (input, format) {
        (Input::Step(f), Format::Json) => {
            serde_json::to_writer_pretty(&mut *out, &f.rearrangement())?;
            writeln!(out)?;
        }
        (Input::Step(f), _) => {
            if format == Format::Csv {
                writeln!(out, "end,value")?;
            }
            for seg in f.rearrangement().segments() {
                match format {
                    Format::Csv => writeln!(out, "{},{}", seg.end, seg.value)?,
                    _ => writeln!(out, "t < {}: {}", seg.end, seg.value)?,
                }
            }
        }
        (Input::Sequence(s), Format::Json) => {
            serde_json::to_writer(&mut *out, seq_rearrange(s).terms())?;
            writeln!(out)?;
        }
        (Input::Sequence(s), _) => {
            for t in seq_rearrange(s).terms() {
                writeln!(out, "{t}")?;
            }
        }
    }
    Ok(())
}

fn check<W: Write>(args: CheckArgs, out: &mut W) -> anyhow::Result<ExitCode> {
    let mut base = match &args.config {
        Some(path) => SuiteConfig::from_toml_file(path)?,
        None => SuiteConfig::default(),
    };
    if let Some(t) = args.trials {
        base.trials = t;
    }
    if let Some(s) = args.seed {
        base.seed = s;
    }
    if let Some(o) = args.offset {
        base.start_offset = o;
    }
    let suites: Vec<Suite> = match args.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::with_capacity(suites.len());
    for suite in suites {
        let cfg = SuiteConfig { suite_name: suite.name().to_string(), ..base.clone() };
        reports.push(lorentz::run_suite(&cfg).with_context(|| format!("suite {suite}"))?);
    }
    emit_report(&reports, args.format, out)?;
    let ok = reports.iter().all(|r| r.passed());
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
