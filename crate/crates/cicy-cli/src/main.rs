//! Command-line front end for the `cicy` library: validates datasets of
//! configuration matrices, computes their invariants, enumerates free
//! involutions, splits projective-line factors, and runs whole-file batch
//! reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use cicy::analysis::{analyze, render_decorated, run_batch, AnalysisOptions, HodgeSource};
use cicy::dataset::{parse_dataset, ConfigRecord};
use cicy::expansion::expansions_to_count;

#[derive(Parser)]
#[command(
    name = "cicy",
    version,
    about = "Exact invariants of complete-intersection Calabi-Yau configurations",
    after_help = "Exit codes: 0 success, 1 invalid input or data, 2 internal fault."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Calabi-Yau conditions for every configuration
    Validate {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Print each configuration's Euler characteristic
    Euler {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// List every free involution assignment, row by row
    Involutions {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Print the quotient Betti number pairs (b2, b3)
    Betti {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Split projective-line factors until a target factor count
    Expand {
        #[command(flatten)]
        io: IoArgs,
        /// Stop when the configurations have this many factors
        #[arg(long)]
        target_factors: usize,
        /// Keep at most this many configurations per intermediate level
        #[arg(long, default_value_t = 1000)]
        max_expansions: usize,
    },
    /// Run the full pipeline over the dataset and emit a report
    Batch {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Dataset file to read
    #[arg(long)]
    input: PathBuf,
    /// Write output to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Only process the configuration with this name
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Take h11 = number of factors when no Hodge numbers are supplied
    #[arg(long, default_value_t = true, action = ArgAction::Set, value_name = "BOOL")]
    assume_favourable: bool,
    /// Worker threads for batch analysis (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

impl ComputeArgs {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            assume_favourable: self.assume_favourable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { io } => cmd_validate(&io),
        Command::Euler { io, compute } => cmd_euler(&io, &compute),
        Command::Involutions { io, compute } => cmd_involutions(&io, &compute),
        Command::Betti { io, compute } => cmd_betti(&io, &compute),
        Command::Expand {
            io,
            target_factors,
            max_expansions,
        } => cmd_expand(&io, target_factors, max_expansions),
        Command::Batch {
            io,
            compute,
            format,
        } => cmd_batch(&io, &compute, format),
    }
}

fn load(io: &IoArgs) -> Result<Vec<ConfigRecord>> {
    let text =
        fs::read_to_string(&io.input).with_context(|| format!("reading {}", io.input.display()))?;
    let mut records = parse_dataset(&text).map_err(|e| anyhow!("{}: {e}", io.input.display()))?;
    if let Some(name) = &io.name {
        records.retain(|r| &r.name == name);
        if records.is_empty() {
            bail!("no configuration named '{name}' in {}", io.input.display());
        }
    }
    Ok(records)
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Runs `work` on a dedicated rayon pool when a thread count is requested;
/// otherwise on the default pool.
fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(work()),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .context("building thread pool")?;
            Ok(pool.install(work))
        }
    }
}

fn cmd_validate(io: &IoArgs) -> Result<ExitCode> {
    let records = load(io)?;
    let mut out = String::new();
    let mut all_ok = true;
    for record in &records {
        let report = record.matrix.validate();
        if report.is_ok() {
            out.push_str(&format!("{}: ok\n", record.name));
        } else {
            all_ok = false;
            out.push_str(&format!("{}: invalid\n", record.name));
            for message in &report.messages {
                out.push_str(&format!("  - {message}\n"));
            }
        }
    }
    emit(&io.output, &out)?;
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_euler(io: &IoArgs, compute: &ComputeArgs) -> Result<ExitCode> {
    let records = load(io)?;
    let options = compute.options();
    let results = with_pool(compute.jobs, || run_batch(&records, &options))?;
    let mut out = String::new();
    let mut code = ExitCode::SUCCESS;
    for result in &results.results {
        if let Some(fault) = &result.fault {
            eprintln!("{}: internal fault: {fault}", result.name);
            return Ok(ExitCode::from(2));
        }
        match &result.euler {
            Some(chi) => out.push_str(&format!("{}: {chi}\n", result.name)),
            None => {
                out.push_str(&format!("{}: invalid\n", result.name));
                code = ExitCode::from(1);
            }
        }
    }
    emit(&io.output, &out)?;
    Ok(code)
}

fn cmd_involutions(io: &IoArgs, compute: &ComputeArgs) -> Result<ExitCode> {
    let records = load(io)?;
    let options = compute.options();
    let mut out = String::new();
    let mut code = ExitCode::SUCCESS;
    for record in &records {
        let result = analyze(record, &options);
        if let Some(fault) = &result.fault {
            eprintln!("{}: internal fault: {fault}", result.name);
            return Ok(ExitCode::from(2));
        }
        if !result.is_valid() {
            out.push_str(&format!("{}: invalid\n", result.name));
            code = ExitCode::from(1);
            continue;
        }
        out.push_str(&format!(
            "{}: {} free involution assignment(s)\n",
            result.name,
            result.assignments.len()
        ));
        for assignment in &result.assignments {
            let betti = result.betti_for(assignment);
            out.push_str(&render_decorated(
                &result.matrix,
                assignment,
                betti.as_ref(),
            ));
            out.push('\n');
        }
    }
    emit(&io.output, &out)?;
    Ok(code)
}

fn cmd_betti(io: &IoArgs, compute: &ComputeArgs) -> Result<ExitCode> {
    let records = load(io)?;
    let options = compute.options();
    let results = with_pool(compute.jobs, || run_batch(&records, &options))?;
    let mut out = String::new();
    let mut code = ExitCode::SUCCESS;
    for result in &results.results {
        if let Some(fault) = &result.fault {
            eprintln!("{}: internal fault: {fault}", result.name);
            return Ok(ExitCode::from(2));
        }
        if !result.is_valid() {
            out.push_str(&format!("{}: invalid\n", result.name));
            code = ExitCode::from(1);
            continue;
        }
        if let Some(error) = &result.data_error {
            out.push_str(&format!("{}: data error: {error}\n", result.name));
            code = ExitCode::from(1);
            continue;
        }
        if result.betti_pairs.is_empty() {
            let reason = result
                .betti_note
                .clone()
                .or_else(|| match &result.hodge_source {
                    HodgeSource::Unavailable(reason) => Some(reason.clone()),
                    _ => None,
                })
                .unwrap_or_else(|| "no free involution assignments".into());
            out.push_str(&format!("{}: none ({reason})\n", result.name));
        } else {
            let pairs = result
                .betti_pairs
                .iter()
                .map(|b| format!("({}, {})", b.b2, b.b3))
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&format!("{}: {pairs}\n", result.name));
        }
    }
    emit(&io.output, &out)?;
    Ok(code)
}

fn cmd_expand(io: &IoArgs, target_factors: usize, max_expansions: usize) -> Result<ExitCode> {
    let records = load(io)?;
    let mut out = String::new();
    for record in &records {
        let level = expansions_to_count(&record.matrix, target_factors, max_expansions);
        out.push_str(&format!(
            "{}: {} configuration(s) with {} factors\n",
            record.name,
            level.len(),
            target_factors
        ));
        for cfg in &level {
            out.push_str(&cfg.to_string());
            out.push('\n');
        }
    }
    emit(&io.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_batch(io: &IoArgs, compute: &ComputeArgs, format: Format) -> Result<ExitCode> {
    let records = load(io)?;
    let options = compute.options();
    let report = with_pool(compute.jobs, || run_batch(&records, &options))?;
    let rendered = match format {
        Format::Tsv => report.to_tsv(),
        Format::Text => report.to_text(),
    };
    emit(&io.output, &rendered)?;
    if let Some(fault) = report.first_fault() {
        eprintln!("internal fault: {fault}");
        return Ok(ExitCode::from(2));
    }
    if let Some(error) = report.first_data_error() {
        eprintln!("data error: {error}");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
