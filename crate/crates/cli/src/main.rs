mod record;
mod render;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gridperim_core::analysis;
use gridperim_core::grid::profile_to_set;
use gridperim_core::optimizer;
use gridperim_core::oracle::{self, OracleBudget};
use gridperim_core::verify::{Verifier, VerifyConfig};
use gridperim_core::{ColumnProfile, Error, Exec};

use record::{OutputRecord, CSV_HEADER};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "gridperim", version, about = "Minimum edge boundaries in the quadrant king graph")]
struct Cli {
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum perimeter and an optimal witness for each volume.
    Solve(SolveArgs),
    /// Lower and upper bounds with the real gap between them.
    Bounds(RangeArgs),
    /// Brute-force minimum by partitions or by all connected sets.
    Oracle(OracleArgs),
    /// Runs of consecutive volumes sharing one minimum perimeter.
    Plateaus(PlateauArgs),
    /// Chains of nested optimal sets.
    Nested(NestedArgs),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
    /// Draw an optimal witness or a given column profile.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
#[command(group(ArgGroup::new("volumes").required(true).args(["n", "from"])))]
struct SolveArgs {
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, requires = "to", conflicts_with = "n")]
    from: Option<u64>,
    #[arg(long, requires = "from")]
    to: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct RangeArgs {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Partitions,
    Exhaustive,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: OracleMode,
    #[arg(long)]
    n: u64,
    /// Report every optimal set rather than one.
    #[arg(long)]
    all_witnesses: bool,
}

#[derive(Args)]
struct PlateauArgs {
    #[arg(long, default_value_t = 1)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, default_value_t = 1)]
    min_len: u64,
}

#[derive(Args)]
struct NestedArgs {
    #[arg(long, default_value_t = 11)]
    to: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cap enumeration at volume 9 and the cross-check at 40.
    #[arg(long)]
    quick: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["n", "profile"])))]
#[command(group(ArgGroup::new("output").required(true).args(["ascii", "svg"])))]
struct RenderArgs {
    #[arg(long)]
    n: Option<u64>,
    /// Column heights to draw instead of a witness, e.g. `3,3,2,1`.
    #[arg(long, value_delimiter = ',', conflicts_with = "n")]
    profile: Option<Vec<u32>>,
    /// Overlay boundary edges (SVG) or print a boundary summary (ASCII).
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    ascii: bool,
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Budget(String),
    Verify,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn check_range(from: u64, to: u64) -> Outcome {
    if from == 0 || from > to {
        return Err(Failure::Usage(format!(
            "invalid range {from}..={to}: need 1 <= from <= to"
        )));
    }
    Ok(())
}

fn positive(n: u64) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("volume must be positive".into()));
    }
    Ok(())
}

fn json_line<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn solve(args: SolveArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    let (lo, hi) = match (args.n, args.from, args.to) {
        (Some(n), _, _) => (n, n),
        (None, Some(a), Some(b)) => (a, b),
        _ => return Err(Failure::Usage("give --n or --from and --to".into())),
    };
    check_range(lo, hi)?;
    let results = optimizer::perimeter_range(lo, hi, exec);
    match args.format {
        Format::Json if args.n.is_some() => {
            serde_json::to_writer_pretty(&mut *out, &OutputRecord::from(&results[0]))?;
            writeln!(out)?;
        }
        Format::Json => {
            for r in &results {
                json_line(out, &OutputRecord::from(r))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &results {
                writeln!(out, "{}", OutputRecord::from(r).csv_row())?;
            }
        }
    }
    Ok(())
}

fn bounds_cmd(args: RangeArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    check_range(args.from, args.to)?;
    for b in exec.map_range(args.from..=args.to, optimizer::bounds) {
        json_line(out, &b)?;
    }
    Ok(())
}

fn oracle_cmd(args: OracleArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    positive(args.n)?;
    let budget = OracleBudget::from_env()?;
    let result = match args.mode {
        OracleMode::Partitions => {
            oracle::min_perimeter_partitions(args.n, args.all_witnesses, &budget, exec)?
        }
        OracleMode::Exhaustive => {
            oracle::min_perimeter_exhaustive(args.n, args.all_witnesses, &budget, exec)?
        }
    };
    serde_json::to_writer_pretty(&mut *out, &result)?;
    writeln!(out)?;
    Ok(())
}

fn plateaus_cmd(args: PlateauArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    check_range(args.from, args.to)?;
    for run in analysis::plateaus(args.from, args.to, args.min_len, exec) {
        json_line(out, &run)?;
    }
    Ok(())
}

fn nested_cmd(args: NestedArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    positive(args.to)?;
    let budget = OracleBudget::from_env()?;
    let report = oracle::nested_chain_analysis(args.to, &budget, exec)?;
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(())
}

fn verify_cmd(args: VerifyArgs, exec: Exec, out: &mut impl Write) -> Outcome {
    let mut config = if args.quick {
        VerifyConfig::quick()
    } else {
        VerifyConfig::full()
    };
    config.exec = exec;
    let verifier = Verifier::new(config);
    let mut failed = 0;
    let mut checks = Vec::new();
    for check in verifier.run_all() {
        failed += usize::from(!check.passed());
        if !args.json {
            writeln!(out, "{check}")?;
            out.flush()?;
        }
        checks.push(check);
    }
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &checks)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{} of {} checks failed", failed, checks.len())?;
    }
    if failed > 0 {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn render_cmd(args: RenderArgs, out: &mut impl Write) -> Outcome {
    let profile = match (args.profile, args.n) {
        (Some(heights), _) => ColumnProfile::new(heights)?,
        (None, Some(n)) => {
            positive(n)?;
            optimizer::min_perimeter(n).witness.expand()
        }
        (None, None) => return Err(Failure::Usage("give --n or --profile".into())),
    };
    let set = profile_to_set(&profile);
    if args.ascii {
        write!(out, "{}", render::ascii(&set))?;
        if args.witness {
            writeln!(out, "{}", render::summary(&set))?;
        }
    }
    if let Some(path) = args.svg {
        std::fs::write(&path, render::svg(&set, args.witness))?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.command {
        Command::Solve(a) => solve(a, exec, out),
        Command::Bounds(a) => bounds_cmd(a, exec, out),
        Command::Oracle(a) => oracle_cmd(a, exec, out),
        Command::Plateaus(a) => plateaus_cmd(a, exec, out),
        Command::Nested(a) => nested_cmd(a, exec, out),
        Command::Verify(a) => verify_cmd(a, exec, out),
        Command::Render(a) => render_cmd(a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg} (raise it with {})", oracle::BUDGET_ENV);
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
