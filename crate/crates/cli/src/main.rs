use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use locarray::bounds::lower_bound;
use locarray::decoder::{simulate_outcomes, Decoder, Diagnosis, Outcomes};
use locarray::search::{anneal_parallel, SearchParams};
use locarray::verifier::{VerificationReport, Verifier};
use locarray::{
    canonicalize, parse_array, parse_transposed, serialize_array, Array, Interaction,
    LevelProfile,
};

mod construct;

#[derive(Parser)]
#[command(name = "locarray", version, about = "Build, verify, search and decode mixed-level locating arrays")]
struct Cli {
    /// Worker threads for verification and parallel search.
    #[arg(long, global = true, env = "LA_THREADS", default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an array for one property and print a verdict.
    Verify(VerifyArgs),
    /// Lower bound on the size of a (1̄,t)-LA.
    Bound(BoundArgs),
    /// Build an array directly or from other arrays.
    #[command(subcommand)]
    Construct(construct::Op),
    /// Anneal for a (1̄,t)-LA with a given number of rows.
    Search(SearchArgs),
    /// Map pass/fail outcomes to the faulty interaction.
    Locate(LocateArgs),
    /// Outcomes produced by a single faulty interaction.
    Simulate(SimulateArgs),
    /// Re-serialize an array, optionally sorting its columns by level.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Mca,
    BarLa,
    La,
    Da,
    Moa,
    Pdimoa,
    PdimoaStar,
    Mca2Star,
}

#[derive(Args)]
struct VerifyArgs {
    /// Array file, or `-` for stdin.
    array: PathBuf,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Strength to check at; defaults to the strength in the file header.
    #[arg(long)]
    strength: Option<usize>,
    /// Number of faults for la/bar-la/da.
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Minimum coverage for mca.
    #[arg(long, default_value_t = 1)]
    lambda: usize,
    /// Lift the verifier's size caps. Large instances can take a long time.
    #[arg(long)]
    force: bool,
    /// The file lists one column per line.
    #[arg(long)]
    transposed: bool,
}

#[derive(Args)]
struct BoundArgs {
    /// Comma-separated alphabet sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    levels: Vec<u32>,
    #[arg(long)]
    strength: usize,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    levels: Vec<u32>,
    #[arg(long)]
    strength: usize,
    #[arg(long)]
    rows: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200_000_000)]
    max_iters: u64,
    /// Seconds per chain.
    #[arg(long, default_value_t = 120.0)]
    time_budget: f64,
    #[arg(long, default_value_t = 1.0)]
    initial_temperature: f64,
    #[arg(long, default_value_t = 0.99)]
    cooling_ratio: f64,
    /// Independent chains seeded seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    chains: usize,
    /// Iterations between progress records.
    #[arg(long, default_value_t = 100_000)]
    log_every: u64,
    /// Write the JSON-lines progress log here instead of stderr.
    #[arg(long)]
    log: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LocateArgs {
    #[arg(long)]
    array: PathBuf,
    /// A string of p/f flags, or a file with one flag per line.
    #[arg(long)]
    outcomes: String,
    #[arg(long)]
    strength: Option<usize>,
    /// Skip certifying the array as a (1̄,t)-LA first.
    #[arg(long)]
    trust: bool,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    array: PathBuf,
    /// Faulty interaction as `col:val,...` with 1-based columns; omit for no fault.
    #[arg(long)]
    fault: Option<String>,
}

#[derive(Args)]
struct ConvertArgs {
    array: PathBuf,
    #[arg(long)]
    transposed: bool,
    /// Sort columns by alphabet size (stable) and report the permutation.
    #[arg(long)]
    canonical: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit status for a completed command.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Ok,
    Negative,
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_array(path: &Path, transposed: bool) -> Result<Array> {
    let text = read_text(path)?;
    let parsed = if transposed {
        parse_transposed(&text)
    } else {
        parse_array(&text)
    };
    parsed.with_context(|| format!("parsing {}", path.display()))
}

fn write_array(a: &Array, out: Option<&Path>) -> Result<()> {
    let text = serialize_array(a);
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn verdict(report: &VerificationReport) -> Status {
    if report.verdict {
        Status::Ok
    } else {
        Status::Negative
    }
}

fn run_verify(args: VerifyArgs) -> Result<Status> {
    let a = read_array(&args.array, args.transposed)?;
    let t = args.strength.unwrap_or(a.strength());
    let v = Verifier { force: args.force };
    if args.force {
        eprintln!("warning: size caps lifted; this may take a long time");
    }
    let report = match args.kind {
        Kind::Mca => v.is_mca(&a, t, args.lambda)?,
        Kind::BarLa => v.is_locating(&a, t, args.d, true)?,
        Kind::La => v.is_locating(&a, t, args.d, false)?,
        Kind::Da => v.is_detecting(&a, t, args.d)?,
        Kind::Moa => v.is_moa(&a, t)?,
        Kind::Pdimoa => v.is_pdimoa(&a, t)?,
        Kind::PdimoaStar => v.is_pdimoa_star(&a, t)?,
        Kind::Mca2Star => v.is_mca2_star(&a, t)?,
    };
    print!("{}", report.render());
    Ok(verdict(&report))
}

fn run_bound(args: BoundArgs) -> Result<Status> {
    let p = LevelProfile::new(args.levels, args.strength)?;
    println!("{}", lower_bound(&p)?.render());
    Ok(Status::Ok)
}

fn run_search(args: SearchArgs) -> Result<Status> {
    let p = LevelProfile::new(args.levels, args.strength)?;
    if !(args.time_budget > 0.0 && args.time_budget.is_finite()) {
        bail!("time budget must be a positive number of seconds");
    }
    let mut params = SearchParams::new(args.rows, args.seed);
    params.max_iterations = args.max_iters;
    params.time_budget = Duration::from_secs_f64(args.time_budget);
    params.initial_temperature = args.initial_temperature;
    params.cooling_ratio = args.cooling_ratio;
    params.log_every = args.log_every;
    let outcome = anneal_parallel(&p, &params, args.chains)?;

    let mut log = String::new();
    for entry in &outcome.log {
        log.push_str(&serde_json::to_string(entry)?);
        log.push('\n');
    }
    match &args.log {
        Some(path) => fs::write(path, log).with_context(|| format!("writing {}", path.display()))?,
        None => eprint!("{log}"),
    }

    match &outcome.array {
        Some(a) => {
            eprintln!(
                "FOUND rows={} seed={} iterations={}",
                a.n_rows(),
                outcome.seed,
                outcome.iterations
            );
            write_array(a, args.out.as_deref())?;
            Ok(Status::Ok)
        }
        None => {
            eprintln!(
                "NOT_FOUND seed={} iterations={} best_cost={} uncovered={} collisions={}",
                outcome.seed,
                outcome.iterations,
                outcome.best_cost.total(),
                outcome.best_cost.uncovered,
                outcome.best_cost.collisions
            );
            Ok(Status::Negative)
        }
    }
}

fn run_locate(args: LocateArgs) -> Result<Status> {
    let a = read_array(&args.array, false)?;
    let t = args.strength.unwrap_or(a.strength());
    let path = Path::new(&args.outcomes);
    let text = if path.is_file() {
        read_text(path)?
    } else {
        args.outcomes.clone()
    };
    let outcomes: Outcomes = text.parse()?;
    let decoder = if args.trust {
        Decoder::new(&a, t)?
    } else {
        Decoder::certified(&a, t, &Verifier { force: args.force })?
    };
    let diagnosis = decoder.locate(&outcomes)?;
    println!("{diagnosis}");
    Ok(match diagnosis {
        Diagnosis::Inconsistent(_) => Status::Negative,
        _ => Status::Ok,
    })
}

fn run_simulate(args: SimulateArgs) -> Result<Status> {
    let a = read_array(&args.array, false)?;
    let fault: Option<Interaction> = args.fault.as_deref().map(str::parse).transpose()?;
    let outcomes = simulate_outcomes(&a, fault.as_ref())?;
    let mut out = String::with_capacity(2 * outcomes.len());
    for &fail in outcomes.flags() {
        out.push_str(if fail { "f\n" } else { "p\n" });
    }
    io::stdout().write_all(out.as_bytes())?;
    Ok(Status::Ok)
}

fn run_convert(args: ConvertArgs) -> Result<Status> {
    let a = read_array(&args.array, args.transposed)?;
    if args.canonical {
        let (c, map) = canonicalize(&a);
        let perm: Vec<String> = map.permutation().iter().map(|p| (p + 1).to_string()).collect();
        eprintln!("PERMUTATION {}", perm.join(" "));
        write_array(&c, args.out.as_deref())?;
    } else {
        write_array(&a, args.out.as_deref())?;
    }
    Ok(Status::Ok)
}

fn run(cli: Cli) -> Result<Status> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
        .context("configuring worker threads")?;
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Bound(args) => run_bound(args),
        Command::Construct(op) => construct::run(op),
        Command::Search(args) => run_search(args),
        Command::Locate(args) => run_locate(args),
        Command::Simulate(args) => run_simulate(args),
        Command::Convert(args) => run_convert(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
