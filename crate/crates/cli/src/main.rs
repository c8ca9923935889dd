use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::process;

use clap::{Args, Parser, Subcommand};
use tetmedial::{
    compute_report, exit, parse_records, selftest, validate_record, write_json_line, Format,
    PairSelection,
};
use tetmedial_core::{Status, Tolerance};

#[derive(Parser, Debug)]
#[command(name = "tetmedial", version)]
#[command(about = "Medial parallelogram areas and realizability of tetrahedra from edge lengths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full mensuration report per record
    Compute(BatchArgs),
    /// Realizability check per record
    Validate(BatchArgs),
    /// Compare the closed form against the coordinate oracle on random tetrahedra
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Input file, or `-` for stdin
    #[arg(long, default_value = "-")]
    input: String,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output file, or `-` for stdout
    #[arg(long, default_value = "-")]
    output: String,

    /// de, ac, bf or all
    #[arg(long, default_value = "all")]
    pair: PairSelection,

    /// Relative tolerance for degeneracy and clamping
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    /// Exit with status 2 if any record is not realizable
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Number of random tetrahedra
    #[arg(long, default_value_t = 10_000)]
    count: usize,

    /// Relative tolerance for each comparison
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    #[arg(long, default_value = "-")]
    output: String,
}

fn open_input(path: &str) -> io::Result<Box<dyn Read>> {
    Ok(if path == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(BufReader::new(File::open(path)?))
    })
}

fn open_output(path: &str) -> io::Result<Box<dyn Write>> {
    Ok(if path == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        Box::new(BufWriter::new(File::create(path)?))
    })
}

fn usage(message: impl std::fmt::Display) -> i32 {
    eprintln!("tetmedial: {message}");
    exit::USAGE
}

fn run_batch(args: &BatchArgs, validate_only: bool) -> io::Result<i32> {
    if !(args.tolerance.is_finite() && args.tolerance >= 0.0) {
        return Ok(usage("--tolerance must be a non-negative number"));
    }
    let tol = Tolerance::new(args.tolerance);
    let records = match parse_records(open_input(&args.input)?, args.format) {
        Ok(r) => r,
        Err(e) => return Ok(usage(e)),
    };
    let mut out = open_output(&args.output)?;
    let mut unrealizable = false;
    for record in &records {
        let status = if validate_only {
            let v = validate_record(record, tol);
            write_json_line(&mut out, &v)?;
            v.status
        } else {
            let r = compute_report(record, tol, args.pair);
            write_json_line(&mut out, &r)?;
            r.status
        };
        unrealizable |= status == Status::NotRealizable;
    }
    out.flush()?;
    Ok(if args.strict && unrealizable {
        exit::UNREALIZABLE
    } else {
        exit::SUCCESS
    })
}

fn run_selftest(args: &SelftestArgs) -> io::Result<i32> {
    if args.count == 0 {
        return Ok(usage("--count must be at least 1"));
    }
    if !(args.tolerance.is_finite() && args.tolerance >= 0.0) {
        return Ok(usage("--tolerance must be a non-negative number"));
    }
    let mut out = open_output(&args.output)?;
    let code = selftest(args.seed, args.count, args.tolerance, &mut out)?;
    out.flush()?;
    Ok(code)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            process::exit(exit::SUCCESS);
        }
        Err(e) => {
            let _ = e.print();
            process::exit(exit::USAGE);
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => run_batch(args, false),
        Command::Validate(args) => run_batch(args, true),
        Command::Selftest(args) => run_selftest(args),
    };
    let code = result.unwrap_or_else(usage);
    process::exit(code);
}
