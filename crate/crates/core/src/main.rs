//! Command-line front end: enumeration tables, bijection traces, and
//! identity verification.
//!
//! Exit codes: 0 success/verified, 1 usage error, 2 precondition violation,
//! 3 identity mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use schmidt_lab::qseries::identities;
use schmidt_lab::qseries::Mono;
use schmidt_lab::schmidt::{self, DiffVector, SchmidtSpec, WeightVector};
use schmidt_lab::stockhofe::{self, ColoredPart};
use schmidt_lab::verify::{self, ClaimId, VerifyOptions};
use schmidt_lab::{Modulus, Partition};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "schmidt-lab",
    about = "Exact counting, bijection, and q-series identity checks for place-weighted partitions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for verification grids (falls back to
    /// SCHMIDT_LAB_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the flat-to-regular bijection to a partition and print the
    /// image with its removal trace (round-trip checked first).
    Bijection {
        /// Modulus m >= 2.
        #[arg(long)]
        m: u32,
        /// Counted residues S (e.g. 1,2,3) to also print the colored image.
        #[arg(long, value_delimiter = ',')]
        colors: Option<Vec<u32>>,
        /// The partition, comma-separated decreasing parts (empty string for
        /// the empty partition).
        partition: String,
    },
    /// Tabulate a counting family over a range of n, with the paired
    /// reference count where one exists.
    Count {
        /// Family: P, R, f32, f31, fk, weighted, colored, hooks.
        #[arg(long)]
        family: String,
        /// n or inclusive range a..b.
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        /// Counted residues S, comma-separated.
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<u32>>,
        /// Difference vector rho, comma-separated.
        #[arg(long, value_delimiter = ',')]
        rho: Option<Vec<u32>>,
        /// Number of parts (f32/fk reference statistic).
        #[arg(long)]
        parts: Option<u64>,
        #[arg(long)]
        m1: Option<u64>,
        #[arg(long)]
        m2: Option<u64>,
        /// Periodic weight vector, comma-separated.
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<i64>>,
        /// Maximum multiplicity of a part size.
        #[arg(long)]
        max_rep: Option<usize>,
    },
    /// Verify an identity or closed-form claim grid.
    Verify {
        /// Claim: f32, f31, genf, firsti, 2phi1, lemmab, sumA, pascal,
        /// vandermonde, qbinom-theorem, pi3, kappa, genlemma.
        id: String,
        /// q-truncation order (and counting bound for firsti).
        #[arg(long, default_value_t = 30)]
        order: u32,
        /// Tracker cap for t.
        #[arg(long, default_value_t = 16)]
        cap_t: u32,
        /// Tracker caps for t1/t2.
        #[arg(long, default_value_t = 16)]
        cap_t1: u32,
        #[arg(long, default_value_t = 16)]
        cap_t2: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        /// Restrict 2phi1 to a single M.
        #[arg(long = "M")]
        big_m: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are success, anything else is usage
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let mut sink: Box<dyn std::io::Write> = match &cli.output {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(std::io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };

    let code = match run(&cli, &mut sink) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if sink.flush().is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

enum CliError {
    Usage(String),
    Precondition(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn precondition(msg: impl Into<String>) -> CliError {
    CliError::Precondition(msg.into())
}

fn run(cli: &Cli, sink: &mut dyn std::io::Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Bijection {
            m,
            colors,
            partition,
        } => cmd_bijection(*m, colors.as_deref(), partition, cli.format, sink),
        Command::Count {
            family,
            n,
            m,
            i,
            k,
            s,
            rho,
            parts,
            m1,
            m2,
            w,
            max_rep,
        } => {
            let range = parse_range(n)?;
            let args = CountArgs {
                family,
                range,
                m: *m,
                i: *i,
                k: *k,
                s: s.clone(),
                rho: rho.clone(),
                parts: *parts,
                m1: *m1,
                m2: *m2,
                w: w.clone(),
                max_rep: *max_rep,
            };
            cmd_count(&args, cli.format, sink)
        }
        Command::Verify {
            id,
            order,
            cap_t,
            cap_t1,
            cap_t2,
            k,
            m,
            i,
            big_m,
        } => {
            let opts = VerifyOptions {
                order: *order,
                cap_t: *cap_t,
                cap_t1: *cap_t1,
                cap_t2: *cap_t2,
                k: *k,
                m: *m,
                i: *i,
                big_m: *big_m,
            };
            cmd_verify(id, &opts, cli.threads, cli.format, sink)
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = text.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| usage(format!("cannot parse partition: {e}")))?;
    Partition::new(parts).map_err(|e| precondition(e.to_string()))
}

fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let lo: u64 = a
            .trim()
            .parse()
            .map_err(|e| usage(format!("bad range start: {e}")))?;
        let hi: u64 = b
            .trim()
            .parse()
            .map_err(|e| usage(format!("bad range end: {e}")))?;
        if lo > hi {
            return Err(usage("empty range"));
        }
        Ok((lo, hi))
    } else {
        let n: u64 = text
            .parse()
            .map_err(|e| usage(format!("bad value for --n: {e}")))?;
        Ok((n, n))
    }
}

fn cmd_bijection(
    m: u32,
    colors: Option<&[u32]>,
    partition: &str,
    format: Format,
    sink: &mut dyn std::io::Write,
) -> Result<u8, CliError> {
    let modulus = Modulus::new(m).map_err(|e| usage(e.to_string()))?;
    let input = parse_partition(partition)?;
    let (image, trace) =
        stockhofe::phi(&input, modulus).map_err(|e| precondition(e.to_string()))?;
    let back = stockhofe::phi_inverse(&image, modulus)
        .map_err(|e| precondition(format!("round-trip failed: {e}")))?;
    assert_eq!(back, input, "round-trip check failed");

    let spec = match colors {
        Some(s) => Some(
            SchmidtSpec::new(m, s.to_vec()).map_err(|e| usage(e.to_string()))?,
        ),
        None => None,
    };
    let colored = spec.as_ref().map(|spec| {
        let parts: Vec<ColoredPart> = image
            .parts()
            .iter()
            .map(|&x| ColoredPart {
                size: spec.reduced_size(x),
                color: x % m,
            })
            .collect();
        stockhofe::ColoredPartition::from_sorted(parts)
    });

    match format {
        Format::Json => {
            let value = serde_json::json!({
                "m": m,
                "input": input.parts(),
                "image": image.parts(),
                "mu": trace.mu.parts(),
                "lambda_v": trace.lambda_v.parts(),
                "removed_step1": trace.removed_step1,
                "removed_step2": trace.removed_step2,
                "colored": colored.as_ref().map(|c| {
                    c.parts().iter().map(|p| [p.size, p.color]).collect::<Vec<_>>()
                }),
            });
            writeln!(sink, "{value}").map_err(io_err)?;
        }
        _ => {
            writeln!(sink, "input    = {input}").map_err(io_err)?;
            writeln!(sink, "image    = {image}").map_err(io_err)?;
            writeln!(sink, "mu       = {}", trace.mu).map_err(io_err)?;
            writeln!(sink, "lambda_v = {}", trace.lambda_v).map_err(io_err)?;
            writeln!(sink, "step 1 removed: {:?}", trace.removed_step1).map_err(io_err)?;
            writeln!(sink, "step 2 removed: {:?}", trace.removed_step2).map_err(io_err)?;
            if let Some(c) = &colored {
                writeln!(sink, "colored  = {c}").map_err(io_err)?;
            }
            writeln!(sink, "round-trip ok").map_err(io_err)?;
        }
    }
    Ok(0)
}

struct CountArgs<'a> {
    family: &'a str,
    range: (u64, u64),
    m: Option<u32>,
    i: Option<u32>,
    k: Option<u32>,
    s: Option<Vec<u32>>,
    rho: Option<Vec<u32>>,
    parts: Option<u64>,
    m1: Option<u64>,
    m2: Option<u64>,
    w: Option<Vec<i64>>,
    max_rep: Option<usize>,
}

struct Row {
    n: u64,
    count: u64,
    reference: Option<u64>,
    equal: Option<bool>,
}

impl Row {
    fn paired(n: u64, count: u64, reference: u64) -> Row {
        Row {
            n,
            count,
            reference: Some(reference),
            equal: Some(count == reference),
        }
    }

    fn bare(n: u64, count: u64) -> Row {
        Row {
            n,
            count,
            reference: None,
            equal: None,
        }
    }
}

fn cmd_count(
    args: &CountArgs,
    format: Format,
    sink: &mut dyn std::io::Write,
) -> Result<u8, CliError> {
    let (lo, hi) = args.range;
    let mut params = String::new();
    let mut rows: Vec<Row> = Vec::new();

    let need = |opt: Option<u32>, name: &str| {
        opt.ok_or_else(|| usage(format!("--{name} is required for this family")))
    };

    match args.family {
        "P" | "colored" => {
            let m = need(args.m, "m")?;
            let s = args
                .s
                .clone()
                .ok_or_else(|| usage("--s is required for this family"))?;
            let rho_raw = args
                .rho
                .clone()
                .ok_or_else(|| usage("--rho is required for this family"))?;
            let spec = SchmidtSpec::new(m, s).map_err(|e| usage(e.to_string()))?;
            if rho_raw.len() != spec.color_count() as usize {
                return Err(usage(format!(
                    "--rho must have {} entries",
                    spec.color_count()
                )));
            }
            let rho = DiffVector(rho_raw);
            write!(
                params,
                "m={m};S={};rho={}",
                join(spec.counted_residues(), "|"),
                join(rho.entries(), "|")
            )
            .unwrap();
            for n in lo..=hi {
                let p = schmidt::count_p(&spec, n, &rho);
                let c = schmidt::count_colored(n, &spec, &rho);
                let (count, reference) = if args.family == "P" { (p, c) } else { (c, p) };
                rows.push(Row::paired(n, count, reference));
            }
        }
        "R" => {
            let m = need(args.m, "m")?;
            let i = need(args.i, "i")?;
            write!(params, "m={m};i={i}").unwrap();
            let hist = schmidt::count_r_histogram(m, i, hi)
                .map_err(|e| usage(e.to_string()))?;
            let order = u32::try_from(hi).map_err(|_| usage("range too large"))?;
            let product = identities::firsti_product(m, i, order);
            for n in lo..=hi {
                rows.push(Row::paired(
                    n,
                    hist[n as usize],
                    product.coeff(Mono::q(n as u32)) as u64,
                ));
            }
        }
        "f32" => {
            let parts = args
                .parts
                .ok_or_else(|| usage("--parts is required for f32"))?;
            write!(params, "parts={parts}").unwrap();
            for n in lo..=hi {
                rows.push(Row::paired(
                    n,
                    schmidt::count_f32(n, parts),
                    schmidt::partitions_exact_parts(n, parts),
                ));
            }
        }
        "f31" => {
            let m1 = args.m1.ok_or_else(|| usage("--m1 is required for f31"))?;
            let m2 = args.m2.ok_or_else(|| usage("--m2 is required for f31"))?;
            write!(params, "m1={m1};m2={m2}").unwrap();
            for n in lo..=hi {
                rows.push(Row::paired(
                    n,
                    schmidt::count_f31(n, m1, m2),
                    schmidt::partitions_two_colored(n, m1, m2),
                ));
            }
        }
        "fk" => {
            let k = need(args.k, "k")?;
            let parts = args
                .parts
                .ok_or_else(|| usage("--parts is required for fk"))?;
            write!(params, "k={k};parts={parts}").unwrap();
            for n in lo..=hi {
                let count = schmidt::count_fk(k, n, parts).map_err(|e| usage(e.to_string()))?;
                rows.push(Row::paired(n, count, schmidt::partitions_exact_parts(n, parts)));
            }
        }
        "weighted" => {
            let w_raw = args
                .w
                .clone()
                .ok_or_else(|| usage("--w is required for weighted"))?;
            let max_rep = args
                .max_rep
                .ok_or_else(|| usage("--max-rep is required for weighted"))?;
            let w = WeightVector::new(w_raw.clone()).map_err(|e| precondition(e.to_string()))?;
            write!(params, "w={};max_rep={max_rep}", join(&w_raw, "|")).unwrap();
            let is_mod9_case = w_raw == [1, 2, 3, 2, 1] && max_rep == 4;
            for n in lo..=hi {
                let count =
                    schmidt::count_weighted(&w, max_rep, n).map_err(|e| usage(e.to_string()))?;
                rows.push(match is_mod9_case.then(|| schmidt::mod9_class_count(n)) {
                    Some(reference) => Row::paired(n, count, reference),
                    None => Row::bare(n, count),
                });
            }
        }
        "hooks" => {
            params.push_str("sides=odd-subpartitions|diagonal-hooks");
            for n in lo..=hi {
                if n == 0 {
                    return Err(usage("hooks family needs n >= 1"));
                }
                let (a, b) = schmidt::hook_multisets(n);
                // sizes can coincide while the multisets differ, so the
                // equality flag records full multiset equality
                rows.push(Row {
                    n,
                    count: a.len() as u64,
                    reference: Some(b.len() as u64),
                    equal: Some(a == b),
                });
            }
        }
        other => return Err(usage(format!("unknown family '{other}'"))),
    }

    emit_rows(args.family, &params, &rows, format, sink)?;
    Ok(0)
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn emit_rows(
    family: &str,
    params: &str,
    rows: &[Row],
    format: Format,
    sink: &mut dyn std::io::Write,
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            writeln!(sink, "family,params,n,count,reference_count,equal").map_err(io_err)?;
            for row in rows {
                let reference = row.reference.map(|r| r.to_string()).unwrap_or_default();
                let equal = row.equal.map(|e| e.to_string()).unwrap_or_default();
                writeln!(
                    sink,
                    "{family},{params},{},{},{reference},{equal}",
                    row.n, row.count
                )
                .map_err(io_err)?;
            }
        }
        Format::Json => {
            for row in rows {
                let value = serde_json::json!({
                    "family": family,
                    "params": params,
                    "n": row.n,
                    "count": row.count,
                    "reference_count": row.reference,
                    "equal": row.equal,
                });
                writeln!(sink, "{value}").map_err(io_err)?;
            }
        }
        Format::Text => {
            for row in rows {
                match (row.reference, row.equal) {
                    (Some(r), Some(eq)) => {
                        let mark = if eq { "ok" } else { "MISMATCH" };
                        writeln!(
                            sink,
                            "{family}[{params}] n={}: {} = {} {}",
                            row.n, row.count, r, mark
                        )
                        .map_err(io_err)?;
                    }
                    _ => {
                        writeln!(sink, "{family}[{params}] n={}: {}", row.n, row.count)
                            .map_err(io_err)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

fn cmd_verify(
    id: &str,
    opts: &VerifyOptions,
    threads: Option<usize>,
    format: Format,
    sink: &mut dyn std::io::Write,
) -> Result<u8, CliError> {
    let claim = ClaimId::parse(id).ok_or_else(|| usage(format!("unknown claim id '{id}'")))?;
    let thread_count = threads.or_else(|| {
        std::env::var("SCHMIDT_LAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = thread_count {
            builder = builder.num_threads(n.max(1));
        }
        builder
            .build()
            .map_err(|e| usage(format!("cannot build thread pool: {e}")))?
    };

    let grid = verify::instances(claim, opts);
    let verdicts: Vec<verify::Verdict> =
        pool.install(|| grid.par_iter().map(|&inst| verify::run_instance(inst)).collect());

    let mut all_ok = true;
    for v in &verdicts {
        all_ok &= v.verified();
        match format {
            Format::Json => {
                writeln!(sink, "{}", serde_json::to_string(v).expect("serializable"))
                    .map_err(io_err)?;
            }
            _ => {
                writeln!(sink, "{v}").map_err(io_err)?;
            }
        }
    }
    Ok(if all_ok { 0 } else { 3 })
}
