use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use booldeg::boolfn::io::read_bf;
use booldeg::boolfn::{BooleanFunction, Family, FamilyParams};
use booldeg::degrees::{deg, hypercube_nullstellensatz, rdeg_from_witnesses};
use booldeg::dtree::{build_tree_with, TraceEntry};
use booldeg::harness::{
    table_identity, verify_corpus, verify_families, verify_with, CorpusSpec, Solver,
};
use booldeg::poly::text::parse_multilinear;
use booldeg::symmetry::{bernoulli_symmetrize, minsky_papert};
use booldeg::{Error, Result};

#[derive(Parser)]
#[command(name = "booldeg", version, about = "Exact degree measures of Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every measure and check of one function as JSON.
    Measures(Source),
    /// Verify every check over a corpus of functions.
    Verify(VerifyArgs),
    /// Check the named family values, the counterexample and 3-bit certificates.
    VerifyFamilies,
    /// Build the hitting-set decision tree and print it with its trace.
    Tree(Source),
    /// Print a minimum-degree witness polynomial.
    Witness {
        #[arg(long, value_enum)]
        measure: Measure,
        #[command(flatten)]
        source: Source,
    },
    /// Symmetrize a multilinear polynomial.
    Symmetrize(SymmetrizeArgs),
    /// Certificate from the nondeterministic witnesses of f and its negation.
    Nullstellensatz(Source),
    /// List the available families.
    Family {
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct Source {
    /// Truth table file (`n=K` line, then 2^K bits).
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl Source {
    fn load(&self) -> Result<(String, BooleanFunction)> {
        match (&self.file, &self.family) {
            (Some(path), _) => {
                let f = read_bf(path)?;
                Ok((table_identity(&f), f))
            }
            (None, Some(name)) => {
                let family: Family = name.parse()?;
                let f = family
                    .build(FamilyParams { n: self.n, m: self.m })?
                    .into_total()?;
                let label = match (self.n, self.m) {
                    (Some(n), _) => format!("{family}(n={n})"),
                    (None, Some(m)) => format!("{family}(m={m})"),
                    _ => family.to_string(),
                };
                Ok((label, f))
            }
            (None, None) => Err(Error::InvalidArgument(
                "give --file or --family".into(),
            )),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with_all = ["sample", "seed"])]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    sample: Option<usize>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Deg,
    Ndeg,
    Rdeg,
    Sdeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bernoulli,
    MinskyPapert,
}

#[derive(Args)]
struct SymmetrizeArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    poly: String,
    /// 1-based variables, comma separated; defaults to all variables.
    #[arg(long, value_delimiter = ',')]
    block: Vec<usize>,
    /// Arity, if larger than the highest variable in the polynomial.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Serialize)]
struct TreeOutput {
    function: String,
    tree: String,
    depth: usize,
    #[serde(rename = "D_oracle")]
    d_oracle: usize,
    iterations: usize,
    bound_4_sdeg2_rdeg2: usize,
    bound_16_rdeg4: usize,
    bound_2_ndeg2_ndeg_neg2: usize,
    within_bounds: bool,
    trace: Vec<TraceEntry>,
}

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r?),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    emit(&text)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Measures(src) => {
            let (label, f) = src.load()?;
            let report = verify_with(&f, Some(&label), &Solver::new())?;
            print_json(&report)?;
        }
        Command::Verify(args) => {
            let spec = match (args.exhaustive, args.sample, args.seed) {
                (true, _, _) => CorpusSpec::Exhaustive { n: args.n },
                (false, Some(count), Some(seed)) => CorpusSpec::Sampled {
                    n: args.n,
                    count,
                    seed,
                },
                _ => {
                    return Err(Error::InvalidArgument(
                        "give --exhaustive or --sample COUNT --seed S".into(),
                    ))
                }
            };
            let summary = verify_corpus(&spec)?;
            print_json(&summary)?;
            if !summary.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::VerifyFamilies => {
            let summary = verify_families()?;
            print_json(&summary)?;
            if !summary.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Tree(src) => {
            let (label, f) = src.load()?;
            booldeg::limits::check_cap(f.arity())?;
            let solver = Solver::new();
            let p = solver.ndeg(&f);
            let q = solver.ndeg(&f.negate());
            let sd = solver.sdeg(&f).degree;
            let rd = p.degree.max(q.degree);
            let tb = build_tree_with(&f, &p.polynomial, &q.polynomial)?;
            let b4 = 4 * sd * sd * rd * rd;
            let bn = 2 * p.degree.pow(2) * q.degree.pow(2);
            print_json(&TreeOutput {
                function: label,
                tree: tb.tree.to_string(),
                depth: tb.depth,
                d_oracle: booldeg::boolfn::decision_tree_complexity(&f),
                iterations: tb.max_iterations,
                bound_4_sdeg2_rdeg2: b4,
                bound_16_rdeg4: 16 * rd.pow(4),
                bound_2_ndeg2_ndeg_neg2: bn,
                within_bounds: tb.depth <= b4 && tb.depth <= bn,
                trace: tb.trace,
            })?;
        }
        Command::Witness { measure, source } => {
            let (_, f) = source.load()?;
            booldeg::limits::check_cap(f.arity())?;
            let solver = Solver::new();
            match measure {
                Measure::Deg => emit(&deg(&f).polynomial.to_string())?,
                Measure::Ndeg => emit(&solver.ndeg(&f).polynomial.to_string())?,
                Measure::Sdeg => emit(&solver.sdeg(&f).polynomial.to_string())?,
                Measure::Rdeg => {
                    let r = rdeg_from_witnesses(&f, solver.ndeg(&f), solver.ndeg(&f.negate()));
                    emit(&format!(
                        "({}) / ({})",
                        r.representation.numerator, r.representation.denominator
                    ))?;
                }
            }
        }
        Command::Symmetrize(args) => {
            let p = parse_multilinear(&args.poly, args.n)?;
            match args.kind {
                Kind::Bernoulli => {
                    if !args.block.is_empty() {
                        return Err(Error::InvalidArgument(
                            "--block applies to minsky-papert only".into(),
                        ));
                    }
                    emit(&bernoulli_symmetrize(&p).to_string())?;
                }
                Kind::MinskyPapert => {
                    let block = if args.block.is_empty() {
                        if p.arity() == 0 {
                            return Err(Error::InvalidArgument("empty block".into()));
                        }
                        (1u32 << p.arity()) - 1
                    } else {
                        let mut mask = 0u32;
                        for &i in &args.block {
                            if i == 0 || i > p.arity() {
                                return Err(Error::IndexOutOfRange {
                                    index: i.wrapping_sub(1),
                                    arity: p.arity(),
                                });
                            }
                            mask |= 1 << (i - 1);
                        }
                        mask
                    };
                    emit(&minsky_papert(&p, block)?.to_string())?;
                }
            }
        }
        Command::Nullstellensatz(src) => {
            let (_, f) = src.load()?;
            booldeg::limits::check_cap(f.arity())?;
            if f.is_constant() {
                return Err(Error::InvalidArgument(
                    "constant functions have a zero witness".into(),
                ));
            }
            let solver = Solver::new();
            let g1 = solver.ndeg(&f).polynomial;
            let g2 = solver.ndeg(&f.negate()).polynomial;
            print_json(&hypercube_nullstellensatz(&g1, &g2)?)?;
        }
        Command::Family { list } => {
            if !list {
                return Err(Error::InvalidArgument("use --list".into()));
            }
            for f in Family::ALL {
                emit(&format!("{:<15} {}", f.name(), f.schema()))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
