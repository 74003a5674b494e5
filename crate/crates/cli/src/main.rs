mod pairs;
mod report;
mod text;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use golodscope_core::{
    characteristic_scan, glued_disc, golod_in_primes, golod_outside_primes, hochster_betti,
    hochster_betti_multigraded, parse_facet_file, product_trivial_up_to, serre_rhs_series, write_facet_file,
    FieldSpec, PairScope, SimplicialComplex, DEFAULT_TRUNCATION,
};

use report::{AnalysisReport, BettiReport, ComplexSummary, FieldSection, ScanReport, SeriesReport, VerdictReport};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NONTRIVIAL: u8 = 3;

#[derive(Parser)]
#[command(name = "golodscope", version, about = "Betti tables and Koszul-product triviality of Stanley-Reisner rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, env = "GOLODSCOPE_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    All,
    Pruned,
    Critical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Trivial product exactly in the listed characteristics.
    Delta,
    /// Trivial product exactly outside the listed characteristics.
    Gamma,
    /// The disc glued N times around a triangle.
    Delta1,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti numbers via Hochster's formula.
    Betti {
        input: PathBuf,
        /// `q` or `f<p>` for a prime p.
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Also list the contribution of each squarefree multidegree.
        #[arg(long)]
        multigraded: bool,
    },
    /// Decide whether the product on Koszul homology is trivial.
    Check {
        input: PathBuf,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long, value_enum, default_value_t = Scope::Pruned)]
        pairs: Scope,
        /// Triples for `--pairs critical`, one `<i> : <I labels> | <J labels>` per line.
        #[arg(long)]
        pair_file: Option<PathBuf>,
        /// Only test degrees up to this bound.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Write the facet file of a named construction.
    Construct {
        #[arg(long, value_enum)]
        variant: Variant,
        /// Comma-separated primes, for `delta` and `gamma`.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Winding number, for `delta1`.
        #[arg(long)]
        n: Option<usize>,
        /// Output path (default: standard output).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find the characteristics in which the verdict differs from the rational one.
    Scan { input: PathBuf },
    /// The truncated upper bound for the Poincaré series.
    Series {
        input: PathBuf,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncate: usize,
    },
}

/// Errors in the request itself, as opposed to its inputs.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_facet_file(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(format: Format, report: &AnalysisReport) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Text => print!("{}", text::render(report)),
    }
    Ok(())
}

fn scope_name(scope: Scope) -> &'static str {
    match scope {
        Scope::All => "all",
        Scope::Pruned => "pruned",
        Scope::Critical => "critical",
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Betti { input, field, multigraded } => {
            let c = read_complex(&input)?;
            let table = if multigraded { hochster_betti_multigraded(&c, field)? } else { hochster_betti(&c, field)? };
            let mut section = FieldSection::new(field.to_string());
            section.regularity = Some(table.regularity());
            section.betti = Some(BettiReport::of(&c, &table));
            let report =
                AnalysisReport { command: "betti", complex: ComplexSummary::of(&c), sections: vec![section], scan: None };
            emit(cli.format, &report)?;
            Ok(0)
        }
        Command::Check { input, field, pairs, pair_file, max_degree } => {
            let c = read_complex(&input)?;
            let scope = match (pairs, pair_file) {
                (Scope::All, None) => PairScope::All,
                (Scope::Pruned, None) => PairScope::Pruned,
                (Scope::Critical, Some(path)) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    PairScope::Critical(pairs::parse_pair_file(&c, &text)?)
                }
                (Scope::Critical, None) => return Err(usage("--pairs critical needs --pair-file")),
                (_, Some(_)) => return Err(usage("--pair-file only applies to --pairs critical")),
            };
            let verdict = product_trivial_up_to(&c, field, &scope, max_degree)?;
            let mut section = FieldSection::new(field.to_string());
            section.verdict = Some(VerdictReport::of(&c, scope_name(pairs), &verdict));
            let report =
                AnalysisReport { command: "check", complex: ComplexSummary::of(&c), sections: vec![section], scan: None };
            emit(cli.format, &report)?;
            Ok(if verdict.product_trivial { 0 } else { EXIT_NONTRIVIAL })
        }
        Command::Construct { variant, primes, n, output } => {
            let complex = match variant {
                Variant::Delta1 => {
                    let n = n.ok_or_else(|| usage("--variant delta1 needs --n"))?;
                    glued_disc(n).map_err(|e| usage(e.to_string()))?
                }
                Variant::Delta | Variant::Gamma => {
                    let primes: BTreeSet<u64> = primes.into_iter().collect();
                    let built = if variant == Variant::Delta {
                        golod_in_primes(&primes)
                    } else {
                        golod_outside_primes(&primes)
                    };
                    built.map_err(|e| usage(e.to_string()))?
                }
            };
            let text = write_facet_file(&complex);
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Scan { input } => {
            let c = read_complex(&input)?;
            let scan = characteristic_scan(&c)?;
            let report = AnalysisReport {
                command: "scan",
                complex: ComplexSummary::of(&c),
                sections: Vec::new(),
                scan: Some(ScanReport::of(&scan)),
            };
            emit(cli.format, &report)?;
            Ok(0)
        }
        Command::Series { input, field, truncate } => {
            let c = read_complex(&input)?;
            let table = hochster_betti(&c, field)?;
            let mut section = FieldSection::new(field.to_string());
            section.series = Some(SeriesReport::of(&serre_rhs_series(&table, truncate)));
            let report =
                AnalysisReport { command: "series", complex: ComplexSummary::of(&c), sections: vec![section], scan: None };
            emit(cli.format, &report)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.is::<UsageError>() { EXIT_USAGE } else { EXIT_INPUT })
        }
    }
}
