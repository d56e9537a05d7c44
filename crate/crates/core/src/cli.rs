//! Command-line front end. Standard output carries JSON or CSV only; logs and
//! errors go to standard error.
//!
//! Exit codes: 0 pass, 2 a check failed, 1 usage or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use log::info;
use serde::Serialize;

use crate::certificates::{clique_certificate, rank_certificate, transversal_certificate};
use crate::constructions::{Built, Family};
use crate::network::{Label, Network, TranspositionSeq};
use crate::search::{certify_minimality, exhaust_reach2, Minimality, Outcome, SearchOptions};
use crate::verify::{
    check_division, check_full_uniform, check_pair_uniform, check_reachability, check_strong1,
    check_strong2, CheckOptions, Verdict, DEFAULT_TOLERANCE,
};
use crate::numeric::DEFAULT_PRECISION_BITS;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

/// Largest size `table` accepts.
pub const TABLE_MAX_N: u32 = 64;

const FORMATS: &str = "\
File formats:
  *.shuffle.json  {\"convention\": \"execution-order\", \"n\": N,
                   \"swaps\": [{\"a\": A, \"b\": B, \"p\": P}, ...]}
                  swaps act in list order; P is {\"rat\": {\"num\": \"1\", \"den\": \"3\"}}
                  or {\"surd\": {\"a\": [n, d], \"b\": [n, d], \"c\": [n, d]}} for a + b*sqrt(c)
  *.reach.json    {\"n\": N, \"swaps\": [[A, B], ...]}
  table CSV       family,n,length,paper_bound,verdict

Exit codes: 0 pass, 2 check failed, 1 usage or I/O error.";

#[derive(Parser, Debug)]
#[command(name = "shufflenet", version, about = "Build, verify and certify lazy-transposition shuffle networks", after_help = FORMATS)]
struct Cli {
    /// Worker threads for parallel verification and search (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it to a file.
    ///
    /// Families: placement, ktuple:K (or ktuple with --k), u2, hypercube
    /// (n a power of two), strong1, reach2, division (even n), strong2.
    Build {
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Output path; defaults to FAMILY_N.shuffle.json or FAMILY_N.reach.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a check on a network or sequence file and print its verdict.
    ///
    /// Checks: strong1, pair:X,Y, strong2, division, full, reach.
    Verify {
        check: String,
        file: PathBuf,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Print the step trace of a lower-bound invariant.
    ///
    /// Invariants: rank (start pair from --start, default 1,2), transversal,
    /// clique (on a reach file).
    Certify {
        invariant: String,
        file: PathBuf,
        #[arg(long, default_value = "1,2")]
        start: String,
    },
    /// Exhaustive search for reaching sequences.
    ///
    /// With --length, decide whether that length suffices; without it,
    /// certify that the construction length is minimal.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Build and verify every table family up to --max-n and print a CSV.
    Table {
        #[arg(long, default_value_t = 16)]
        max_n: u32,
        /// Also write the CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct NumericArgs {
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
    precision_bits: u32,
}

impl NumericArgs {
    fn options(self) -> CheckOptions {
        CheckOptions {
            tol: self.tol,
            precision_bits: self.precision_bits,
        }
    }
}

/// A usage or I/O problem; maps to exit code 1.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Ran = Result<bool, Usage>;

/// Parse `args` (including the program name), run the command and return the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, cli.jobs, &mut buf)),
            Err(e) => Err(Usage(e.to_string())),
        },
        None => dispatch(cli.command, None, &mut buf),
    };
    let result = result.and_then(|pass| {
        out.write_all(&buf)?;
        out.flush()?;
        Ok(pass)
    });
    match result {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, jobs: Option<usize>, out: &mut dyn Write) -> Ran {
    match command {
        Command::Build { family, n, k, out: path } => cmd_build(&family, n, k, path, out),
        Command::Verify { check, file, numeric } => cmd_verify(&check, &file, numeric.options(), out),
        Command::Certify { invariant, file, start } => cmd_certify(&invariant, &file, &start, out),
        Command::Search { n, length, max_nodes } => {
            let opts = SearchOptions {
                max_nodes,
                jobs: jobs.unwrap_or(1),
            };
            cmd_search(n, length, opts, out)
        }
        Command::Table { max_n, out: path, numeric } => cmd_table(max_n, path, numeric.options(), out),
    }
}

fn parse_family(name: &str, k: Option<u32>) -> Result<Family, Usage> {
    match (name, k) {
        ("ktuple", Some(k)) => Ok(Family::KTuple(k)),
        ("ktuple", None) => Err(Usage("ktuple needs --k or the form ktuple:K".into())),
        (_, Some(_)) if !name.starts_with("ktuple") => {
            Err(Usage(format!("--k only applies to ktuple, not {name}")))
        }
        _ => Ok(name.parse()?),
    }
}

#[derive(Serialize)]
struct BuildSummary<'a> {
    family: String,
    n: u32,
    length: usize,
    paper_bound: u64,
    bound_is_tight: bool,
    file: &'a Path,
}

fn cmd_build(name: &str, n: u32, k: Option<u32>, path: Option<PathBuf>, out: &mut dyn Write) -> Ran {
    let family = parse_family(name, k)?;
    let built = family.build(n)?;
    let path = path.unwrap_or_else(|| {
        let stem = family.name().replace(':', "");
        PathBuf::from(format!("{stem}_{n}.{}", built.extension()))
    });
    fs::write(&path, built.encode()).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let ledger = family.ledger(n, built.len());
    info!("built {family} on {n} points: {} swaps, bound {}", built.len(), ledger.bound);
    emit(
        out,
        &BuildSummary {
            family: family.name(),
            n,
            length: built.len(),
            paper_bound: ledger.bound,
            bound_is_tight: ledger.tight,
            file: &path,
        },
    )?;
    Ok(true)
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Usage> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn read(path: &Path) -> Result<Vec<u8>, Usage> {
    fs::read(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_network(path: &Path) -> Result<Network, Usage> {
    Network::decode(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_seq(path: &Path) -> Result<TranspositionSeq, Usage> {
    TranspositionSeq::decode(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn parse_pair(text: &str) -> Result<(Label, Label), Usage> {
    let bad = || Usage(format!("expected a pair X,Y, got {text:?}"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

fn run_check(check: &str, file: &Path, opts: CheckOptions) -> Result<Verdict, Usage> {
    if check == "reach" {
        return Ok(check_reachability(&read_seq(file)?));
    }
    let net = read_network(file)?;
    Ok(match check {
        "strong1" => check_strong1(&net, opts),
        "strong2" => check_strong2(&net, opts),
        "division" => check_division(&net, opts)?,
        "full" => check_full_uniform(&net, opts)?,
        _ => match check.strip_prefix("pair:") {
            Some(pair) => {
                let (x, y) = parse_pair(pair)?;
                check_pair_uniform(&net, x, y, opts)?
            }
            None => return Err(Usage(format!("unknown check {check:?}"))),
        },
    })
}

fn cmd_verify(check: &str, file: &Path, opts: CheckOptions, out: &mut dyn Write) -> Ran {
    let verdict = run_check(check, file, opts)?;
    info!("{check} on {}: {}", file.display(), if verdict.pass { "pass" } else { "fail" });
    writeln!(out, "{}", verdict.to_json())?;
    Ok(verdict.pass)
}

fn cmd_certify(invariant: &str, file: &Path, start: &str, out: &mut dyn Write) -> Ran {
    let (json, pass, bound) = match invariant {
        "rank" => {
            let (x, y) = parse_pair(start)?;
            let net = read_network(file)?;
            let trace = rank_certificate(&net, x, y)?;
            (trace.to_json(), trace.verdict.pass, trace.implied_lower_bound)
        }
        "transversal" => {
            let trace = transversal_certificate(&read_network(file)?);
            (trace.to_json(), trace.verdict.pass, trace.implied_lower_bound)
        }
        "clique" => {
            let trace = clique_certificate(&read_seq(file)?)?;
            (trace.to_json(), trace.verdict.pass, trace.implied_lower_bound)
        }
        _ => return Err(Usage(format!("unknown invariant {invariant:?}"))),
    };
    info!("{invariant} trace on {}: implied lower bound {bound}", file.display());
    writeln!(out, "{json}")?;
    Ok(pass)
}

fn cmd_search(n: u32, length: Option<usize>, opts: SearchOptions, out: &mut dyn Write) -> Ran {
    match length {
        Some(length) => {
            let report = exhaust_reach2(n, length, opts)?;
            info!("searched {} nodes in {:.1} ms", report.nodes, report.elapsed_ms);
            emit(out, &report)?;
            Ok(report.outcome != Outcome::Inconclusive)
        }
        None => {
            let report = certify_minimality(n, opts)?;
            info!("searched {} nodes in {:.1} ms", report.nodes, report.elapsed_ms);
            writeln!(out, "{}", report.to_json())?;
            Ok(report.verdict == Minimality::Minimal)
        }
    }
}

/// One verified row of the bounds table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub n: u32,
    pub length: usize,
    pub paper_bound: u64,
    pub verdict: String,
}

/// Build and check every table family for `2 <= n <= max_n`, in family then
/// size order.
pub fn bounds_table(max_n: u32, opts: CheckOptions) -> Result<Vec<TableRow>, String> {
    if max_n > TABLE_MAX_N {
        return Err(format!("--max-n is limited to {TABLE_MAX_N}, got {max_n}"));
    }
    let mut rows = Vec::new();
    for family in Family::TABLE {
        for n in (2..=max_n).filter(|&n| family.accepts(n)) {
            let built = family.build(n).map_err(|e| e.to_string())?;
            let pass = match (&family, &built) {
                (Family::U2, Built::Network(net)) => {
                    check_pair_uniform(net, 1, 2, opts).map_err(|e| e.to_string())?.pass
                }
                (Family::Strong1, Built::Network(net)) => check_strong1(net, opts).pass,
                (Family::Division, Built::Network(net)) => {
                    check_division(net, opts).map_err(|e| e.to_string())?.pass
                        && check_strong1(net, opts).pass
                }
                (Family::Strong2, Built::Network(net)) => check_strong2(net, opts).pass,
                (Family::Reach2, Built::Seq(seq)) => check_reachability(seq).pass,
                _ => unreachable!("table families build their own kind"),
            };
            let ledger = family.ledger(n, built.len());
            info!("{family} n={n}: length {} bound {} {}", built.len(), ledger.bound, pass);
            rows.push(TableRow {
                family: family.name(),
                n,
                length: built.len(),
                paper_bound: ledger.bound,
                verdict: if pass && ledger.holds() { "pass" } else { "fail" }.to_string(),
            });
        }
    }
    Ok(rows)
}

fn cmd_table(max_n: u32, path: Option<PathBuf>, opts: CheckOptions, out: &mut dyn Write) -> Ran {
    let rows = bounds_table(max_n, opts).map_err(Usage)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| Usage(e.to_string()))?;
    if let Some(path) = path {
        fs::write(&path, &bytes).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    }
    out.write_all(&bytes)?;
    Ok(rows.iter().all(|r| r.verdict == "pass"))
}
