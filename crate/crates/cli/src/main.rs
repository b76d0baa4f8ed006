use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use distinguishing::enumerate::{census, CensusOptions, GeneratorConfig};
use distinguishing::oracle::{self, OracleConfig};
use distinguishing::report::{classify, cross_check, Family};
use distinguishing::rooted::root_at;
use distinguishing::verify::{verify, Claim, VerifyConfig};
use distinguishing::{parse_graph, Error, Graph};
use serde_json::json;

#[derive(Parser)]
#[command(name = "distinguish", version, about = "Distinguishing number and index of trees and unicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph given as an edge list ("-" reads standard input).
    Compute {
        path: PathBuf,
        /// Recompute D and D' by brute force and re-check witnesses.
        #[arg(long)]
        oracle: bool,
        /// Include witness labelings in the report.
        #[arg(long)]
        witness: bool,
    },
    /// Check a claim about D and D' on every graph up to an order.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        max_n: usize,
        /// Also recompute everything by brute force up to this order.
        #[arg(long)]
        oracle_max_n: Option<usize>,
        #[arg(long, env = "DISTINGUISH_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Write one JSON report per generated graph.
    Census {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        filter: Vec<FilterArg>,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        oracle_max_n: Option<usize>,
        #[arg(long, env = "DISTINGUISH_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Automorphism group order (and the permutations with --list).
    Aut {
        path: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Distinguishing number by exhaustive search.
    #[command(name = "D")]
    D { path: PathBuf },
    /// Distinguishing index by exhaustive search.
    #[command(name = "Dprime")]
    Dprime { path: PathBuf },
    /// Number of distinguishing edge k-labelings of a rooted tree, up to
    /// rooted isomorphism.
    Classes {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    /// D' = D + 1 exactly on the extremal tree family, D' = D otherwise.
    #[value(alias = "1")]
    Trees,
    /// D' = D on connected unicyclic graphs.
    #[value(alias = "2")]
    Unicyclic,
    /// D' <= D + 1 on both families.
    Bound,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Tree,
    Unicyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    #[value(name = "in-T")]
    InT,
    Bicentric,
}

enum Failure {
    Lib(Error),
    BadArgs(String),
    Violations(usize),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violations(_) => 1,
            Failure::BadArgs(_) => 2,
            Failure::Io(..) => 6,
            Failure::Lib(e) => match e {
                Error::Parse { .. }
                | Error::EdgeCountMismatch { .. }
                | Error::MissingHeader
                | Error::InvalidGraph(_)
                | Error::InvalidPermutation(_)
                | Error::InvalidLabeling(_)
                | Error::DomainMismatch(_) => 2,
                Error::NotATree
                | Error::NotUnicyclic
                | Error::Unsupported
                | Error::OrderTooSmall { .. }
                | Error::NoDistinguishingLabeling(_) => 3,
                Error::OracleDisagreement(_) | Error::NotDistinguishing | Error::Internal(_) => 4,
                Error::SizeBound { .. } | Error::BudgetExceeded(_) => 5,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::BadArgs(m) => m.clone(),
            Failure::Violations(n) => format!("{n} violation(s)"),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(path.into(), e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))?
    };
    Ok(parse_graph(&text)?)
}

fn compute(path: &Path, with_oracle: bool, witness: bool) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let mut report = classify(&g, witness || with_oracle)?;
    if with_oracle {
        cross_check(&g, &mut report, &OracleConfig::default())?;
        if !witness {
            report.witness_vertex = None;
            report.witness_edge = None;
        }
    }
    println!("{}", report.to_json());
    Ok(())
}

fn run_verify(theorem: TheoremArg, max_n: usize, oracle_max_n: Option<usize>, jobs: usize) -> Result<(), Failure> {
    if max_n < 3 {
        return Err(Failure::BadArgs(Error::OrderTooSmall { required: 3, actual: max_n }.to_string()));
    }
    let claim = match theorem {
        TheoremArg::Trees => Claim::Trees,
        TheoremArg::Unicyclic => Claim::Unicyclic,
        TheoremArg::Bound => Claim::Bound,
    };
    let mut cfg = VerifyConfig::new(claim, max_n);
    cfg.oracle_max_n = oracle_max_n;
    cfg.jobs = jobs.max(1);
    let summary = verify(&cfg)?;
    eprintln!("{summary}");
    for v in &summary.violations {
        println!("{v}");
    }
    if summary.is_clean() {
        Ok(())
    } else {
        Err(Failure::Violations(summary.violations.len()))
    }
}

fn run_census(
    family: FamilyArg,
    max_n: usize,
    filters: &[FilterArg],
    out: Option<&Path>,
    oracle_max_n: Option<usize>,
    jobs: usize,
) -> Result<(), Failure> {
    let family = match family {
        FamilyArg::Tree => Family::Tree,
        FamilyArg::Unicyclic => Family::Unicyclic,
    };
    if max_n < family.min_order() {
        return Err(Failure::BadArgs(
            Error::OrderTooSmall { required: family.min_order(), actual: max_n }.to_string(),
        ));
    }
    let mut cfg = GeneratorConfig::new(family, max_n);
    cfg.in_family_t_only = filters.contains(&FilterArg::InT);
    cfg.bicentric_only = filters.contains(&FilterArg::Bicentric);
    let opts = CensusOptions {
        oracle_max_n,
        jobs: jobs.max(1),
        ..Default::default()
    };
    let io_err = |e| Failure::Io(out.map_or_else(|| "<stdout>".into(), Path::to_path_buf), e);
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(fs::File::create(p).map_err(io_err)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let mut written = 0usize;
    for item in census(&cfg, &opts)? {
        let (_, report) = item?;
        writeln!(sink, "{}", report.to_json()).map_err(io_err)?;
        written += 1;
    }
    sink.flush().map_err(io_err)?;
    eprintln!("{written} report(s)");
    Ok(())
}

fn run_oracle(cmd: &OracleCommand) -> Result<(), Failure> {
    let value = match cmd {
        OracleCommand::Aut { path, list } => {
            let g = read_graph(path)?;
            let auts = oracle::automorphisms(&g)?;
            let mut v = json!({ "n": g.n(), "m": g.m(), "order": auts.len() });
            if *list {
                let perms: Vec<Vec<usize>> = auts.iter().map(|p| (0..g.n()).map(|i| p.apply(i)).collect()).collect();
                v["automorphisms"] = json!(perms);
            }
            v
        }
        OracleCommand::D { path } => {
            let g = read_graph(path)?;
            json!({ "n": g.n(), "m": g.m(), "D": oracle::brute_d(&g)? })
        }
        OracleCommand::Dprime { path } => {
            let g = read_graph(path)?;
            json!({ "n": g.n(), "m": g.m(), "Dprime": oracle::brute_dprime(&g)? })
        }
        OracleCommand::Classes { path, root, k } => {
            let g = read_graph(path)?;
            if *root >= g.n() {
                return Err(Failure::BadArgs(format!("root {root} out of range for n = {}", g.n())));
            }
            let r = root_at(&g, *root)?;
            json!({ "n": g.n(), "root": root, "k": k, "classes": oracle::brute_class_count(&r, *k)? })
        }
    };
    println!("{value}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { path, oracle, witness } => compute(path, *oracle, *witness),
        Command::Verify {
            theorem,
            max_n,
            oracle_max_n,
            jobs,
        } => run_verify(*theorem, *max_n, *oracle_max_n, *jobs),
        Command::Census {
            family,
            max_n,
            filter,
            out,
            oracle_max_n,
            jobs,
        } => run_census(*family, *max_n, filter, out.as_deref(), *oracle_max_n, *jobs),
        Command::Oracle(cmd) => run_oracle(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
