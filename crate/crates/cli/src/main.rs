//! `bicrossed`: build bicrossed products, enumerate matched pairs of cyclic
//! groups, classify the products and check them against semidirect
//! products.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use bicrossed_core::cyclic::SeedSpace;
use bicrossed_core::io::{
    ClassificationReport, EnumerationReport, FactorizationEntry, GroupFile, MatchedPairFile,
    TheoremReportJson,
};
use bicrossed_core::{
    classify, enumerate_matched_pairs, find_exact_factorizations, recover_matched_pair, verify_main_theorem,
    BicrossedGroup, FiniteGroup, DEFAULT_BUDGET,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "bicrossed",
    version,
    about = "Matched pairs and bicrossed products of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Include per-pair witness data in theorem reports.
    #[arg(long, global = true)]
    trace: bool,

    /// Largest number of candidates an exhaustive search may visit.
    #[arg(
        long,
        global = true,
        env = "BICROSSED_BUDGET",
        default_value_t = DEFAULT_BUDGET,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    budget: u64,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    parallelism: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build H ⋈ G from a matched-pair file and print its Cayley table.
    Construct {
        #[arg(long)]
        input: PathBuf,
    },
    /// List every matched pair (C_n, C_m).
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Enumerate the matched pairs (C_n, C_m) and group the products up to
    /// isomorphism.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Check that every C_p ⋈ C_m is a semidirect product of C_p and C_m.
    VerifyTheorem {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// List the exact factorizations of a group and their matched pairs.
    Factorize {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A rendered report: the JSON value and its text summary.
struct Report {
    json: String,
    text: String,
}

impl Report {
    fn new<T: Serialize>(value: &T, text: String) -> anyhow::Result<Self> {
        Ok(Report {
            json: serde_json::to_string(value)?,
            text,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let msg = format!("{err:#}");
            eprintln!("error: {msg}");
            if format == Format::Json {
                println!("{}", serde_json::json!({ "error": msg }));
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.parallelism {
        pool = pool.num_threads(k as usize);
    }
    let pool = pool.build().context("cannot start worker threads")?;
    let report = pool.install(|| execute(cli))?;
    let mut out = match cli.format {
        Format::Json => report.json,
        Format::Text => report.text,
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    match &cli.output {
        Some(path) => fs::write(path, out).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Construct { input } => construct(input),
        Command::Enumerate { n, m } => enumerate(*n as usize, *m as usize, cli.budget),
        Command::Classify { n, m } => classify_products(*n as usize, *m as usize, cli.budget),
        Command::VerifyTheorem { p, m } => verify_theorem(*p as usize, *m as usize, cli.budget, cli.trace),
        Command::Factorize { input } => factorize(input),
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn construct(input: &Path) -> anyhow::Result<Report> {
    let file: MatchedPairFile = serde_json::from_str(&read_input(input)?)
        .with_context(|| format!("{} is not a matched-pair file", input.display()))?;
    let pair = file.load()?;
    let product = BicrossedGroup::build(&pair)?;
    let group = product.group();
    let mut text = format!(
        "H ⋈ G with |H| = {}, |G| = {}: order {}, {}\norder profile {:?}\n",
        product.h_order(),
        product.g_order(),
        group.order(),
        if group.is_abelian() {
            "abelian"
        } else {
            "non-abelian"
        },
        group.order_profile().0,
    );
    for x in group.elements() {
        let row: Vec<String> = group.elements().map(|y| group.mul(x, y).to_string()).collect();
        writeln!(text, "{}", row.join(" "))?;
    }
    Report::new(&GroupFile::from_bicrossed(&product), text)
}

fn enumerate(n: usize, m: usize, budget: u64) -> anyhow::Result<Report> {
    let seeds = SeedSpace::new(n, m, budget)?.len();
    let pairs = enumerate_matched_pairs(n, m, budget)?;
    let report = EnumerationReport::new(n, m, seeds, &pairs);
    let mut text = format!(
        "{} matched pairs (C_{n}, C_{m}) among {seeds} seeds\n",
        pairs.len()
    );
    for (i, cp) in pairs.iter().enumerate() {
        writeln!(text, "#{i}: theta {:?} phi {:?}", cp.seed.theta, cp.seed.phi)?;
    }
    Report::new(&report, text)
}

fn classify_products(n: usize, m: usize, budget: u64) -> anyhow::Result<Report> {
    let pairs = enumerate_matched_pairs(n, m, budget)?;
    let groups = pairs
        .par_iter()
        .map(|cp| BicrossedGroup::build(&cp.pair).map(BicrossedGroup::into_group))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<FiniteGroup>, _>>()?;
    let classes = classify(&groups);
    let mut text = format!(
        "{} matched pairs (C_{n}, C_{m}), {} isomorphism classes\n",
        pairs.len(),
        classes.len()
    );
    for (i, c) in classes.iter().enumerate() {
        writeln!(
            text,
            "class {i}: order profile {:?}, pairs {:?}",
            c.order_profile.0, c.members
        )?;
    }
    let report = ClassificationReport {
        n,
        m,
        pairs: pairs.len(),
        classes,
    };
    Report::new(&report, text)
}

fn verify_theorem(p: usize, m: usize, budget: u64, trace: bool) -> anyhow::Result<Report> {
    let report = verify_main_theorem(p, m, budget)?;
    let json = TheoremReportJson::new(&report, trace);
    let b = &json.witness_branches;
    let mut text = format!(
        "C_{p} ⋈ C_{m}: {}/{} pairs matched a semidirect product (all_matched = {})\n\
         witness branches: NormalH {}, NormalG {}, Corrected {}\n",
        json.matches.len(),
        json.pairs.len(),
        json.all_matched,
        b.normal_h,
        b.normal_g,
        b.corrected,
    );
    for mt in &json.matches {
        let pair = &json.pairs[mt.pair];
        writeln!(
            text,
            "#{}: theta {:?} phi {:?} ≅ {} r={}",
            mt.pair, pair.theta, pair.phi, mt.orientation, mt.semidirect_r
        )?;
    }
    for w in json.witnesses.iter().flatten() {
        write!(
            text,
            "witness #{}: {} t={} ã={}",
            w.pair, w.orientation, w.t, w.a_tilde
        )?;
        if let Some(u) = w.u {
            write!(text, " c={} u={u} central {:?}", w.c, w.central_subgroup)?;
        }
        text.push('\n');
    }
    Report::new(&json, text)
}

fn factorize(input: &Path) -> anyhow::Result<Report> {
    let file: GroupFile = serde_json::from_str(&read_input(input)?)
        .with_context(|| format!("{} is not a group file", input.display()))?;
    let (group, _) = file.load()?;
    let entries = find_exact_factorizations(&group)
        .par_iter()
        .map(|f| recover_matched_pair(&group, f).map(|r| FactorizationEntry::new(f, &r)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = format!(
        "{} exact factorizations of a group of order {}\n",
        entries.len(),
        group.order()
    );
    for e in &entries {
        writeln!(text, "H {:?} G {:?}", e.h, e.g)?;
    }
    Report::new(&entries, text)
}
