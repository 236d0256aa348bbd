//! Command-line front end for the identity catalog and the congruence lab.
//!
//! One verb per invocation: `verify` replays catalog identities as truncated
//! series equalities, `seq` prints single values, `cong` runs the congruence
//! batteries, `table` emits valuation grids, and `list` shows the catalog.
//! Exit code 0 means every requested check passed, 1 means at least one
//! failed, 2 means the invocation itself was malformed.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use umbra_core::catalog::{self, CapMap, Profile, Report};
use umbra_core::cong::{self, CongCheck};
use umbra_core::seq::{self, RouteCheck, SeqId};

#[derive(Parser)]
#[command(name = "umbra", version, about = "Exact umbral identity checks and 2-adic congruence tables")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Verify catalog identities coefficient by coefficient.
    Verify(VerifyArgs),
    /// Print one value of a named sequence or polynomial family.
    Seq(SeqArgs),
    /// Run a congruence battery over its standard range.
    Cong {
        #[command(subcommand)]
        check: CongCmd,
    },
    /// Emit a valuation table as CSV.
    Table {
        #[command(subcommand)]
        grid: TableCmd,
    },
    /// List every catalog entry with its default caps.
    List(ListArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify the whole catalog.
    #[arg(long)]
    all: bool,
    /// Verify one entry by id; repeat for several.
    #[arg(long = "id", value_name = "ID", conflicts_with = "all")]
    ids: Vec<String>,
    /// Cap preset: quick uses each entry's defaults, full raises them by one.
    #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
    profile: ProfileArg,
    /// Override one series cap, e.g. --cap x=8; repeat for several.
    #[arg(long = "cap", value_name = "VAR=N", value_parser = parse_cap)]
    caps: Vec<(String, u32)>,
    /// Worker threads; defaults to the available cores.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Write the reports as a JSON array to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Args)]
struct SeqArgs {
    /// Family name, e.g. bernoulli, zagier-bstar, genocchi, charlier.
    name: String,
    /// Index into the family.
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Order parameter for gen-euler, xsech-gen, stirling2,
    /// carlitz-hermite, and zeil-hermite; for stirling2 it is
    /// the top index, so S(5, 2) is --m 5 --n 2.
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Subcommand)]
enum CongCmd {
    /// Reduced Bernoulli congruences and the median Genocchi refinements.
    Refinements {
        #[arg(long, default_value_t = 12)]
        nmax: u32,
    },
    /// Exact 2-adic valuation of the alternating Euler sums.
    Frobenius {
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        #[arg(long, default_value_t = 6)]
        jmax: u32,
    },
    /// Touchard and Carlitz congruences for the Bell numbers.
    Bell {
        /// Primes to test, comma separated.
        #[arg(long = "p", value_delimiter = ',', default_values_t = vec![2u64, 3, 5, 7, 11, 13])]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 40)]
        nmax: u32,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
    /// Kummer-type transfer for the order-m generalized Euler numbers mod p.
    Kummer {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        #[arg(long, default_value_t = 8)]
        jmax: u32,
    },
    /// Second-order instance of the transfer, checked against plain Euler numbers.
    KummerEuler {
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, default_value_t = 6)]
        jmax: u32,
    },
    /// Structural congruence for the u-parametrized family, at random polynomials.
    KummerStructural {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Compare every sequence that has two independent computation routes.
    Routes,
    /// Run the whole battery at its standard ranges.
    All,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Valuations of the alternating Bernoulli sums against their lower bound.
    Tau {
        #[arg(long, default_value_t = 8)]
        jmax: u32,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        /// Write the grid to this path instead of stdout.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Valuations of the alternating x sech x sums against the exact formula.
    Mu {
        #[arg(long, default_value_t = 7)]
        jmax: u32,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        /// Write the grid to this path instead of stdout.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Observed valuations for the open generalized-Euler question; never a gate.
    Probe {
        #[arg(long, default_value_t = 2)]
        tmax: u32,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, default_value_t = 4)]
        jmax: u32,
        /// Write the grid to this path instead of stdout.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ListArgs {
    /// Write the catalog metadata as a JSON array to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

fn parse_cap(s: &str) -> Result<(String, u32), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected VAR=N, got {:?}", s))?;
    if name.is_empty() {
        return Err(format!("expected VAR=N, got {:?}", s));
    }
    let value = value
        .parse::<u32>()
        .map_err(|e| format!("bad cap for {:?}: {}", name, e))?;
    Ok((name.to_string(), value))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.verb {
        Verb::Verify(args) => run_verify(args),
        Verb::Seq(args) => run_seq(args),
        Verb::Cong { check } => run_cong(check),
        Verb::Table { grid } => run_table(grid),
        Verb::List(args) => run_list(args),
    }
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct MismatchJson {
    monomial: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportJson {
    id: String,
    caps: BTreeMap<String, u32>,
    status: &'static str,
    mismatch: Option<MismatchJson>,
    millis: u64,
}

fn report_json(r: &Report) -> ReportJson {
    ReportJson {
        id: r.id.clone(),
        caps: r.caps.iter().cloned().collect(),
        status: if r.ok { "pass" } else { "fail" },
        mismatch: r.mismatch.as_ref().map(|m| MismatchJson {
            monomial: m.monomial.clone(),
            lhs: m.lhs.clone(),
            rhs: m.rhs.clone(),
        }),
        millis: r.millis,
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    if !args.all && args.ids.is_empty() {
        eprintln!("verify needs --all or at least one --id; see `umbra list`");
        return ExitCode::from(2);
    }
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            eprintln!("--jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    let overrides: CapMap = args.caps.iter().cloned().collect();
    let profile = match args.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };

    let reports: Vec<Report> = if args.all {
        catalog::verify_all(profile, &overrides)
    } else {
        let known: BTreeSet<String> = catalog::catalog_list().into_iter().map(|m| m.id).collect();
        if let Some(bad) = args.ids.iter().find(|id| !known.contains(*id)) {
            eprintln!("unknown identity id {:?}; see `umbra list`", bad);
            return ExitCode::from(2);
        }
        let wanted: BTreeSet<&str> = args.ids.iter().map(String::as_str).collect();
        catalog::entries()
            .into_par_iter()
            .filter(|e| wanted.contains(e.id()))
            .map(|e| {
                let mut eff = overrides.clone();
                if profile == Profile::Full {
                    for (name, cap) in e.default_caps() {
                        eff.entry(name.to_string()).or_insert(cap + 1);
                    }
                }
                e.verify(&eff)
            })
            .collect()
    };

    for r in &reports {
        match &r.mismatch {
            None => println!("pass {} ({})", r.id, r.caps_string()),
            Some(m) => println!(
                "fail {} ({}) at {}: lhs = {}, rhs = {}",
                r.id,
                r.caps_string(),
                m.monomial,
                m.lhs,
                m.rhs
            ),
        }
    }
    let failed = reports.iter().filter(|r| !r.ok).count();
    println!("{} passed, {} failed", reports.len() - failed, failed);

    if let Some(path) = &args.json {
        let rows: Vec<ReportJson> = reports.iter().map(report_json).collect();
        let text = serde_json::to_string_pretty(&rows).expect("reports serialize");
        if let Err(e) = fs::write(path, text + "\n") {
            eprintln!("cannot write {}: {}", path.display(), e);
            return ExitCode::from(2);
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// ---------------------------------------------------------------------------
// seq

fn seq_id(name: &str, m: Option<u32>) -> Result<SeqId, String> {
    let takes_m = matches!(
        name,
        "gen-euler" | "xsech-gen" | "stirling2" | "carlitz-hermite" | "zeil-hermite"
    );
    if m.is_some() && !takes_m {
        return Err(format!("--m does not apply to {:?}", name));
    }
    let m = || m.ok_or_else(|| format!("{:?} needs --m", name));
    Ok(match name {
        "bernoulli" => SeqId::Bernoulli,
        "bernoulli-tilde" => SeqId::BernoulliTilde,
        "zagier-bstar" => SeqId::ZagierBstar,
        "bell" => SeqId::Bell,
        "euler" => SeqId::Euler,
        "gen-euler" => SeqId::GenEuler(m()?),
        "tangent" => SeqId::Tangent,
        "genocchi" => SeqId::Genocchi,
        "median-genocchi" => SeqId::MedianGenocchi,
        "xsech" => SeqId::XSech,
        "xsech-gen" => SeqId::XSechGen(m()?),
        "derangement" => SeqId::Derangement,
        "stirling2" => SeqId::Stirling2(m()?),
        "fibonacci" => SeqId::Fibonacci,
        "lucas" => SeqId::Lucas,
        "charlier" => SeqId::Charlier,
        "hermite" => SeqId::Hermite,
        "carlitz-hermite" => SeqId::CarlitzHermite(m()?),
        "zeil-hermite" => SeqId::ZeilHermite(m()?),
        "rogers-szego" => SeqId::RogersSzego,
        "eulerian" => SeqId::Eulerian,
        "eulerian-tilde" => SeqId::EulerianTilde,
        other => return Err(format!("unknown sequence {:?}", other)),
    })
}

fn run_seq(args: SeqArgs) -> ExitCode {
    let id = match seq_id(&args.name, args.m) {
        Ok(id) => id,
        Err(msg) => {
            eprintln!("{}", msg);
            return ExitCode::from(2);
        }
    };
    let negatives_ok = matches!(id, SeqId::Fibonacci | SeqId::Lucas);
    if args.n < 0 && !negatives_ok {
        eprintln!("{} is defined for n >= 0 only", args.name);
        return ExitCode::from(2);
    }
    if id.is_scalar() {
        println!("{}", id.value(args.n));
    } else {
        println!("{}", id.poly(args.n as usize));
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// cong

fn print_checks(checks: &[CongCheck]) -> usize {
    let mut failed = 0;
    for c in checks {
        if c.ok {
            println!("ok   {}  [{}]", c.label, c.info);
        } else {
            failed += 1;
            println!("FAIL {}  [{}]", c.label, c.info);
        }
    }
    failed
}

fn print_routes(routes: &[RouteCheck]) -> usize {
    let mut failed = 0;
    for r in routes {
        if r.ok {
            println!("ok   routes-{}  [{}]", r.id, r.range);
        } else {
            failed += 1;
            println!(
                "FAIL routes-{}  [{}] first bad at {}",
                r.id,
                r.range,
                r.first_bad.as_deref().unwrap_or("?")
            );
        }
    }
    failed
}

fn finish_checks(failed: usize, total: usize) -> ExitCode {
    println!("{} passed, {} failed", total - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_cong(check: CongCmd) -> ExitCode {
    match check {
        CongCmd::Refinements { nmax } => {
            let checks = cong::refinement_checks(nmax);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::Frobenius { nmax, jmax } => {
            let checks = cong::frobenius_check(nmax, jmax);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::Bell { primes, nmax, kmax } => {
            let checks = cong::bell_congruences(&primes, nmax, kmax);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::Kummer { m, p, nmax, jmax } => {
            let checks = cong::kummer_transfer_check(m, p, nmax, jmax);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::KummerEuler { nmax, jmax } => {
            let checks = cong::kummer2_euler_check(nmax, jmax);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::KummerStructural { seed } => {
            let checks = cong::kummeru_structural_check(seed);
            finish_checks(print_checks(&checks), checks.len())
        }
        CongCmd::Routes => {
            let routes = seq::dual_route_report();
            finish_checks(print_routes(&routes), routes.len())
        }
        CongCmd::All => {
            let mut failed = 0;
            let mut total = 0;
            let mut batch = |checks: &[CongCheck]| {
                failed += print_checks(checks);
                total += checks.len();
            };
            batch(&cong::refinement_checks(12));
            batch(&cong::frobenius_check(8, 6));
            batch(&cong::bell_congruences(&[2, 3, 5, 7, 11, 13], 40, 6));
            for (m, p) in [(1u32, 2u64), (2, 3), (2, 5), (4, 5), (3, 7)] {
                batch(&cong::kummer_transfer_check(m, p, 4, 8));
            }
            batch(&cong::kummer2_euler_check(6, 6));
            batch(&cong::kummeru_structural_check(1));
            let routes = seq::dual_route_report();
            failed += print_routes(&routes);
            total += routes.len();
            for (table, label) in [
                (cong::check_tau(8, 8), "tau-table j <= 8, n <= 8"),
                (cong::check_mu(7, 8), "mu-table odd j <= 7, n <= 8"),
            ] {
                total += 1;
                if table.all_ok() {
                    println!("ok   {}  [{} rows]", label, table.rows.len());
                } else {
                    failed += 1;
                    println!("FAIL {}  [{} rows]", label, table.rows.len());
                }
            }
            finish_checks(failed, total)
        }
    }
}

// ---------------------------------------------------------------------------
// table

fn emit_csv(text: &str, rows: usize, csv: Option<&PathBuf>) -> Result<(), ExitCode> {
    match csv {
        None => print!("{}", text),
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("cannot write {}: {}", path.display(), e);
                return Err(ExitCode::from(2));
            }
            println!("wrote {} rows to {}", rows, path.display());
        }
    }
    Ok(())
}

fn run_table(grid: TableCmd) -> ExitCode {
    match grid {
        TableCmd::Tau { jmax, nmax, csv } => {
            let table = cong::check_tau(jmax, nmax);
            if let Err(code) = emit_csv(&table.to_csv(), table.rows.len(), csv.as_ref()) {
                return code;
            }
            if !table.all_ok() {
                eprintln!("tau table has rows outside the bound");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        TableCmd::Mu { jmax, nmax, csv } => {
            let table = cong::check_mu(jmax, nmax);
            if let Err(code) = emit_csv(&table.to_csv(), table.rows.len(), csv.as_ref()) {
                return code;
            }
            if !table.all_ok() {
                eprintln!("mu table has rows off the predicted valuation");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        TableCmd::Probe {
            tmax,
            nmax,
            jmax,
            csv,
        } => {
            let table = cong::conjecture_probe(tmax, nmax, jmax);
            match emit_csv(&table.to_csv(), table.rows.len(), csv.as_ref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(code) => code,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// list

#[derive(Serialize)]
struct EntryJson {
    id: String,
    description: String,
    caps: BTreeMap<String, u32>,
    basis_k: Option<u32>,
    ksum_bound: Option<u32>,
}

fn run_list(args: ListArgs) -> ExitCode {
    let metas = catalog::catalog_list();
    let id_width = metas.iter().map(|m| m.id.len()).max().unwrap_or(0);
    let caps_strings: Vec<String> = metas
        .iter()
        .map(|m| {
            m.default_caps
                .iter()
                .map(|(n, c)| format!("{}={}", n, c))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let caps_width = caps_strings.iter().map(String::len).max().unwrap_or(0);
    for (m, caps) in metas.iter().zip(&caps_strings) {
        println!(
            "{:<idw$}  {:<capw$}  {}",
            m.id,
            caps,
            m.description,
            idw = id_width,
            capw = caps_width
        );
    }
    println!("{} entries", metas.len());

    if let Some(path) = &args.json {
        let rows: Vec<EntryJson> = metas
            .iter()
            .map(|m| EntryJson {
                id: m.id.clone(),
                description: m.description.clone(),
                caps: m
                    .default_caps
                    .iter()
                    .map(|(n, c)| (n.to_string(), *c))
                    .collect(),
                basis_k: m.basis_k,
                ksum_bound: m.ksum_bound,
            })
            .collect();
        let text = serde_json::to_string_pretty(&rows).expect("catalog serializes");
        if let Err(e) = fs::write(path, text + "\n") {
            eprintln!("cannot write {}: {}", path.display(), e);
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}
