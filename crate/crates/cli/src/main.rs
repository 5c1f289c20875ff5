//! `eo-lab`: verify identities, print tables and crank distributions, and trace bijections.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eolab_core::bijections::harness::{
    crank_harness, lemma2_harness, lemma3_harness, phi_harness, HarnessReport,
};
use eolab_core::bijections::{
    crank_bijection_inverse_traced, crank_bijection_traced, lemma2_forward_traced,
    lemma2_inverse_traced, lemma3_forward_traced, lemma3_inverse_traced, phi_forward_traced,
    phi_inverse_traced, BijectionTrace,
};
use eolab_core::identities::catalog::{self, VerifyParams};
use eolab_core::identities::{
    IdentityError, QMono, VerificationReport, ZChoice, EO2_MISPRINT_NOTE,
};
use eolab_core::overpartitions::eobar_table;
use eolab_core::partitions::{eo_table, gen_eo_star, EoRow, Partition};
use eolab_core::series::TruncOrder;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "eo-lab",
    version,
    about = "Partitions with even parts below odd parts: identities, tables, bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one catalog identity or the whole catalog.
    Verify(VerifyArgs),
    /// Counts split by the residue of the largest even part mod 4.
    Table(TableArgs),
    /// Even-odd crank distribution of the members of weight N.
    Crank(CrankArgs),
    /// Run a bijection exhaustively or trace it on one input.
    Bijection(BijectionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog name (see --list).
    #[arg(long, conflicts_with_all = ["all", "list"])]
    identity: Option<String>,
    /// Run every catalog entry with its default grid.
    #[arg(long)]
    all: bool,
    /// Print the catalog names and exit.
    #[arg(long)]
    list: bool,
    /// Truncation order: coefficients of q^0..q^N are compared.
    #[arg(long, env = "EO_LAB_ORDER", default_value_t = 30)]
    order: usize,
    /// Fix r instead of sweeping the default grid.
    #[arg(long)]
    r: Option<u32>,
    /// z for bailey-daum: `generic`, `zero`, or an exponent e meaning z = q^e.
    #[arg(long, value_parser = parse_z)]
    z: Option<ZChoice>,
    /// Exponent of a (qbinomial, heine3); omit for the a -> 0 case.
    #[arg(long)]
    a_exp: Option<usize>,
    /// Sign of a (qbinomial).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_sign)]
    a_sign: i64,
    /// Exponent of b (heine3); omit for b -> 0.
    #[arg(long)]
    b_exp: Option<usize>,
    /// Exponent of c (heine3).
    #[arg(long)]
    c_exp: Option<usize>,
    /// Exponent of z (qbinomial, heine3).
    #[arg(long)]
    z_exp: Option<usize>,
    /// Sign of z (qbinomial).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_sign)]
    z_sign: i64,
    /// Base p = q^base (qbinomial).
    #[arg(long)]
    base: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Eo,
    Eobar,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    /// Largest weight in the table.
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CrankArgs {
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Phi,
    Lemma2,
    Lemma3,
    Crank,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    map: MapName,
    #[arg(long, default_value_t = 0)]
    r: u32,
    /// Check every input up to --max-weight.
    #[arg(long, conflicts_with = "trace", required_unless_present = "trace")]
    exhaustive: bool,
    /// Largest input weight for --exhaustive.
    #[arg(long, default_value_t = 12)]
    max_weight: usize,
    /// Print each step of the map on one input.
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    inputs: TraceInputs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Partition literals: comma-separated positive parts in any order; `empty` or "" for ∅.
#[derive(Args)]
struct TraceInputs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    pi: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    nu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    lstar: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    pstar: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mustar: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    nustar: Option<Partition>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s.eq_ignore_ascii_case("empty") {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad part {x:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::from_unsorted(parts).map_err(|e| e.to_string())
}

fn parse_z(s: &str) -> Result<ZChoice, String> {
    match s {
        "generic" => Ok(ZChoice::Generic),
        "zero" => Ok(ZChoice::Zero),
        e => e
            .parse()
            .map(ZChoice::QPower)
            .map_err(|_| format!("expected generic, zero or a nonnegative exponent, got {e:?}")),
    }
}

fn parse_sign(s: &str) -> Result<i64, String> {
    match s {
        "1" | "+1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("sign must be 1 or -1, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Verify(args) => cmd_verify(args, &mut out),
        Command::Table(args) => cmd_table(args, &mut out),
        Command::Crank(args) => cmd_crank(args, &mut out),
        Command::Bijection(args) => cmd_bijection(args, &mut out),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("eo-lab: {e}");
            ExitCode::from(FAIL)
        }
    }
}

fn write_json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn cmd_verify(args: VerifyArgs, out: &mut impl Write) -> io::Result<u8> {
    if args.list {
        for name in catalog::NAMES {
            writeln!(out, "{name}")?;
        }
        return Ok(PASS);
    }
    let params = VerifyParams {
        r: args.r,
        z: args.z,
        a: args.a_exp.map(|e| QMono::new(args.a_sign, e)),
        b_exp: args.b_exp,
        c_exp: args.c_exp,
        z_mono: args.z_exp.map(|e| QMono::new(args.z_sign, e)),
        base: args.base,
    };
    let order = TruncOrder(args.order);
    let result = match (&args.identity, args.all) {
        (Some(name), _) => match catalog::run(name, order, &params) {
            Some(r) => r,
            None => {
                eprintln!(
                    "eo-lab: unknown identity {name:?}; known: {}",
                    catalog::NAMES.join(", ")
                );
                return Ok(USAGE);
            }
        },
        (None, true) => catalog::run_all(order, &params),
        (None, false) => {
            eprintln!("eo-lab: pass --identity NAME, --all or --list");
            return Ok(USAGE);
        }
    };
    let reports = match result {
        Ok(r) => r,
        Err(IdentityError::Parameter(msg)) => {
            eprintln!("eo-lab: {msg}");
            return Ok(USAGE);
        }
        Err(e) => {
            eprintln!("eo-lab: {e}");
            return Ok(FAIL);
        }
    };
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                reports: &'a [VerificationReport],
            }
            write_json(out, &Doc { reports: &reports })?;
        }
        Format::Text | Format::Csv => {
            for r in &reports {
                writeln!(out, "{}", r.summary())?;
                for note in &r.notes {
                    writeln!(out, "  note: {note}")?;
                }
                if let eolab_core::identities::Outcome::Fail(
                    eolab_core::identities::Failure::Mismatch { witnesses, .. },
                ) = &r.outcome
                {
                    for w in witnesses {
                        writeln!(out, "  witness: {w}")?;
                    }
                }
            }
        }
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        PASS
    } else {
        FAIL
    })
}

fn cmd_table(args: TableArgs, out: &mut impl Write) -> io::Result<u8> {
    let rows = match args.kind {
        TableKind::Eo => {
            if args.max_n >= 8 {
                eprintln!("note: {EO2_MISPRINT_NOTE}");
            }
            eo_table(args.max_n)
        }
        TableKind::Eobar => eobar_table(args.max_n),
    };
    write_rows(out, &rows, args.format)?;
    Ok(PASS)
}

fn write_rows(out: &mut impl Write, rows: &[EoRow], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                rows: &'a [EoRow],
            }
            write_json(out, &Doc { rows })
        }
        Format::Csv => {
            writeln!(out, "n,c0,c2")?;
            for r in rows {
                writeln!(out, "{},{},{}", r.n, r.c0, r.c2)?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{:>4} {:>12} {:>12}", "n", "c0", "c2")?;
            for r in rows {
                writeln!(out, "{:>4} {:>12} {:>12}", r.n, r.c0, r.c2)?;
            }
            Ok(())
        }
    }
}

fn cmd_crank(args: CrankArgs, out: &mut impl Write) -> io::Result<u8> {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for p in gen_eo_star(args.n) {
        *counts.entry(p.eoc()).or_default() += 1;
    }
    #[derive(Serialize)]
    struct Entry {
        eoc: i64,
        count: u64,
    }
    let entries: Vec<Entry> = counts
        .into_iter()
        .rev()
        .map(|(eoc, count)| Entry { eoc, count })
        .collect();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                n: usize,
                cranks: Vec<Entry>,
            }
            write_json(
                out,
                &Doc {
                    n: args.n,
                    cranks: entries,
                },
            )?;
        }
        Format::Csv => {
            writeln!(out, "eoc,count")?;
            for e in &entries {
                writeln!(out, "{},{}", e.eoc, e.count)?;
            }
        }
        Format::Text => {
            writeln!(out, "{:>6} {:>10}", "eoc", "count")?;
            for e in &entries {
                writeln!(out, "{:>6} {:>10}", e.eoc, e.count)?;
            }
        }
    }
    Ok(PASS)
}

fn cmd_bijection(args: BijectionArgs, out: &mut impl Write) -> io::Result<u8> {
    if args.exhaustive {
        let report = match args.map {
            MapName::Phi => phi_harness(args.r, args.max_weight),
            MapName::Lemma2 => lemma2_harness(args.r, args.max_weight),
            MapName::Lemma3 => lemma3_harness(args.r, args.max_weight),
            MapName::Crank => crank_harness(args.r, args.max_weight),
        };
        write_harness(out, &report, args.format)?;
        return Ok(if report.passed() { PASS } else { FAIL });
    }
    trace_one(&args, out)
}

fn write_harness(out: &mut impl Write, report: &HarnessReport, format: Format) -> io::Result<()> {
    if let Format::Json = format {
        return write_json(out, report);
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{status} {} r={} max-weight={}: {} inputs checked, {} failures",
        report.map, report.r, report.max_weight, report.checked, report.failure_count
    )?;
    for (case, count) in &report.case_counts {
        writeln!(out, "  {case}: {count}")?;
    }
    for f in &report.failures {
        writeln!(out, "  failure: {f}")?;
    }
    Ok(())
}

type Pair<'a> = (&'a Partition, &'a Partition);

/// Picks the direction from which pair of inputs was given.
fn trace_one(args: &BijectionArgs, out: &mut impl Write) -> io::Result<u8> {
    let i = &args.inputs;
    fn both<'a>(
        a: &'static str,
        x: &'a Option<Partition>,
        b: &'static str,
        y: &'a Option<Partition>,
    ) -> Option<(Pair<'a>, [&'static str; 2])> {
        Some(((x.as_ref()?, y.as_ref()?), [a, b]))
    }
    let (fwd, inv) = match args.map {
        MapName::Phi => (
            both("lambda", &i.lambda, "pi", &i.pi),
            both("mu", &i.mu, "nu", &i.nu),
        ),
        MapName::Lemma2 => (
            both("lambda", &i.lambda, "pi", &i.pi),
            both("lstar", &i.lstar, "pstar", &i.pstar),
        ),
        MapName::Lemma3 => (
            both("mu", &i.mu, "nu", &i.nu),
            both("mustar", &i.mustar, "nustar", &i.nustar),
        ),
        MapName::Crank => (
            both("lstar", &i.lstar, "pstar", &i.pstar),
            both("mustar", &i.mustar, "nustar", &i.nustar),
        ),
    };
    let (forward, (a, b), names) = match (fwd, inv) {
        (Some((pair, names)), None) => (true, pair, names),
        (None, Some((pair, names))) => (false, pair, names),
        _ => {
            let hint = match args.map {
                MapName::Phi => "--lambda/--pi or --mu/--nu",
                MapName::Lemma2 => "--lambda/--pi or --lstar/--pstar",
                MapName::Lemma3 => "--mu/--nu or --mustar/--nustar",
                MapName::Crank => "--lstar/--pstar or --mustar/--nustar",
            };
            eprintln!("eo-lab: --trace needs exactly one input pair: {hint}");
            return Ok(USAGE);
        }
    };
    let r = args.r;
    let mut trace = BijectionTrace::new();
    let result = match (args.map, forward) {
        (MapName::Phi, true) => {
            phi_forward_traced(a, b, r, &mut trace).map(|p| (p.first, p.second, Some(p.case)))
        }
        (MapName::Phi, false) => {
            phi_inverse_traced(a, b, r, &mut trace).map(|p| (p.first, p.second, Some(p.case)))
        }
        (MapName::Lemma2, true) => {
            lemma2_forward_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
        (MapName::Lemma2, false) => {
            lemma2_inverse_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
        (MapName::Lemma3, true) => {
            lemma3_forward_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
        (MapName::Lemma3, false) => {
            lemma3_inverse_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
        (MapName::Crank, true) => {
            crank_bijection_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
        (MapName::Crank, false) => {
            crank_bijection_inverse_traced(a, b, r, &mut trace).map(|(x, y)| (x, y, None))
        }
    };
    let (first, second, case) = match result {
        Ok(v) => v,
        Err(e) => {
            writeln!(out, "FAIL {}={a} {}={b} r={r}: {e}", names[0], names[1])?;
            return Ok(FAIL);
        }
    };
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                direction: &'static str,
                r: u32,
                case: Option<String>,
                output: [&'a Partition; 2],
                trace: &'a BijectionTrace,
            }
            let doc = Doc {
                direction: if forward { "forward" } else { "inverse" },
                r,
                case: case.map(|c| c.to_string()),
                output: [&first, &second],
                trace: &trace,
            };
            write_json(out, &doc)?;
        }
        Format::Text | Format::Csv => {
            write!(out, "{}", trace.render())?;
            let case = case.map(|c| format!(" [{c}]")).unwrap_or_default();
            writeln!(out, "result: ({first}, {second}){case}")?;
        }
    }
    Ok(PASS)
}
