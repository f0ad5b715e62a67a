use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ringlab::classify::{self, Decomposition, DecompositionKind};
use ringlab::expr::{parse, parse_element};
use ringlab::harness::{self, Format, Status};
use ringlab::ring::{check_axioms, set_max_size};
use ringlab::subsets::{center, idempotents, jacobson_radical, nilpotent_set, units};
use ringlab::{ElementSet, FiniteRing, Result};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Classify finite rings and check structural results about them")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Output format: table or json
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Largest ring any construction may produce
    #[arg(long, global = true, env = "RINGLAB_MAX_SIZE")]
    max_size: Option<usize>,
    /// Seed for sampled axiom checks on large rings
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate every ring-class predicate
    Classify { expr: String },
    /// Search all four decomposition kinds for one element
    Decompose {
        expr: String,
        /// Element index, `-k` for the integer -k, or a component list `[a, b, ...]`
        element: String,
    },
    /// Units, idempotents, nilpotents, Jacobson radical and center
    Subsets {
        expr: String,
        /// Sets larger than this are printed as counts only
        #[arg(long, default_value_t = 64)]
        print_cap: usize,
    },
    /// Run harness checks over the default catalog
    Verify {
        /// Comma-separated check ids, or `all`
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<String>,
        /// Record per-check wall time (makes the report non-canonical)
        #[arg(long)]
        timings: bool,
    },
    /// List the default catalog
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(String, u8)> {
    let format: Format = cli.opts.format.parse()?;
    if let Some(cap) = cli.opts.max_size {
        set_max_size(cap);
    }
    let seed = cli.opts.seed;
    match cli.cmd {
        Cmd::Classify { expr } => classify_cmd(&expr, format, seed).map(|s| (s, 0)),
        Cmd::Decompose { expr, element } => decompose_cmd(&expr, &element, format).map(|s| (s, 0)),
        Cmd::Subsets { expr, print_cap } => subsets_cmd(&expr, print_cap, format).map(|s| (s, 0)),
        Cmd::Verify { check, timings } => verify_cmd(&check, timings, format),
        Cmd::Catalog => catalog_cmd(format).map(|s| (s, 0)),
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn build(expr: &str) -> Result<std::sync::Arc<FiniteRing>> {
    Ok(parse(expr)?.build()?.ring)
}

fn classify_cmd(expr: &str, format: Format, seed: u64) -> Result<String> {
    let r = build(expr)?;
    let axioms = check_axioms(&r, seed)?;
    let report = classify::classify(&r)?;
    Ok(match format {
        Format::Json => to_json(&json!({
            "schema_version": harness::SCHEMA_VERSION,
            "ring": report.ring,
            "size": report.size,
            "axioms": { "exhaustive": axioms.exhaustive, "triples_checked": axioms.triples_checked },
            "predicates": report.predicates,
        })),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "{} ({} elements)", report.ring, report.size);
            for p in &report.predicates {
                let mut line = format!("  {:<22} {}", p.name, p.verdict.holds);
                if let Some(c) = p.verdict.counterexample {
                    let _ = write!(line, "  counterexample {}", r.describe(c));
                }
                let _ = writeln!(s, "{line}");
            }
            s
        }
    })
}

const KINDS: [(&str, DecompositionKind); 4] = [
    ("SNC", DecompositionKind::StronglyNilClean),
    ("WNC", DecompositionKind::WeaklyNilClean),
    ("SWNC", DecompositionKind::StronglyWeaklyNilClean),
    ("SWC", DecompositionKind::StronglyWeaklyClean),
];

fn search(r: &FiniteRing, a: usize, kind: DecompositionKind) -> Option<Decomposition> {
    match kind {
        DecompositionKind::StronglyNilClean => classify::snc_decompose(r, a),
        DecompositionKind::WeaklyNilClean => classify::wnc_decompose(r, a),
        DecompositionKind::StronglyWeaklyNilClean => classify::swnc_decompose(r, a),
        DecompositionKind::StronglyWeaklyClean => classify::swc_decompose(r, a),
    }
}

fn decompose_cmd(expr: &str, element: &str, format: Format) -> Result<String> {
    let r = build(expr)?;
    let a = parse_element(&r, element)?;
    let found: Vec<_> = KINDS.iter().map(|&(name, k)| (name, search(&r, a, k))).collect();
    Ok(match format {
        Format::Json => {
            let decs: serde_json::Map<_, _> = found
                .iter()
                .map(|(name, d)| (name.to_string(), serde_json::to_value(d).expect("serializable")))
                .collect();
            to_json(&json!({
                "schema_version": harness::SCHEMA_VERSION,
                "ring": r.label(),
                "element": a,
                "element_text": r.describe(a),
                "decompositions": decs,
            }))
        }
        Format::Table => {
            let mut s = format!("{} in {}\n", r.describe(a), r.label());
            for (name, d) in &found {
                let line = match d {
                    None => "none".to_string(),
                    Some(d) => {
                        let sign = if d.sign > 0 { '+' } else { '-' };
                        let (x, y) = (r.describe(d.first_part), r.describe(d.nil_or_idem_part));
                        match d.kind {
                            DecompositionKind::StronglyWeaklyClean => format!("{sign}, u={x}, e={y}"),
                            _ if d.commuting => format!("{sign}, e={x}, q={y}"),
                            _ => format!("{sign}, e={x}, q={y} (not commuting)"),
                        }
                    }
                };
                let _ = writeln!(s, "  {name}: {line}");
            }
            s
        }
    })
}

fn subsets_cmd(expr: &str, cap: usize, format: Format) -> Result<String> {
    let r = build(expr)?;
    let nil = nilpotent_set(&r);
    let sets: [(&str, &ElementSet); 5] = [
        ("units", units(&r)),
        ("idempotents", idempotents(&r)),
        ("nilpotents", &nil),
        ("jacobson_radical", jacobson_radical(&r)),
        ("center", center(&r)),
    ];
    Ok(match format {
        Format::Json => {
            let records: Vec<_> = sets
                .iter()
                .map(|(name, set)| {
                    let shown = set.len() <= cap;
                    json!({
                        "name": name,
                        "size": set.len(),
                        "members": shown.then(|| set.members()),
                        "elided": !shown,
                    })
                })
                .collect();
            to_json(&json!({
                "schema_version": harness::SCHEMA_VERSION,
                "ring": r.label(),
                "size": r.size(),
                "subsets": records,
            }))
        }
        Format::Table => {
            let mut s = format!("{} ({} elements)\n", r.label(), r.size());
            for (name, set) in sets {
                let members = if set.len() <= cap {
                    set.iter().map(|a| r.describe(a)).collect::<Vec<_>>().join(", ")
                } else {
                    "...".to_string()
                };
                let _ = writeln!(s, "  {name:<17} {:>6}  {members}", set.len());
            }
            s
        }
    })
}

fn verify_cmd(ids: &[String], timed: bool, format: Format) -> Result<(String, u8)> {
    let catalog = harness::default_catalog();
    let ids: Vec<&str> = if ids.iter().any(|i| i.eq_ignore_ascii_case("all")) {
        harness::check_ids()
    } else {
        ids.iter().map(String::as_str).collect()
    };
    let results = harness::run_checks(&ids, &catalog, timed)?;
    let failed = results.iter().any(|r| r.status == Status::Fail);
    Ok((harness::report(&results, format), u8::from(failed)))
}

fn catalog_cmd(format: Format) -> Result<String> {
    let catalog = harness::default_catalog();
    let mut rows = Vec::new();
    for node in catalog.nodes() {
        rows.push((node.label.clone(), node.ring()?.size()));
    }
    Ok(match format {
        Format::Json => to_json(&json!({
            "schema_version": harness::SCHEMA_VERSION,
            "entries": rows.iter().map(|(l, n)| json!({"label": l, "size": n})).collect::<Vec<_>>(),
        })),
        Format::Table => {
            let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
            rows.iter().map(|(l, n)| format!("{l:<width$}  {n}\n")).collect()
        }
    })
}
