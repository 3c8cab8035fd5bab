//! `belted`: command-line surface over belted-core.
//!
//! Structured JSON goes to stdout (byte-identical across runs for fixed
//! input and flags); diagnostics and timing go to stderr. Exit codes:
//! 0 success, 1 parse/validation failure, 2 internal invariant violation.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use belted_core as core;
use belted_core::{BettiMode, ClassKind, Polytope, TruncationSpec};

#[derive(Parser)]
#[command(name = "belted", version, about = "belts, bigraded Betti numbers and fullerene generation for simple 3-polytopes")]
struct Cli {
    /// Cap worker parallelism (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polytope and report each axiom check
    Validate { input: String },
    /// f-vector, p-vector, flagness, chirality and zigzag census
    Invariants { input: String },
    /// Enumerate k-belts
    Belts {
        #[arg(long)]
        k: usize,
        input: String,
    },
    /// Classify into the singular-fullerene family
    Classify { input: String },
    /// Bigraded Betti numbers
    Betti {
        /// full | shortcuts | j<N>
        #[arg(long, default_value = "shortcuts")]
        mode: String,
        /// comma-separated checks: duality, identity
        #[arg(long)]
        check: Option<String>,
        /// also report the per-subset ranks for this facet set, e.g. "0,2,5"
        #[arg(long)]
        omega: Option<String>,
        input: String,
    },
    /// Apply a surgery and emit the resulting polytope
    Transform {
        #[arg(long)]
        op: TransformOp,
        /// facet index for truncate
        #[arg(long)]
        facet: Option<usize>,
        /// run start position for truncate
        #[arg(long)]
        start: Option<usize>,
        /// run length s >= 0 for truncate
        #[arg(long)]
        len: Option<usize>,
        /// edge "u,v" for straighten
        #[arg(long)]
        edge: Option<String>,
        input: String,
    },
    /// Enumerate fullerene isomers from the dodecahedron
    Generate {
        #[arg(long)]
        p6_max: usize,
        /// count enantiomers separately
        #[arg(long)]
        chiral: bool,
        /// write one JSON polytope per isomer into this directory
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Characteristic matrix, Stanley-Reisner data, graded ranks
    Quasitoric {
        #[arg(long)]
        emit: QuasitoricEmit,
        input: String,
    },
    /// Write the polytope in an exchange format (raw, no report wrapper)
    Export {
        #[arg(long)]
        format: ExportFormat,
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Chamfer,
    Leapfrog,
    Truncate,
    Straighten,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuasitoricEmit {
    Lambda,
    Sr,
    Ranks,
    Chern,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
    PlanarCode,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    input_digest: String,
    version: String,
    results: Value,
}

enum CliError {
    /// exit 1: user input problem
    User(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::User(e.to_string())
    }
}

/// Surface an internal contradiction as a panic so the exit code is 2.
fn internal(msg: String) -> CliError {
    panic!("{msg}");
}

fn main() -> ExitCode {
    let started = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let outcome = std::panic::catch_unwind(|| run(&cli.command, &argv));
    let code = match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::User(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal invariant violated: {msg}");
            ExitCode::from(2)
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    code
}

fn load_input(name: &str) -> Result<(Polytope, String), CliError> {
    let builtin = |p: Polytope| {
        let json = core::to_json(&p);
        let digest = hex_digest(json.as_bytes());
        Ok((p, digest))
    };
    match name {
        "simplex" => return builtin(core::simplex()),
        "cube" => return builtin(core::cube()),
        "dodecahedron" => return builtin(core::dodecahedron()),
        "barrel" => return builtin(core::barrel()),
        "c60" => return builtin(core::c60()),
        _ => {}
    }
    if let Some(k) = name.strip_prefix("d_k:") {
        let k: usize = k.parse().map_err(|_| CliError::User(format!("bad d_k index in {name}")))?;
        return builtin(core::d_k(k));
    }
    if let Some(k) = name.strip_prefix("prism:") {
        let k: usize = k.parse().map_err(|_| CliError::User(format!("bad prism size in {name}")))?;
        if k < 3 {
            return Err(CliError::User("prism needs k >= 3".into()));
        }
        return builtin(core::prism(k));
    }
    let bytes = std::fs::read(name).map_err(|e| CliError::User(format!("{name}: {e}")))?;
    let digest = hex_digest(&bytes);
    let p = if bytes.starts_with(core::io::PLANAR_CODE_HEADER) {
        core::parse_planar_code(&bytes)?
            .into_iter()
            .next()
            .ok_or_else(|| CliError::User("empty planar_code stream".into()))?
    } else {
        core::parse_json(&bytes)?
    };
    Ok((p, digest))
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn emit(command: &[String], digest: String, results: Value) {
    let report = RunReport {
        command: command.join(" "),
        input_digest: digest,
        version: env!("CARGO_PKG_VERSION").to_string(),
        results,
    };
    println!("{}", serde_json::to_string(&report).unwrap());
}

fn run(cmd: &Command, argv: &[String]) -> Result<(), CliError> {
    match cmd {
        Command::Validate { input } => {
            // raw-level validation so that broken inputs still yield a report
            let (facets, digest) = load_raw_facets(input)?;
            let report = core::validate_facets(&facets);
            let ok = report.all_pass();
            emit(argv, digest, json!({ "report": report, "all_pass": ok }));
            if !ok {
                return Err(CliError::User(
                    report
                        .first_error()
                        .map(|e| e.to_string())
                        .unwrap_or_else(|| "validation failed".into()),
                ));
            }
            Ok(())
        }
        Command::Invariants { input } => {
            let (p, digest) = load_input(input)?;
            let pv = p.p_vector();
            let (lhs, rhs) = pv.balance();
            let zz = core::zigzag_cycles(&p);
            let code = core::canonical_code(&p, true);
            let lengths: Vec<usize> = zz.iter().map(|c| c.len()).collect();
            emit(
                argv,
                digest,
                json!({
                    "f_vector": p.f_vector(),
                    "p_vector": pv,
                    "balance": { "lhs": lhs, "rhs": rhs, "holds": lhs == rhs },
                    "is_flag": core::is_flag(&p),
                    "combinatorially_chiral": core::is_combinatorially_chiral(&p),
                    "canonical_code_sha256": hex_digest(&code.code),
                    "orientation_class": code.orientation_class,
                    "zigzag_cycles": { "count": zz.len(), "lengths": lengths },
                }),
            );
            Ok(())
        }
        Command::Belts { k, input } => {
            let (p, digest) = load_input(input)?;
            if *k < 3 || *k > p.m() {
                return Err(CliError::User(format!("k must lie in 3..=m (m = {})", p.m())));
            }
            let belts = core::k_belts(&p, *k);
            let seqs: Vec<Vec<u32>> = belts.iter().map(|b| b.facets.clone()).collect();
            emit(argv, digest, json!({ "k": k, "count": seqs.len(), "belts": seqs }));
            Ok(())
        }
        Command::Classify { input } => {
            let (p, digest) = load_input(input)?;
            let c = core::classify(&p);
            let five = if c.kind == ClassKind::Fullerene {
                Some(core::five_belt_structure(&p).map_err(internal)?)
            } else {
                None
            };
            emit(argv, digest, json!({ "classification": c, "five_belts": five }));
            Ok(())
        }
        Command::Betti { mode, check, omega, input } => {
            let (p, digest) = load_input(input)?;
            let mode = parse_betti_mode(mode)?;
            let table = core::betti_bigraded(&p, mode)?;
            let mut cells: BTreeMap<String, u64> = BTreeMap::new();
            for (&(i, j), &r) in &table.ranks {
                cells.insert(format!("b_{i}_{}", 2 * j), r);
            }
            let mut results = json!({
                "m": table.m,
                "cells": cells,
                "torsion_free": table.torsion_free,
            });
            if let Some(listing) = omega {
                let subset: Vec<u32> = listing
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| CliError::User(format!("bad facet index {t}")))
                    })
                    .collect::<Result<_, _>>()?;
                if subset.iter().any(|&v| v as usize >= p.m()) {
                    return Err(CliError::User("omega index out of range".into()));
                }
                let groups = core::betti::subcomplex_homology(&p, &subset);
                let j = subset.len();
                let mut per: BTreeMap<String, usize> = BTreeMap::new();
                for (qi, g) in groups.iter().enumerate() {
                    let q = qi as i64 - 1;
                    let i = j as i64 - 1 - q;
                    if g.rank > 0 && i >= 0 {
                        per.insert(format!("b_{i}_{}", 2 * j), g.rank);
                    }
                }
                results["omega"] = json!({ "subset": subset, "ranks": per });
            }
            if matches!(mode, BettiMode::Full) {
                results["graded_ranks"] = json!(table.graded_ranks());
            }
            if let Some(list) = check {
                for item in list.split(',') {
                    match item.trim() {
                        "duality" => {
                            results["duality_holds"] = json!(core::poincare_check(&table));
                        }
                        "identity" => {
                            let (f0, f1, f2) = p.f_vector();
                            results["identity_holds"] = json!(core::poly_identity_check(
                                &table,
                                &[f0 as i64, f1 as i64, f2 as i64]
                            ));
                        }
                        other => return Err(CliError::User(format!("unknown check {other}"))),
                    }
                }
            }
            emit(argv, digest, results);
            Ok(())
        }
        Command::Transform { op, facet, start, len, edge, input } => {
            let (p, digest) = load_input(input)?;
            let results = match op {
                TransformOp::Chamfer => {
                    let q = core::chamfer(&p);
                    json!({ "facets": q.facets(), "f_vector": q.f_vector() })
                }
                TransformOp::Leapfrog => {
                    let q = core::leapfrog(&p);
                    json!({ "facets": q.facets(), "f_vector": q.f_vector() })
                }
                TransformOp::Truncate => {
                    let spec = TruncationSpec {
                        facet: facet
                            .ok_or_else(|| CliError::User("truncate needs --facet".into()))?,
                        start: start.unwrap_or(0),
                        len: len.unwrap_or(0),
                    };
                    let (q, new_edge) = core::sk_truncate(&p, &spec)?;
                    json!({
                        "facets": q.facets(),
                        "f_vector": q.f_vector(),
                        "new_edge": new_edge,
                        "new_facet": q.m() - 1,
                    })
                }
                TransformOp::Straighten => {
                    let edge = edge
                        .as_deref()
                        .ok_or_else(|| CliError::User("straighten needs --edge u,v".into()))?;
                    let (u, v) = parse_edge(edge)?;
                    let s = core::straighten(&p, (u, v))?;
                    json!({
                        "facets": s.polytope.facets(),
                        "f_vector": s.polytope.f_vector(),
                        "flag_loss": s.flag_loss,
                    })
                }
            };
            emit(argv, digest, results);
            Ok(())
        }
        Command::Generate { p6_max, chiral, emit_dir } => {
            let catalog = core::generate(*p6_max, *chiral);
            if let Some(dir) = emit_dir {
                std::fs::create_dir_all(dir).map_err(|e| CliError::User(e.to_string()))?;
                for (&p6, isomers) in &catalog.fullerenes {
                    for (i, q) in isomers.iter().enumerate() {
                        let path = dir.join(format!("f{p6:02}_{i:04}.json"));
                        std::fs::write(&path, core::to_json(q))
                            .map_err(|e| CliError::User(e.to_string()))?;
                    }
                }
            }
            let digest = hex_digest(format!("generate:{p6_max}:{chiral}").as_bytes());
            emit(
                argv,
                digest,
                json!({
                    "p6_max": p6_max,
                    "mirror_identified": catalog.mirror_identified,
                    "counts": catalog.counts,
                }),
            );
            Ok(())
        }
        Command::Quasitoric { emit: what, input } => {
            let (p, digest) = load_input(input)?;
            let coloring = core::four_color(&p);
            let cm = core::char_matrix(&p, &coloring)?;
            let results = match what {
                QuasitoricEmit::Lambda => {
                    let rows = cm.linear_rows(p.m());
                    json!({ "coloring": coloring, "lambda": rows })
                }
                QuasitoricEmit::Sr => {
                    let k = core::nerve(&p);
                    json!({ "minimal_nonfaces": k.minimal_nonfaces() })
                }
                QuasitoricEmit::Ranks => {
                    let ranks = core::cohomology_ranks(&p, &cm);
                    json!({ "graded_ranks": ranks })
                }
                QuasitoricEmit::Chern => {
                    let text = core::char_class_presentation(&p, &cm);
                    json!({ "presentation": text })
                }
            };
            emit(argv, digest, results);
            Ok(())
        }
        Command::Export { format, input } => {
            let (p, _) = load_input(input)?;
            match format {
                ExportFormat::Json => println!("{}", core::to_json(&p)),
                ExportFormat::Dot => print!("{}", core::to_dot(&p)),
                ExportFormat::PlanarCode => {
                    let bytes = core::to_planar_code(&p)?;
                    std::io::stdout()
                        .write_all(&bytes)
                        .map_err(|e| CliError::User(e.to_string()))?;
                }
            }
            Ok(())
        }
    }
}

fn load_raw_facets(input: &str) -> Result<(Vec<Vec<u32>>, String), CliError> {
    // builtins and planar_code inputs go through the normal loader; JSON
    // files are read structurally so invalid polytopes still get a report
    let is_file = std::path::Path::new(input).exists();
    if !is_file {
        let (p, digest) = load_input(input)?;
        return Ok((p.facets().to_vec(), digest));
    }
    let bytes = std::fs::read(input).map_err(|e| CliError::User(format!("{input}: {e}")))?;
    let digest = hex_digest(&bytes);
    if bytes.starts_with(core::io::PLANAR_CODE_HEADER) {
        let p = core::parse_planar_code(&bytes)?
            .into_iter()
            .next()
            .ok_or_else(|| CliError::User("empty planar_code stream".into()))?;
        return Ok((p.facets().to_vec(), digest));
    }
    #[derive(serde::Deserialize)]
    struct Doc {
        facets: Vec<Vec<u32>>,
    }
    let doc: Doc =
        serde_json::from_slice(&bytes).map_err(|e| CliError::User(format!("json: {e}")))?;
    Ok((doc.facets, digest))
}

fn parse_betti_mode(s: &str) -> Result<BettiMode, CliError> {
    match s {
        "full" => Ok(BettiMode::Full),
        "shortcuts" => Ok(BettiMode::BeltShortcuts),
        _ => {
            if let Some(j) = s.strip_prefix('j') {
                let j: usize =
                    j.parse().map_err(|_| CliError::User(format!("bad betti mode {s}")))?;
                Ok(BettiMode::UpToJ(j))
            } else {
                Err(CliError::User(format!("bad betti mode {s} (full | shortcuts | j<N>)")))
            }
        }
    }
}

fn parse_edge(s: &str) -> Result<(u32, u32), CliError> {
    let mut it = s.split(',').map(|t| t.trim().parse::<u32>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(u)), Some(Ok(v)), None) => Ok((u, v)),
        _ => Err(CliError::User(format!("bad edge spec {s}, expected u,v"))),
    }
}
