//! `bicoh` — command-line front end.
//!
//! Exit status: 0 when the verdict is true or the input valid, 1 when it is
//! false or invalid, 2 for usage and parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bicoh_core::braid::LabeledBraid;
use bicoh_core::coherence::{crans_unit_checks, fourth_axiom_pastings, iso_exists, two_cells_equal, DecisionReport};
use bicoh_core::cubes::{extract_path_braid, hex_paths_check, sample_path, write_csv, CubeError, PathSpec};
use bicoh_core::functor::eval_one_cell;
use bicoh_core::movie::{
    check_certificate_with, compile_two_cell, movie_equivalent, parse_movie, validate_movie, Catalog, Movie,
    SearchError, SearchOptions, SearchOutcome,
};
use bicoh_core::term::{boundary2, parse_any, parse_obj_list, parse_one_cell, parse_two_cell, src_obj, tgt_obj, ParsedTerm};
use bicoh_core::{BraidWord, LabelWord};

const DEFAULT_BUDGET: usize = 64;
/// Grid for the hexagon homotopy distance check.
const HEX_GRID: usize = 100;

#[derive(Parser)]
#[command(name = "bicoh", version, about = "Coherence computations for braided monoidal bicategories")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for certificate search; the result does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    /// Search budget in steps (default 64, or $BICOH_BUDGET).
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a term and report its sort and boundaries.
    Parse { term: String },
    /// Evaluate a 1-cell to a labeled braid.
    Eval { term: String },
    /// Decide whether two 1-cells are parallel and isomorphic.
    Iso { left: String, right: String },
    /// Decide whether two 2-cells are equal.
    Eq2 { left: String, right: String },
    /// Validate a movie file.
    MovieCheck { file: PathBuf },
    /// Search for a certificate relating two movie files.
    MovieSearch {
        left: PathBuf,
        right: PathBuf,
        /// Also allow the gated move CI-M4.
        #[arg(long)]
        gated: bool,
        /// Write the certificate to this file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Run an axiom verification suite.
    Axioms {
        #[arg(long, value_enum)]
        which: Which,
        /// Three objects separated by `*`, for the fourth axiom.
        #[arg(long, default_value = "x*x*x")]
        object: String,
    },
    /// Sample a configuration path, check it, and extract its braid.
    Cubes {
        #[arg(long, value_enum)]
        path: CubePath,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(2..))]
        samples: u32,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "4")]
    Fourth,
    Crans,
}

#[derive(Clone, Copy, ValueEnum)]
enum CubePath {
    Assoc,
    Braid,
    Hex,
}

/// Bad input or I/O, as opposed to a negative verdict.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

fn word_text(w: &BraidWord) -> String {
    if w.is_empty() {
        "(empty)".into()
    } else {
        w.letters_string().replace(' ', ",")
    }
}

fn names(l: &LabelWord) -> Vec<String> {
    l.0.iter().map(|n| n.to_string()).collect()
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

#[derive(Serialize)]
struct BraidJson {
    strands: usize,
    labels: Vec<String>,
    word: Vec<i64>,
    target_labels: Vec<String>,
}

impl From<&LabeledBraid> for BraidJson {
    fn from(b: &LabeledBraid) -> Self {
        BraidJson {
            strands: b.strands(),
            labels: names(b.source_labels()),
            word: b.word().to_ints(),
            target_labels: names(&b.target_labels()),
        }
    }
}

fn report_decision(command: &'static str, r: &DecisionReport, json: bool) -> bool {
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            verdict: bool,
            reason: &'static str,
            left: BraidJson,
            right: BraidJson,
        }
        print_json(&J {
            command,
            verdict: r.verdict,
            reason: r.reason.name(),
            left: (&r.left_braid).into(),
            right: (&r.right_braid).into(),
        });
    } else {
        println!("verdict: {}", r.verdict);
        println!("reason: {}", r.reason);
        println!("left: {}", r.left_braid);
        println!("right: {}", r.right_braid);
    }
    r.verdict
}

fn cmd_parse(term: &str, json: bool) -> Outcome {
    let parsed = parse_any(term)?;
    let (kind, printed, bounds) = match &parsed {
        ParsedTerm::Obj(o) => ("object", o.to_string(), Ok(None)),
        ParsedTerm::One(c) => (
            "1-cell",
            c.to_string(),
            src_obj(c).and_then(|s| Ok(Some((s.to_string(), tgt_obj(c)?.to_string())))),
        ),
        ParsedTerm::Two(a) => ("2-cell", a.to_string(), boundary2(a).map(|(s, t)| Some((s.to_string(), t.to_string())))),
    };
    let (valid, bounds, error) = match bounds {
        Ok(b) => (true, b, None),
        Err(e) => (false, None, Some(e.to_string())),
    };
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            kind: &'static str,
            term: String,
            valid: bool,
            source: Option<String>,
            target: Option<String>,
            error: Option<String>,
        }
        let (source, target) = bounds.map_or((None, None), |(s, t)| (Some(s), Some(t)));
        print_json(&J { command: "parse", kind, term: printed, valid, source, target, error });
    } else {
        println!("{kind}: {printed}");
        if let Some((s, t)) = bounds {
            println!("source: {s}");
            println!("target: {t}");
        }
        if let Some(e) = error {
            println!("invalid: {e}");
        }
    }
    Ok(valid)
}

fn cmd_eval(term: &str, json: bool) -> Outcome {
    let c = parse_one_cell(term)?;
    let b = match eval_one_cell(&c) {
        Ok(b) => b,
        Err(e) => {
            println!("invalid: {e}");
            return Ok(false);
        }
    };
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            term: String,
            braid: BraidJson,
        }
        print_json(&J { command: "eval", term: c.to_string(), braid: (&b).into() });
    } else {
        println!("{b}");
    }
    Ok(true)
}

fn cmd_iso(left: &str, right: &str, json: bool) -> Outcome {
    let (f, g) = (parse_one_cell(left)?, parse_one_cell(right)?);
    match iso_exists(&f, &g) {
        Ok(r) => Ok(report_decision("iso", &r, json)),
        Err(e) => {
            println!("invalid: {e}");
            Ok(false)
        }
    }
}

fn cmd_eq2(left: &str, right: &str, json: bool) -> Outcome {
    let (a, b) = (parse_two_cell(left)?, parse_two_cell(right)?);
    match two_cells_equal(&a, &b) {
        Ok(r) => Ok(report_decision("eq2", &r, json)),
        Err(e) => {
            println!("invalid: {e}");
            Ok(false)
        }
    }
}

fn read_movie(path: &Path) -> Result<Result<Movie, String>, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_movie(&text).map_err(|e| e.to_string()))
}

fn cmd_movie_check(file: &Path, json: bool) -> Outcome {
    let m = read_movie(file)?;
    let checked = m.and_then(|m| validate_movie(&m).map(|_| m).map_err(|e| e.to_string()));
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            valid: bool,
            strands: Option<usize>,
            frames: Option<usize>,
            error: Option<String>,
        }
        let j = match &checked {
            Ok(m) => J { command: "movie-check", valid: true, strands: Some(m.strands()), frames: Some(m.frames().len()), error: None },
            Err(e) => J { command: "movie-check", valid: false, strands: None, frames: None, error: Some(e.clone()) },
        };
        print_json(&j);
    } else {
        match &checked {
            Ok(m) => println!("valid: n={} frames={}", m.strands(), m.frames().len()),
            Err(e) => println!("invalid: {e}"),
        }
    }
    Ok(checked.is_ok())
}

#[derive(Serialize)]
struct SearchJson {
    found: bool,
    budget: usize,
    steps: Vec<String>,
    explored: Option<usize>,
    error: Option<String>,
}

fn search_json(outcome: &Result<SearchOutcome, SearchError>, budget: usize) -> SearchJson {
    match outcome {
        Ok(SearchOutcome::Found(c)) => SearchJson {
            found: true,
            budget,
            steps: c.steps.iter().map(|s| s.to_string()).collect(),
            explored: None,
            error: None,
        },
        Ok(SearchOutcome::NotFoundWithinBudget { explored }) => {
            SearchJson { found: false, budget, steps: Vec::new(), explored: Some(*explored), error: None }
        }
        Err(e) => SearchJson { found: false, budget, steps: Vec::new(), explored: None, error: Some(e.to_string()) },
    }
}

fn print_search_text(outcome: &Result<SearchOutcome, SearchError>) {
    match outcome {
        Ok(SearchOutcome::Found(c)) => {
            println!("certificate: {} step(s)", c.len());
            for s in &c.steps {
                println!("  {s}");
            }
        }
        Ok(SearchOutcome::NotFoundWithinBudget { explored }) => {
            println!("not found within budget ({explored} nodes explored; this does not prove inequivalence)")
        }
        Err(e) => println!("error: {e}"),
    }
}

fn cmd_movie_search(left: &Path, right: &Path, gated: bool, cert_out: Option<&Path>, opts: SearchOptions, json: bool) -> Outcome {
    let a = read_movie(left)?;
    let b = read_movie(right)?;
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            println!("invalid: {e}");
            return Ok(false);
        }
    };
    let catalog = if gated { Catalog::with_gated() } else { Catalog::standard() };
    let opts = SearchOptions { catalog: catalog.clone(), ..opts };
    let outcome = movie_equivalent(&a, &b, &opts);
    let found = match &outcome {
        Ok(SearchOutcome::Found(c)) => {
            // replay before reporting
            if !check_certificate_with(&a, &b, c, &catalog) {
                return Err(Usage("internal error: certificate failed replay".into()));
            }
            if let Some(p) = cert_out {
                fs::write(p, c.to_string()).map_err(|e| Usage(format!("{}: {e}", p.display())))?;
            }
            true
        }
        _ => false,
    };
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            #[serde(flatten)]
            search: SearchJson,
        }
        print_json(&J { command: "movie-search", search: search_json(&outcome, opts.budget) });
    } else {
        print_search_text(&outcome);
    }
    Ok(found)
}

fn cmd_axiom_four(object: &str, opts: SearchOptions, json: bool) -> Outcome {
    let parts = parse_obj_list(object)?;
    let [a, b, c] = parts.as_slice() else {
        return Err(Usage(format!("--object needs exactly three factors, got {}", parts.len())));
    };
    let (left, right) = fourth_axiom_pastings(a, b, c)?;
    let eq = two_cells_equal(&left, &right)?;
    let (ml, mr) = (compile_two_cell(&left)?, compile_two_cell(&right)?);
    let valid = validate_movie(&ml).is_ok() && validate_movie(&mr).is_ok();
    let endpoints = (ml.first().clone(), ml.last().clone());
    let outcome = movie_equivalent(&ml, &mr, &opts);
    let certified = matches!(&outcome, Ok(SearchOutcome::Found(cert)) if check_certificate_with(&ml, &mr, cert, &opts.catalog));
    let verdict = eq.verdict && valid && certified;
    if json {
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            which: &'static str,
            verdict: bool,
            two_cells_equal: bool,
            movies_valid: bool,
            source_word: Vec<i64>,
            target_word: Vec<i64>,
            left_frames: usize,
            right_frames: usize,
            search: SearchJson,
        }
        print_json(&J {
            command: "axioms",
            which: "4",
            verdict,
            two_cells_equal: eq.verdict,
            movies_valid: valid,
            source_word: endpoints.0.to_ints(),
            target_word: endpoints.1.to_ints(),
            left_frames: ml.frames().len(),
            right_frames: mr.frames().len(),
            search: search_json(&outcome, opts.budget),
        });
    } else {
        println!("fourth axiom on {}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" * "));
        println!("two_cells_equal: {}", eq.verdict);
        println!("movies: valid={valid} left_frames={} right_frames={}", ml.frames().len(), mr.frames().len());
        println!("endpoints: {} => {}", word_text(&endpoints.0), word_text(&endpoints.1));
        print_search_text(&outcome);
        println!("verdict: {verdict}");
    }
    Ok(verdict)
}

fn cmd_axiom_crans(json: bool) -> Outcome {
    let report = crans_unit_checks();
    if json {
        #[derive(Serialize)]
        struct C {
            name: &'static str,
            instances: usize,
            failures: Vec<String>,
        }
        #[derive(Serialize)]
        struct J {
            command: &'static str,
            which: &'static str,
            verdict: bool,
            conditions: Vec<C>,
        }
        print_json(&J {
            command: "axioms",
            which: "crans",
            verdict: report.passed(),
            conditions: report
                .conditions
                .iter()
                .map(|c| C { name: c.name, instances: c.instances, failures: c.failures.clone() })
                .collect(),
        });
    } else {
        for c in &report.conditions {
            let ok = c.instances - c.failures.len();
            println!("{}: {ok}/{} {}", c.name, c.instances, if c.failures.is_empty() { "ok" } else { "FAILED" });
            for f in c.failures.iter().take(5) {
                println!("  {f}");
            }
        }
        println!("verdict: {}", report.passed());
    }
    Ok(report.passed())
}

fn cmd_cubes(path: CubePath, samples: usize, csv: Option<&Path>, json: bool) -> Outcome {
    let spec = match path {
        CubePath::Assoc => PathSpec::Assoc,
        CubePath::Braid => PathSpec::Braid,
        CubePath::Hex => PathSpec::HexSource,
    };
    let checked = sample_path(&spec, samples);
    let fail = |e: CubeError| -> Outcome {
        if json {
            print_json(&serde_json::json!({ "command": "cubes", "valid": false, "error": e.to_string() }));
        } else {
            println!("invalid: {e}");
        }
        Ok(false)
    };
    let sampled = match checked {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if let Some(p) = csv {
        let mut f = fs::File::create(p).map_err(|e| Usage(format!("{}: {e}", p.display())))?;
        write_csv(&mut f, &sampled)?;
    }
    let min_sep = sampled
        .iter()
        .map(|s| s.config.min_separation())
        .fold(f64::INFINITY, f64::min);
    match path {
        CubePath::Assoc | CubePath::Braid => {
            let w = match extract_path_braid(&spec, samples) {
                Ok(w) => w,
                Err(e) => return fail(e),
            };
            if json {
                print_json(&serde_json::json!({
                    "command": "cubes",
                    "path": spec.name(),
                    "samples": samples,
                    "valid": true,
                    "min_separation": min_sep,
                    "extracted": w.to_ints(),
                }));
            } else {
                println!("path: {} samples={samples}", spec.name());
                println!("disjoint: ok (min separation {min_sep:.6})");
                println!("extracted: {}", word_text(&w));
            }
        }
        CubePath::Hex => {
            let r = match hex_paths_check(samples, HEX_GRID) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if json {
                print_json(&serde_json::json!({
                    "command": "cubes",
                    "path": "hex",
                    "samples": samples,
                    "valid": true,
                    "min_separation": min_sep,
                    "extracted": r.gamma.to_ints(),
                    "gamma": r.gamma.to_ints(),
                    "gamma_prime": r.gamma_prime.to_ints(),
                    "delta": r.delta.to_ints(),
                    "min_distance_gamma_delta": r.gamma_delta.0,
                    "min_distance_delta_gamma_prime": r.delta_gamma_prime.0,
                }));
            } else {
                println!("path: hex samples={samples}");
                println!("disjoint: ok (min separation {min_sep:.6})");
                println!("gamma: {}", word_text(&r.gamma));
                println!("gamma': {}", word_text(&r.gamma_prime));
                println!("delta: {}", word_text(&r.delta));
                println!(
                    "homotopies: min distance {:.6} (gamma->delta), {:.6} (delta->gamma')",
                    r.gamma_delta.0, r.delta_gamma_prime.0
                );
                println!("extracted: {}", word_text(&r.gamma));
            }
        }
    }
    Ok(true)
}

fn budget(flag: Option<usize>) -> Result<usize, Usage> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("BICOH_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Usage(format!("BICOH_BUDGET: not a number: `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    let opts = SearchOptions { budget: budget(cli.budget)?, threads: cli.threads as usize, ..Default::default() };
    match &cli.cmd {
        Cmd::Parse { term } => cmd_parse(term, json),
        Cmd::Eval { term } => cmd_eval(term, json),
        Cmd::Iso { left, right } => cmd_iso(left, right, json),
        Cmd::Eq2 { left, right } => cmd_eq2(left, right, json),
        Cmd::MovieCheck { file } => cmd_movie_check(file, json),
        Cmd::MovieSearch { left, right, gated, cert_out } => {
            cmd_movie_search(left, right, *gated, cert_out.as_deref(), opts, json)
        }
        Cmd::Axioms { which: Which::Fourth, object } => cmd_axiom_four(object, opts, json),
        Cmd::Axioms { which: Which::Crans, .. } => cmd_axiom_crans(json),
        Cmd::Cubes { path, samples, emit_csv } => cmd_cubes(*path, *samples as usize, emit_csv.as_deref(), json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("bicoh: {msg}");
            ExitCode::from(2)
        }
    }
}
