//! Bounded search for certificates of movie equivalence.
//!
//! Iterative deepening over [`candidate_steps`], whose order is canonical,
//! so the first certificate found is well defined. Children of a node are
//! deduplicated by their frames, keeping the first step producing them.
//!
//! Each first-move subtree is explored with its own transposition table and
//! node allowance, so the subtrees are independent: they can run on any
//! number of threads and the lowest-indexed success is the answer, exactly
//! as in a sequential run.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use super::moves::candidate_steps;
use super::{apply_move, validate_movie, Catalog, Movie, MovieError, Step};
use crate::braid::BraidWord;

/// A replayable list of steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub steps: Vec<Step>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// One step per line.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Certificate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| l.parse().map_err(|e| format!("line {}: {e}", i + 1)))
            .collect::<Result<Vec<Step>, _>>()?;
        Ok(Certificate { steps })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of steps.
    pub budget: usize,
    /// Worker threads for the first-move fan-out; `1` searches inline.
    pub threads: usize,
    /// Node allowance per first-move subtree and depth.
    pub node_cap: usize,
    /// Slack over the larger input in frame count and word length.
    pub slack: usize,
    pub catalog: Catalog,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 64, threads: 1, node_cap: 20_000, slack: 4, catalog: Catalog::standard() }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: usize) -> Self {
        SearchOptions { budget, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Certificate),
    /// Not a proof of inequivalence.
    NotFoundWithinBudget { explored: usize },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFoundWithinBudget { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("movies live on {0} and {1} strands")]
    StrandMismatch(usize, usize),
    #[error("{which} frames differ: `{a}` vs `{b}`; no sequence of moves can relate them")]
    EndpointMismatch { which: &'static str, a: String, b: String },
    #[error(transparent)]
    Invalid(#[from] MovieError),
    #[error("could not start worker threads: {0}")]
    Threads(String),
}

struct Limits {
    frames: usize,
    letters: usize,
}

impl Limits {
    fn admit(&self, m: &Movie) -> bool {
        m.frames().len() <= self.frames && m.frames().iter().all(|f| f.len() <= self.letters)
    }
}

/// Distinct children of `m` in canonical order.
fn children(m: &Movie, catalog: &Catalog, limits: &Limits) -> Vec<(Step, Movie)> {
    let mut seen: HashMap<Vec<BraidWord>, ()> = HashMap::new();
    let mut out = Vec::new();
    for step in candidate_steps(m, catalog) {
        let Ok(next) = apply_move(m, &step, catalog) else { continue };
        if !limits.admit(&next) || seen.insert(next.frames().to_vec(), ()).is_some() {
            continue;
        }
        out.push((step, next));
    }
    out
}

enum Probe {
    Found(Vec<Step>),
    Exhausted { cut: bool },
    Capped,
}

struct Dfs<'a> {
    target: &'a [BraidWord],
    catalog: &'a Catalog,
    limits: &'a Limits,
    cap: usize,
    nodes: usize,
    table: HashMap<Vec<BraidWord>, usize>,
    cut: bool,
}

impl Dfs<'_> {
    fn run(&mut self, m: &Movie, depth: usize, path: &mut Vec<Step>) -> Option<bool> {
        if m.frames() == self.target {
            return Some(true);
        }
        if depth == 0 {
            self.cut = true;
            return Some(false);
        }
        match self.table.get(m.frames()) {
            Some(&d) if d >= depth => return Some(false),
            _ => {}
        }
        self.table.insert(m.frames().to_vec(), depth);
        self.nodes += 1;
        if self.nodes > self.cap {
            return None;
        }
        for (step, next) in children(m, self.catalog, self.limits) {
            path.push(step);
            match self.run(&next, depth - 1, path) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            path.pop();
        }
        Some(false)
    }
}

fn probe(start: &Movie, target: &[BraidWord], depth: usize, opts: &SearchOptions, limits: &Limits) -> (Probe, usize) {
    let mut dfs = Dfs {
        target,
        catalog: &opts.catalog,
        limits,
        cap: opts.node_cap,
        nodes: 0,
        table: HashMap::new(),
        cut: false,
    };
    let mut path = Vec::new();
    let r = match dfs.run(start, depth, &mut path) {
        Some(true) => Probe::Found(path),
        Some(false) => Probe::Exhausted { cut: dfs.cut },
        None => Probe::Capped,
    };
    (r, dfs.nodes)
}

fn check_endpoints(a: &Movie, b: &Movie) -> Result<(), SearchError> {
    if a.strands() != b.strands() {
        return Err(SearchError::StrandMismatch(a.strands(), b.strands()));
    }
    for (which, x, y) in [("first", a.first(), b.first()), ("last", a.last(), b.last())] {
        if x != y {
            return Err(SearchError::EndpointMismatch { which, a: x.letters_string(), b: y.letters_string() });
        }
    }
    Ok(())
}

/// Looks for a certificate taking `a` to `b` with at most `opts.budget`
/// steps. The answer does not depend on `opts.threads`.
pub fn movie_equivalent(a: &Movie, b: &Movie, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    validate_movie(a)?;
    validate_movie(b)?;
    check_endpoints(a, b)?;
    if a.frames() == b.frames() {
        return Ok(SearchOutcome::Found(Certificate::default()));
    }
    let longest = a.frames().iter().chain(b.frames()).map(BraidWord::len).max().unwrap_or(0);
    let limits = Limits {
        frames: a.frames().len().max(b.frames().len()) + opts.slack,
        letters: longest + opts.slack,
    };
    let roots = children(a, &opts.catalog, &limits);
    let pool = if opts.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| SearchError::Threads(e.to_string()))?,
        )
    } else {
        None
    };
    let mut explored = roots.len();
    for depth in 1..=opts.budget {
        let run = |(step, child): &(Step, Movie)| {
            let (p, n) = probe(child, b.frames(), depth - 1, opts, &limits);
            (step.clone(), p, n)
        };
        let results: Vec<(Step, Probe, usize)> = match &pool {
            Some(pool) => pool.install(|| roots.par_iter().map(run).collect()),
            None => roots.iter().map(run).collect(),
        };
        let mut deeper = false;
        for (step, p, n) in results {
            explored += n;
            match p {
                Probe::Found(mut rest) => {
                    rest.insert(0, step);
                    return Ok(SearchOutcome::Found(Certificate { steps: rest }));
                }
                Probe::Exhausted { cut } => deeper |= cut,
                Probe::Capped => deeper = true,
            }
        }
        if !deeper {
            break;
        }
    }
    Ok(SearchOutcome::NotFoundWithinBudget { explored })
}

/// Replays `cert` on `a` and compares with `b` frame for frame.
pub fn check_certificate(a: &Movie, b: &Movie, cert: &Certificate) -> bool {
    check_certificate_with(a, b, cert, &Catalog::standard())
}

pub fn check_certificate_with(a: &Movie, b: &Movie, cert: &Certificate, catalog: &Catalog) -> bool {
    if validate_movie(a).is_err() {
        return false;
    }
    let mut m = a.clone();
    for step in &cert.steps {
        match apply_move(&m, step, catalog) {
            Ok(next) if validate_movie(&next).is_ok() => m = next,
            _ => return false,
        }
    }
    m.frames() == b.frames()
}
