//! The branch-free movie moves, stored as data.
//!
//! Each move is a pair of short movies with the same first and last
//! frames, written over letter variables `i`, `j`, `k` (capitals are
//! inverses, `e` is the empty word) together with a side condition on the
//! indices. A move applies inside a context: every frame of the matched
//! segment is `u · P · v` for fixed words `u`, `v`.
//!
//! The modifiers invert every letter, read every frame backwards, or run
//! the segment backwards in time. Each applies to the whole matched
//! segment, on both sides of the move at once.
//!
//! A locality change swaps the order of two consecutive changes acting on
//! disjoint parts of the word, replacing the frame between them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{interpretations, ElementaryChange, Movie, MovieError};
use crate::braid::{BraidWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveId {
    R1,
    R1Prime,
    R2,
    R3,
    R4,
    M1,
    M2,
    M3,
    M4,
    M5,
}

impl MoveId {
    pub const ALL: [MoveId; 10] = [
        MoveId::R1,
        MoveId::R1Prime,
        MoveId::R2,
        MoveId::R3,
        MoveId::R4,
        MoveId::M1,
        MoveId::M2,
        MoveId::M3,
        MoveId::M4,
        MoveId::M5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveId::R1 => "CI-R1",
            MoveId::R1Prime => "CI-R1'",
            MoveId::R2 => "CI-R2",
            MoveId::R3 => "CI-R3",
            MoveId::R4 => "CI-R4",
            MoveId::M1 => "CI-M1",
            MoveId::M2 => "CI-M2",
            MoveId::M3 => "CI-M3",
            MoveId::M4 => "CI-M4",
            MoveId::M5 => "CI-M5",
        }
    }

    /// The move's variables in order.
    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            MoveId::R1Prime | MoveId::M1 | MoveId::M2 => &["i"],
            MoveId::R1 | MoveId::R2 | MoveId::M3 | MoveId::M5 => &["i", "j"],
            MoveId::R3 | MoveId::R4 | MoveId::M4 => &["i", "j", "k"],
        }
    }

    /// `(left side, right side)` as frame words.
    pub fn sides(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            MoveId::R1 => (&["i", "ijJ", "jiJ"], &["i", "jJi", "jiJ"]),
            MoveId::R1Prime => (&["i", "iIi", "i"], &["i"]),
            MoveId::R2 => (&["ij", "ji", "ij"], &["ij"]),
            MoveId::R3 => (&["ikj", "kij", "kji", "jki"], &["ikj", "ijk", "jik", "jki"]),
            MoveId::R4 => (
                &["kiji", "ikji", "ijki", "ijik", "jijk"],
                &["kiji", "kjij", "jkij", "jikj", "jijk"],
            ),
            MoveId::M1 => (&["e"], &["e", "iI", "e"]),
            MoveId::M2 => (&["iI", "e", "iI"], &["iI"]),
            MoveId::M3 => (&["iji", "jij", "iji"], &["iji"]),
            MoveId::M4 => (
                &["ijkiji", "ijikji", "jijkji", "jikjki", "jkijki", "jkijik", "jkjijk", "kjkijk"],
                &["ijkiji", "ijkjij", "ikjkij", "kijkij", "kijikj", "kjijkj", "kjikjk", "kjkijk"],
            ),
            MoveId::M5 => (&["ji", "Iiji", "Ijij"], &["ji", "jiJj", "Ijij"]),
        }
    }

    /// Index side condition.
    pub fn admits(self, v: &[usize]) -> bool {
        let far = |a: usize, b: usize| a.abs_diff(b) > 1;
        let adj = |a: usize, b: usize| a.abs_diff(b) == 1;
        match self {
            MoveId::R1Prime | MoveId::M1 | MoveId::M2 => true,
            MoveId::R1 | MoveId::R2 => far(v[0], v[1]),
            MoveId::R3 => far(v[0], v[1]) && far(v[0], v[2]) && far(v[1], v[2]),
            MoveId::R4 => adj(v[0], v[1]) && far(v[2], v[0]) && far(v[2], v[1]),
            MoveId::M3 | MoveId::M5 => adj(v[0], v[1]),
            MoveId::M4 => (v[2] == v[1] + 1 && v[1] == v[0] + 1) || (v[2] + 1 == v[1] && v[1] + 1 == v[0]),
        }
    }

    /// Smallest admissible indices, for tests and demos.
    pub fn smallest_instance(self) -> Vec<usize> {
        match self {
            MoveId::R1Prime | MoveId::M1 | MoveId::M2 => vec![1],
            MoveId::R1 | MoveId::R2 => vec![1, 3],
            MoveId::R3 => vec![1, 3, 5],
            MoveId::R4 => vec![1, 2, 4],
            MoveId::M3 | MoveId::M5 => vec![1, 2],
            MoveId::M4 => vec![1, 2, 3],
        }
    }
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MoveId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown move `{s}`"))
    }
}

/// The moves a search or replay may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    moves: Vec<MoveId>,
}

impl Catalog {
    /// All moves except `CI-M4`, whose printed word sequences needed
    /// repair and stay behind [`Catalog::with_gated`].
    pub fn standard() -> Self {
        Catalog { moves: MoveId::ALL.into_iter().filter(|m| *m != MoveId::M4).collect() }
    }

    pub fn with_gated() -> Self {
        Catalog { moves: MoveId::ALL.to_vec() }
    }

    pub fn only(moves: &[MoveId]) -> Self {
        Catalog { moves: moves.to_vec() }
    }

    pub fn moves(&self) -> &[MoveId] {
        &self.moves
    }

    pub fn allows(&self, m: MoveId) -> bool {
        self.moves.contains(&m)
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::standard()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// Left side to right side.
    Ltr,
    Rtl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Modifiers {
    pub invert_letters: bool,
    pub palindrome: bool,
    pub reverse_segment: bool,
}

impl Modifiers {
    /// All eight combinations, plain first.
    pub fn all() -> impl Iterator<Item = Modifiers> {
        (0..8u8).map(|b| Modifiers { invert_letters: b & 1 != 0, palindrome: b & 2 != 0, reverse_segment: b & 4 != 0 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Move { id: MoveId, dir: Direction, mods: Modifiers, vars: Vec<usize>, prefix: usize },
    Locality { choice: usize },
}

/// One certificate step, acting at frame index `frame`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub kind: StepKind,
    pub frame: usize,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StepKind::Move { id, dir, mods, vars, prefix } => {
                if mods.invert_letters {
                    write!(f, "InvertLetters ")?;
                }
                if mods.palindrome {
                    write!(f, "Palindrome ")?;
                }
                if mods.reverse_segment {
                    write!(f, "ReverseSegment ")?;
                }
                write!(f, "{id} {}", if *dir == Direction::Ltr { "ltr" } else { "rtl" })?;
                for (name, v) in id.var_names().iter().zip(vars) {
                    write!(f, " {name}={v}")?;
                }
                write!(f, " u={prefix} @{}", self.frame)
            }
            StepKind::Locality { choice } => write!(f, "Locality c={choice} @{}", self.frame),
        }
    }
}

impl FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let (last, body) = toks.split_last().ok_or("empty step")?;
        let frame: usize = last
            .strip_prefix('@')
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| format!("expected `@<frame>`, found `{last}`"))?;
        let mut mods = Modifiers::default();
        let mut rest = body;
        while let Some((t, tail)) = rest.split_first() {
            match *t {
                "InvertLetters" => mods.invert_letters = true,
                "Palindrome" => mods.palindrome = true,
                "ReverseSegment" => mods.reverse_segment = true,
                _ => break,
            }
            rest = tail;
        }
        let (head, params) = rest.split_first().ok_or("missing move name")?;
        let field = |tok: &str, key: &str| -> Result<usize, String> {
            tok.strip_prefix(key)
                .and_then(|v| v.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("expected `{key}=<int>`, found `{tok}`"))
        };
        if *head == "Locality" {
            if mods != Modifiers::default() || params.len() != 1 {
                return Err("bad locality step".into());
            }
            return Ok(Step { kind: StepKind::Locality { choice: field(params[0], "c")? }, frame });
        }
        let id: MoveId = head.parse()?;
        let names = id.var_names();
        if params.len() != names.len() + 2 {
            return Err(format!("{id} expects {} parameters", names.len() + 2));
        }
        let dir = match params[0] {
            "ltr" => Direction::Ltr,
            "rtl" => Direction::Rtl,
            d => return Err(format!("bad direction `{d}`")),
        };
        let vars = names
            .iter()
            .zip(&params[1..])
            .map(|(n, t)| field(t, n))
            .collect::<Result<Vec<_>, _>>()?;
        let prefix = field(params[names.len() + 1], "u")?;
        Ok(Step { kind: StepKind::Move { id, dir, mods, vars, prefix }, frame })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0} is not enabled in this catalog")]
    Gated(MoveId),
    #[error("{id} needs {expected} indices, got {got}")]
    Arity { id: MoveId, expected: usize, got: usize },
    #[error("indices {vars:?} violate the side condition of {id}")]
    SideCondition { id: MoveId, vars: Vec<usize> },
    #[error("indices {vars:?} out of range for {strands} strands")]
    OutOfRange { vars: Vec<usize>, strands: usize },
    #[error("pattern does not match at frame {frame}")]
    Mismatch { frame: usize },
    #[error("no locality change #{choice} at frame {frame}")]
    NoLocality { frame: usize, choice: usize },
    #[error(transparent)]
    Movie(#[from] MovieError),
}

/// A pattern letter: variable slot and sign.
type PatLetter = (usize, i8);
type Pattern = Vec<Vec<PatLetter>>;

fn parse_side(frames: &[&str]) -> Pattern {
    frames
        .iter()
        .map(|f| {
            if *f == "e" {
                return Vec::new();
            }
            f.chars()
                .map(|c| {
                    let slot = match c.to_ascii_lowercase() {
                        'i' => 0,
                        'j' => 1,
                        'k' => 2,
                        _ => unreachable!("move tables use i, j, k"),
                    };
                    (slot, if c.is_ascii_uppercase() { -1 } else { 1 })
                })
                .collect()
        })
        .collect()
}

fn modify(mut p: Pattern, mods: Modifiers) -> Pattern {
    if mods.invert_letters {
        for f in &mut p {
            for l in f.iter_mut() {
                l.1 = -l.1;
            }
        }
    }
    if mods.palindrome {
        for f in &mut p {
            f.reverse();
        }
    }
    if mods.reverse_segment {
        p.reverse();
    }
    p
}

/// `(from, to)` patterns for a move applied in a direction with modifiers.
fn oriented(id: MoveId, dir: Direction, mods: Modifiers) -> (Pattern, Pattern) {
    let (l, r) = id.sides();
    let (l, r) = (modify(parse_side(l), mods), modify(parse_side(r), mods));
    match dir {
        Direction::Ltr => (l, r),
        Direction::Rtl => (r, l),
    }
}

fn instantiate(p: &[PatLetter], vars: &[usize]) -> Vec<Letter> {
    p.iter().map(|&(s, e)| Letter { index: vars[s], sign: e }).collect()
}

fn check_vars(id: MoveId, vars: &[usize], strands: usize) -> Result<(), MoveError> {
    let expected = id.var_names().len();
    if vars.len() != expected {
        return Err(MoveError::Arity { id, expected, got: vars.len() });
    }
    if vars.iter().any(|&v| v == 0 || v >= strands) {
        return Err(MoveError::OutOfRange { vars: vars.to_vec(), strands });
    }
    if !id.admits(vars) {
        return Err(MoveError::SideCondition { id, vars: vars.to_vec() });
    }
    Ok(())
}

fn rebuild(m: &Movie, start: usize, end: usize, replacement: Vec<BraidWord>) -> Result<Movie, MoveError> {
    let new_end = start + replacement.len();
    let mut frames = m.frames()[..start].to_vec();
    frames.extend(replacement);
    frames.extend(m.frames()[end..].iter().cloned());
    // transitions into, inside and out of the window are read off again
    let lo = start.saturating_sub(1);
    let mut changes: Vec<ElementaryChange> = m.changes()[..lo].to_vec();
    for k in lo..new_end.min(frames.len() - 1) {
        let c = interpretations(&frames[k], &frames[k + 1]);
        let c = *c.first().ok_or(MovieError::InvalidTransition {
            frame: k,
            reason: "move produced an invalid transition".into(),
        })?;
        changes.push(c);
    }
    changes.extend(m.changes().get(end..).unwrap_or(&[]).iter().copied());
    Ok(Movie::with_changes(m.strands(), frames, changes))
}

/// Middle frames reachable by a locality change at `frame`, sorted.
pub fn locality_candidates(m: &Movie, frame: usize) -> Vec<BraidWord> {
    let f = m.frames();
    if frame == 0 || frame + 1 >= f.len() {
        return Vec::new();
    }
    let (w0, w1, w2) = (&f[frame - 1], &f[frame], &f[frame + 1]);
    let mut out: Vec<BraidWord> = Vec::new();
    for c1 in interpretations(w0, w1) {
        let Some((a, i1, o1)) = c1.span() else { continue };
        for c2 in interpretations(w1, w2) {
            let Some((b, i2, o2)) = c2.span() else { continue };
            let (first, second) = if b + i2 <= a {
                (c2.at(b), c1.at(a + o2 - i2))
            } else if b >= a + o1 {
                (c2.at(b + i1 - o1), c1.at(a))
            } else {
                continue;
            };
            let Ok(mid) = first.apply(w0) else { continue };
            if mid == *w1 {
                continue;
            }
            if second.apply(&mid).as_ref() == Ok(w2) {
                out.push(mid);
            }
        }
    }
    out.sort_by_key(|x| x.to_ints());
    out.dedup();
    out
}

/// Applies one certificate step.
pub fn apply_move(m: &Movie, step: &Step, catalog: &Catalog) -> Result<Movie, MoveError> {
    match &step.kind {
        StepKind::Locality { choice } => {
            let cands = locality_candidates(m, step.frame);
            let mid = cands
                .get(*choice)
                .ok_or(MoveError::NoLocality { frame: step.frame, choice: *choice })?
                .clone();
            rebuild(m, step.frame, step.frame + 1, vec![mid])
        }
        StepKind::Move { id, dir, mods, vars, prefix } => {
            if !catalog.allows(*id) {
                return Err(MoveError::Gated(*id));
            }
            check_vars(*id, vars, m.strands())?;
            let (from, to) = oriented(*id, *dir, *mods);
            let f = step.frame;
            let frames = m.frames();
            let mismatch = MoveError::Mismatch { frame: f };
            if f + from.len() > frames.len() {
                return Err(mismatch);
            }
            let w0 = frames[f].letters();
            let p0 = instantiate(&from[0], vars);
            if prefix + p0.len() > w0.len() {
                return Err(mismatch);
            }
            let (u, v) = (&w0[..*prefix], &w0[prefix + p0.len()..]);
            let wrap = |mid: Vec<Letter>| -> Vec<Letter> {
                let mut w = u.to_vec();
                w.extend(mid);
                w.extend_from_slice(v);
                w
            };
            for (k, pat) in from.iter().enumerate() {
                if frames[f + k].letters() != wrap(instantiate(pat, vars)).as_slice() {
                    return Err(mismatch);
                }
            }
            let replacement = to
                .iter()
                .map(|pat| BraidWord::new(m.strands(), wrap(instantiate(pat, vars))))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| MoveError::OutOfRange { vars: vars.clone(), strands: m.strands() })?;
            rebuild(m, f, f + from.len(), replacement)
        }
    }
}

fn unify(pat: &[PatLetter], word: &[Letter], binding: &mut [Option<usize>; 3]) -> bool {
    if pat.len() != word.len() {
        return false;
    }
    for (&(s, e), l) in pat.iter().zip(word) {
        if l.sign != e {
            return false;
        }
        match binding[s] {
            Some(v) if v != l.index => return false,
            Some(_) => {}
            None => binding[s] = Some(l.index),
        }
    }
    true
}

/// Every step applicable to `m`, in canonical order: moves in catalog
/// order, then direction, modifiers, frame, prefix and indices; locality
/// changes last.
pub fn candidate_steps(m: &Movie, catalog: &Catalog) -> Vec<Step> {
    let mut out = Vec::new();
    let frames = m.frames();
    let n = m.strands();
    for &id in catalog.moves() {
        let nvars = id.var_names().len();
        for dir in [Direction::Ltr, Direction::Rtl] {
            for mods in Modifiers::all() {
                let (from, _) = oriented(id, dir, mods);
                if from.len() > frames.len() {
                    continue;
                }
                for f in 0..=frames.len() - from.len() {
                    let w0 = frames[f].letters();
                    if w0.len() < from[0].len() {
                        continue;
                    }
                    for prefix in 0..=w0.len() - from[0].len() {
                        let tail = w0.len() - prefix - from[0].len();
                        let mut binding = [None; 3];
                        let ok = from.iter().enumerate().all(|(k, pat)| {
                            let w = frames[f + k].letters();
                            w.len() == prefix + pat.len() + tail
                                && w[..prefix] == w0[..prefix]
                                && w[w.len() - tail..] == w0[w0.len() - tail..]
                                && unify(pat, &w[prefix..prefix + pat.len()], &mut binding)
                        });
                        if !ok {
                            continue;
                        }
                        for vars in completions(&binding[..nvars], n) {
                            if id.admits(&vars) {
                                out.push(Step { kind: StepKind::Move { id, dir, mods, vars, prefix }, frame: f });
                            }
                        }
                    }
                }
            }
        }
    }
    for f in 1..frames.len().saturating_sub(1) {
        for choice in 0..locality_candidates(m, f).len() {
            out.push(Step { kind: StepKind::Locality { choice }, frame: f });
        }
    }
    out
}

/// All ways of filling unbound slots with generator indices `1..n`.
fn completions(binding: &[Option<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for b in binding {
        let choices: Vec<usize> = match b {
            Some(v) => vec![*v],
            None => (1..n).collect(),
        };
        out = out
            .into_iter()
            .flat_map(|pre| {
                choices.iter().map(move |&c| {
                    let mut v = pre.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Both sides of a move as movies on `strands` strands, inside the empty
/// context.
pub fn move_instance(id: MoveId, vars: &[usize], strands: usize) -> Result<(Movie, Movie), MoveError> {
    check_vars(id, vars, strands)?;
    let (l, r) = oriented(id, Direction::Ltr, Modifiers::default());
    let build = |p: &Pattern| -> Result<Movie, MoveError> {
        let frames = p
            .iter()
            .map(|f| BraidWord::new(strands, instantiate(f, vars)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| MoveError::OutOfRange { vars: vars.to_vec(), strands })?;
        Ok(Movie::from_frames(strands, frames)?)
    };
    Ok((build(&l)?, build(&r)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::movie::validate_movie;

    fn w(n: usize, v: &[i64]) -> BraidWord {
        BraidWord::from_ints(n, v).unwrap()
    }

    #[test]
    fn every_move_side_is_a_valid_movie() {
        for id in MoveId::ALL {
            let vars = id.smallest_instance();
            let n = vars.iter().max().unwrap() + 1;
            let (l, r) = move_instance(id, &vars, n).unwrap_or_else(|e| panic!("{id}: {e}"));
            validate_movie(&l).unwrap();
            validate_movie(&r).unwrap();
            assert_eq!(l.first(), r.first(), "{id}");
            assert_eq!(l.last(), r.last(), "{id}");
        }
    }

    #[test]
    fn side_conditions() {
        assert!(!MoveId::R2.admits(&[1, 2]));
        assert!(MoveId::M3.admits(&[2, 1]));
        assert!(MoveId::M4.admits(&[3, 2, 1]));
        assert!(!MoveId::M4.admits(&[1, 2, 1]));
        assert!(!MoveId::R4.admits(&[1, 2, 3]));
        assert!(matches!(move_instance(MoveId::R3, &[1, 2, 5], 6), Err(MoveError::SideCondition { .. })));
    }

    #[test]
    fn m3_collapses_to_constant() {
        let (l, r) = move_instance(MoveId::M3, &[1, 2], 3).unwrap();
        let step = Step {
            kind: StepKind::Move {
                id: MoveId::M3,
                dir: Direction::Ltr,
                mods: Modifiers::default(),
                vars: vec![1, 2],
                prefix: 0,
            },
            frame: 0,
        };
        let out = apply_move(&l, &step, &Catalog::standard()).unwrap();
        assert_eq!(out.frames(), r.frames());
        assert_eq!(out.frames().len(), 1);
    }

    #[test]
    fn moves_apply_in_context() {
        // R2 inside s2 . [s1 s3 ...] . S2 on 5 strands, in the middle of a movie
        let m = Movie::from_frames(
            5,
            vec![
                w(5, &[2, 1, 4, -2]),
                w(5, &[2, 4, 1, -2]),
                w(5, &[2, 1, 4, -2]),
                w(5, &[2, 1, 4, -2, 3, -3]),
            ],
        )
        .unwrap();
        let step: Step = "CI-R2 ltr i=1 j=4 u=1 @0".parse().unwrap();
        let out = apply_move(&m, &step, &Catalog::standard()).unwrap();
        validate_movie(&out).unwrap();
        assert_eq!(out.frames().len(), 2);
        assert_eq!(out.first(), m.first());
        assert_eq!(out.last(), m.last());
        let bad: Step = "CI-R2 ltr i=1 j=4 u=0 @0".parse().unwrap();
        assert!(matches!(apply_move(&m, &bad, &Catalog::standard()), Err(MoveError::Mismatch { .. })));
    }

    #[test]
    fn gated_move_is_refused() {
        let (l, _) = move_instance(MoveId::M4, &[1, 2, 3], 4).unwrap();
        let step = Step {
            kind: StepKind::Move { id: MoveId::M4, dir: Direction::Ltr, mods: Modifiers::default(), vars: vec![1, 2, 3], prefix: 0 },
            frame: 0,
        };
        assert_eq!(apply_move(&l, &step, &Catalog::standard()), Err(MoveError::Gated(MoveId::M4)));
        assert!(apply_move(&l, &step, &Catalog::with_gated()).is_ok());
    }

    #[test]
    fn modifiers_transform_patterns() {
        // M1 with inverted letters inserts S1 s1
        let m = Movie::constant(w(2, &[]));
        let step: Step = "InvertLetters CI-M1 ltr i=1 u=0 @0".parse().unwrap();
        let out = apply_move(&m, &step, &Catalog::standard()).unwrap();
        assert_eq!(out.frames()[1].to_ints(), vec![-1, 1]);
        assert_eq!(step.to_string(), "InvertLetters CI-M1 ltr i=1 u=0 @0");
    }

    #[test]
    fn locality_swaps_independent_changes() {
        // insert s1 S1 at the front, then commute s3 s5 at the back
        let m = Movie::from_frames(6, vec![w(6, &[3, 5]), w(6, &[1, -1, 3, 5]), w(6, &[1, -1, 5, 3])]).unwrap();
        let c = locality_candidates(&m, 1);
        assert_eq!(c, vec![w(6, &[5, 3])]);
        let out = apply_move(&m, &"Locality c=0 @1".parse().unwrap(), &Catalog::standard()).unwrap();
        validate_movie(&out).unwrap();
        assert_eq!(out.frames()[1], w(6, &[5, 3]));
        assert!(apply_move(&m, &"Locality c=1 @1".parse().unwrap(), &Catalog::standard()).is_err());
    }

    #[test]
    fn step_text_round_trip() {
        for s in [
            "InvertLetters Palindrome CI-M5 rtl i=2 j=1 u=0 @0",
            "ReverseSegment CI-R1' ltr i=3 u=2 @4",
            "CI-R4 ltr i=1 j=2 k=4 u=0 @0",
            "Locality c=0 @2",
        ] {
            let st: Step = s.parse().unwrap();
            assert_eq!(st.to_string(), s);
        }
        assert!("CI-R9 ltr @0".parse::<Step>().is_err());
        assert!("CI-M1 ltr i=1 @0".parse::<Step>().is_err());
    }

    #[test]
    fn candidates_include_the_obvious_step() {
        let (l, _) = move_instance(MoveId::M2, &[1], 2).unwrap();
        let c = candidate_steps(&l, &Catalog::standard());
        assert!(c.iter().any(|s| matches!(&s.kind, StepKind::Move { id: MoveId::M2, dir: Direction::Ltr, .. })));
    }
}
