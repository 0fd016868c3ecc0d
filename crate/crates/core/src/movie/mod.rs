//! Branch-free braid movies and the movie moves relating them.
//!
//! A movie is a list of braid words in which consecutive frames differ by
//! one [`ElementaryChange`]. Movies stand for homotopies of braids; the
//! moves in [`moves`] generate the equivalence of such homotopies, and
//! [`search`] looks for replayable certificates of equivalence.

mod change;
mod compile;
pub mod moves;
pub mod search;

use std::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord};

pub use change::{interpretations, relation_rewrite, ChangeError, ElementaryChange, RelationVariant};
pub use compile::{compile_two_cell, CompileError};
pub use moves::{apply_move, Catalog, Direction, Modifiers, MoveError, MoveId, Step, StepKind};
pub use search::{check_certificate, check_certificate_with, movie_equivalent, Certificate, SearchError, SearchOptions, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MovieError {
    #[error("a movie needs at least one frame")]
    NoFrames,
    #[error("frame {frame} has {got} strands, expected {expected}")]
    StrandMismatch { frame: usize, got: usize, expected: usize },
    #[error("expected {expected} changes for the frames, got {got}")]
    ChangeCount { expected: usize, got: usize },
    #[error("transition {frame}->{next}: {reason}", next = frame + 1)]
    InvalidTransition { frame: usize, reason: String },
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

impl From<BraidError> for MovieError {
    fn from(e: BraidError) -> Self {
        MovieError::Syntax { line: 0, reason: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Movie {
    strands: usize,
    frames: Vec<BraidWord>,
    changes: Vec<ElementaryChange>,
}

impl Movie {
    /// A movie with declared changes; see [`validate_movie`] for checking.
    pub fn with_changes(strands: usize, frames: Vec<BraidWord>, changes: Vec<ElementaryChange>) -> Self {
        Movie { strands, frames, changes }
    }

    /// A movie whose changes are read off the frames, taking the first
    /// interpretation of each transition.
    pub fn from_frames(strands: usize, frames: Vec<BraidWord>) -> Result<Self, MovieError> {
        if frames.is_empty() {
            return Err(MovieError::NoFrames);
        }
        let mut changes = Vec::with_capacity(frames.len() - 1);
        for (k, f) in frames.iter().enumerate() {
            if f.strands() != strands {
                return Err(MovieError::StrandMismatch { frame: k, got: f.strands(), expected: strands });
            }
        }
        for (k, pair) in frames.windows(2).enumerate() {
            match interpretations(&pair[0], &pair[1]).first() {
                Some(c) => changes.push(*c),
                None => {
                    return Err(MovieError::InvalidTransition {
                        frame: k,
                        reason: format!(
                            "no elementary change takes `{}` to `{}`",
                            pair[0].letters_string(),
                            pair[1].letters_string()
                        ),
                    })
                }
            }
        }
        Ok(Movie { strands, frames, changes })
    }

    pub fn constant(w: BraidWord) -> Self {
        Movie { strands: w.strands(), frames: vec![w], changes: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn frames(&self) -> &[BraidWord] {
        &self.frames
    }

    pub fn changes(&self) -> &[ElementaryChange] {
        &self.changes
    }

    pub fn first(&self) -> &BraidWord {
        &self.frames[0]
    }

    pub fn last(&self) -> &BraidWord {
        self.frames.last().expect("movies are non-empty")
    }

    /// The same homotopy run backwards.
    pub fn reversed(&self) -> Movie {
        let mut changes: Vec<ElementaryChange> =
            self.changes.iter().enumerate().map(|(k, c)| c.inverse(&self.frames[k])).collect();
        changes.reverse();
        let mut frames = self.frames.clone();
        frames.reverse();
        Movie { strands: self.strands, frames, changes }
    }

    /// Glues `next` after `self`; the shared frame must agree.
    pub fn then(&self, next: &Movie) -> Result<Movie, MovieError> {
        if self.last() != next.first() {
            return Err(MovieError::InvalidTransition {
                frame: self.frames.len() - 1,
                reason: format!(
                    "cannot glue: `{}` vs `{}`",
                    self.last().letters_string(),
                    next.first().letters_string()
                ),
            });
        }
        let mut frames = self.frames.clone();
        frames.extend(next.frames[1..].iter().cloned());
        let mut changes = self.changes.clone();
        changes.extend(next.changes.iter().copied());
        Ok(Movie { strands: self.strands, frames, changes })
    }

    /// Embeds on `strands` strands: generator indices shift by `shift`,
    /// and every frame gets `prefix` and `suffix` attached.
    pub fn whiskered(&self, strands: usize, shift: usize, prefix: &BraidWord, suffix: &BraidWord) -> Result<Movie, MovieError> {
        let frames = self
            .frames
            .iter()
            .map(|f| {
                let mid = f.embed(strands, shift)?;
                prefix.concat(&mid)?.concat(suffix)
            })
            .collect::<Result<Vec<_>, BraidError>>()?;
        let changes = self.changes.iter().map(|c| c.shifted(shift, prefix.len())).collect();
        Ok(Movie { strands, frames, changes })
    }
}

/// `Ok` iff every declared change takes its frame to the next one.
pub fn validate_movie(m: &Movie) -> Result<(), MovieError> {
    if m.frames.is_empty() {
        return Err(MovieError::NoFrames);
    }
    if m.changes.len() + 1 != m.frames.len() {
        return Err(MovieError::ChangeCount { expected: m.frames.len() - 1, got: m.changes.len() });
    }
    for (k, f) in m.frames.iter().enumerate() {
        if f.strands() != m.strands {
            return Err(MovieError::StrandMismatch { frame: k, got: f.strands(), expected: m.strands });
        }
    }
    for (k, c) in m.changes.iter().enumerate() {
        match c.apply(&m.frames[k]) {
            Ok(next) if next == m.frames[k + 1] => {}
            Ok(next) => {
                return Err(MovieError::InvalidTransition {
                    frame: k,
                    reason: format!("{c} gives `{}`, not `{}`", next.letters_string(), m.frames[k + 1].letters_string()),
                })
            }
            Err(e) => return Err(MovieError::InvalidTransition { frame: k, reason: e.to_string() }),
        }
    }
    Ok(())
}

/// `n=<int>`, then one frame per line (an empty line is the empty word),
/// with a `#change:` line before each frame after the first.
impl fmt::Display for Movie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.strands)?;
        for (k, w) in self.frames.iter().enumerate() {
            if k > 0 {
                writeln!(f, "#change: {}", self.changes[k - 1])?;
            }
            writeln!(f, "{}", w.letters_string())?;
        }
        Ok(())
    }
}

/// Parses the movie file format. Annotations are optional; without them
/// the changes are inferred from the frames.
pub fn parse_movie(text: &str) -> Result<Movie, MovieError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(MovieError::Syntax { line: 1, reason: "empty file".into() })?;
    let strands: usize = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or(MovieError::Syntax { line: 1, reason: "expected `n=<int>` header".into() })?;
    let mut frames = Vec::new();
    let mut notes: Vec<Option<ElementaryChange>> = Vec::new();
    let mut pending: Option<ElementaryChange> = None;
    for (i, line) in lines {
        let line_no = i + 1;
        if let Some(rest) = line.trim_start().strip_prefix("#change:") {
            let c = rest.trim().parse().map_err(|reason| MovieError::Syntax { line: line_no, reason })?;
            pending = Some(c);
            continue;
        }
        if line.trim_start().starts_with('#') {
            continue;
        }
        let w = BraidWord::parse_letters(strands, line)
            .map_err(|e| MovieError::Syntax { line: line_no, reason: e.to_string() })?;
        if !frames.is_empty() {
            notes.push(pending.take());
        } else if pending.is_some() {
            return Err(MovieError::Syntax { line: line_no, reason: "change before the first frame".into() });
        }
        frames.push(w);
    }
    let inferred = Movie::from_frames(strands, frames.clone());
    if notes.iter().all(|n| n.is_none()) {
        return inferred;
    }
    let mut changes = Vec::with_capacity(notes.len());
    for (k, n) in notes.into_iter().enumerate() {
        match n {
            Some(c) => changes.push(c),
            None => match interpretations(&frames[k], &frames[k + 1]).first() {
                Some(c) => changes.push(*c),
                None => {
                    return Err(MovieError::InvalidTransition { frame: k, reason: "no elementary change fits".into() })
                }
            },
        }
    }
    let m = Movie { strands, frames, changes };
    validate_movie(&m)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, v: &[i64]) -> BraidWord {
        BraidWord::from_ints(n, v).unwrap()
    }

    #[test]
    fn insert_then_delete_is_valid() {
        let m = Movie::with_changes(
            2,
            vec![w(2, &[]), w(2, &[1, -1]), w(2, &[])],
            vec![
                ElementaryChange::PairInsert { j: 1, eps: 1, at: 0 },
                ElementaryChange::PairDelete { j: 1, eps: 1, at: 0 },
            ],
        );
        validate_movie(&m).unwrap();
    }

    #[test]
    fn braid_relation_movie() {
        let m = Movie::with_changes(
            3,
            vec![w(3, &[1, 2, 1]), w(3, &[2, 1, 2])],
            vec![ElementaryChange::BraidRelation { at: 0, variant: RelationVariant::Homogeneous }],
        );
        validate_movie(&m).unwrap();
    }

    #[test]
    fn single_letter_insertion_is_rejected() {
        for c in [
            ElementaryChange::Equal,
            ElementaryChange::PairInsert { j: 1, eps: 1, at: 0 },
            ElementaryChange::FarCommute { at: 0 },
        ] {
            let m = Movie::with_changes(2, vec![w(2, &[]), w(2, &[1])], vec![c]);
            assert!(matches!(validate_movie(&m), Err(MovieError::InvalidTransition { frame: 0, .. })));
        }
        assert!(Movie::from_frames(2, vec![w(2, &[]), w(2, &[1])]).is_err());
    }

    #[test]
    fn reversal_and_gluing() {
        let m = Movie::from_frames(3, vec![w(3, &[1, 2, 1]), w(3, &[2, 1, 2]), w(3, &[2, 1, 2, 1, -1])]).unwrap();
        let r = m.reversed();
        validate_movie(&r).unwrap();
        assert_eq!(r.first(), m.last());
        let g = m.then(&r).unwrap();
        validate_movie(&g).unwrap();
        assert_eq!(g.frames().len(), 5);
        assert!(m.then(&m).is_err());
    }

    #[test]
    fn whiskering_shifts_changes() {
        let m = Movie::from_frames(2, vec![w(2, &[]), w(2, &[1, -1])]).unwrap();
        let big = m.whiskered(4, 2, &w(4, &[1]), &w(4, &[2])).unwrap();
        validate_movie(&big).unwrap();
        assert_eq!(big.last().to_ints(), vec![1, 3, -3, 2]);
    }

    #[test]
    fn file_format_round_trip() {
        let m = Movie::from_frames(3, vec![w(3, &[]), w(3, &[2, -2]), w(3, &[])]).unwrap();
        let text = m.to_string();
        assert_eq!(text, "n=3\n\n#change: PairInsert j=2 e=+1 at=0\ns2 S2\n#change: PairDelete j=2 e=+1 at=0\n\n");
        assert_eq!(parse_movie(&text).unwrap(), m);
        let bare = parse_movie("n=3\ns1 s2 s1\ns2 s1 s2\n").unwrap();
        validate_movie(&bare).unwrap();
        assert!(parse_movie("n=3\ns1\n#change: FarCommute at=0\ns2\n").is_err());
        assert!(parse_movie("3\ns1").is_err());
    }
}
