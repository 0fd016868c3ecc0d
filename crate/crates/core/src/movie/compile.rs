//! Compiling 2-cell terms to movies.
//!
//! Composite cells are compiled structurally: vertical composition glues
//! movies, horizontal composition and tensor whisker each side by the
//! other's boundary words. A basic cell becomes the shortest movie between
//! the words of its boundary 1-cells found by a small deterministic
//! procedure:
//!
//! 1. identical words give a constant movie;
//! 2. otherwise a breadth-first search over far commutations and braid
//!    relations, which keep the word length;
//! 3. otherwise both words are freely reduced (deleting the leftmost
//!    cancelling pair each time) and the reduced words are connected as in
//!    step 2; the reductions of the target are played backwards as pair
//!    insertions.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::{relation_rewrite, ElementaryChange, Movie, MovieError};
use crate::braid::BraidWord;
use crate::functor::{eval_word, FunctorError};
use crate::term::{boundary2, TermError, TwoCell};

/// States explored per basic cell before giving up.
const BFS_LIMIT: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Movie(#[from] MovieError),
    #[error("no movie found for `{cell}`; compare the boundary movies with a search instead")]
    UnsupportedCell { cell: String },
}

fn length_preserving(w: &BraidWord) -> Vec<ElementaryChange> {
    let l = w.letters();
    let mut out = Vec::new();
    for at in 0..l.len() {
        if at + 2 <= l.len() && l[at].index.abs_diff(l[at + 1].index) > 1 {
            out.push(ElementaryChange::FarCommute { at });
        }
        if at + 3 <= l.len() {
            if let Some((_, variant)) = relation_rewrite(&l[at..at + 3]) {
                out.push(ElementaryChange::BraidRelation { at, variant });
            }
        }
    }
    out
}

/// Shortest chain of length-preserving changes from `a` to `b`.
fn connect(a: &BraidWord, b: &BraidWord) -> Option<Vec<(ElementaryChange, BraidWord)>> {
    if a.len() != b.len() {
        return None;
    }
    let mut parent: HashMap<BraidWord, Option<(BraidWord, ElementaryChange)>> = HashMap::new();
    parent.insert(a.clone(), None);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(w) = queue.pop_front() {
        if w == *b {
            let mut chain = Vec::new();
            let mut cur = w;
            while let Some(Some((prev, c))) = parent.get(&cur).cloned() {
                chain.push((c, cur));
                cur = prev;
            }
            chain.reverse();
            return Some(chain);
        }
        if parent.len() > BFS_LIMIT {
            return None;
        }
        for c in length_preserving(&w) {
            let next = c.apply(&w).expect("enumerated changes apply");
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((w.clone(), c)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Leftmost-first free reduction, as a movie.
fn reduction(w: &BraidWord) -> Movie {
    let mut frames = vec![w.clone()];
    let mut changes = Vec::new();
    let mut cur = w.clone();
    loop {
        let l = cur.letters();
        let Some(at) = (0..l.len().saturating_sub(1)).find(|&k| l[k + 1] == l[k].inverse()) else { break };
        let c = ElementaryChange::PairDelete { j: l[at].index, eps: l[at].sign, at };
        cur = c.apply(&cur).expect("cancelling pair");
        changes.push(c);
        frames.push(cur.clone());
    }
    Movie::with_changes(w.strands(), frames, changes)
}

fn chain_movie(start: &BraidWord, chain: Vec<(ElementaryChange, BraidWord)>) -> Movie {
    let mut frames = vec![start.clone()];
    let mut changes = Vec::new();
    for (c, w) in chain {
        changes.push(c);
        frames.push(w);
    }
    Movie::with_changes(start.strands(), frames, changes)
}

/// A movie from `a` to `b` for a basic cell, if the procedure finds one.
pub(crate) fn basic_movie(a: &BraidWord, b: &BraidWord) -> Option<Movie> {
    if a == b {
        return Some(Movie::constant(a.clone()));
    }
    if let Some(chain) = connect(a, b) {
        return Some(chain_movie(a, chain));
    }
    let (ra, rb) = (reduction(a), reduction(b));
    let chain = connect(ra.last(), rb.last())?;
    let mid = chain_movie(ra.last(), chain);
    ra.then(&mid).and_then(|m| m.then(&rb.reversed())).ok()
}

fn words(alpha: &TwoCell) -> Result<(BraidWord, BraidWord), CompileError> {
    let (s, t) = boundary2(alpha)?;
    Ok((eval_word(&s)?, eval_word(&t)?))
}

/// The movie of a well-formed 2-cell, from the word of its source 1-cell to
/// the word of its target.
pub fn compile_two_cell(alpha: &TwoCell) -> Result<Movie, CompileError> {
    match alpha {
        TwoCell::Id2(f) => Ok(Movie::constant(eval_word(f)?)),
        TwoCell::Inv(a) => Ok(compile_two_cell(a)?.reversed()),
        TwoCell::VComp(second, first) => {
            boundary2(alpha)?;
            Ok(compile_two_cell(first)?.then(&compile_two_cell(second)?)?)
        }
        TwoCell::HComp(beta, a) => {
            boundary2(alpha)?;
            let (_, f2) = words(a)?;
            let (g, _) = words(beta)?;
            let n = g.strands();
            let empty = BraidWord::identity(n);
            let left = compile_two_cell(a)?.whiskered(n, 0, &empty, &g)?;
            let right = compile_two_cell(beta)?.whiskered(n, 0, &f2, &empty)?;
            Ok(left.then(&right)?)
        }
        TwoCell::Tensor2(a, b) => {
            boundary2(alpha)?;
            let (_, f2) = words(a)?;
            let (g, _) = words(b)?;
            let shift = f2.strands();
            let n = shift + g.strands();
            let empty = BraidWord::identity(n);
            let left = compile_two_cell(a)?.whiskered(n, 0, &empty, &g.embed(n, shift).map_err(MovieError::from)?)?;
            let right = compile_two_cell(b)?.whiskered(n, shift, &f2.embed(n, 0).map_err(MovieError::from)?, &empty)?;
            Ok(left.then(&right)?)
        }
        basic => {
            let (a, b) = words(basic)?;
            basic_movie(&a, &b).ok_or_else(|| CompileError::UnsupportedCell { cell: basic.to_string() })
        }
    }
}
