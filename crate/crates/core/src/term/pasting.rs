//! Building composite 2-cells by rewriting segments of a composable path.
//!
//! A [`Pasting`] keeps the current 1-cell in canonical form
//! (`OneCell::path`) and records every rewrite as a 2-cell term, inserting
//! the composition associators and whiskerings needed for the boundaries to
//! match syntactically.

use thiserror::Error;

use super::{boundary::objects, boundary2, ObjTerm, OneCell, TermError, TwoCell};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PastingError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("rewrite at {at}: source of `{cell}` does not match the current path")]
    NoMatch { at: usize, cell: String },
    #[error("position {at} is not an identity 1-cell")]
    NotIdentity { at: usize },
    #[error("cannot drop the only remaining 1-cell")]
    LastCell,
    #[error("empty path")]
    Empty,
}

impl OneCell {
    /// Maximal non-composite factors, in application order.
    pub fn leaves(&self) -> Vec<OneCell> {
        let mut out = Vec::new();
        self.leaves_into(&mut out);
        out
    }

    fn leaves_into(&self, out: &mut Vec<OneCell>) {
        match self {
            OneCell::Compose(g, f) => {
                f.leaves_into(out);
                g.leaves_into(out);
            }
            c => out.push(c.clone()),
        }
    }
}

fn canon(cells: &[OneCell]) -> OneCell {
    // callers guarantee non-empty paths
    OneCell::path(cells, &ObjTerm::Unit)
}

/// `canon(r) ∘ canon(q) => canon(q ++ r)` for non-empty `q`, `r`.
pub fn join(q: &[OneCell], r: &[OneCell]) -> TwoCell {
    debug_assert!(!q.is_empty() && !r.is_empty());
    if r.len() == 1 {
        return TwoCell::Id2(OneCell::compose(r[0].clone(), canon(q)));
    }
    let (last, init) = r.split_last().unwrap();
    // canon(r) ∘ canon(q) = (last ∘ canon(init)) ∘ canon(q)
    //   => last ∘ (canon(init) ∘ canon(q))     [inverse associator]
    //   => last ∘ canon(q ++ init)             [whiskered recursion]
    let assoc = TwoCell::inv(TwoCell::CompAssoc(last.clone(), canon(init), canon(q)));
    let inner = TwoCell::hcomp(TwoCell::Id2(last.clone()), join(q, init));
    TwoCell::vcomp(inner, assoc)
}

/// `c => canon(c.leaves())`.
pub fn rebracket(c: &OneCell) -> TwoCell {
    match c {
        OneCell::Compose(g, f) => {
            let (fl, gl) = (f.leaves(), g.leaves());
            let both = TwoCell::hcomp(rebracket(g), rebracket(f));
            TwoCell::vcomp(join(&fl, &gl), both)
        }
        leaf => TwoCell::Id2(leaf.clone()),
    }
}

#[derive(Clone, Debug)]
pub struct Pasting {
    path: Vec<OneCell>,
    cell: TwoCell,
}

impl Pasting {
    /// Starts from the identity 2-cell on the canonical composite of `path`.
    pub fn new(path: Vec<OneCell>) -> Result<Self, PastingError> {
        if path.is_empty() {
            return Err(PastingError::Empty);
        }
        let c = canon(&path);
        objects(&c)?;
        Ok(Pasting { cell: TwoCell::Id2(c), path })
    }

    pub fn path(&self) -> &[OneCell] {
        &self.path
    }

    pub fn current(&self) -> OneCell {
        canon(&self.path)
    }

    pub fn finish(self) -> TwoCell {
        self.cell
    }

    /// Replaces the segment of the path matching the leaves of `alpha`'s
    /// source, starting at `at`, by the leaves of its target.
    pub fn rewrite(&mut self, at: usize, alpha: TwoCell) -> Result<&mut Self, PastingError> {
        let (src, tgt) = boundary2(&alpha)?;
        let seg = src.leaves();
        let end = at + seg.len();
        if end > self.path.len() || self.path[at..end] != seg[..] {
            return Err(PastingError::NoMatch {
                at,
                cell: alpha.to_string(),
            });
        }
        let tl = tgt.leaves();
        let normalized = TwoCell::vcomp(
            rebracket(&tgt),
            TwoCell::vcomp(alpha, TwoCell::inv(rebracket(&src))),
        );
        self.splice(at, end, tl, normalized)
    }

    /// Removes an identity 1-cell using the composition unitors.
    pub fn drop_identity(&mut self, at: usize) -> Result<&mut Self, PastingError> {
        if !matches!(self.path.get(at), Some(OneCell::Id(_))) {
            return Err(PastingError::NotIdentity { at });
        }
        if self.path.len() == 1 {
            return Err(PastingError::LastCell);
        }
        if at + 1 < self.path.len() {
            // [id, p] : p ∘ id => p
            let p = self.path[at + 1].clone();
            self.splice(at, at + 2, vec![p.clone()], TwoCell::CompRUnit(p))
        } else {
            // [p, id] : id ∘ p => p
            let p = self.path[at - 1].clone();
            self.splice(at - 1, at + 1, vec![p.clone()], TwoCell::CompLUnit(p))
        }
    }

    /// `alpha : canon(path[a..b]) => canon(repl)`.
    fn splice(
        &mut self,
        a: usize,
        b: usize,
        repl: Vec<OneCell>,
        alpha: TwoCell,
    ) -> Result<&mut Self, PastingError> {
        let pre = self.path[..a].to_vec();
        let seg = self.path[a..b].to_vec();
        let suf = self.path[b..].to_vec();

        // split: canon(path) => canon(suf) ∘ canon(pre ++ seg) => ...
        let mut step = TwoCell::Id2(canon(&self.path));
        let mut pre_seg = pre.clone();
        pre_seg.extend(seg.iter().cloned());
        let with_suf = |inner: TwoCell| -> TwoCell {
            if suf.is_empty() {
                inner
            } else {
                TwoCell::hcomp(TwoCell::Id2(canon(&suf)), inner)
            }
        };
        if !suf.is_empty() {
            step = TwoCell::vcomp(TwoCell::inv(join(&pre_seg, &suf)), step);
        }
        // canon(pre ++ seg) => canon(seg) ∘ canon(pre)
        if !pre.is_empty() {
            step = TwoCell::vcomp(with_suf(TwoCell::inv(join(&pre, &seg))), step);
        }
        // apply alpha on the middle
        let mid = if pre.is_empty() {
            alpha
        } else {
            TwoCell::hcomp(alpha, TwoCell::Id2(canon(&pre)))
        };
        step = TwoCell::vcomp(with_suf(mid), step);
        // reassemble: canon(repl) ∘ canon(pre) => canon(pre ++ repl)
        let mut pre_repl = pre.clone();
        pre_repl.extend(repl.iter().cloned());
        if !pre.is_empty() {
            step = TwoCell::vcomp(with_suf(join(&pre, &repl)), step);
        }
        if !suf.is_empty() {
            step = TwoCell::vcomp(join(&pre_repl, &suf), step);
        }
        let mut new_path = pre_repl;
        new_path.extend(suf.iter().cloned());

        let cell = TwoCell::vcomp(step, self.cell.clone());
        // keep the invariant honest: boundaries must line up exactly
        let (_, t) = boundary2(&cell)?;
        debug_assert_eq!(t, canon(&new_path));
        self.cell = cell;
        self.path = new_path;
        Ok(self)
    }
}
