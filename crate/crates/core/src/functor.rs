//! Evaluation of 1-cells as labeled braids.
//!
//! Structural cells (associators, unitors, identities) become identity
//! braids; a braiding of a `p`-strand object past a `q`-strand object
//! becomes the positive block crossing. Composition concatenates words and
//! tensor juxtaposes them.

use thiserror::Error;

use crate::braid::{BraidWord, LabeledBraid, Letter};
use crate::term::{src_obj, ObjTerm, OneCell, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("generator index {i} out of range for {k} strands")]
    OutOfRange { k: usize, i: usize },
}

/// Letters moving the first `p` strands past the last `q` as a block, the
/// top strand of the block first. `sign = -1` gives the inverse word.
pub fn block_braid(p: usize, q: usize, sign: i8) -> BraidWord {
    let mut letters = Vec::with_capacity(p * q);
    for b in (1..=p).rev() {
        for i in b..b + q {
            letters.push(Letter::pos(i));
        }
    }
    let w = BraidWord::new(p + q, letters).expect("block letters are in range");
    if sign < 0 {
        w.inverse()
    } else {
        w
    }
}

fn width_src(c: &OneCell) -> usize {
    use OneCell::*;
    match c {
        Id(x) | LUnit(x) | LUnitInv(x) | RUnit(x) | RUnitInv(x) => x.width(),
        Assoc(x, y, z) | AssocInv(x, y, z) => x.width() + y.width() + z.width(),
        Braid(x, y) | BraidInv(x, y) => x.width() + y.width(),
        Tensor(f, g) => width_src(f) + width_src(g),
        Compose(_, f) => width_src(f),
    }
}

fn letters(c: &OneCell, shift: usize, out: &mut Vec<Letter>) {
    use OneCell::*;
    match c {
        Braid(x, y) => out.extend(block_braid(x.width(), y.width(), 1).letters().iter().map(|l| l.shifted(shift))),
        BraidInv(x, y) => {
            out.extend(block_braid(x.width(), y.width(), -1).letters().iter().map(|l| l.shifted(shift)))
        }
        Tensor(f, g) => {
            letters(f, shift, out);
            letters(g, shift + width_src(f), out);
        }
        Compose(g, f) => {
            letters(f, shift, out);
            letters(g, shift, out);
        }
        _ => {}
    }
}

/// The braid word of a well-formed 1-cell, without labels.
pub fn eval_word(c: &OneCell) -> Result<BraidWord, FunctorError> {
    let src = src_obj(c)?;
    let mut out = Vec::new();
    letters(c, 0, &mut out);
    Ok(BraidWord::new(src.width(), out).expect("evaluation stays in range"))
}

pub fn eval_one_cell(c: &OneCell) -> Result<LabeledBraid, FunctorError> {
    let src = src_obj(c)?;
    let word = eval_word(c)?;
    Ok(LabeledBraid::new(src.flatten(), word).expect("width equals label count"))
}

/// A 1-cell on `x^{⊗k}` (right-nested) whose evaluation is exactly `σ_i`:
/// reassociate, braid the two copies of `x` at positions `i, i+1`, and
/// reassociate back, whiskered by the first `i-1` copies.
pub fn sigma_composite_on(x: &ObjTerm, k: usize, i: usize) -> Result<OneCell, FunctorError> {
    if i == 0 || i >= k {
        return Err(FunctorError::OutOfRange { k, i });
    }
    let rest_len = k - i - 1;
    let mut cell = if rest_len == 0 {
        OneCell::Braid(x.clone(), x.clone())
    } else {
        let rest = ObjTerm::right_nested(&vec![x.clone(); rest_len]);
        OneCell::path(
            &[
                OneCell::AssocInv(x.clone(), x.clone(), rest.clone()),
                OneCell::tensor(OneCell::Braid(x.clone(), x.clone()), OneCell::Id(rest.clone())),
                OneCell::Assoc(x.clone(), x.clone(), rest),
            ],
            x,
        )
    };
    for _ in 1..i {
        cell = OneCell::tensor(OneCell::Id(x.clone()), cell);
    }
    Ok(cell)
}

/// [`sigma_composite_on`] for the generator `x`.
pub fn sigma_composite(k: usize, i: usize) -> Result<OneCell, FunctorError> {
    sigma_composite_on(&ObjTerm::gen("x"), k, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{are_equal, exponent_sum};
    use crate::term::{tgt_obj, LabelWord};

    fn g(n: &str) -> ObjTerm {
        ObjTerm::gen(n)
    }

    #[test]
    fn block_braid_examples() {
        assert_eq!(block_braid(1, 1, 1).to_ints(), vec![1]);
        assert_eq!(block_braid(3, 0, 1).to_ints(), Vec::<i64>::new());
        assert_eq!(block_braid(0, 2, -1).to_ints(), Vec::<i64>::new());
        assert_eq!(block_braid(2, 1, 1).to_ints(), vec![2, 1]);
        assert_eq!(block_braid(1, 2, 1).to_ints(), vec![1, 2]);
        assert_eq!(block_braid(2, 2, 1).to_ints(), vec![2, 3, 1, 2]);
        assert_eq!(block_braid(2, 1, -1).to_ints(), vec![-1, -2]);
        for p in 0..4 {
            for q in 0..4 {
                assert_eq!(block_braid(p, q, 1).len(), p * q);
            }
        }
    }

    #[test]
    fn eval_generating_cells() {
        let (x, y, z) = (g("x"), g("y"), g("z"));
        let a = eval_one_cell(&OneCell::Assoc(x.clone(), y.clone(), z.clone())).unwrap();
        assert_eq!(a.source_labels(), &LabelWord::new(["x", "y", "z"]));
        assert!(a.word().is_empty());
        let r = eval_one_cell(&OneCell::Braid(x.clone(), y.clone())).unwrap();
        assert_eq!(r.to_string(), "n=2 labels=x,y word=s1");
        // R_{y,x} ∘ R_{x,y} : x⊗y → x⊗y is σ1σ1
        let rr = OneCell::compose(OneCell::Braid(y.clone(), x.clone()), OneCell::Braid(x.clone(), y.clone()));
        assert_eq!(eval_word(&rr).unwrap().to_ints(), vec![1, 1]);
        // R' ∘ R is trivial
        let ri = OneCell::compose(OneCell::BraidInv(x.clone(), y.clone()), OneCell::Braid(x.clone(), y.clone()));
        assert!(are_equal(&eval_word(&ri).unwrap(), &BraidWord::identity(2)).unwrap());
    }

    #[test]
    fn unit_contributes_no_strands() {
        let c = OneCell::Braid(ObjTerm::Unit, g("y"));
        assert!(eval_word(&c).unwrap().is_empty());
    }

    #[test]
    fn tensor_shifts_indices() {
        let (x, y) = (g("x"), g("y"));
        let c = OneCell::tensor(OneCell::Id(ObjTerm::tensor(x.clone(), ObjTerm::Unit)), OneCell::Braid(x.clone(), y.clone()));
        let e = eval_one_cell(&c).unwrap();
        assert_eq!(e.word().to_ints(), vec![2]);
        assert_eq!(e.strands(), 3);
    }

    #[test]
    fn sigma_composites() {
        assert_eq!(eval_word(&sigma_composite(2, 1).unwrap()).unwrap().to_ints(), vec![1]);
        assert_eq!(eval_word(&sigma_composite(3, 2).unwrap()).unwrap().to_ints(), vec![2]);
        for k in 2..=6 {
            for i in 1..k {
                let c = sigma_composite(k, i).unwrap();
                let x = ObjTerm::right_nested(&vec![g("x"); k]);
                assert_eq!(src_obj(&c).unwrap(), x);
                assert_eq!(tgt_obj(&c).unwrap(), x);
                let w = eval_word(&c).unwrap();
                assert_eq!(w.to_ints(), vec![i as i64]);
                assert_eq!(exponent_sum(&w), 1);
            }
        }
        assert!(sigma_composite(3, 0).is_err());
        assert!(sigma_composite(3, 3).is_err());
    }

    #[test]
    fn malformed_terms_are_rejected() {
        let (x, y) = (g("x"), g("y"));
        let bad = OneCell::compose(OneCell::Braid(x.clone(), y.clone()), OneCell::Id(ObjTerm::tensor(y, x)));
        assert!(matches!(eval_one_cell(&bad), Err(FunctorError::Term(_))));
    }
}
