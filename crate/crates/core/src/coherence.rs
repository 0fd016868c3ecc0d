//! Decision procedures from coherence.
//!
//! Two parallel 1-cells of the free braided monoidal bicategory are
//! isomorphic exactly when they evaluate to the same labeled braid, and the
//! isomorphism is then unique. Since every 2-cell of the free structure is
//! invertible, any two parallel 2-cells coincide; deciding equality of
//! 2-cells therefore reduces to comparing boundaries. The movie calculus is
//! an independent check of the latter (see [`fourth_axiom_pastings`]).
//!
//! The string model: objects are words in the generators and the braiding
//! of two strings is one block crossing, or the identity when either string
//! is empty. [`crans_unit_checks`] confirms that the unit conditions hold on
//! the nose in that model.

use std::fmt;

use crate::braid::{BraidWord, LabeledBraid};
use crate::functor::{block_braid, eval_one_cell, eval_word, FunctorError};
use crate::term::pasting::{Pasting, PastingError};
use crate::term::{boundary2, src_obj, tgt_obj, LabelWord, ObjTerm, OneCell, TwoCell};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Same flattened labels, different bracketing or units.
    ObjectMismatch,
    /// The flattened source or target labels differ.
    LabelMismatch,
    BraidDiffer,
    Isomorphic,
    ParallelEqual,
    /// The two 2-cells have different boundary 1-cells.
    NotParallel,
}

impl Reason {
    pub fn name(self) -> &'static str {
        match self {
            Reason::ObjectMismatch => "ObjectMismatch",
            Reason::LabelMismatch => "LabelMismatch",
            Reason::BraidDiffer => "BraidDiffer",
            Reason::Isomorphic => "Isomorphic",
            Reason::ParallelEqual => "ParallelEqual",
            Reason::NotParallel => "NotParallel",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub verdict: bool,
    pub left_braid: LabeledBraid,
    pub right_braid: LabeledBraid,
    pub reason: Reason,
}

/// Whether `f` and `g` are parallel and isomorphic.
pub fn iso_exists(f: &OneCell, g: &OneCell) -> Result<DecisionReport, FunctorError> {
    let (lb, rb) = (eval_one_cell(f)?, eval_one_cell(g)?);
    let (fs, ft) = (src_obj(f)?, tgt_obj(f)?);
    let (gs, gt) = (src_obj(g)?, tgt_obj(g)?);
    let reason = if fs.flatten() != gs.flatten() || ft.flatten() != gt.flatten() {
        Reason::LabelMismatch
    } else if fs != gs || ft != gt {
        Reason::ObjectMismatch
    } else if crate::braid::labeled_equal(&lb, &rb) {
        Reason::Isomorphic
    } else {
        Reason::BraidDiffer
    };
    Ok(DecisionReport { verdict: reason == Reason::Isomorphic, left_braid: lb, right_braid: rb, reason })
}

/// Whether two 2-cells are equal; true exactly when they are parallel.
pub fn two_cells_equal(alpha: &TwoCell, beta: &TwoCell) -> Result<DecisionReport, FunctorError> {
    let (a_src, a_tgt) = boundary2(alpha)?;
    let (b_src, b_tgt) = boundary2(beta)?;
    let (lb, rb) = (eval_one_cell(&a_src)?, eval_one_cell(&b_src)?);
    let parallel = a_src == b_src && a_tgt == b_tgt;
    Ok(DecisionReport {
        verdict: parallel,
        left_braid: lb,
        right_braid: rb,
        reason: if parallel { Reason::ParallelEqual } else { Reason::NotParallel },
    })
}

/// An object of the string model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StringObject {
    pub word: LabelWord,
}

impl StringObject {
    pub fn new<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Self {
        StringObject { word: LabelWord::new(labels) }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The right-nested tensor of the letters; the unit for the empty string.
    pub fn to_obj(&self) -> ObjTerm {
        let parts: Vec<ObjTerm> = self.word.0.iter().map(|n| ObjTerm::Gen(n.clone())).collect();
        ObjTerm::right_nested(&parts)
    }
}

/// `R_{X,Y}` in the string model.
pub fn gr_braiding(x: &StringObject, y: &StringObject) -> LabeledBraid {
    let labels = x.word.concat(&y.word);
    let n = labels.len();
    let word = if x.is_empty() || y.is_empty() {
        BraidWord::identity(n)
    } else {
        block_braid(x.len(), y.len(), 1)
    };
    LabeledBraid::new(labels, word).expect("block width matches labels")
}

fn seq(n: usize, parts: &[(&BraidWord, usize)]) -> BraidWord {
    let mut w = BraidWord::identity(n);
    for (p, shift) in parts {
        w = w.concat(&p.embed(n, *shift).expect("fits")).expect("same strands");
    }
    w
}

/// Boundary words of `R_(X|Y,Z)` in the string model.
pub fn gr_hex_left(x: &StringObject, y: &StringObject, z: &StringObject) -> (BraidWord, BraidWord) {
    let n = x.len() + y.len() + z.len();
    let xy = gr_braiding(x, y);
    let xz = gr_braiding(x, z);
    let yz = StringObject { word: y.word.concat(&z.word) };
    let whole = gr_braiding(x, &yz);
    (seq(n, &[(xy.word(), 0), (xz.word(), y.len())]), seq(n, &[(whole.word(), 0)]))
}

/// Boundary words of `R_(X,Y|Z)` in the string model.
pub fn gr_hex_right(x: &StringObject, y: &StringObject, z: &StringObject) -> (BraidWord, BraidWord) {
    let n = x.len() + y.len() + z.len();
    let yz = gr_braiding(y, z);
    let xz = gr_braiding(x, z);
    let xy = StringObject { word: x.word.concat(&y.word) };
    let whole = gr_braiding(&xy, z);
    (seq(n, &[(yz.word(), x.len()), (xz.word(), 0)]), seq(n, &[(whole.word(), 0)]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CransCondition {
    pub name: &'static str,
    pub instances: usize,
    /// Failing instances, described.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CransReport {
    pub conditions: Vec<CransCondition>,
}

impl CransReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.failures.is_empty())
    }

    pub fn instances(&self) -> usize {
        self.conditions.iter().map(|c| c.instances).sum()
    }
}

/// All strings over `alphabet` of length at most `max_len`, shortest first.
pub fn strings_up_to(alphabet: &[&str], max_len: usize) -> Vec<StringObject> {
    let mut out = vec![StringObject::default()];
    let mut layer = vec![Vec::<&str>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| StringObject::new(w.iter().copied())));
    }
    out
}

type UnitCase = fn(&StringObject, &StringObject, &StringObject) -> (BraidWord, BraidWord, TwoCell);

fn hex_case(hex: TwoCell, words: (BraidWord, BraidWord)) -> (BraidWord, BraidWord, TwoCell) {
    (words.0, words.1, hex)
}

/// The unit conditions of a braided monoidal 2-category, checked in the
/// string model for strings over `{x, y}` of length at most 3: braiding
/// with the empty string is the identity on either side, and each of the
/// six hexagon cells with one empty argument has letter-identical boundary
/// words, so it can only be an identity. Each hexagon instance is also
/// evaluated through the term layer as a cross-check.
pub fn crans_unit_checks() -> CransReport {
    crans_unit_checks_over(&["x", "y"], 3)
}

pub fn crans_unit_checks_over(alphabet: &[&str], max_len: usize) -> CransReport {
    let strings = strings_up_to(alphabet, max_len);
    let empty = StringObject::default();
    let mut conditions = Vec::new();

    for (name, left) in [("R_(I,A) = 1", true), ("R_(A,I) = 1", false)] {
        let mut c = CransCondition { name, instances: 0, failures: Vec::new() };
        for a in &strings {
            let r = if left { gr_braiding(&empty, a) } else { gr_braiding(a, &empty) };
            c.instances += 1;
            if !r.word().is_empty() {
                c.failures.push(format!("A={}: {}", a.word, r));
            }
        }
        conditions.push(c);
    }

    let cases: [(&'static str, UnitCase); 6] = [
        ("R_(I|A,B) = 1", |i, a, b| {
            hex_case(TwoCell::HexL(i.to_obj(), a.to_obj(), b.to_obj()), gr_hex_left(i, a, b))
        }),
        ("R_(A|I,B) = 1", |i, a, b| {
            hex_case(TwoCell::HexL(a.to_obj(), i.to_obj(), b.to_obj()), gr_hex_left(a, i, b))
        }),
        ("R_(A|B,I) = 1", |i, a, b| {
            hex_case(TwoCell::HexL(a.to_obj(), b.to_obj(), i.to_obj()), gr_hex_left(a, b, i))
        }),
        ("R_(I,A|B) = 1", |i, a, b| {
            hex_case(TwoCell::HexR(i.to_obj(), a.to_obj(), b.to_obj()), gr_hex_right(i, a, b))
        }),
        ("R_(A,I|B) = 1", |i, a, b| {
            hex_case(TwoCell::HexR(a.to_obj(), i.to_obj(), b.to_obj()), gr_hex_right(a, i, b))
        }),
        ("R_(A,B|I) = 1", |i, a, b| {
            hex_case(TwoCell::HexR(a.to_obj(), b.to_obj(), i.to_obj()), gr_hex_right(a, b, i))
        }),
    ];
    for (name, case) in cases {
        let mut c = CransCondition { name, instances: 0, failures: Vec::new() };
        for a in &strings {
            for b in &strings {
                c.instances += 1;
                let (src, tgt, hex) = case(&empty, a, b);
                let term_words = boundary2(&hex)
                    .map_err(FunctorError::from)
                    .and_then(|(s, t)| Ok((eval_word(&s)?, eval_word(&t)?)));
                let describe = || format!("A={} B={}", a.word, b.word);
                if src != tgt {
                    c.failures.push(format!("{}: `{}` vs `{}`", describe(), src.letters_string(), tgt.letters_string()));
                }
                match term_words {
                    Ok((s, t)) if s == src && t == tgt => {}
                    Ok((s, t)) => c.failures.push(format!(
                        "{}: term layer gives `{}` => `{}`",
                        describe(),
                        s.letters_string(),
                        t.letters_string()
                    )),
                    Err(e) => c.failures.push(format!("{}: {e}", describe())),
                }
            }
        }
        conditions.push(c);
    }
    CransReport { conditions }
}

/// Both sides of the fourth braiding axiom as 2-cells between the same
/// paths from `(A*B)*C` to `C*(B*A)`:
///
/// * source: `R_{A,B}*1, a, 1*R_{A,C}, a•, R_{B,C}*1, a`
/// * target: `a, 1*R_{B,C}, a•, R_{A,C}*1, a, 1*R_{A,B}`
///
/// The left side goes through `R_{A,B*C}` and the naturality of the
/// braiding in its second argument; the right side through `R_{B*A,C}`
/// and naturality in the first argument.
pub fn fourth_axiom_pastings(a: &ObjTerm, b: &ObjTerm, c: &ObjTerm) -> Result<(TwoCell, TwoCell), PastingError> {
    use OneCell::{Assoc, AssocInv, Braid, Id};
    let t = |x: &ObjTerm, y: &ObjTerm| ObjTerm::tensor(x.clone(), y.clone());
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let start = vec![
        OneCell::tensor(Braid(a.clone(), b.clone()), Id(c.clone())),
        Assoc(b.clone(), a.clone(), c.clone()),
        OneCell::tensor(Id(b.clone()), Braid(a.clone(), c.clone())),
        AssocInv(b.clone(), c.clone(), a.clone()),
        OneCell::tensor(Braid(b.clone(), c.clone()), Id(a.clone())),
        Assoc(c.clone(), b.clone(), a.clone()),
    ];

    let mut left = Pasting::new(start.clone())?;
    left.rewrite(0, TwoCell::HexL(a.clone(), b.clone(), c.clone()))?
        .rewrite(2, TwoCell::inv(TwoCell::EtaA(b.clone(), c.clone(), a.clone())))?
        .drop_identity(2)?
        .rewrite(1, TwoCell::inv(TwoCell::NatB(Id(a.clone()), Braid(b.clone(), c.clone()))))?
        .rewrite(2, TwoCell::inv(TwoCell::CompRUnit(Braid(a.clone(), t(&c, &b)))))?
        .rewrite(2, TwoCell::inv(TwoCell::EpsA(a.clone(), c.clone(), b.clone())))?
        .rewrite(3, TwoCell::inv(TwoCell::HexL(a.clone(), c.clone(), b.clone())))?;

    let mut right = Pasting::new(start)?;
    right
        .rewrite(2, TwoCell::HexR(b.clone(), a.clone(), c.clone()))?
        .rewrite(4, TwoCell::EpsA(c.clone(), b.clone(), a.clone()))?
        .rewrite(1, TwoCell::inv(TwoCell::EtaA(b.clone(), a.clone(), c.clone())))?
        .drop_identity(3)?
        .drop_identity(1)?
        .rewrite(0, TwoCell::NatB(Braid(a.clone(), b.clone()), Id(c.clone())))?
        .rewrite(0, TwoCell::inv(TwoCell::CompRUnit(Braid(t(&a, &b), c.clone()))))?
        .rewrite(0, TwoCell::EtaA(a.clone(), b.clone(), c.clone()))?
        .rewrite(2, TwoCell::inv(TwoCell::CompLUnit(Braid(t(&a, &b), c.clone()))))?
        .rewrite(3, TwoCell::inv(TwoCell::EpsA(c.clone(), a.clone(), b.clone())))?
        .rewrite(1, TwoCell::inv(TwoCell::HexR(a.clone(), b.clone(), c.clone())))?;

    debug_assert_eq!(left.path(), right.path());
    Ok((left.finish(), right.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::sigma_composite;

    fn g(n: &str) -> ObjTerm {
        ObjTerm::gen(n)
    }

    #[test]
    fn bracketings_are_isomorphic() {
        let (x, y, z, w) = (g("x"), g("y"), g("z"), g("w"));
        // ((xy)z)w -> x(y(zw)) two ways
        let one = OneCell::path(
            &[OneCell::Assoc(ObjTerm::tensor(x.clone(), y.clone()), z.clone(), w.clone()), OneCell::Assoc(x.clone(), y.clone(), ObjTerm::tensor(z.clone(), w.clone()))],
            &ObjTerm::Unit,
        );
        let two = OneCell::path(
            &[
                OneCell::tensor(OneCell::Assoc(x.clone(), y.clone(), z.clone()), OneCell::Id(w.clone())),
                OneCell::Assoc(x.clone(), ObjTerm::tensor(y.clone(), z.clone()), w.clone()),
                OneCell::tensor(OneCell::Id(x.clone()), OneCell::Assoc(y.clone(), z.clone(), w.clone())),
            ],
            &ObjTerm::Unit,
        );
        let r = iso_exists(&one, &two).unwrap();
        assert!(r.verdict);
        assert_eq!(r.reason, Reason::Isomorphic);
        assert!(r.left_braid.word().is_empty());
    }

    #[test]
    fn braiding_and_inverse_braiding_differ() {
        let f = OneCell::Braid(g("x"), g("y"));
        let h = OneCell::BraidInv(g("y"), g("x"));
        let r = iso_exists(&f, &h).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.reason, Reason::BraidDiffer);
    }

    #[test]
    fn braid_relation_holds_for_composites() {
        let s = |i| sigma_composite(3, i).unwrap();
        let f = OneCell::path(&[s(1), s(2), s(1)], &ObjTerm::Unit);
        let h = OneCell::path(&[s(2), s(1), s(2)], &ObjTerm::Unit);
        assert!(iso_exists(&f, &h).unwrap().verdict);
    }

    #[test]
    fn mismatch_reasons() {
        let (x, y) = (g("x"), g("y"));
        let r = iso_exists(&OneCell::Braid(x.clone(), y.clone()), &OneCell::Braid(y.clone(), x.clone())).unwrap();
        assert_eq!(r.reason, Reason::LabelMismatch);
        let l = OneCell::LUnit(x.clone());
        let r = iso_exists(&l, &OneCell::RUnit(x.clone())).unwrap();
        assert_eq!(r.reason, Reason::ObjectMismatch);
        assert!(!r.verdict);
    }

    #[test]
    fn parallel_two_cells_are_equal() {
        let (x, y) = (g("x"), g("y"));
        let eta = TwoCell::EtaB(x.clone(), y.clone());
        // a second cell 1 => R•∘R: pass through the identity on R•∘R
        let other = TwoCell::vcomp(TwoCell::Id2(boundary2(&eta).unwrap().1), TwoCell::vcomp(eta.clone(), TwoCell::inv(TwoCell::inv(TwoCell::Id2(OneCell::Id(ObjTerm::tensor(x.clone(), y.clone())))))));
        let r = two_cells_equal(&eta, &other).unwrap();
        assert!(r.verdict);
        assert_eq!(r.reason, Reason::ParallelEqual);
        let r = two_cells_equal(&TwoCell::Id2(OneCell::Braid(x.clone(), y.clone())), &TwoCell::HexL(x.clone(), y.clone(), x)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.reason, Reason::NotParallel);
    }

    #[test]
    fn string_braiding() {
        let r = gr_braiding(&StringObject::new(["x"]), &StringObject::new(["y"]));
        assert_eq!(r.to_string(), "n=2 labels=x,y word=s1");
        assert!(gr_braiding(&StringObject::default(), &StringObject::new(["x", "y"])).word().is_empty());
        let r = gr_braiding(&StringObject::new(["x", "y"]), &StringObject::new(["z"]));
        assert_eq!(r.word().to_ints(), vec![2, 1]);
    }

    #[test]
    fn unit_conditions_hold() {
        let report = crans_unit_checks();
        assert_eq!(report.conditions.len(), 8);
        for c in &report.conditions {
            assert!(c.failures.is_empty(), "{}: {:?}", c.name, &c.failures[..c.failures.len().min(3)]);
        }
        assert_eq!(strings_up_to(&["x", "y"], 3).len(), 15);
        assert_eq!(report.instances(), 2 * 15 + 6 * 225);
    }

    #[test]
    fn fourth_axiom_sides_are_parallel() {
        let (a, b, c) = (g("a"), g("b"), g("c"));
        let (l, r) = fourth_axiom_pastings(&a, &b, &c).unwrap();
        assert!(two_cells_equal(&l, &r).unwrap().verdict);
        let x = g("x");
        let (l, r) = fourth_axiom_pastings(&x, &x, &x).unwrap();
        let (s, t) = boundary2(&l).unwrap();
        assert_eq!(eval_word(&s).unwrap().to_ints(), vec![1, 2, 1]);
        assert_eq!(eval_word(&t).unwrap().to_ints(), vec![2, 1, 2]);
        assert!(two_cells_equal(&l, &r).unwrap().verdict);
    }

    #[test]
    fn fourth_axiom_movies_are_equivalent() {
        use crate::movie::{check_certificate, compile_two_cell, movie_equivalent, validate_movie, SearchOptions};
        let x = g("x");
        let (l, r) = fourth_axiom_pastings(&x, &x, &x).unwrap();
        let (ml, mr) = (compile_two_cell(&l).unwrap(), compile_two_cell(&r).unwrap());
        validate_movie(&ml).unwrap();
        validate_movie(&mr).unwrap();
        assert_eq!(ml.first().to_ints(), vec![1, 2, 1]);
        assert_eq!(mr.last().to_ints(), vec![2, 1, 2]);
        let out = movie_equivalent(&ml, &mr, &SearchOptions::default()).unwrap();
        let cert = out.certificate().expect("certificate within budget");
        assert!(check_certificate(&ml, &mr, cert));
    }
}
