//! Elementary braid changes between consecutive movie frames.
//!
//! Only the branch-free changes are representable: inserting or deleting a
//! cancelling pair, commuting far letters, and the three-letter braid
//! relation. Inserting or deleting a single letter is deliberately absent.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braid::{BraidWord, Letter};

/// Which sign pattern of the braid relation is used. Each is an involution
/// on three-letter words `x^α y^β x^γ` with `|x - y| = 1`:
///
/// * `Homogeneous`: `x^ε y^ε x^ε ↔ y^ε x^ε y^ε`
/// * `Mixed`: `x^ε y^ε x^-ε → y^-ε x^ε y^ε`
/// * `MixedMirror`: `x^-ε y^ε x^ε → y^ε x^ε y^-ε`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationVariant {
    Homogeneous,
    Mixed,
    MixedMirror,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementaryChange {
    Equal,
    /// Inserts `σ_j^ε σ_j^-ε` before letter `at`.
    PairInsert { j: usize, eps: i8, at: usize },
    /// Deletes `σ_j^ε σ_j^-ε` found at letter `at`.
    PairDelete { j: usize, eps: i8, at: usize },
    /// Swaps letters `at` and `at + 1`, which must be far apart.
    FarCommute { at: usize },
    /// Rewrites letters `at..at + 3`.
    BraidRelation { at: usize, variant: RelationVariant },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChangeError {
    #[error("{change} does not apply to `{word}`")]
    NotApplicable { change: String, word: String },
}

/// The rewrite of a three-letter window under the braid relation, if any.
pub fn relation_rewrite(w: &[Letter]) -> Option<([Letter; 3], RelationVariant)> {
    let [a, b, c] = w else { return None };
    if a.index != c.index || a.index.abs_diff(b.index) != 1 {
        return None;
    }
    let (x, y) = (a.index, b.index);
    let l = |i: usize, s: i8| Letter { index: i, sign: s };
    let e = a.sign;
    if a.sign == b.sign && b.sign == c.sign {
        Some(([l(y, e), l(x, e), l(y, e)], RelationVariant::Homogeneous))
    } else if a.sign == b.sign && c.sign == -e {
        Some(([l(y, -e), l(x, e), l(y, e)], RelationVariant::Mixed))
    } else if a.sign == -b.sign && b.sign == c.sign {
        let e = b.sign;
        Some(([l(y, e), l(x, e), l(y, -e)], RelationVariant::MixedMirror))
    } else {
        None
    }
}

impl ElementaryChange {
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord, ChangeError> {
        let fail = || ChangeError::NotApplicable { change: self.to_string(), word: w.letters_string() };
        let l = w.letters();
        let mut out = l.to_vec();
        match *self {
            ElementaryChange::Equal => {}
            ElementaryChange::PairInsert { j, eps, at } => {
                if at > l.len() || j == 0 || j >= w.strands() || eps.abs() != 1 {
                    return Err(fail());
                }
                let x = Letter { index: j, sign: eps };
                out.splice(at..at, [x, x.inverse()]);
            }
            ElementaryChange::PairDelete { j, eps, at } => {
                let x = Letter { index: j, sign: eps };
                if at + 2 > l.len() || l[at] != x || l[at + 1] != x.inverse() {
                    return Err(fail());
                }
                out.drain(at..at + 2);
            }
            ElementaryChange::FarCommute { at } => {
                if at + 2 > l.len() || l[at].index.abs_diff(l[at + 1].index) < 2 {
                    return Err(fail());
                }
                out.swap(at, at + 1);
            }
            ElementaryChange::BraidRelation { at, variant } => {
                if at + 3 > l.len() {
                    return Err(fail());
                }
                match relation_rewrite(&l[at..at + 3]) {
                    Some((rep, v)) if v == variant => out.splice(at..at + 3, rep).for_each(drop),
                    _ => return Err(fail()),
                }
            }
        }
        BraidWord::new(w.strands(), out).map_err(|_| fail())
    }

    /// The change undoing this one, as seen from the other frame.
    pub fn inverse(&self, before: &BraidWord) -> ElementaryChange {
        match *self {
            ElementaryChange::PairInsert { j, eps, at } => ElementaryChange::PairDelete { j, eps, at },
            ElementaryChange::PairDelete { j, eps, at } => ElementaryChange::PairInsert { j, eps, at },
            ElementaryChange::BraidRelation { at, .. } => {
                let after = self.apply(before).expect("inverse of a valid change");
                let (_, v) = relation_rewrite(&after.letters()[at..at + 3]).expect("relations are involutions");
                ElementaryChange::BraidRelation { at, variant: v }
            }
            c => c,
        }
    }

    /// Letter span `(start, input_len, output_len)` touched by the change.
    pub fn span(&self) -> Option<(usize, usize, usize)> {
        match *self {
            ElementaryChange::Equal => None,
            ElementaryChange::PairInsert { at, .. } => Some((at, 0, 2)),
            ElementaryChange::PairDelete { at, .. } => Some((at, 2, 0)),
            ElementaryChange::FarCommute { at } => Some((at, 2, 2)),
            ElementaryChange::BraidRelation { at, .. } => Some((at, 3, 3)),
        }
    }

    /// Same change moved to letter position `at`.
    pub fn at(&self, at: usize) -> ElementaryChange {
        match *self {
            ElementaryChange::Equal => ElementaryChange::Equal,
            ElementaryChange::PairInsert { j, eps, .. } => ElementaryChange::PairInsert { j, eps, at },
            ElementaryChange::PairDelete { j, eps, .. } => ElementaryChange::PairDelete { j, eps, at },
            ElementaryChange::FarCommute { .. } => ElementaryChange::FarCommute { at },
            ElementaryChange::BraidRelation { variant, .. } => ElementaryChange::BraidRelation { at, variant },
        }
    }

    /// Shifts generator indices by `by` and letter positions by `pos`.
    pub fn shifted(&self, by: usize, pos: usize) -> ElementaryChange {
        match *self {
            ElementaryChange::PairInsert { j, eps, at } => ElementaryChange::PairInsert { j: j + by, eps, at: at + pos },
            ElementaryChange::PairDelete { j, eps, at } => ElementaryChange::PairDelete { j: j + by, eps, at: at + pos },
            c => match c.span() {
                Some((at, _, _)) => c.at(at + pos),
                None => c,
            },
        }
    }
}

/// Every elementary change taking `a` to `b`, in a fixed order.
pub fn interpretations(a: &BraidWord, b: &BraidWord) -> Vec<ElementaryChange> {
    let (la, lb) = (a.letters(), b.letters());
    let mut out = Vec::new();
    if a.strands() != b.strands() {
        return out;
    }
    if la.len() == lb.len() {
        if la == lb {
            out.push(ElementaryChange::Equal);
            return out;
        }
        let first = la.iter().zip(lb).position(|(x, y)| x != y).unwrap();
        let last = la.len() - 1 - la.iter().rev().zip(lb.iter().rev()).position(|(x, y)| x != y).unwrap();
        let width = last - first + 1;
        if width <= 2 {
            // a two-letter window containing the difference
            for at in first.saturating_sub(1)..=first {
                if at + 2 <= la.len() && at <= first && at + 2 > last {
                    let c = ElementaryChange::FarCommute { at };
                    if c.apply(a).as_ref() == Ok(b) {
                        out.push(c);
                    }
                }
            }
        }
        if width <= 3 {
            for at in first.saturating_sub(2)..=first {
                if at + 3 <= la.len() && at + 3 > last {
                    if let Some((_, v)) = relation_rewrite(&la[at..at + 3]) {
                        let c = ElementaryChange::BraidRelation { at, variant: v };
                        if c.apply(a).as_ref() == Ok(b) {
                            out.push(c);
                        }
                    }
                }
            }
        }
    } else if lb.len() == la.len() + 2 {
        for at in 0..=la.len() {
            let x = lb[at];
            let c = ElementaryChange::PairInsert { j: x.index, eps: x.sign, at };
            if lb[at + 1] == x.inverse() && c.apply(a).as_ref() == Ok(b) {
                out.push(c);
            }
        }
    } else if la.len() == lb.len() + 2 {
        for at in 0..=lb.len() {
            let x = la[at];
            let c = ElementaryChange::PairDelete { j: x.index, eps: x.sign, at };
            if la[at + 1] == x.inverse() && c.apply(a).as_ref() == Ok(b) {
                out.push(c);
            }
        }
    }
    out
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "-1"
    }
}

impl fmt::Display for RelationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationVariant::Homogeneous => "homogeneous",
            RelationVariant::Mixed => "mixed",
            RelationVariant::MixedMirror => "mixed-mirror",
        })
    }
}

impl fmt::Display for ElementaryChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ElementaryChange::Equal => write!(f, "Equal"),
            ElementaryChange::PairInsert { j, eps, at } => write!(f, "PairInsert j={j} e={} at={at}", sign_str(eps)),
            ElementaryChange::PairDelete { j, eps, at } => write!(f, "PairDelete j={j} e={} at={at}", sign_str(eps)),
            ElementaryChange::FarCommute { at } => write!(f, "FarCommute at={at}"),
            ElementaryChange::BraidRelation { at, variant } => write!(f, "BraidRelation at={at} variant={variant}"),
        }
    }
}

impl FromStr for ElementaryChange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut toks = s.split_whitespace();
        let kind = toks.next().ok_or("empty change")?;
        let mut j = None;
        let mut eps = None;
        let mut at = None;
        let mut variant = None;
        for t in toks {
            let (k, v) = t.split_once('=').ok_or_else(|| format!("bad field `{t}`"))?;
            let num = || v.parse::<usize>().map_err(|_| format!("bad number `{v}`"));
            match k {
                "j" => j = Some(num()?),
                "at" => at = Some(num()?),
                "e" => {
                    eps = Some(match v {
                        "+1" | "1" => 1,
                        "-1" => -1,
                        _ => return Err(format!("bad sign `{v}`")),
                    })
                }
                "variant" => {
                    variant = Some(match v {
                        "homogeneous" => RelationVariant::Homogeneous,
                        "mixed" => RelationVariant::Mixed,
                        "mixed-mirror" => RelationVariant::MixedMirror,
                        _ => return Err(format!("bad variant `{v}`")),
                    })
                }
                _ => return Err(format!("unknown field `{k}`")),
            }
        }
        let need = |o: Option<usize>, name: &str| o.ok_or_else(|| format!("missing `{name}`"));
        Ok(match kind {
            "Equal" => ElementaryChange::Equal,
            "PairInsert" | "PairDelete" => {
                let (j, at) = (need(j, "j")?, need(at, "at")?);
                let eps = eps.ok_or("missing `e`")?;
                if kind == "PairInsert" {
                    ElementaryChange::PairInsert { j, eps, at }
                } else {
                    ElementaryChange::PairDelete { j, eps, at }
                }
            }
            "FarCommute" => ElementaryChange::FarCommute { at: need(at, "at")? },
            "BraidRelation" => ElementaryChange::BraidRelation {
                at: need(at, "at")?,
                variant: variant.ok_or("missing `variant`")?,
            },
            _ => return Err(format!("unknown change `{kind}`")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, v: &[i64]) -> BraidWord {
        BraidWord::from_ints(n, v).unwrap()
    }

    #[test]
    fn relation_variants_are_involutions() {
        for signs in [[1, 1, 1], [-1, -1, -1], [1, 1, -1], [-1, -1, 1], [-1, 1, 1], [1, -1, -1]] {
            let a = w(3, &[signs[0], 2 * signs[1], signs[2]]);
            let (rep, v) = relation_rewrite(a.letters()).unwrap();
            let c = ElementaryChange::BraidRelation { at: 0, variant: v };
            let b = c.apply(&a).unwrap();
            assert_eq!(b.letters(), &rep);
            let back = c.inverse(&a).apply(&b).unwrap();
            assert_eq!(back, a);
            assert!(crate::braid::are_equal(&a, &b).unwrap());
        }
        // σ1 σ2⁻¹ σ1 is not a relation window
        assert!(relation_rewrite(w(3, &[1, -2, 1]).letters()).is_none());
        assert!(relation_rewrite(w(4, &[1, 3, 1]).letters()).is_none());
    }

    #[test]
    fn pair_and_commute() {
        let a = w(4, &[1, 3]);
        let ins = ElementaryChange::PairInsert { j: 2, eps: -1, at: 1 };
        let b = ins.apply(&a).unwrap();
        assert_eq!(b.to_ints(), vec![1, -2, 2, 3]);
        assert_eq!(interpretations(&a, &b), vec![ins]);
        assert_eq!(interpretations(&b, &a), vec![ElementaryChange::PairDelete { j: 2, eps: -1, at: 1 }]);
        let c = ElementaryChange::FarCommute { at: 0 };
        assert_eq!(c.apply(&a).unwrap().to_ints(), vec![3, 1]);
        assert!(ElementaryChange::FarCommute { at: 0 }.apply(&w(3, &[1, 2])).is_err());
        assert!(ElementaryChange::PairInsert { j: 3, eps: 1, at: 0 }.apply(&w(3, &[])).is_err());
    }

    #[test]
    fn ambiguous_insertions_are_all_listed() {
        // s1 -> s1 S1 s1 can be read two ways
        let got = interpretations(&w(2, &[1]), &w(2, &[1, -1, 1]));
        assert_eq!(got.len(), 2);
        assert!(interpretations(&w(2, &[]), &w(2, &[1])).is_empty());
    }

    #[test]
    fn relation_detection() {
        let got = interpretations(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2]));
        assert_eq!(got, vec![ElementaryChange::BraidRelation { at: 0, variant: RelationVariant::Homogeneous }]);
        let got = interpretations(&w(4, &[3, 2, 1, -2]), &w(4, &[3, -1, 2, 1]));
        assert_eq!(got, vec![ElementaryChange::BraidRelation { at: 1, variant: RelationVariant::Mixed }]);
    }

    #[test]
    fn text_round_trip() {
        for c in [
            ElementaryChange::Equal,
            ElementaryChange::PairInsert { j: 2, eps: -1, at: 0 },
            ElementaryChange::PairDelete { j: 1, eps: 1, at: 3 },
            ElementaryChange::FarCommute { at: 4 },
            ElementaryChange::BraidRelation { at: 1, variant: RelationVariant::MixedMirror },
        ] {
            assert_eq!(c.to_string().parse::<ElementaryChange>().unwrap(), c);
        }
    }
}
