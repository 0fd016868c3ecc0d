//! Braid words on `n` strands and an exact equality test.
//!
//! Convention: a positive letter `σ_i` is strand `i` crossing OVER strand
//! `i+1` (strands counted left to right from 1). The geometric extractor in
//! [`crate::cubes`] is calibrated against this.

mod dynnikov;
mod labeled;
mod perm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dynnikov::DynnikovKey;
pub use labeled::{labeled_equal, LabeledBraid};
pub use perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    /// 1-based generator index.
    pub index: usize,
    /// `+1` or `-1`.
    pub sign: i8,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, sign: 1 }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, sign: -1 }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: -self.sign }
    }

    pub fn shifted(self, by: usize) -> Self {
        Letter { index: self.index + by, sign: self.sign }
    }

    /// Signed integer form: `σ_3 ↦ 3`, `σ_3⁻¹ ↦ -3`.
    pub fn to_int(self) -> i64 {
        self.sign as i64 * self.index as i64
    }

    pub fn from_int(v: i64) -> Self {
        assert!(v != 0, "zero is not a braid letter");
        Letter { index: v.unsigned_abs() as usize, sign: v.signum() as i8 }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.sign > 0 { 's' } else { 'S' };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter {letter} out of range for {strands} strands")]
    IndexOutOfRange { letter: String, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("bad word syntax: {0}")]
    Syntax(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands || l.sign.abs() != 1) {
            return Err(BraidError::IndexOutOfRange { letter: l.to_string(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// From signed integers, `[1, -2]` being `σ1 σ2⁻¹`.
    pub fn from_ints(strands: usize, ints: &[i64]) -> Result<Self, BraidError> {
        if ints.contains(&0) {
            return Err(BraidError::Syntax("letter index 0".into()));
        }
        BraidWord::new(strands, ints.iter().map(|&v| Letter::from_int(v)).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Re-embeds on `strands` strands with every index shifted by `by`.
    pub fn embed(&self, strands: usize, by: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.letters.iter().map(|l| l.shifted(by)).collect())
    }

    /// Space-separated letters, empty for the identity.
    pub fn letters_string(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        parts.join(" ")
    }

    /// Parses a bare letter list for a known strand count.
    pub fn parse_letters(strands: usize, s: &str) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(parse_letter(tok)?);
        }
        BraidWord::new(strands, letters)
    }
}

fn parse_letter(tok: &str) -> Result<Letter, BraidError> {
    let sign = match tok.as_bytes().first() {
        Some(b's') => 1,
        Some(b'S') => -1,
        _ => return Err(BraidError::Syntax(format!("bad letter `{tok}`"))),
    };
    let index: usize = tok[1..]
        .parse()
        .map_err(|_| BraidError::Syntax(format!("bad letter `{tok}`")))?;
    Ok(Letter { index, sign })
}

/// `n=<int>` followed by whitespace-separated letters.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim_start();
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| BraidError::Syntax("missing `n=` header".into()))?;
        let end = rest.find(|c: char| c.is_whitespace()).unwrap_or(rest.len());
        let strands: usize = rest[..end]
            .parse()
            .map_err(|_| BraidError::Syntax(format!("bad strand count `{}`", &rest[..end])))?;
        BraidWord::parse_letters(strands, &rest[end..])
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    BraidWord { strands: w.strands, letters: out }
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters.iter().map(|l| l.sign as i64).sum()
}

/// Exact equality in `B_n`.
pub fn are_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch { left: a.strands, right: b.strands });
    }
    if a.letters == b.letters {
        return Ok(true);
    }
    if exponent_sum(a) != exponent_sum(b) || perm_of(a) != perm_of(b) {
        return Ok(false);
    }
    Ok(DynnikovKey::of(a) == DynnikovKey::of(b))
}

pub fn perm_of(w: &BraidWord) -> Permutation {
    Permutation::of_word(w)
}
