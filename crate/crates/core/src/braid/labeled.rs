use std::fmt;

use super::{are_equal, perm_of, BraidError, BraidWord};
use crate::term::LabelWord;

/// A braid whose strands carry generator labels, read at the source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledBraid {
    source_labels: LabelWord,
    word: BraidWord,
}

impl LabeledBraid {
    pub fn new(source_labels: LabelWord, word: BraidWord) -> Result<Self, BraidError> {
        if source_labels.len() != word.strands() {
            return Err(BraidError::StrandMismatch {
                left: source_labels.len(),
                right: word.strands(),
            });
        }
        Ok(LabeledBraid { source_labels, word })
    }

    pub fn source_labels(&self) -> &LabelWord {
        &self.source_labels
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    /// Labels at the target end, carried along the strands.
    pub fn target_labels(&self) -> LabelWord {
        LabelWord(perm_of(&self.word).transport(&self.source_labels.0))
    }
}

impl fmt::Display for LabeledBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = if self.word.is_empty() {
            "(empty)".to_string()
        } else {
            self.word.letters_string().replace(' ', ",")
        };
        write!(f, "n={} labels={} word={}", self.strands(), self.source_labels, w)
    }
}

/// Equality in the labeled braid groupoid: same source labels and the same
/// braid. Target labels then agree automatically.
pub fn labeled_equal(a: &LabeledBraid, b: &LabeledBraid) -> bool {
    a.strands() == b.strands()
        && a.source_labels == b.source_labels
        && are_equal(&a.word, &b.word).unwrap_or(false)
}
