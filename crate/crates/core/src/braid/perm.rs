use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidWord;

/// Underlying permutation of a braid, acting on positions.
///
/// `image(p)` is the final position of the strand that starts at position
/// `p` (0-based internally, 1-based when displayed). Letters are applied in
/// word order, each `σ_i` swapping whatever occupies positions `i` and
/// `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn of_word(w: &BraidWord) -> Self {
        // occupant[pos] = starting position of the strand now at pos
        let mut occupant: Vec<usize> = (0..w.strands()).collect();
        for l in w.letters() {
            occupant.swap(l.index - 1, l.index);
        }
        let mut img = vec![0; w.strands()];
        for (p, &s) in occupant.iter().enumerate() {
            img[s] = p;
        }
        Permutation(img)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, p: usize) -> usize {
        self.0[p]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Moves labels along the strands: `out[image(p)] = labels[p]`.
    pub fn transport<T: Clone>(&self, labels: &[T]) -> Vec<T> {
        assert_eq!(labels.len(), self.0.len(), "label count must match strand count");
        let mut out: Vec<Option<T>> = vec![None; labels.len()];
        for (p, l) in labels.iter().enumerate() {
            out[self.0[p]] = Some(l.clone());
        }
        out.into_iter().map(|o| o.expect("permutation is a bijection")).collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, v: &[i64]) -> Permutation {
        Permutation::of_word(&BraidWord::from_ints(n, v).unwrap())
    }

    #[test]
    fn examples() {
        assert!(perm(3, &[]).is_identity());
        assert_eq!(perm(2, &[1]).one_based(), vec![2, 1]);
        // σ1 then σ2: the strand starting at 1 ends at 3
        assert_eq!(perm(3, &[1, 2]).one_based(), vec![3, 1, 2]);
        assert_eq!(perm(3, &[1, 2]).to_string(), "[3,1,2]");
    }

    #[test]
    fn ignores_signs_and_respects_relations() {
        assert_eq!(perm(3, &[1, -2, 1]), perm(3, &[2, 1, -2]));
        assert_eq!(perm(4, &[1, 3]), perm(4, &[3, 1]));
    }

    #[test]
    fn transport_follows_strands() {
        let p = perm(3, &[1, 2]);
        assert_eq!(p.transport(&["x", "y", "z"]), vec!["y", "z", "x"]);
    }
}
