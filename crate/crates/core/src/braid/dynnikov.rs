//! Dynnikov coordinates: the action of `B_n` on integral laminations of
//! the punctured disk. The action is faithful, so two words are equal iff
//! they send a fixed curve system to the same coordinates.
//!
//! `B_n` is embedded in the braid group on `n + 2` punctures, letter `σ_k`
//! going to `σ_{k+1}`. The two extra punctures are never moved, so only the
//! interior update rules are needed. Coordinates grow exponentially in the
//! word length, hence the big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BraidWord;

fn pos(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Plus {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Minus {
        x.clone()
    } else {
        BigInt::zero()
    }
}

/// Final coordinates `(a_1, b_1, ..., a_n, b_n)` of the image of the
/// standard curve system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynnikovKey(Vec<(BigInt, BigInt)>);

impl DynnikovKey {
    pub fn of(w: &BraidWord) -> Self {
        let mut c: Vec<(BigInt, BigInt)> = (0..w.strands()).map(|_| (BigInt::zero(), BigInt::one())).collect();
        for l in w.letters() {
            // real σ_k is σ_{k+1} among n+2 punctures, touching pairs k-1, k
            let (p, q) = (l.index - 1, l.index);
            let (a0, b0) = c[p].clone();
            let (a1, b1) = c[q].clone();
            let next = if l.sign > 0 {
                let t = &a0 - &a1 + pos(&b1) - neg(&b0);
                (
                    &a0 + pos(&b0) + pos(&(pos(&b1) - &t)),
                    &b1 - pos(&t),
                    &a1 + neg(&b1) + neg(&(neg(&b0) + &t)),
                    &b0 + pos(&t),
                )
            } else {
                let d = &a0 - &a1 - pos(&b1) + neg(&b0);
                (
                    &a0 - pos(&b0) - pos(&(pos(&b1) + &d)),
                    &b1 + neg(&d),
                    &a1 - neg(&b1) - neg(&(neg(&b0) - &d)),
                    &b0 - neg(&d),
                )
            };
            c[p] = (next.0, next.1);
            c[q] = (next.2, next.3);
        }
        DynnikovKey(c)
    }

    pub fn coordinates(&self) -> &[(BigInt, BigInt)] {
        &self.0
    }
}
