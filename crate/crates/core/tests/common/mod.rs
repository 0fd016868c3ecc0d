//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use bicoh_core::braid::{BraidWord, Letter};
use bicoh_core::movie::{relation_rewrite, ElementaryChange, Movie};
use bicoh_core::term::{src_obj, tgt_obj, ObjTerm, OneCell};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(n: usize, v: &[i64]) -> BraidWord {
    BraidWord::from_ints(n, v).unwrap()
}

pub fn random_word(r: &mut TestRng, n: usize, max_len: usize) -> BraidWord {
    let len = r.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = r.gen_range(1..n);
            if r.gen_bool(0.5) {
                Letter::pos(i)
            } else {
                Letter::neg(i)
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

// ---------------------------------------------------------------------------
// Artin action on the free group: a faithful representation of B_n, used as
// an exact oracle independent of the library's equality test.

type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn letter_image(l: Letter, g: i32) -> FreeWord {
    let (i, a) = (l.index as i32, g.abs());
    let pos = if a == i {
        if l.sign > 0 {
            vec![i, i + 1, -i]
        } else {
            vec![i + 1]
        }
    } else if a == i + 1 {
        if l.sign > 0 {
            vec![i]
        } else {
            vec![-(i + 1), i, i + 1]
        }
    } else {
        vec![a]
    };
    if g > 0 {
        pos
    } else {
        pos.iter().rev().map(|x| -x).collect()
    }
}

/// Images of the free generators under the automorphism of the word.
pub fn artin_images(w: &BraidWord) -> Vec<FreeWord> {
    let n = w.strands() as i32;
    let mut images: Vec<FreeWord> = (1..=n).map(|g| vec![g]).collect();
    for &l in w.letters() {
        for img in images.iter_mut() {
            let mut out = Vec::new();
            for &g in img.iter() {
                for h in letter_image(l, g) {
                    push_reduced(&mut out, h);
                }
            }
            *img = out;
        }
    }
    images
}

pub fn artin_equal(a: &BraidWord, b: &BraidWord) -> bool {
    artin_images(a) == artin_images(b)
}

// ---------------------------------------------------------------------------
// Relation closure: union-find over all words of bounded length, joined by
// the defining relations of the braid group (free cancellation, far
// commutation, the braid relation).

pub struct RelationClosure {
    index: HashMap<Vec<i64>, usize>,
    parent: Vec<usize>,
}

impl RelationClosure {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    /// All words on `n` strands of length at most `max_len`, closed under
    /// the relations within that length.
    pub fn build(n: usize, max_len: usize) -> Self {
        let gens: Vec<i64> = (1..n as i64).flat_map(|i| [i, -i]).collect();
        let mut words: Vec<Vec<i64>> = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w: &Vec<i64>| {
                    gens.iter().map(move |&g| {
                        let mut v = w.clone();
                        v.push(g);
                        v
                    })
                })
                .collect();
            words.extend(layer.iter().cloned());
        }
        let index: HashMap<Vec<i64>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut uf = RelationClosure { parent: (0..words.len()).collect(), index };
        for (k, w) in words.iter().enumerate() {
            // deleting a cancelling pair links to a shorter word
            for p in 0..w.len().saturating_sub(1) {
                if w[p] == -w[p + 1] {
                    let mut v = w.clone();
                    v.drain(p..p + 2);
                    let j = uf.index[&v];
                    uf.union(k, j);
                }
                if (w[p].abs() - w[p + 1].abs()).abs() > 1 {
                    let mut v = w.clone();
                    v.swap(p, p + 1);
                    let j = uf.index[&v];
                    uf.union(k, j);
                }
            }
            for p in 0..w.len().saturating_sub(2) {
                let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    let mut v = w.clone();
                    v[p] = b;
                    v[p + 1] = a;
                    v[p + 2] = b;
                    let j = uf.index[&v];
                    uf.union(k, j);
                }
            }
        }
        uf
    }

    pub fn class(&mut self, w: &[i64]) -> usize {
        let k = self.index[w];
        self.find(k)
    }
}

// ---------------------------------------------------------------------------
// Random terms.

pub fn random_obj(r: &mut TestRng, gens: &[&str], max_width: usize, unit_p: f64) -> ObjTerm {
    let width = r.gen_range(1..=max_width);
    build_obj(r, gens, width, unit_p)
}

fn build_obj(r: &mut TestRng, gens: &[&str], width: usize, unit_p: f64) -> ObjTerm {
    if width == 1 {
        if r.gen_bool(unit_p) {
            // a unit next to a generator keeps the width
            let g = ObjTerm::gen(gens[r.gen_range(0..gens.len())]);
            return if r.gen_bool(0.5) {
                ObjTerm::tensor(ObjTerm::Unit, g)
            } else {
                ObjTerm::tensor(g, ObjTerm::Unit)
            };
        }
        return ObjTerm::gen(gens[r.gen_range(0..gens.len())]);
    }
    let k = r.gen_range(1..width);
    ObjTerm::tensor(build_obj(r, gens, k, unit_p), build_obj(r, gens, width - k, unit_p))
}

/// A random well-formed 1-cell with source `x` and nesting depth at most
/// `depth`. Braidings appear only when `braids` is set.
pub fn random_cell(r: &mut TestRng, x: &ObjTerm, depth: usize, braids: bool) -> OneCell {
    let mut options: Vec<u8> = vec![0, 4, 6];
    if let ObjTerm::Tensor(a, b) = x {
        if matches!(**a, ObjTerm::Tensor(..)) {
            options.push(1);
        }
        if matches!(**b, ObjTerm::Tensor(..)) {
            options.push(2);
        }
        if **a == ObjTerm::Unit {
            options.push(3);
        }
        if **b == ObjTerm::Unit {
            options.push(5);
        }
        if braids {
            options.extend([7, 7]);
        }
        if depth > 0 {
            options.extend([8, 8]);
        }
    }
    if depth > 0 {
        options.extend([9, 9, 9]);
    }
    // growing the object with unit insertions is allowed but rare
    let pick = options[r.gen_range(0..options.len())];
    let pick = if matches!(pick, 4 | 6) && x.width() > 0 && r.gen_bool(0.7) { 0 } else { pick };
    match (pick, x) {
        (1, ObjTerm::Tensor(ab, c)) => {
            let ObjTerm::Tensor(a, b) = &**ab else { unreachable!() };
            OneCell::Assoc((**a).clone(), (**b).clone(), (**c).clone())
        }
        (2, ObjTerm::Tensor(a, bc)) => {
            let ObjTerm::Tensor(b, c) = &**bc else { unreachable!() };
            OneCell::AssocInv((**a).clone(), (**b).clone(), (**c).clone())
        }
        (3, ObjTerm::Tensor(_, b)) => OneCell::LUnit((**b).clone()),
        (4, _) => OneCell::LUnitInv(x.clone()),
        (5, ObjTerm::Tensor(a, _)) => OneCell::RUnit((**a).clone()),
        (6, _) => OneCell::RUnitInv(x.clone()),
        (7, ObjTerm::Tensor(a, b)) => {
            if r.gen_bool(0.5) {
                OneCell::Braid((**a).clone(), (**b).clone())
            } else {
                OneCell::BraidInv((**b).clone(), (**a).clone())
            }
        }
        (8, ObjTerm::Tensor(a, b)) => {
            OneCell::tensor(random_cell(r, a, depth - 1, braids), random_cell(r, b, depth - 1, braids))
        }
        (9, _) => {
            let f = random_cell(r, x, depth - 1, braids);
            let y = tgt_obj(&f).unwrap();
            let g = random_cell(r, &y, depth - 1, braids);
            OneCell::compose(g, f)
        }
        _ => OneCell::Id(x.clone()),
    }
}

/// A coherence 1-cell from `x` to the right-nested tensor of its
/// generators (the unit if there are none).
pub fn normalize(x: &ObjTerm) -> (OneCell, ObjTerm) {
    match x {
        ObjTerm::Unit | ObjTerm::Gen(_) => (OneCell::Id(x.clone()), x.clone()),
        ObjTerm::Tensor(a, b) => {
            let (fa, na) = normalize(a);
            let (fb, nb) = normalize(b);
            let (merge, out) = merge(&na, &nb);
            (OneCell::compose(merge, OneCell::tensor(fa, fb)), out)
        }
    }
}

fn merge(a: &ObjTerm, b: &ObjTerm) -> (OneCell, ObjTerm) {
    let ab = ObjTerm::tensor(a.clone(), b.clone());
    match (a, b) {
        (ObjTerm::Unit, _) => (OneCell::LUnit(b.clone()), b.clone()),
        (_, ObjTerm::Unit) => (OneCell::RUnit(a.clone()), a.clone()),
        (ObjTerm::Gen(_), _) => (OneCell::Id(ab.clone()), ab),
        (ObjTerm::Tensor(h, rest), _) => {
            let (m, out) = merge(rest, b);
            let step = OneCell::Assoc((**h).clone(), (**rest).clone(), b.clone());
            let whole = OneCell::compose(OneCell::tensor(OneCell::Id((**h).clone()), m), step);
            (whole, ObjTerm::tensor((**h).clone(), out))
        }
    }
}

/// `f` followed by the normalizing cell of its target.
pub fn normalized(f: OneCell) -> OneCell {
    let (n, _) = normalize(&tgt_obj(&f).unwrap());
    OneCell::compose(n, f)
}

pub fn assert_well_formed(f: &OneCell) {
    src_obj(f).unwrap();
}

// ---------------------------------------------------------------------------
// Random movies.

pub fn random_movie(r: &mut TestRng, n: usize, start_len: usize, changes: usize) -> Movie {
    let mut cur = random_word(r, n, start_len);
    let mut frames = vec![cur.clone()];
    let mut applied = Vec::new();
    for _ in 0..changes {
        let l = cur.letters();
        let mut options = Vec::new();
        for at in 0..=l.len() {
            for j in 1..n {
                for eps in [1i8, -1] {
                    options.push(ElementaryChange::PairInsert { j, eps, at });
                }
            }
            if at + 1 < l.len() {
                if l[at + 1] == l[at].inverse() {
                    options.push(ElementaryChange::PairDelete { j: l[at].index, eps: l[at].sign, at });
                }
                if l[at].index.abs_diff(l[at + 1].index) > 1 {
                    options.push(ElementaryChange::FarCommute { at });
                }
            }
            if at + 2 < l.len() {
                if let Some((_, variant)) = relation_rewrite(&l[at..at + 3]) {
                    options.push(ElementaryChange::BraidRelation { at, variant });
                }
            }
        }
        // keep words short: prefer shrinking and rewriting once long
        if cur.len() >= start_len + 2 {
            options.retain(|c| !matches!(c, ElementaryChange::PairInsert { .. }));
            if options.is_empty() {
                break;
            }
        }
        let c = options[r.gen_range(0..options.len())];
        cur = c.apply(&cur).unwrap();
        applied.push(c);
        frames.push(cur.clone());
    }
    Movie::with_changes(n, frames, applied)
}
