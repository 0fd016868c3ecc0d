//! Term grammars for objects, 1-cells and 2-cells of the free braided
//! monoidal bicategory on a set of generators.
//!
//! Terms are plain immutable trees. Equality is syntactic; semantic
//! questions (are two 1-cells isomorphic?) are answered in
//! [`crate::coherence`].

mod boundary;
mod parse;
pub mod pasting;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use boundary::{boundary2, src_obj, tgt_obj, ValidationResult};
pub use parse::{parse_obj, parse_one_cell, parse_two_cell, parse_obj_list, ParseError, ParsedTerm, parse_any};

/// Generator identifier.
pub type Name = Arc<str>;

/// The generating set `S`, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenSet {
    names: Vec<Name>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenSetError {
    #[error("duplicate generator `{0}`")]
    Duplicate(String),
    #[error("invalid generator identifier `{0}`")]
    InvalidIdent(String),
}

impl GenSet {
    pub fn new<I, S>(names: I) -> Result<Self, GenSetError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<Name> = Vec::new();
        for n in names {
            let n = n.as_ref();
            if !is_ident(n) {
                return Err(GenSetError::InvalidIdent(n.to_string()));
            }
            if out.iter().any(|m| &**m == n) {
                return Err(GenSetError::Duplicate(n.to_string()));
            }
            out.push(Arc::from(n));
        }
        Ok(GenSet { names: out })
    }

    /// The generators occurring in `terms`, in order of first appearance.
    pub fn inferred<'a, T: Term + 'a>(terms: impl IntoIterator<Item = &'a T>) -> Self {
        let mut names = Vec::new();
        for t in terms {
            t.collect_generators(&mut names);
        }
        let mut out: Vec<Name> = Vec::new();
        for n in names {
            if !out.contains(&n) {
                out.push(n);
            }
        }
        GenSet { names: out }
    }

    pub fn names(&self) -> &[Name] {
        &self.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| &**n == name)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    s != "I" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Objects: `I`, a generator, or a binary tensor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ObjTerm {
    Unit,
    Gen(Name),
    Tensor(Box<ObjTerm>, Box<ObjTerm>),
}

impl ObjTerm {
    pub fn gen(name: &str) -> Self {
        ObjTerm::Gen(Arc::from(name))
    }

    pub fn tensor(a: ObjTerm, b: ObjTerm) -> Self {
        ObjTerm::Tensor(Box::new(a), Box::new(b))
    }

    /// Right-nested tensor `x1 * (x2 * (... * xn))`; `I` for an empty list.
    pub fn right_nested(parts: &[ObjTerm]) -> Self {
        match parts {
            [] => ObjTerm::Unit,
            [one] => one.clone(),
            [first, rest @ ..] => ObjTerm::tensor(first.clone(), ObjTerm::right_nested(rest)),
        }
    }

    /// In-order generator labels with units dropped.
    pub fn flatten(&self) -> LabelWord {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        LabelWord(out)
    }

    fn flatten_into(&self, out: &mut Vec<Name>) {
        match self {
            ObjTerm::Unit => {}
            ObjTerm::Gen(n) => out.push(n.clone()),
            ObjTerm::Tensor(a, b) => {
                a.flatten_into(out);
                b.flatten_into(out);
            }
        }
    }

    /// Number of strands of any braid on this object.
    pub fn width(&self) -> usize {
        match self {
            ObjTerm::Unit => 0,
            ObjTerm::Gen(_) => 1,
            ObjTerm::Tensor(a, b) => a.width() + b.width(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ObjTerm::Unit | ObjTerm::Gen(_) => 0,
            ObjTerm::Tensor(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// Flattened object: the ordered generator labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LabelWord(pub Vec<Name>);

impl LabelWord {
    pub fn new<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Self {
        LabelWord(labels.into_iter().map(|s| Arc::from(s.as_ref())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &LabelWord) -> LabelWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        LabelWord(v)
    }
}

impl fmt::Display for LabelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|n| &**n).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// 1-cells. `Compose(g, f)` is `g ∘ f`: first `f`, then `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OneCell {
    Id(ObjTerm),
    Assoc(ObjTerm, ObjTerm, ObjTerm),
    AssocInv(ObjTerm, ObjTerm, ObjTerm),
    LUnit(ObjTerm),
    LUnitInv(ObjTerm),
    RUnit(ObjTerm),
    RUnitInv(ObjTerm),
    /// `R_{x,y} : x*y -> y*x`
    Braid(ObjTerm, ObjTerm),
    /// `R•_{x,y} : y*x -> x*y`
    BraidInv(ObjTerm, ObjTerm),
    Tensor(Box<OneCell>, Box<OneCell>),
    Compose(Box<OneCell>, Box<OneCell>),
}

impl OneCell {
    pub fn tensor(f: OneCell, g: OneCell) -> Self {
        OneCell::Tensor(Box::new(f), Box::new(g))
    }

    /// `second ∘ first`
    pub fn compose(second: OneCell, first: OneCell) -> Self {
        OneCell::Compose(Box::new(second), Box::new(first))
    }

    /// Canonical composite of a path given in application order:
    /// `[f1, f2, f3]` becomes `f3 ∘ (f2 ∘ f1)`. An empty path is the identity
    /// on `base`.
    pub fn path(cells: &[OneCell], base: &ObjTerm) -> OneCell {
        match cells {
            [] => OneCell::Id(base.clone()),
            [first, rest @ ..] => rest
                .iter()
                .fold(first.clone(), |acc, c| OneCell::compose(c.clone(), acc)),
        }
    }

    /// A term for the pseudoinverse, built structurally.
    pub fn inverse(&self) -> OneCell {
        use OneCell::*;
        match self {
            Id(x) => Id(x.clone()),
            Assoc(x, y, z) => AssocInv(x.clone(), y.clone(), z.clone()),
            AssocInv(x, y, z) => Assoc(x.clone(), y.clone(), z.clone()),
            LUnit(x) => LUnitInv(x.clone()),
            LUnitInv(x) => LUnit(x.clone()),
            RUnit(x) => RUnitInv(x.clone()),
            RUnitInv(x) => RUnit(x.clone()),
            Braid(x, y) => BraidInv(x.clone(), y.clone()),
            BraidInv(x, y) => Braid(x.clone(), y.clone()),
            Tensor(f, g) => OneCell::tensor(f.inverse(), g.inverse()),
            Compose(g, f) => OneCell::compose(f.inverse(), g.inverse()),
        }
    }

    /// True when the term uses no braiding constructor.
    pub fn is_braid_free(&self) -> bool {
        use OneCell::*;
        match self {
            Braid(..) | BraidInv(..) => false,
            Tensor(f, g) | Compose(f, g) => f.is_braid_free() && g.is_braid_free(),
            _ => true,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            OneCell::Tensor(f, g) | OneCell::Compose(f, g) => 1 + f.depth().max(g.depth()),
            _ => 0,
        }
    }
}

/// 2-cells. `VComp(second, first)` and `HComp(second, first)` follow the
/// same classical order as [`OneCell::Compose`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TwoCell {
    Id2(OneCell),
    EtaA(ObjTerm, ObjTerm, ObjTerm),
    EpsA(ObjTerm, ObjTerm, ObjTerm),
    EtaL(ObjTerm),
    EpsL(ObjTerm),
    EtaRu(ObjTerm),
    EpsRu(ObjTerm),
    EtaB(ObjTerm, ObjTerm),
    EpsB(ObjTerm, ObjTerm),
    Pi(ObjTerm, ObjTerm, ObjTerm, ObjTerm),
    Mu(ObjTerm, ObjTerm),
    Lambda(ObjTerm, ObjTerm),
    Rho(ObjTerm, ObjTerm),
    /// `R_(x|y,z)`
    HexL(ObjTerm, ObjTerm, ObjTerm),
    /// `R_(x,y|z)`
    HexR(ObjTerm, ObjTerm, ObjTerm),
    NatA(OneCell, OneCell, OneCell),
    NatL(OneCell),
    NatRu(OneCell),
    NatB(OneCell, OneCell),
    Interchange(OneCell, OneCell),
    /// `Funct2(f, f', g, g') : (f'∘f) * (g'∘g) => (f'*g') ∘ (f*g)`
    Funct2(OneCell, OneCell, OneCell, OneCell),
    Funct0(ObjTerm, ObjTerm),
    /// `CompAssoc(h, g, f) : h∘(g∘f) => (h∘g)∘f`
    CompAssoc(OneCell, OneCell, OneCell),
    /// `CompLUnit(f) : id∘f => f`
    CompLUnit(OneCell),
    /// `CompRUnit(f) : f∘id => f`
    CompRUnit(OneCell),
    Inv(Box<TwoCell>),
    VComp(Box<TwoCell>, Box<TwoCell>),
    HComp(Box<TwoCell>, Box<TwoCell>),
    Tensor2(Box<TwoCell>, Box<TwoCell>),
}

impl TwoCell {
    pub fn inv(a: TwoCell) -> Self {
        TwoCell::Inv(Box::new(a))
    }

    /// `second · first` (vertical).
    pub fn vcomp(second: TwoCell, first: TwoCell) -> Self {
        TwoCell::VComp(Box::new(second), Box::new(first))
    }

    /// `second ∘ first` (horizontal).
    pub fn hcomp(second: TwoCell, first: TwoCell) -> Self {
        TwoCell::HComp(Box::new(second), Box::new(first))
    }

    pub fn tensor(a: TwoCell, b: TwoCell) -> Self {
        TwoCell::Tensor2(Box::new(a), Box::new(b))
    }
}

/// Shared behaviour of the three term sorts.
pub trait Term {
    fn collect_generators(&self, out: &mut Vec<Name>);

    /// Boundary and composability checking; generator membership is
    /// checked separately by [`Term::well_formed`].
    fn check_boundaries(&self) -> ValidationResult;

    /// `Ok` or the first violation found, naming the offending subterm.
    fn well_formed(&self, gens: &GenSet) -> ValidationResult {
        let mut names = Vec::new();
        self.collect_generators(&mut names);
        if let Some(bad) = names.iter().find(|n| !gens.contains(n)) {
            return Err(TermError::UnknownGenerator {
                name: bad.to_string(),
            });
        }
        self.check_boundaries()
    }
}

/// Free-function form of [`Term::well_formed`].
pub fn well_formed<T: Term + ?Sized>(term: &T, gens: &GenSet) -> ValidationResult {
    term.well_formed(gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },
    #[error("boundary mismatch in `{subterm}`: target {found} of the first cell differs from source {expected} of the second")]
    ComposeMismatch {
        subterm: String,
        found: String,
        expected: String,
    },
    #[error("vertical composition mismatch in `{subterm}`: target {found} of the first 2-cell differs from source {expected} of the second")]
    VCompMismatch {
        subterm: String,
        found: String,
        expected: String,
    },
    #[error("horizontal composition mismatch in `{subterm}`: {found} does not meet {expected}")]
    HCompMismatch {
        subterm: String,
        found: String,
        expected: String,
    },
}

impl Term for ObjTerm {
    fn collect_generators(&self, out: &mut Vec<Name>) {
        self.flatten_into(out);
    }

    fn check_boundaries(&self) -> ValidationResult {
        Ok(())
    }
}

impl Term for OneCell {
    fn collect_generators(&self, out: &mut Vec<Name>) {
        use OneCell::*;
        match self {
            Id(x) | LUnit(x) | LUnitInv(x) | RUnit(x) | RUnitInv(x) => x.collect_generators(out),
            Braid(x, y) | BraidInv(x, y) => {
                x.collect_generators(out);
                y.collect_generators(out);
            }
            Assoc(x, y, z) | AssocInv(x, y, z) => {
                x.collect_generators(out);
                y.collect_generators(out);
                z.collect_generators(out);
            }
            Compose(g, f) => {
                f.collect_generators(out);
                g.collect_generators(out);
            }
            Tensor(f, g) => {
                f.collect_generators(out);
                g.collect_generators(out);
            }
        }
    }

    fn check_boundaries(&self) -> ValidationResult {
        boundary::objects(self).map(|_| ())
    }
}

impl Term for TwoCell {
    fn collect_generators(&self, out: &mut Vec<Name>) {
        use TwoCell::*;
        match self {
            Id2(f) | NatL(f) | NatRu(f) | CompLUnit(f) | CompRUnit(f) => f.collect_generators(out),
            EtaA(x, y, z) | EpsA(x, y, z) | HexL(x, y, z) | HexR(x, y, z) => {
                for o in [x, y, z] {
                    o.collect_generators(out);
                }
            }
            EtaL(x) | EpsL(x) | EtaRu(x) | EpsRu(x) => x.collect_generators(out),
            EtaB(x, y) | EpsB(x, y) | Mu(x, y) | Lambda(x, y) | Rho(x, y) | Funct0(x, y) => {
                x.collect_generators(out);
                y.collect_generators(out);
            }
            Pi(w, x, y, z) => {
                for o in [w, x, y, z] {
                    o.collect_generators(out);
                }
            }
            NatA(f, g, h) | CompAssoc(f, g, h) => {
                for c in [f, g, h] {
                    c.collect_generators(out);
                }
            }
            NatB(f, g) | Interchange(f, g) => {
                f.collect_generators(out);
                g.collect_generators(out);
            }
            Funct2(f, f2, g, g2) => {
                for c in [f, f2, g, g2] {
                    c.collect_generators(out);
                }
            }
            Inv(a) => a.collect_generators(out),
            VComp(b, a) | HComp(b, a) | Tensor2(b, a) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    fn check_boundaries(&self) -> ValidationResult {
        boundary2(self).map(|_| ())
    }
}

impl fmt::Display for ObjTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjTerm::Unit => write!(f, "I"),
            ObjTerm::Gen(n) => write!(f, "{n}"),
            ObjTerm::Tensor(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

impl fmt::Display for OneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use OneCell::*;
        match self {
            Id(x) => write!(f, "id[{x}]"),
            Assoc(x, y, z) => write!(f, "a[{x},{y},{z}]"),
            AssocInv(x, y, z) => write!(f, "a'[{x},{y},{z}]"),
            LUnit(x) => write!(f, "l[{x}]"),
            LUnitInv(x) => write!(f, "l'[{x}]"),
            RUnit(x) => write!(f, "r[{x}]"),
            RUnitInv(x) => write!(f, "r'[{x}]"),
            Braid(x, y) => write!(f, "R[{x},{y}]"),
            BraidInv(x, y) => write!(f, "R'[{x},{y}]"),
            Tensor(a, b) => write!(f, "({a}*{b})"),
            // diagrammatic order in the concrete syntax
            Compose(g, h) => write!(f, "({h};{g})"),
        }
    }
}

impl fmt::Display for TwoCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TwoCell::*;
        match self {
            Id2(c) => write!(f, "1[{c}]"),
            EtaA(x, y, z) => write!(f, "etaA[{x},{y},{z}]"),
            EpsA(x, y, z) => write!(f, "epsA[{x},{y},{z}]"),
            EtaL(x) => write!(f, "etaL[{x}]"),
            EpsL(x) => write!(f, "epsL[{x}]"),
            EtaRu(x) => write!(f, "etaRu[{x}]"),
            EpsRu(x) => write!(f, "epsRu[{x}]"),
            EtaB(x, y) => write!(f, "etaB[{x},{y}]"),
            EpsB(x, y) => write!(f, "epsB[{x},{y}]"),
            Pi(w, x, y, z) => write!(f, "pi[{w},{x},{y},{z}]"),
            Mu(x, y) => write!(f, "mu[{x},{y}]"),
            Lambda(x, y) => write!(f, "lambda[{x},{y}]"),
            Rho(x, y) => write!(f, "rho[{x},{y}]"),
            HexL(x, y, z) => write!(f, "hexL[{x},{y},{z}]"),
            HexR(x, y, z) => write!(f, "hexR[{x},{y},{z}]"),
            NatA(a, b, c) => write!(f, "natA[{a},{b},{c}]"),
            NatL(a) => write!(f, "natL[{a}]"),
            NatRu(a) => write!(f, "natRu[{a}]"),
            NatB(a, b) => write!(f, "natB[{a},{b}]"),
            Interchange(a, b) => write!(f, "ich[{a},{b}]"),
            Funct2(a, a2, b, b2) => write!(f, "funct2[{a},{a2},{b},{b2}]"),
            Funct0(x, y) => write!(f, "funct0[{x},{y}]"),
            // diagrammatic order, like 1-cell composition
            CompAssoc(h, g, c) => write!(f, "cassoc[{c},{g},{h}]"),
            CompLUnit(c) => write!(f, "clunit[{c}]"),
            CompRUnit(c) => write!(f, "crunit[{c}]"),
            Inv(a) => write!(f, "inv[{a}]"),
            VComp(b, a) => write!(f, "({a};{b})"),
            HComp(b, a) => write!(f, "({a}.{b})"),
            Tensor2(a, b) => write!(f, "({a}*{b})"),
        }
    }
}
