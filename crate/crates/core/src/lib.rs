//! Coherence for braided monoidal bicategories, computationally.
//!
//! * [`term`] — objects, 1-cells and 2-cells of the free braided monoidal
//!   bicategory on a set of generators, with boundaries and a text syntax.
//! * [`braid`] — braid words with an exact equality test.
//! * [`functor`] — the evaluation of 1-cells as labeled braids.
//! * [`movie`] — braid movies, movie moves, certificate search, and the
//!   compilation of 2-cells to movies.
//! * [`cubes`] — little 1- and 2-cubes, the named configuration paths, and
//!   braid extraction from point paths.
//! * [`coherence`] — decision procedures built on the above.

pub mod braid;
pub mod coherence;
pub mod cubes;
pub mod functor;
pub mod movie;
pub mod term;

pub use braid::{BraidWord, LabeledBraid, Letter, Permutation};
pub use term::{GenSet, LabelWord, ObjTerm, OneCell, TwoCell};
