//! Tableaux, RSK insertion, jeu de taquin and the centralizers of the
//! plactic monoid.
//!
//! Two words are plactic-equal when they have the same insertion tableau,
//! so `w` commutes with `u` exactly when `P(uw) = P(wu)`. This crate decides
//! that relation, enumerates and counts centralizers, and sweeps finite
//! ranges for counterexamples to open conjectures about them.

pub mod budget;
pub mod centralizer;
pub mod enumeration;
pub mod error;
pub mod harness;
pub mod involutions;
pub mod jdt;
pub mod knuth;
pub mod rsk;
pub mod tableau;

pub use budget::Budget;
pub use centralizer::{in_centralizer, Commutator};
pub use enumeration::{
    count_by_shapes, count_centralizer, expand_binomial, expand_binomial_with, BinomialPoly, Counter, Family,
};
pub use error::{Error, Result};
pub use harness::{replay, run_sweep, Cancel, Conjecture, Counterexample, SweepConfig, SweepReport, Verdict};
pub use jdt::{rectify, CornerPolicy};
pub use rsk::{inverse_rsk, p_tableau, row_insert, rsk_pair};
pub use tableau::{Partition, SkewTableau, Ssyt, WeakComposition, Word};
