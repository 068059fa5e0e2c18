//! Knuth transpositions and Knuth equivalence.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::rsk::p_tableau;
use crate::tableau::Word;

/// Longest word [`knuth_class`] will close over by default.
pub const DEFAULT_CLASS_BOUND: usize = 10;

/// Every word one Knuth transposition away from `w`.
///
/// `acb <-> cab` for `a <= b < c` swaps the first two letters of a window
/// whose third letter is `b`; `bac <-> bca` for `a < b <= c` swaps the last
/// two letters of a window whose first letter is `b`.
pub fn knuth_neighbors(w: &[u32]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(2) {
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        if x.min(y) <= z && z < x.max(y) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.insert(Word::new(v).expect("letters unchanged"));
        }
        if y.min(z) < x && x <= y.max(z) {
            let mut v = w.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(Word::new(v).expect("letters unchanged"));
        }
    }
    out
}

/// `v ≡ w` iff their insertion tableaux agree.
pub fn knuth_equivalent(v: &[u32], w: &[u32]) -> bool {
    v.len() == w.len() && p_tableau(v) == p_tableau(w)
}

/// The Knuth class of `w` by breadth-first closure under transpositions.
pub fn knuth_class(w: &Word) -> Result<BTreeSet<Word>> {
    knuth_class_bounded(w, DEFAULT_CLASS_BOUND)
}

pub fn knuth_class_bounded(w: &Word, bound: usize) -> Result<BTreeSet<Word>> {
    if w.len() > bound {
        return Err(Error::BoundExceeded { size: w.len(), bound });
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for n in knuth_neighbors(&v) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    Ok(seen)
}
