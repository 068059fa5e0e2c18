//! Membership in the centralizer `C(u) = { w : P(uw) = P(wu) }`.
//!
//! [`in_centralizer`] is the definition and serves as the oracle. The
//! `test_*` functions are the tableau characterizations for particular
//! families of `u`; each is cross-checked against the oracle in the tests.

use rayon::prelude::*;

use crate::budget::{words_of_length, Budget};
use crate::error::Result;
use crate::rsk::{insert_word, lwi, lwi_ending_at, p_tableau};
use crate::tableau::{row_count_filter, Ssyt, Word};

/// `P(uw) = P(wu)`.
pub fn in_centralizer(u: &[u32], w: &[u32]) -> bool {
    Commutator::new(u).commutes_with(w)
}

/// Repeated membership tests against a fixed `u`, reusing `P(u)`.
#[derive(Clone, Debug)]
pub struct Commutator {
    u: Vec<u32>,
    p_u: Ssyt,
}

impl Commutator {
    pub fn new(u: &[u32]) -> Self {
        Commutator { u: u.to_vec(), p_u: p_tableau(u) }
    }

    pub fn u(&self) -> &[u32] {
        &self.u
    }

    pub fn commutes_with(&self, w: &[u32]) -> bool {
        let mut wu = p_tableau(w);
        insert_word(&mut wu, &self.u);
        let mut uw = self.p_u.clone();
        insert_word(&mut uw, w);
        uw == wu
    }
}

/// Row form of the single-letter characterization: the first row of `P(w)`
/// is bounded by `u`, and `#R_i(<u) = #R_{i+1}(<=u)` for every row `i`.
pub fn test_single_letter_rows(u: u32, w: &[u32]) -> bool {
    let p = p_tableau(w);
    if p.row(1).last().is_some_and(|&x| x > u) {
        return false;
    }
    (1..=p.num_rows()).all(|i| row_count_filter(p.row(i), u, true) == row_count_filter(p.row(i + 1), u, false))
}

/// Every column of `p` contains `u`.
pub fn columns_all_contain(p: &Ssyt, u: u32) -> bool {
    p.columns().iter().all(|c| c.contains(&u))
}

/// Column form of the single-letter characterization.
pub fn test_single_letter_cols(u: u32, w: &[u32]) -> bool {
    columns_all_contain(&p_tableau(w), u)
}

/// `w ∈ C(1)` via `lwi(w) = lwi(w, 1)`, without building `P(w)`.
pub fn test_c1_lwi(w: &[u32]) -> bool {
    lwi(w) == lwi_ending_at(w, 1)
}

/// Every suffix of `w` has at least as many `i`s as `(i+1)`s, for all `i`.
pub fn is_yamanouchi(w: &[u32]) -> bool {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 2];
    for &a in w.iter().rev() {
        let a = a as usize;
        counts[a] += 1;
        if a > 1 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

fn singleton_columns(p: &Ssyt) -> impl Iterator<Item = u32> + '_ {
    let below = p.row(2).len();
    p.row(1)[below..].iter().copied()
}

fn long_columns_hold_one_and_two(p: &Ssyt) -> bool {
    let long = p.row(2).len();
    (1..=long).all(|j| {
        let c = p.column(j);
        c.contains(&1) && c.contains(&2)
    })
}

/// Characterization of `C(12)`: singleton columns are singleton 1- or
/// 2-columns and both kinds occur whenever any singleton column does; every
/// longer column contains both 1 and 2.
pub fn test_c12(w: &[u32]) -> bool {
    let p = p_tableau(w);
    let (mut ones, mut twos, mut other) = (false, false, false);
    for x in singleton_columns(&p) {
        match x {
            1 => ones = true,
            2 => twos = true,
            _ => other = true,
        }
    }
    let singletons_ok = !other && ones == twos;
    singletons_ok && long_columns_hold_one_and_two(&p)
}

/// Characterization of `C(212)`: all singleton columns are singleton
/// 2-columns and every longer column contains both 1 and 2.
pub fn test_c212(w: &[u32]) -> bool {
    let p = p_tableau(w);
    singleton_columns(&p).all(|x| x == 2) && long_columns_hold_one_and_two(&p)
}

/// `w ∈ C(m(m-1)...1)` iff rows `1..=m` of `P(w)` are bounded by `m`.
pub fn test_staircase(m: u32, w: &[u32]) -> bool {
    let p = p_tableau(w);
    p.rows().iter().take(m as usize).all(|r| r.last().is_none_or(|&x| x <= m))
}

/// `w ∈ C(a^k)`; `C(a^k) = C(a)` for `k >= 1`, and `k = 0` is the empty word.
pub fn test_power(a: u32, k: usize, w: &[u32]) -> bool {
    k == 0 || test_single_letter_cols(a, w)
}

/// `m(m-1)...1`.
pub fn staircase_word(m: u32) -> Word {
    Word::new((1..=m).rev().collect()).expect("positive letters")
}

/// All `w ∈ [m]^n ∩ C(u)` in lexicographic order.
pub fn centralizer_words(u: &[u32], n: usize, m: u32, budget: Budget) -> Result<Vec<Word>> {
    budget.check(words_of_length(m, n))?;
    let c = Commutator::new(u);
    if n == 0 || m == 0 {
        return Ok(Word::all(m, n).filter(|w| c.commutes_with(w)).collect());
    }
    // one block per first letter; blocks are concatenated in order
    let blocks: Vec<Vec<Word>> = (1..=m)
        .into_par_iter()
        .map(|first| {
            Word::all(m, n - 1)
                .map(|tail| {
                    let mut letters = Vec::with_capacity(n);
                    letters.push(first);
                    letters.extend_from_slice(&tail);
                    Word::new(letters).expect("positive letters")
                })
                .filter(|w| c.commutes_with(w))
                .collect()
        })
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}
