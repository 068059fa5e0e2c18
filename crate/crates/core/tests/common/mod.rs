//! Independent oracles and generators shared by the integration suites.
//!
//! Nothing here calls into the crate's algorithms, so agreement with them is
//! real evidence.

#![allow(dead_code)]

use plactic::{Ssyt, Word};
use proptest::prelude::*;

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn words_up_to(m: u32, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|v: &Vec<u32>| {
                (1..=m).map(move |a| {
                    let mut x = v.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out.into_iter().map(|v| Word::new(v).unwrap()).collect()
}

/// Schensted insertion written from scratch: each letter bumps the leftmost
/// strictly larger entry of a row.
pub fn naive_p(w: &[u32]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &a in w {
        let mut x = a;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut rows[r][j], &mut x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    rows
}

pub fn naive_commutes(u: &[u32], w: &[u32]) -> bool {
    let uw: Vec<u32> = u.iter().chain(w).copied().collect();
    let wu: Vec<u32> = w.iter().chain(u).copied().collect();
    naive_p(&uw) == naive_p(&wu)
}

/// Longest weakly increasing subsequence by quadratic dynamic programming,
/// optionally forced to end in the letter `a`.
pub fn naive_lwi(w: &[u32], ending: Option<u32>) -> usize {
    let mut best = vec![0usize; w.len()];
    for i in 0..w.len() {
        best[i] = 1 + (0..i).filter(|&j| w[j] <= w[i]).map(|j| best[j]).max().unwrap_or(0);
    }
    (0..w.len()).filter(|&i| ending.is_none_or(|a| w[i] == a)).map(|i| best[i]).max().unwrap_or(0)
}

pub fn columns(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width).map(|j| rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn word_strategy(m: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=m, 0..=max_len).prop_map(|v| Word::new(v).unwrap())
}

/// Every semistandard tableau is the insertion tableau of its row word, so
/// random words give random tableaux.
pub fn ssyt_strategy(m: u32, max_cells: usize) -> impl Strategy<Value = Ssyt> {
    word_strategy(m, max_cells).prop_map(|w| Ssyt::new(naive_p(&w)).unwrap())
}
