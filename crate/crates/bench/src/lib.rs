//! Fixed workloads shared by the criterion benchmarks in `benches/`.

use plactic::harness::{Conjecture, SweepConfig};
use plactic::{Budget, Word};

/// Every word over `[m]` of length exactly `n`, lexicographically.
pub fn words(m: u32, n: usize) -> Vec<Word> {
    Word::all(m, n).collect()
}

/// A sweep small enough to time repeatedly.
pub fn small_sweep(conjecture: Conjecture, shards: usize) -> SweepConfig {
    SweepConfig {
        u_sum: Some(6),
        w_alphabet: 3,
        w_length: 5,
        k_bound: 3,
        n_max: 7,
        shards,
        budget: Budget::default(),
        ..SweepConfig::new(conjecture)
    }
}
