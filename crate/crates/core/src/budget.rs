use crate::error::{Error, Result};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "PLACTIC_BUDGET";

/// Default number of words a single enumeration may examine.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on the number of words an enumeration may examine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    /// `PLACTIC_BUDGET` if set and parseable, otherwise the default.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse::<u64>().ok())
            .filter(|&b| b > 0)
            .map_or(Budget(DEFAULT_BUDGET), Budget)
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

/// `m^n`, saturating.
pub fn words_of_length(m: u32, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(m as u128);
    }
    total
}

/// Number of words over `[m]` of length at most `n`.
pub fn words_up_to(m: u32, n: usize) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(words_of_length(m, k)))
}
