use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_PAIR_BUDGET: u64 = 100_000;

/// Pair-reduction budget for Groebner basis computations.
///
/// `limit` caps the pair reductions of any single Buchberger run; `used`
/// accumulates the reductions of every run charged to this budget.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// Default limit, overridden by the `HANKEL_BUDGET` environment variable.
    pub fn from_env() -> Self {
        let limit = std::env::var("HANKEL_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_PAIR_BUDGET);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub(crate) fn record(&self, pairs: u64) {
        self.used.fetch_add(pairs, Ordering::Relaxed);
    }

    pub(crate) fn check(&self, pairs: u64) -> Result<()> {
        if pairs > self.limit {
            Err(Error::BudgetExhausted { pairs })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_PAIR_BUDGET)
    }
}
