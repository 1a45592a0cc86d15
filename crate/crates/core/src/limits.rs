//! Process-wide enumeration guard.
//!
//! Every brute-force enumeration in the crate checks its candidate count
//! against this limit and fails with [`Error::GuardExceeded`] instead of
//! truncating.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_CANDIDATES: u64 = 1_000_000;

static MAX_CANDIDATES: AtomicU64 = AtomicU64::new(DEFAULT_MAX_CANDIDATES);

pub fn max_candidates() -> u64 {
    MAX_CANDIDATES.load(Ordering::Relaxed)
}

pub fn set_max_candidates(limit: u64) {
    MAX_CANDIDATES.store(limit, Ordering::Relaxed);
}

/// Fails if `count` exceeds the current limit.
pub fn check(what: &str, count: u128) -> Result<()> {
    let limit = max_candidates() as u128;
    if count > limit {
        return Err(Error::GuardExceeded {
            what: what.to_string(),
            count,
            limit,
        });
    }
    Ok(())
}

/// Binomial coefficient with saturation, used for guard arithmetic.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
