//! Size limits that keep enumerations and dense matrices at desk scale.

use crate::error::{Error, Result};

/// Upper bounds on the work a single call may start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest allowed matrix dimension `n^p`.
    pub dense_dim: u128,
    /// Largest allowed number of spin configurations `n^(pq)`.
    pub brute_states: u128,
    /// Largest allowed multisum index count `n^(3pq+1)`.
    pub multisum_terms: u128,
    /// Longest generator word the trace sum will enumerate.
    pub trace_word_len: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            dense_dim: 4096,
            brute_states: 1 << 20,
            multisum_terms: 1 << 24,
            trace_word_len: 64,
        }
    }
}

/// `base^exp`, or `None` on overflow.
pub fn checked_power(base: u32, exp: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

pub(crate) fn ensure(what: &'static str, base: u32, exp: u64, limit: u128) -> Result<u128> {
    match checked_power(base, exp) {
        Some(v) if v <= limit => Ok(v),
        Some(v) => Err(Error::Capacity { what, required: v, limit }),
        None => Err(Error::Capacity { what, required: u128::MAX, limit }),
    }
}
