//! Explicit search budgets. Every exponential search counts its nodes (or
//! stored states) against a limit and returns [`Refused`] when it runs out.

use serde::{Deserialize, Serialize};

use crate::error::Refused;

/// Default node limit for backtracking searches (containment, colouring,
/// separators).
pub const DEFAULT_SEARCH_NODES: u64 = 10_000_000;

/// Default limit on stored partial elimination sets in the treewidth search.
pub const DEFAULT_TREEWIDTH_STATES: u64 = 5_000_000;

/// Environment variable overriding [`Budget::search_nodes`].
pub const BUDGET_ENV: &str = "TWOMEGA_BUDGET";

/// Environment variable overriding [`Budget::treewidth_states`].
pub const TW_BUDGET_ENV: &str = "TWOMEGA_TW_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub search_nodes: u64,
    pub treewidth_states: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            search_nodes: DEFAULT_SEARCH_NODES,
            treewidth_states: DEFAULT_TREEWIDTH_STATES,
        }
    }
}

impl Budget {
    pub fn with_search_nodes(mut self, nodes: u64) -> Self {
        self.search_nodes = nodes;
        self
    }

    pub fn with_treewidth_states(mut self, states: u64) -> Self {
        self.treewidth_states = states;
        self
    }

    /// Defaults, overridden by [`BUDGET_ENV`] and [`TW_BUDGET_ENV`] when set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let read = |key: &str| {
            std::env::var(key)
                .ok()
                .and_then(|s| s.trim().parse::<u64>().ok())
                .filter(|&x| x > 0)
        };
        let mut b = Budget::default();
        if let Some(x) = read(BUDGET_ENV) {
            b.search_nodes = x;
        }
        if let Some(x) = read(TW_BUDGET_ENV) {
            b.treewidth_states = x;
        }
        b
    }
}

/// Per-call counter.
#[derive(Debug)]
pub(crate) struct Meter {
    what: &'static str,
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Meter { what, limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), Refused> {
        self.add(1)
    }

    #[inline]
    pub(crate) fn add(&mut self, n: u64) -> Result<(), Refused> {
        self.used += n;
        if self.used > self.limit {
            Err(Refused {
                what: self.what,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_refuses_past_limit() {
        let mut m = Meter::new("test", 3);
        for _ in 0..3 {
            m.tick().unwrap();
        }
        let err = m.tick().unwrap_err();
        assert_eq!(err.limit, 3);
        assert_eq!(m.used, 4);
    }
}
