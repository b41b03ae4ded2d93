use std::cell::Cell;

use crate::error::{Error, Result};

/// Default cap on recursion nodes for one exhaustive computation.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Work meter for the exponential parts of the engine.
///
/// Each enumeration node charges one unit; running past the limit is an
/// error, never a truncated answer. A budget is meant for one sequential
/// computation and is deliberately not `Sync`.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    spent: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            spent: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent.get()
    }

    #[inline]
    pub fn charge(&self, units: u64) -> Result<()> {
        let spent = self.spent.get().saturating_add(units);
        self.spent.set(spent);
        if spent > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    /// A fresh budget with the same limit.
    pub fn fresh(&self) -> Budget {
        Budget::new(self.limit)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charging_past_limit_fails() {
        let b = Budget::new(10);
        b.charge(10).unwrap();
        assert_eq!(b.charge(1), Err(Error::BudgetExceeded { limit: 10 }));
        assert_eq!(b.fresh().spent(), 0);
    }
}
