//! Limits on brute-force enumeration.

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding the default budget.
pub const BUDGET_ENV: &str = "SIGTUTTE_BUDGET";

/// Maximum number of candidate functions a brute-force scan may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget)
            .unwrap_or(Budget(DEFAULT_BUDGET))
    }

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    /// Fail unless `base^exp` candidates fit.
    pub fn check_power(self, base: u64, exp: usize) -> Result<()> {
        let mut needed: u128 = 1;
        for _ in 0..exp {
            needed = needed.saturating_mul(base as u128);
        }
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        assert!(Budget(8).check_power(2, 3).is_ok());
        assert_eq!(Budget(7).check_power(2, 3), Err(Error::BudgetExceeded { needed: 8, budget: 7 }));
        assert!(Budget(1).check_power(5, 0).is_ok());
        assert!(Budget::unlimited().check_power(2, 60).is_ok());
    }
}
