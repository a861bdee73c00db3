use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Guardrail on brute-force enumerations. Instances whose search space
/// exceeds the bound are refused with the exact count instead of being
/// truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub enumeration_bound: u64,
}

impl Limits {
    pub const DEFAULT_BOUND: u64 = 100_000_000;

    pub fn new(enumeration_bound: u64) -> Self {
        assert!(enumeration_bound > 0, "enumeration bound must be positive");
        Limits { enumeration_bound }
    }

    pub fn unbounded() -> Self {
        Limits {
            enumeration_bound: u64::MAX,
        }
    }

    pub fn check(&self, what: &'static str, count: &BigUint) -> Result<()> {
        if *count > BigUint::from(self.enumeration_bound) {
            return Err(Error::TooLarge {
                what,
                count: count.clone(),
                bound: self.enumeration_bound,
            });
        }
        Ok(())
    }

    /// Checks `base^exp`.
    pub fn check_power(&self, what: &'static str, base: usize, exp: usize) -> Result<()> {
        self.check(what, &BigUint::from(base).pow(exp as u32))
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_bound: Self::DEFAULT_BOUND,
        }
    }
}
