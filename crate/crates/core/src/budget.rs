//! Limits on exhaustive enumeration.

use std::time::{Duration, Instant};

use thiserror::Error;

/// Environment variable holding an optional wall-time cap in milliseconds.
pub const BUDGET_ENV: &str = "BD2KIT_BUDGET_MS";

pub const DEFAULT_ATOM_CAP: usize = 8;
pub const DEFAULT_TWIST_ATOM_CAP: usize = 4;
pub const DEFAULT_STRUCTURE_CAP: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetError {
    #[error("query has {atoms} atoms but the atom cap is {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },
    #[error("enumeration exceeded the wall-time budget of {ms} ms")]
    Timeout { ms: u128 },
    #[error("bounded search would visit {count} structures, above the cap of {cap}")]
    TooManyStructures { count: u128, cap: u128 },
}

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub atom_cap: usize,
    pub structure_cap: u128,
    started: Instant,
    limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self::with_atom_cap(DEFAULT_ATOM_CAP)
    }
}

impl Budget {
    pub fn with_atom_cap(atom_cap: usize) -> Self {
        Self {
            atom_cap,
            structure_cap: DEFAULT_STRUCTURE_CAP,
            started: Instant::now(),
            limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.limit = Some(limit);
        self
    }

    /// Reads the wall-time cap from [`BUDGET_ENV`] if set and well formed.
    pub fn from_env(atom_cap: usize) -> Self {
        let budget = Self::with_atom_cap(atom_cap);
        match std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            Some(ms) => budget.with_time_limit(Duration::from_millis(ms)),
            None => budget,
        }
    }

    pub fn check_atoms(&self, atoms: usize) -> Result<(), BudgetError> {
        if atoms > self.atom_cap {
            return Err(BudgetError::TooManyAtoms {
                atoms,
                cap: self.atom_cap,
            });
        }
        Ok(())
    }

    pub fn check_structures(&self, count: u128) -> Result<(), BudgetError> {
        if count > self.structure_cap {
            return Err(BudgetError::TooManyStructures {
                count,
                cap: self.structure_cap,
            });
        }
        Ok(())
    }

    pub fn check_time(&self) -> Result<(), BudgetError> {
        match self.limit {
            Some(limit) if self.started.elapsed() > limit => Err(BudgetError::Timeout {
                ms: limit.as_millis(),
            }),
            _ => Ok(()),
        }
    }
}
