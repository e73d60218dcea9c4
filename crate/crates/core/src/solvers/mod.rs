//! Exact solvers for the Grundy domination number, the Z-Grundy domination
//! number and the zero forcing number, plus a brute-force oracle.

mod forcing;
mod grundy;
mod oracle;

pub use forcing::{
    forcing_closure, is_zero_forcing_set, zero_forcing_direct, zero_forcing_number,
    zero_forcing_number_with, ForcingState,
};
pub use grundy::{grundy_number, grundy_number_with};
pub use oracle::{brute_force_grundy, BRUTE_FORCE_MAX_ORDER};

use std::time::Duration;

/// Largest order accepted by the exact solvers (single-word state sets).
pub const EXACT_MAX_ORDER: usize = 64;

/// How a Grundy value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Depth-first search memoized on the dominated set.
    Memo,
    /// Branch and bound after the memo table exceeded its budget.
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveStats {
    pub states: u64,
    pub elapsed: Duration,
    pub strategy: Strategy,
    /// Set when the zero forcing value was confirmed by the direct seed search.
    pub cross_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of memo entries before switching to branch and bound.
    pub memo_budget: usize,
    /// Largest order on which the direct zero forcing search runs.
    pub direct_search_max_order: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            memo_budget: 1 << 23,
            direct_search_max_order: 24,
        }
    }
}
