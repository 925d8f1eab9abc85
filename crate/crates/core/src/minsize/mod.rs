//! Succinct strategies: exact minimum-size search and the reduction from CNF
//! satisfiability that makes the size question NP-hard.

mod cnf;
mod reduction;
mod search;

use thiserror::Error;

use crate::arena::ArenaError;

pub use cnf::{canonical_cnf_sweep, parse_dimacs, CnfError, CnfFormula};
pub use reduction::{assignment_from_strategy, reduce_sat, strategy_from_assignment, ReductionOutput, VarGadget};
pub use search::{decide_minsizestrat, min_star_strategy_size, MinSizeOutcome, DEFAULT_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinSizeError {
    #[error("player A has no winning strategy")]
    NoWinningStrategy,
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("assignment does not satisfy the formula")]
    UnsatisfyingAssignment,
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentArity { expected: usize, got: usize },
    #[error("strategy has size {size}, more than k = {k}")]
    StrategyTooLarge { size: usize, k: usize },
    #[error("strategy is not winning")]
    StrategyNotWinning,
    #[error(transparent)]
    Arena(#[from] ArenaError),
}
