//! Three solvers for safety games: the attractor fixpoint, the plain
//! on-the-fly algorithm, and its antichain-pruned variant for games equipped
//! with a tba-simulation.

mod antichain_otfur;
mod attractor;
mod invariants;
mod otfur;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::order::Antichain;
use crate::strategy::StarStrategy;

pub use antichain_otfur::{solve_otfur_antichain, AntichainOtfur, OtfurState};
pub use attractor::{solve_attractor, AttractorResult};
pub use invariants::{invariant_probe, InvariantViolation};
pub use otfur::solve_otfur;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Winner {
    /// Player A has a winning strategy from the initial vertex.
    A,
    B,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::A => f.write_str("A"),
            Winner::B => f.write_str("B"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub vertices_explored: u64,
    pub edges_popped: u64,
    pub reevaluations: u64,
    pub postponements: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WaitingOrder {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub waiting: WaitingOrder,
    /// Probe the loop invariants at every loop head. Needs an explicit game.
    pub check_invariants: bool,
    /// Hard cap on loop iterations. Explicit games default to
    /// `|E| * (|V| + 1)`; implicit games run uncapped unless set.
    pub max_iterations: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct SolveResult<V> {
    pub winner: Winner,
    pub strategy: Option<StarStrategy<V>>,
    pub anti_maybe: Option<Antichain<V>>,
    pub anti_losing: Option<Antichain<V>>,
    pub stats: SolveStats,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("operation needs an explicit game")]
    NotExplicit,
    #[error("iteration cap of {cap} reached")]
    IterationCap { cap: u64 },
    #[error("iteration {iteration}: invariant violated: {}", .violations.join("; "))]
    Invariant {
        iteration: u64,
        violations: Vec<String>,
    },
    #[error("A-vertex {0} in AntiMaybe has no successor in the downward closure of AntiMaybe")]
    NoStrategyChoice(String),
}

/// Default cap `|E| * (|V| + 1)`; `None` for implicit games.
pub(crate) fn default_cap<G: crate::arena::GameGraph>(g: &G) -> Option<u64> {
    let vs = g.vertices()?;
    let edges: u64 = vs.iter().map(|v| g.successors(v).len() as u64).sum();
    Some(edges.max(1) * (vs.len() as u64 + 1))
}
