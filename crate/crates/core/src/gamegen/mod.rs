//! Fixture and family generators: urn-filling Nim, monotone vector games,
//! the two simulation counterexamples and seeded random games.

mod fig3;
mod nim;
mod random;
mod vector;

use thiserror::Error;

use crate::arena::ArenaError;

pub use fig3::{gen_fig3_left, gen_fig3_right};
pub use nim::{fig1_strategy, gen_nim, Fig1Table, NimArena, NimSpec, NimState};
pub use random::{gen_random, RandomSpec};
pub use vector::{gen_vector, BadRule, MoveFn, VecMove, VecState, VectorArena, VectorGameSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("degenerate spec: {0}")]
    Degenerate(String),
    #[error("move `{name}` is not monotone: {detail}")]
    NonMonotone { name: String, detail: String },
    #[error("bad predicate is not upward closed: {0}")]
    BadNotUpward(String),
    #[error(transparent)]
    Arena(#[from] ArenaError),
}
