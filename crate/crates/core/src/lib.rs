//! Safety games on finite graphs: attractor and on-the-fly solvers, an
//! antichain-pruned solver driven by a turn-based alternating simulation,
//! succinct ⋆-strategies and their verification, exact minimum-size search,
//! and generators for the standard fixtures.
//!
//! ```
//! use antichain_games::gamegen::{gen_nim, NimSpec};
//! use antichain_games::solvers::{solve_otfur_antichain, SolveOptions, Winner};
//! use antichain_games::strategy::{is_order_winning_star, OrderVerdict};
//!
//! let (game, order, _) = gen_nim(&NimSpec::fig1()).unwrap();
//! let r = solve_otfur_antichain(&game, &order, &SolveOptions::default()).unwrap();
//! assert_eq!(r.winner, Winner::A);
//! let s = r.strategy.unwrap();
//! assert_eq!(s.len(), 2);
//! assert_eq!(is_order_winning_star(&game, &s, &order).unwrap(), OrderVerdict::Winning);
//! ```

pub mod arena;
pub mod cli;
pub mod gamegen;
pub mod minsize;
pub mod order;
pub mod solvers;
pub mod strategy;
