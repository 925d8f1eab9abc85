//! Exact search for a smallest winning ⋆-strategy.
//!
//! Sizes are tried in increasing order. For each size a depth-first search
//! assigns A-vertices either a successor or ⋆. Two facts drive the pruning.
//! Decisions only remove edges, so a losing vertex reachable through decided
//! vertices alone stays reachable in every extension. Every undecided vertex
//! that is reachable that way and has a losing successor must be assigned,
//! which gives a lower bound on the final size.

use std::collections::VecDeque;

use crate::arena::{Player, SafetyGame, VertexId};
use crate::solvers::solve_attractor;
use crate::strategy::{is_winning_star, StarStrategy};

use super::MinSizeError;

/// Search nodes allowed when the caller does not choose.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinSizeOutcome {
    Found { size: usize, witness: StarStrategy },
    /// A has no winning strategy at all.
    NoWinningStrategy,
    /// The node budget ran out before the minimum was settled.
    BudgetExhausted { nodes: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Decision {
    Open,
    Star,
    Pick(VertexId),
}

struct Search<'g> {
    g: &'g SafetyGame,
    decisions: Vec<Decision>,
    picked: usize,
    nodes: u64,
    budget: u64,
}

struct Exhausted;

impl<'g> Search<'g> {
    fn new(g: &'g SafetyGame, budget: u64) -> Self {
        // Vertices with fewer than two successors gain nothing from a choice.
        let decisions = g
            .vertex_ids()
            .map(|v| match g.owner(v) {
                Player::A if g.succ(v).len() >= 2 => Decision::Open,
                _ => Decision::Star,
            })
            .collect();
        Search {
            g,
            decisions,
            picked: 0,
            nodes: 0,
            budget,
        }
    }

    fn losing_leaf(&self, v: VertexId) -> bool {
        self.g.is_bad(v) || (self.g.owner(v) == Player::A && self.g.succ(v).is_empty())
    }

    fn allowed(&self, v: VertexId) -> &[VertexId] {
        match &self.decisions[v.index()] {
            Decision::Pick(w) => std::slice::from_ref(w),
            _ => self.g.succ(v),
        }
    }

    /// BFS from the initial vertex. With `stop_at_open`, open vertices are
    /// reached but not expanded.
    fn reach(&self, stop_at_open: bool) -> Vec<bool> {
        let mut seen = vec![false; self.g.num_vertices()];
        let mut queue = VecDeque::from([self.g.initial()]);
        seen[self.g.initial().index()] = true;
        while let Some(v) = queue.pop_front() {
            if stop_at_open && self.decisions[v.index()] == Decision::Open {
                continue;
            }
            for &w in self.allowed(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertices of `within` that reach a losing leaf inside `within`.
    fn co_reach_losing(&self, within: &[bool]) -> Vec<bool> {
        let n = self.g.num_vertices();
        let mut preds: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for v in self.g.vertex_ids().filter(|v| within[v.index()]) {
            for &w in self.allowed(v) {
                preds[w.index()].push(v);
            }
        }
        let mut hit = vec![false; n];
        let mut queue: VecDeque<VertexId> = self
            .g
            .vertex_ids()
            .filter(|&v| within[v.index()] && self.losing_leaf(v))
            .collect();
        for v in &queue {
            hit[v.index()] = true;
        }
        while let Some(w) = queue.pop_front() {
            for &v in &preds[w.index()] {
                if !hit[v.index()] {
                    hit[v.index()] = true;
                    queue.push_back(v);
                }
            }
        }
        hit
    }

    fn strategy(&self) -> StarStrategy {
        self.g
            .vertex_ids()
            .filter_map(|v| match self.decisions[v.index()] {
                Decision::Pick(w) => Some((v, w)),
                _ => None,
            })
            .collect()
    }

    fn run(&mut self, limit: usize) -> Result<Option<StarStrategy>, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        let reach = self.reach(false);
        if !self.g.vertex_ids().any(|v| reach[v.index()] && self.losing_leaf(v)) {
            return Ok(Some(self.strategy()));
        }
        let certain = self.reach(true);
        if self.g.vertex_ids().any(|v| certain[v.index()] && self.losing_leaf(v)) {
            return Ok(None);
        }
        let open: Vec<VertexId> = self
            .g
            .vertex_ids()
            .filter(|&v| certain[v.index()] && self.decisions[v.index()] == Decision::Open)
            .collect();
        let forced = open
            .iter()
            .filter(|&&v| self.g.succ(v).iter().any(|&w| self.losing_leaf(w)))
            .count();
        if self.picked + forced > limit {
            return Ok(None);
        }
        let live = self.co_reach_losing(&reach);
        let Some(&v) = open.iter().find(|&&v| live[v.index()]) else {
            return Ok(None);
        };

        self.decisions[v.index()] = Decision::Star;
        if let Some(s) = self.run(limit)? {
            return Ok(Some(s));
        }
        if self.picked < limit {
            self.picked += 1;
            for &w in self.g.succ(v) {
                if self.losing_leaf(w) {
                    continue;
                }
                self.decisions[v.index()] = Decision::Pick(w);
                if let Some(s) = self.run(limit)? {
                    return Ok(Some(s));
                }
            }
            self.picked -= 1;
        }
        self.decisions[v.index()] = Decision::Open;
        Ok(None)
    }
}

fn a_wins(g: &SafetyGame) -> bool {
    solve_attractor(g)
        .map(|r| r.win.contains(&g.initial()))
        .expect("explicit game")
}

/// Smallest size of a winning ⋆-strategy, with a witness that passed
/// [`is_winning_star`].
pub fn min_star_strategy_size(g: &SafetyGame, budget: u64) -> MinSizeOutcome {
    if !a_wins(g) {
        return MinSizeOutcome::NoWinningStrategy;
    }
    let mut search = Search::new(g, budget);
    let max = g.vertices_of(Player::A).count();
    for size in 0..=max {
        match search.run(size) {
            Err(Exhausted) => return MinSizeOutcome::BudgetExhausted { nodes: search.nodes },
            Ok(Some(witness)) => {
                assert!(is_winning_star(g, &witness).expect("witness on its own game"));
                return MinSizeOutcome::Found {
                    size: witness.len(),
                    witness,
                };
            }
            Ok(None) => {}
        }
    }
    unreachable!("a winning game has a winning strategy of size at most |V_A|")
}

/// Whether a winning ⋆-strategy of size at most `k` exists.
pub fn decide_minsizestrat(g: &SafetyGame, k: usize, budget: u64) -> Result<bool, MinSizeError> {
    if !a_wins(g) {
        return Err(MinSizeError::NoWinningStrategy);
    }
    let mut search = Search::new(g, budget);
    match search.run(k) {
        Ok(found) => Ok(found.is_some()),
        Err(Exhausted) => Err(MinSizeError::BudgetExhausted { nodes: search.nodes }),
    }
}
