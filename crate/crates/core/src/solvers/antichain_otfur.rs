use std::collections::{HashMap, HashSet, VecDeque};

use indexmap::IndexSet;

use super::invariants::{invariant_probe, InvariantViolation};
use super::{
    default_cap, solve_attractor, SolveError, SolveOptions, SolveResult, SolveStats, WaitingOrder,
    Winner,
};
use crate::arena::{GameGraph, Player};
use crate::order::{max_antichain, Antichain, PartialOrder};
use crate::strategy::StarStrategy;

type Edge<V> = (V, V);

/// The mutable state of one antichain-OTFUR run. Fields are public so that
/// tests can inspect and deliberately corrupt it.
#[derive(Clone, Debug)]
pub struct OtfurState<V> {
    /// Explored vertices in exploration order.
    pub passed: IndexSet<V>,
    pub waiting: VecDeque<Edge<V>>,
    pub depend: HashMap<V, Vec<Edge<V>>>,
    pub anti_maybe: Antichain<V>,
    pub anti_losing: Antichain<V>,
    /// Every vertex that has appeared in `waiting`, minus unexplored targets
    /// of edges dropped because their source was already losing. Kept only
    /// when checking invariants.
    pub visited: Option<HashSet<V>>,
    /// Completed loop iterations.
    pub iteration: u64,
}

impl<V: Clone + Eq + std::hash::Hash> OtfurState<V> {
    /// Vertices occurring in some waiting edge.
    pub fn state_waiting(&self) -> HashSet<V> {
        self.waiting
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    fn push(&mut self, e: Edge<V>) {
        if let Some(vis) = &mut self.visited {
            vis.insert(e.0.clone());
            vis.insert(e.1.clone());
        }
        self.waiting.push_back(e);
    }

    fn add_depend(&mut self, key: V, e: Edge<V>) {
        let d = self.depend.entry(key).or_default();
        if !d.contains(&e) {
            d.push(e);
        }
    }
}

/// Step-wise antichain OTFUR.
///
/// Besides the two antichains, the run differs from the plain algorithm in
/// three places: only `⊵`-minimal successors of A-vertices and `⊵`-maximal
/// successors of B-vertices are scheduled, the status of a vertex is
/// evaluated on those successors only, and edges touching something already
/// covered by `AntiMaybe` are parked in `Depend` instead of being explored.
pub struct AntichainOtfur<'a, G: GameGraph, O: ?Sized> {
    game: &'a G,
    order: &'a O,
    opts: SolveOptions,
    state: OtfurState<G::Vertex>,
    stats: SolveStats,
    cap: Option<u64>,
    finished: bool,
    succ_cache: HashMap<G::Vertex, Vec<G::Vertex>>,
    truth_losing: Option<HashSet<G::Vertex>>,
}

impl<'a, G, O> AntichainOtfur<'a, G, O>
where
    G: GameGraph,
    O: PartialOrder<G::Vertex> + ?Sized,
{
    pub fn new(game: &'a G, order: &'a O, opts: SolveOptions) -> Self {
        let init = game.initial();
        let state = OtfurState {
            passed: IndexSet::new(),
            waiting: VecDeque::new(),
            depend: HashMap::new(),
            anti_maybe: Antichain::new_max(),
            anti_losing: Antichain::new_min(),
            visited: opts.check_invariants.then(HashSet::new),
            iteration: 0,
        };
        let cap = opts.max_iterations.or_else(|| default_cap(game));
        let truth_losing = if opts.check_invariants {
            solve_attractor(game).ok().map(|r| r.attractor.into_iter().collect())
        } else {
            None
        };
        let mut run = AntichainOtfur {
            game,
            order,
            opts,
            state,
            stats: SolveStats::default(),
            cap,
            finished: false,
            succ_cache: HashMap::new(),
            truth_losing,
        };

        run.state.passed.insert(init.clone());
        run.state.depend.insert(init.clone(), Vec::new());
        if run.is_losing_leaf(&init) {
            run.state.anti_losing.insert(init, order);
        } else {
            run.state.anti_maybe.insert(init.clone(), order);
            for w in run.frontier(&init) {
                run.state.push((init.clone(), w));
            }
        }
        run
    }

    pub fn state(&self) -> &OtfurState<G::Vertex> {
        &self.state
    }

    pub fn state_mut(&mut self) -> &mut OtfurState<G::Vertex> {
        &mut self.state
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats {
            vertices_explored: self.state.passed.len() as u64,
            ..self.stats
        }
    }

    pub fn is_finished(&self) -> bool {
        self.finished
            || self.state.waiting.is_empty()
            || self.in_losing(&self.game.initial())
    }

    /// Evaluates the loop invariants on the current state. Inv⁴ is skipped
    /// on implicit games.
    pub fn probe(&self) -> Vec<InvariantViolation<G::Vertex>> {
        invariant_probe(&self.state, self.game, self.order, self.truth_losing.as_ref())
    }

    fn succ(&mut self, v: &G::Vertex) -> Vec<G::Vertex> {
        if let Some(s) = self.succ_cache.get(v) {
            return s.clone();
        }
        let s = self.game.successors(v);
        self.succ_cache.insert(v.clone(), s.clone());
        s
    }

    /// Bad vertices and A-owned dead ends.
    fn is_losing_leaf(&mut self, v: &G::Vertex) -> bool {
        self.game.is_bad(v) || (self.game.owner(v) == Player::A && self.succ(v).is_empty())
    }

    /// `⌊Succ(v)⌋` for A-vertices, `⌈Succ(v)⌉` for B-vertices, in successor
    /// order.
    fn frontier(&mut self, v: &G::Vertex) -> Vec<G::Vertex> {
        let succ = self.succ(v);
        let o = self.order;
        let keep = |s: &G::Vertex| match self.game.owner(v) {
            Player::A => !succ.iter().any(|t| t != s && o.ge(s, t)),
            Player::B => !succ.iter().any(|t| t != s && o.ge(t, s)),
        };
        succ.iter().filter(|s| keep(s)).cloned().collect()
    }

    fn in_losing(&self, v: &G::Vertex) -> bool {
        self.state.anti_losing.in_up_closure(v, self.order)
    }

    fn in_maybe(&self, v: &G::Vertex) -> bool {
        self.state.anti_maybe.in_down_closure(v, self.order)
    }

    fn first_maybe_above(&self, v: &G::Vertex) -> G::Vertex {
        self.state
            .anti_maybe
            .first_covering(v, self.order)
            .expect("caller checked membership in the downward closure")
            .clone()
    }

    /// Executes one loop iteration. Returns `Ok(false)` once the loop
    /// condition fails.
    pub fn step(&mut self) -> Result<bool, SolveError> {
        if self.is_finished() {
            self.finished = true;
            return Ok(false);
        }
        if let Some(c) = self.cap {
            if self.state.iteration >= c {
                return Err(SolveError::IterationCap { cap: c });
            }
        }
        let popped = match self.opts.waiting {
            WaitingOrder::Fifo => self.state.waiting.pop_front(),
            WaitingOrder::Lifo => self.state.waiting.pop_back(),
        };
        let e = popped.expect("waiting is non-empty");
        self.state.iteration += 1;
        self.stats.edges_popped += 1;
        let (v, w) = e.clone();
        let o = self.order;

        if self.in_losing(&v) {
            // The dropped target leaves the bookkeeping unless explored elsewhere.
            if !self.state.passed.contains(&w) {
                if let Some(vis) = &mut self.state.visited {
                    vis.remove(&w);
                }
            }
            return Ok(true);
        }
        if self.in_maybe(&v) && !self.state.anti_maybe.contains(&v) {
            let vm = self.first_maybe_above(&v);
            self.state.add_depend(vm, e);
            self.stats.postponements += 1;
            return Ok(true);
        }
        if self.in_maybe(&w) {
            // `w` itself may be the covering element; the edge is parked
            // under it either way so a later loss of `w` reschedules it.
            let vm = self.first_maybe_above(&w);
            self.state.add_depend(vm, e);
            self.stats.postponements += 1;
            return Ok(true);
        }
        if !self.state.passed.contains(&w) {
            self.state.passed.insert(w.clone());
            if self.in_losing(&w) {
                self.state.push(e);
            } else if self.is_losing_leaf(&w) {
                self.state.anti_losing.insert(w, o);
                self.state.push(e);
            } else {
                self.state.depend.insert(w.clone(), vec![e]);
                self.state.anti_maybe.insert(w.clone(), o);
                for x in self.frontier(&w) {
                    self.state.push((w.clone(), x));
                }
            }
            return Ok(true);
        }

        self.stats.reevaluations += 1;
        let front = self.frontier(&v);
        let losing_now = match self.game.owner(&v) {
            Player::A => front.iter().all(|x| self.in_losing(x)),
            Player::B => front.iter().any(|x| self.in_losing(x)),
        };
        if losing_now {
            self.state.anti_losing.insert(v.clone(), o);
            let live = self
                .state
                .passed
                .iter()
                .filter(|p| !self.state.anti_losing.in_up_closure(*p, o))
                .cloned()
                .collect::<Vec<_>>();
            self.state.anti_maybe = max_antichain(live, o);
            for d in self.state.depend.get(&v).cloned().unwrap_or_default() {
                self.state.push(d);
            }
        } else if !self.in_losing(&w) {
            self.state.add_depend(w, e);
        }
        Ok(true)
    }

    /// Runs to completion, probing invariants at every loop head when
    /// requested.
    pub fn run(mut self) -> Result<SolveResult<G::Vertex>, SolveError> {
        loop {
            if self.opts.check_invariants {
                let v = self.probe();
                if !v.is_empty() {
                    return Err(SolveError::Invariant {
                        iteration: self.state.iteration,
                        violations: v.iter().map(|x| x.describe(self.game)).collect(),
                    });
                }
            }
            if !self.step()? {
                break;
            }
        }
        self.finish()
    }

    fn finish(mut self) -> Result<SolveResult<G::Vertex>, SolveError> {
        let init = self.game.initial();
        let winner = if self.in_losing(&init) { Winner::B } else { Winner::A };
        let strategy = if winner == Winner::A {
            let mut s = StarStrategy::new();
            let heads: Vec<G::Vertex> = self
                .state
                .anti_maybe
                .iter()
                .filter(|v| self.game.owner(v) == Player::A)
                .cloned()
                .collect();
            for v in heads {
                let choice = self.succ(&v).into_iter().find(|w| self.in_maybe(w));
                match choice {
                    Some(w) => {
                        s.insert(v, w);
                    }
                    None => return Err(SolveError::NoStrategyChoice(self.game.vertex_name(&v))),
                }
            }
            Some(s)
        } else {
            None
        };
        let stats = self.stats();
        Ok(SolveResult {
            winner,
            strategy,
            anti_maybe: Some(self.state.anti_maybe),
            anti_losing: Some(self.state.anti_losing),
            stats,
        })
    }
}

/// Runs the antichain OTFUR to completion. `o` must be a tba-simulation for
/// the result to be meaningful; this is not checked.
pub fn solve_otfur_antichain<G, O>(
    g: &G,
    o: &O,
    opts: &SolveOptions,
) -> Result<SolveResult<G::Vertex>, SolveError>
where
    G: GameGraph,
    O: PartialOrder<G::Vertex> + ?Sized,
{
    AntichainOtfur::new(g, o, opts.clone()).run()
}
