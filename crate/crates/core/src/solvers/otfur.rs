use std::collections::{HashMap, HashSet, VecDeque};

use indexmap::IndexSet;

use super::{default_cap, SolveError, SolveOptions, SolveResult, SolveStats, WaitingOrder, Winner};
use crate::arena::{GameGraph, Player};
use crate::strategy::StarStrategy;

/// Plain on-the-fly solver: forward exploration of every edge, backward
/// propagation of losing vertices through `Depend`.
///
/// On a win for A, the returned strategy picks, at every explored non-losing
/// A-vertex, its first explored non-losing successor.
pub fn solve_otfur<G: GameGraph>(
    g: &G,
    opts: &SolveOptions,
) -> Result<SolveResult<G::Vertex>, SolveError> {
    type Edge<V> = (V, V);
    let init = g.initial();
    let cap = opts.max_iterations.or_else(|| default_cap(g));
    let mut stats = SolveStats::default();

    let mut passed: IndexSet<G::Vertex> = IndexSet::new();
    let mut losing: HashSet<G::Vertex> = HashSet::new();
    let mut depend: HashMap<G::Vertex, Vec<Edge<G::Vertex>>> = HashMap::new();
    let mut waiting: VecDeque<Edge<G::Vertex>> = VecDeque::new();
    let mut succ_cache: HashMap<G::Vertex, Vec<G::Vertex>> = HashMap::new();
    let mut succ = |v: &G::Vertex| -> Vec<G::Vertex> {
        succ_cache
            .entry(v.clone())
            .or_insert_with(|| g.successors(v))
            .clone()
    };
    let dead_or_bad = |v: &G::Vertex, s: &[G::Vertex]| {
        g.is_bad(v) || (g.owner(v) == Player::A && s.is_empty())
    };

    passed.insert(init.clone());
    depend.insert(init.clone(), Vec::new());
    let init_succ = succ(&init);
    if dead_or_bad(&init, &init_succ) {
        losing.insert(init.clone());
    }
    for w in init_succ {
        waiting.push_back((init.clone(), w));
    }

    let mut iterations = 0u64;
    while !losing.contains(&init) {
        let popped = match opts.waiting {
            WaitingOrder::Fifo => waiting.pop_front(),
            WaitingOrder::Lifo => waiting.pop_back(),
        };
        let Some(e) = popped else { break };
        iterations += 1;
        if let Some(c) = cap {
            if iterations > c {
                return Err(SolveError::IterationCap { cap: c });
            }
        }
        stats.edges_popped += 1;
        let (v, w) = e.clone();
        if !passed.contains(&w) {
            passed.insert(w.clone());
            let ws = succ(&w);
            depend.insert(w.clone(), vec![e.clone()]);
            if dead_or_bad(&w, &ws) {
                losing.insert(w.clone());
                waiting.push_back(e);
            } else {
                for x in ws {
                    waiting.push_back((w.clone(), x));
                }
            }
        } else {
            stats.reevaluations += 1;
            let vs = succ(&v);
            let now_losing = match g.owner(&v) {
                Player::A => vs.iter().all(|x| losing.contains(x)),
                Player::B => vs.iter().any(|x| losing.contains(x)),
            };
            if now_losing && losing.insert(v.clone()) {
                waiting.extend(depend.get(&v).cloned().unwrap_or_default());
            }
            if !losing.contains(&w) {
                let d = depend.entry(w.clone()).or_default();
                if !d.contains(&e) {
                    d.push(e);
                }
            }
        }
    }

    stats.vertices_explored = passed.len() as u64;
    let winner = if losing.contains(&init) { Winner::B } else { Winner::A };
    let strategy = (winner == Winner::A).then(|| {
        passed
            .iter()
            .filter(|v| g.owner(v) == Player::A && !losing.contains(*v))
            .filter_map(|v| {
                succ(v)
                    .into_iter()
                    .find(|w| passed.contains(w) && !losing.contains(w))
                    .map(|w| (v.clone(), w))
            })
            .collect::<StarStrategy<G::Vertex>>()
    });
    Ok(SolveResult {
        winner,
        strategy,
        anti_maybe: None,
        anti_losing: None,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamegen::{gen_fig3_right, gen_nim, gen_random, NimArena, NimSpec, RandomSpec};
    use crate::solvers::solve_attractor;
    use crate::strategy::is_winning_star;

    #[test]
    fn nim8_is_won_with_a_verified_strategy() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        let r = solve_otfur(&g, &SolveOptions::default()).unwrap();
        assert_eq!(r.winner, Winner::A);
        assert!(is_winning_star(&g, r.strategy.as_ref().unwrap()).unwrap());
        assert!(r.stats.vertices_explored <= 15);
    }

    #[test]
    fn fig3_right_is_lost() {
        let (g, _) = gen_fig3_right();
        let r = solve_otfur(&g, &SolveOptions::default()).unwrap();
        assert_eq!(r.winner, Winner::B);
        assert!(r.strategy.is_none());
    }

    #[test]
    fn implicit_nim_agrees_with_explicit() {
        for n in 3..30 {
            let (g, _, _) = gen_nim(&NimSpec::new(n)).unwrap();
            let explicit = solve_otfur(&g, &SolveOptions::default()).unwrap();
            let implicit = solve_otfur(&NimArena::new(n), &SolveOptions::default()).unwrap();
            assert_eq!(explicit.winner, implicit.winner, "n={n}");
            assert_eq!(explicit.stats, implicit.stats, "n={n}");
        }
    }

    #[test]
    fn agrees_with_attractor_on_random_games() {
        for seed in 0..200 {
            let g = gen_random(&RandomSpec::new(2 + (seed as usize % 11), 0.3, seed)).unwrap();
            let attr = solve_attractor(&g).unwrap();
            for waiting in [WaitingOrder::Fifo, WaitingOrder::Lifo] {
                let opts = SolveOptions { waiting, ..Default::default() };
                let r = solve_otfur(&g, &opts).unwrap();
                let expect = if attr.win.contains(&g.initial()) { Winner::A } else { Winner::B };
                assert_eq!(r.winner, expect, "seed {seed}");
                if let Some(s) = &r.strategy {
                    assert!(is_winning_star(&g, s).unwrap(), "seed {seed}");
                }
            }
        }
    }
}
