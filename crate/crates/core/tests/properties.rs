use antichain_games::arena::{parse_game, write_game, VertexId};
use antichain_games::gamegen::{gen_random, gen_vector, BadRule, RandomSpec, VecMove, VectorGameSpec};
use antichain_games::order::{check_tba_simulation, derive_tba, max_antichain, Equality, PartialOrder, TbaVerdict};
use antichain_games::solvers::{
    solve_attractor, solve_otfur, solve_otfur_antichain, SolveOptions, WaitingOrder, Winner,
};
use antichain_games::strategy::{is_order_winning_star, is_winning_star, OrderVerdict};
use proptest::prelude::*;

fn delta(dims: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1i64..=1, dims)
}

/// Vector games with random clamped-offset moves; clamping keeps every move
/// monotone, so the pointwise order is always a tba-simulation.
fn monotone_spec() -> impl Strategy<Value = VectorGameSpec> {
    (1usize..=3, 1u32..=3).prop_flat_map(|(dims, bound)| {
        (
            prop::collection::vec(delta(dims), 1..=3),
            prop::collection::vec(delta(dims), 1..=3),
            any::<bool>(),
        )
            .prop_map(move |(a, b, bad)| VectorGameSpec {
                dims,
                bound,
                a_moves: a.into_iter().enumerate().map(|(i, d)| VecMove::delta(format!("m{i}"), d)).collect(),
                b_moves: b.into_iter().enumerate().map(|(i, d)| VecMove::delta(format!("e{i}"), d)).collect(),
                bad: if bad { BadRule::AnyAtBound } else { BadRule::Never },
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn monotone_vector_games_are_solved_soundly(spec in monotone_spec()) {
        let (g, o, lab) = gen_vector(&spec).unwrap();
        let by_criterion = matches!(derive_tba(&o, &g, &lab), Ok(TbaVerdict::ByCriterion { .. }));
        prop_assert!(by_criterion);
        prop_assert!(check_tba_simulation(&o, &g).is_empty());

        let win = solve_attractor(&g).unwrap().win;
        for a in g.vertex_ids() {
            for b in g.vertex_ids() {
                prop_assert!(!(o.ge(&a, &b) && win.contains(&a) && !win.contains(&b)));
            }
        }
        let truth = if win.contains(&g.initial()) { Winner::A } else { Winner::B };
        for waiting in [WaitingOrder::Fifo, WaitingOrder::Lifo] {
            let opts = SolveOptions { waiting, check_invariants: true, ..Default::default() };
            let r = solve_otfur_antichain(&g, &o, &opts).unwrap();
            prop_assert_eq!(r.winner, truth);
            if let Some(s) = &r.strategy {
                prop_assert_eq!(is_order_winning_star(&g, s, &o).unwrap(), OrderVerdict::Winning);
            }
        }
    }

    #[test]
    fn random_games_survive_a_text_round_trip(n in 2usize..15, density in 0.0f64..0.8, seed in any::<u64>()) {
        let g = gen_random(&RandomSpec::new(n, density, seed)).unwrap();
        let text = write_game(&g);
        let back = parse_game(&text).unwrap();
        prop_assert_eq!(write_game(&back), text);
    }

    #[test]
    fn waiting_discipline_does_not_change_the_winner(n in 2usize..13, density in 0.1f64..0.6, seed in any::<u64>()) {
        let g = gen_random(&RandomSpec::new(n, density, seed)).unwrap();
        let fifo = SolveOptions::default();
        let lifo = SolveOptions { waiting: WaitingOrder::Lifo, ..Default::default() };
        let w = solve_otfur(&g, &fifo).unwrap().winner;
        prop_assert_eq!(solve_otfur(&g, &lifo).unwrap().winner, w);
        prop_assert_eq!(solve_otfur_antichain(&g, &Equality, &fifo).unwrap().winner, w);
        let r = solve_otfur_antichain(&g, &Equality, &lifo).unwrap();
        prop_assert_eq!(r.winner, w);
        if let Some(s) = &r.strategy {
            prop_assert!(is_winning_star(&g, s).unwrap());
        }
    }

    #[test]
    fn upper_antichains_are_antichains_covering_their_set(picks in prop::collection::vec(any::<bool>(), 64)) {
        let (g, o, _) = gen_vector(&VectorGameSpec::new(2, 3)).unwrap();
        let s: Vec<VertexId> = g.vertex_ids().zip(&picks).filter(|(_, &p)| p).map(|(v, _)| v).collect();
        let top = max_antichain(s.clone(), &o);
        prop_assert!(top.is_antichain(&o));
        for v in &s {
            prop_assert!(top.in_down_closure(v, &o));
        }
        for t in top.iter() {
            prop_assert!(s.contains(t));
        }
    }
}
