//! One pass/fail line per acceptance criterion. Run with `--nocapture` to
//! see the report.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use antichain_games::arena::{Labeling, Player, SafetyGame, VertexId};
use antichain_games::gamegen::{
    fig1_strategy, gen_fig3_left, gen_fig3_right, gen_nim, gen_random, gen_vector, Fig1Table, NimSpec,
    RandomSpec,
};
use antichain_games::minsize::{
    canonical_cnf_sweep, decide_minsizestrat, min_star_strategy_size, parse_dimacs, reduce_sat, MinSizeOutcome,
    DEFAULT_BUDGET,
};
use antichain_games::order::{
    check_monotonic_labeling, check_simulation, check_tba_simulation, derive_tba, max_antichain, Equality,
    PartialOrder, TbaVerdict,
};
use antichain_games::solvers::{
    solve_attractor, solve_otfur, solve_otfur_antichain, SolveOptions, WaitingOrder, Winner,
};
use antichain_games::strategy::{is_order_winning_star, is_winning_star, OrderVerdict};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(g: &SafetyGame, vs: impl IntoIterator<Item = VertexId>) -> BTreeSet<String> {
    vs.into_iter().map(|v| g.name_of(v).to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn a_wins(g: &SafetyGame) -> bool {
    solve_attractor(g).unwrap().win.contains(&g.initial())
}

/// Comparable pairs whose dominant vertex wins while the dominated one loses.
fn closure_breaks<O: PartialOrder<VertexId> + ?Sized>(g: &SafetyGame, o: &O, win: &BTreeSet<VertexId>) -> usize {
    let mut n = 0;
    for a in g.vertex_ids() {
        for b in g.vertex_ids() {
            if o.ge(&a, &b) && win.contains(&a) && !win.contains(&b) {
                n += 1;
            }
        }
    }
    n
}

/// Pairs `a ⊵ b` with `b` attracted at some round strictly before `a`.
fn lemma1_breaks<O: PartialOrder<VertexId> + ?Sized>(g: &SafetyGame, o: &O) -> Vec<String> {
    let r = solve_attractor(g).unwrap();
    let mut out = Vec::new();
    for i in 0..=r.rounds {
        let attr = r.per_round(i);
        for a in g.vertex_ids() {
            for &b in &attr {
                if o.ge(&a, &b) && !attr.contains(&a) {
                    out.push(format!("round {i}: {} ⊵ {}", g.name_of(a), g.name_of(b)));
                }
            }
        }
    }
    out
}

fn c1_nim8_win_sets() -> Check {
    for spec in [NimSpec::new(8), NimSpec::fig1()] {
        let (g, _, _) = gen_nim(&spec).unwrap();
        let win = solve_attractor(&g).unwrap().win;
        let a = names(&g, win.iter().copied().filter(|&v| g.owner(v) == Player::A));
        let b = names(&g, win.iter().copied().filter(|&v| g.owner(v) == Player::B));
        ensure(a == set(&["A0", "A2", "A3", "A5", "A6"]), || format!("A-winning {a:?}"))?;
        ensure(b == set(&["B1", "B4", "B7"]), || format!("B-winning {b:?}"))?;
    }
    Ok(())
}

fn c2_antichains() -> Check {
    let (g, o, _) = gen_nim(&NimSpec::fig1()).unwrap();
    let win = solve_attractor(&g).unwrap().win;
    let sigma = fig1_strategy(&g, Fig1Table::A);
    let reach = g.restrict_by_strategy(&sigma).unwrap();
    let reach = reach.reach(reach.initial()).unwrap();
    let reached_a: Vec<VertexId> = reach
        .iter().copied()
        .filter(|&v| g.owner(v) == Player::A && win.contains(&v))
        .collect();
    let head = names(&g, max_antichain(reached_a, &o).iter().copied());
    ensure(head == set(&["A5", "A6"]), || format!("reachable antichain {head:?}"))?;
    let max_win = names(&g, max_antichain(win.iter().copied(), &o).iter().copied());
    ensure(max_win == set(&["B7", "A6", "A5"]), || format!("MaxWin {max_win:?}"))
}

fn c3_succinct_strategy() -> Check {
    let (g, o, _) = gen_nim(&NimSpec::fig1()).unwrap();
    let r = solve_otfur_antichain(&g, &o, &SolveOptions::default()).unwrap();
    ensure(r.winner == Winner::A, || "antichain OTFUR says A loses".into())?;
    let s = r.strategy.unwrap();
    let table: BTreeSet<(String, String)> =
        s.iter().map(|(&v, &w)| (g.name_of(v).into(), g.name_of(w).into())).collect();
    let want: BTreeSet<(String, String)> =
        [("A5", "B7"), ("A6", "B7")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(table == want, || format!("strategy {table:?}"))?;
    ensure(is_order_winning_star(&g, &s, &o).unwrap() == OrderVerdict::Winning, || {
        "order-compatible concretisations are not all winning".into()
    })?;
    ensure(!is_winning_star(&g, &s).unwrap(), || "every concretisation wins".into())
}

fn c4_min_sizes() -> Check {
    let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
    match min_star_strategy_size(&g, DEFAULT_BUDGET) {
        MinSizeOutcome::Found { size: 5, .. } => {}
        other => return Err(format!("nim8: {other:?}")),
    }
    let phi = parse_dimacs(&std::fs::read_to_string(common::fixture("fig2.cnf")).unwrap()).unwrap();
    let r = reduce_sat(&phi);
    ensure(r.k == 8, || format!("k = {}", r.k))?;
    match min_star_strategy_size(&r.game, DEFAULT_BUDGET) {
        MinSizeOutcome::Found { size: 8, .. } => Ok(()),
        other => Err(format!("reduction game: {other:?}")),
    }
}

fn c5_reduction_equivalence() -> Check {
    let sweep = canonical_cnf_sweep(3, 3);
    ensure(!sweep.is_empty() && sweep.len() <= 1000, || format!("{} formulas", sweep.len()))?;
    for phi in &sweep {
        let r = reduce_sat(phi);
        ensure(r.k == 2 * phi.num_vars() as usize + phi.clauses().len(), || "k is not 2m+n".into())?;
        let got = decide_minsizestrat(&r.game, r.k, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let sat = phi.solve_by_truth_table().is_some();
        ensure(got == sat, || format!("{}: decided {got}, satisfiable {sat}", phi.to_dimacs()))?;
    }
    Ok(())
}

fn c6_random_oracles() -> Check {
    let opts = SolveOptions::default();
    for seed in 0..500u64 {
        let n = 2 + (seed % 11) as usize;
        let density = [0.15, 0.3, 0.5][(seed % 3) as usize];
        let g = gen_random(&RandomSpec::new(n, density, seed)).unwrap();
        let attr = if a_wins(&g) { Winner::A } else { Winner::B };
        let plain = solve_otfur(&g, &opts).unwrap().winner;
        let ac = solve_otfur_antichain(&g, &Equality, &opts).unwrap().winner;
        ensure(attr == plain && plain == ac, || {
            format!("seed {seed}: attractor {attr}, otfur {plain}, antichain {ac}")
        })?;
    }
    Ok(())
}

fn c7_downward_closure() -> Check {
    let mut fixtures = Vec::new();
    for n in 5..=20 {
        for extras in [false, true] {
            let (g, o, _) = gen_nim(&NimSpec { n, fig1_extras: extras }).unwrap();
            fixtures.push((g, o));
        }
    }
    for spec in common::vector_family() {
        let (g, o, _) = gen_vector(&spec).unwrap();
        fixtures.push((g, o));
    }
    for (g, o) in &fixtures {
        let win = solve_attractor(g).unwrap().win;
        let breaks = closure_breaks(g, o, &win);
        ensure(breaks == 0, || format!("{}: {breaks} comparable pairs break closure", g.name()))?;
        let l1 = lemma1_breaks(g, o);
        ensure(l1.is_empty(), || format!("{}: {}", g.name(), l1[0]))?;
    }
    Ok(())
}

fn c8_fig3() -> Check {
    let (g, o) = gen_fig3_left();
    ensure(check_simulation(&o, &g).is_empty(), || "left order is not a simulation".into())?;
    let win = solve_attractor(&g).unwrap().win;
    ensure(closure_breaks(&g, &o, &win) > 0, || "left Win is downward closed".into())?;

    let (g, o) = gen_fig3_right();
    let ac = solve_otfur_antichain(&g, &o, &SolveOptions::default()).unwrap().winner;
    let plain = solve_otfur(&g, &SolveOptions::default()).unwrap().winner;
    ensure(ac == Winner::A, || "antichain OTFUR says A loses on the right fixture".into())?;
    ensure(plain == Winner::B, || "OTFUR says A wins on the right fixture".into())?;
    ensure(!check_tba_simulation(&o, &g).is_empty(), || "right order accepted as tba".into())
}

fn c9_invariants() -> Check {
    let mut runs: Vec<(SafetyGame, Box<dyn PartialOrder<VertexId>>)> = Vec::new();
    let (g, o, _) = gen_nim(&NimSpec::fig1()).unwrap();
    runs.push((g, Box::new(o)));
    runs.push((common::load("fig2.tg"), Box::new(Equality)));
    for seed in 0..50u64 {
        let g = gen_random(&RandomSpec::new(3 + (seed % 10) as usize, 0.3, 1000 + seed)).unwrap();
        runs.push((g, Box::new(Equality)));
    }
    for (g, o) in &runs {
        for waiting in [WaitingOrder::Fifo, WaitingOrder::Lifo] {
            let opts = SolveOptions {
                waiting,
                check_invariants: true,
                ..Default::default()
            };
            solve_otfur_antichain(g, o.as_ref(), &opts).map_err(|e| format!("{} {waiting:?}: {e}", g.name()))?;
        }
    }
    Ok(())
}

fn c10_pruning() -> Check {
    let opts = SolveOptions {
        waiting: WaitingOrder::Lifo,
        ..Default::default()
    };
    for n in [50, 100, 200] {
        let (g, o, _) = gen_nim(&NimSpec { n, fig1_extras: true }).unwrap();
        let plain = solve_otfur(&g, &opts).unwrap();
        let ac = solve_otfur_antichain(&g, &o, &opts).unwrap();
        ensure(plain.winner == ac.winner, || format!("nim{n}: winners differ"))?;
        ensure(ac.stats.vertices_explored < plain.stats.vertices_explored, || {
            format!(
                "nim{n}: antichain explored {} vs {}",
                ac.stats.vertices_explored, plain.stats.vertices_explored
            )
        })?;
    }
    Ok(())
}

fn c11_criterion_chain() -> Check {
    for spec in common::vector_family() {
        let (g, o, lab) = gen_vector(&spec).unwrap();
        let verdict = derive_tba(&o, &g, &lab).map_err(|e| format!("{}: {e}", g.name()))?;
        ensure(matches!(verdict, TbaVerdict::ByCriterion { .. }), || format!("{}: {verdict:?}", g.name()))?;
        ensure(check_tba_simulation(&o, &g).is_empty(), || format!("{}: not tba", g.name()))?;
        let mutated = mutate_one_label(&g, &lab).ok_or_else(|| format!("{}: nothing to mutate", g.name()))?;
        ensure(!check_monotonic_labeling(&o, &g, &mutated).is_empty(), || {
            format!("{}: mutated labeling still monotonic", g.name())
        })?;
    }
    Ok(())
}

/// Relabels the `hold` move of the zero vector with the name of another A-move.
fn mutate_one_label(g: &SafetyGame, lab: &Labeling) -> Option<Labeling> {
    let init = g.initial();
    let hold = g.succ(init).iter().copied().find(|&w| lab.label(init, w) == Some("hold"))?;
    let other = g.succ(init).iter().filter_map(|&w| lab.label(init, w)).find(|&l| l != "hold")?;
    let mut m = lab.clone();
    m.set(init, hold, other.to_string());
    Some(m)
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("nim8 winning sets", c1_nim8_win_sets),
        ("nim8 antichains", c2_antichains),
        ("succinct strategy on nim8", c3_succinct_strategy),
        ("minimum strategy sizes", c4_min_sizes),
        ("reduction equivalence on the cnf sweep", c5_reduction_equivalence),
        ("three solvers agree on 500 random games", c6_random_oracles),
        ("winning sets are downward closed", c7_downward_closure),
        ("simulation counterexamples", c8_fig3),
        ("loop invariants hold", c9_invariants),
        ("antichain pruning on nim 50/100/200", c10_pruning),
        ("labeling criterion implies tba", c11_criterion_chain),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS {name}", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
