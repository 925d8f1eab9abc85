//! Extracts a two-entry strategy with the antichain solver and checks which
//! of its concretisations win.

use antichain_games::gamegen::{gen_nim, NimSpec};
use antichain_games::solvers::{solve_otfur_antichain, SolveOptions};
use antichain_games::strategy::{
    enumerate_order_concretisations, is_order_winning_star, is_winning_star, is_winning_total,
};

fn main() -> anyhow::Result<()> {
    let (game, order, _) = gen_nim(&NimSpec::fig1())?;
    let r = solve_otfur_antichain(&game, &order, &SolveOptions::default())?;
    let s = r.strategy.expect("player A wins the eight-ball game");
    for (&v, &w) in s.iter() {
        println!("{} -> {}", game.name_of(v), game.name_of(w));
    }
    println!("order-compatible concretisations win: {:?}", is_order_winning_star(&game, &s, &order)?);
    println!("every concretisation wins: {}", is_winning_star(&game, &s)?);

    let all = enumerate_order_concretisations(&game, &s, &order, 1 << 16)?;
    let winning = all.iter().filter(|c| is_winning_total(&game, c).unwrap_or(false)).count();
    println!("{winning} of {} order-compatible total strategies win", all.len());
    Ok(())
}
