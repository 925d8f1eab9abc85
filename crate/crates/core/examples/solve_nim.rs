//! Solves the eight-ball urn game with the three solvers and prints their
//! work counters.

use antichain_games::gamegen::{gen_nim, NimSpec};
use antichain_games::solvers::{solve_attractor, solve_otfur, solve_otfur_antichain, SolveOptions};

fn main() -> anyhow::Result<()> {
    let (game, order, _) = gen_nim(&NimSpec::fig1())?;

    let attr = solve_attractor(&game)?;
    let mut win: Vec<&str> = attr.win.iter().map(|&v| game.name_of(v)).collect();
    win.sort();
    println!("winning vertices: {}", win.join(" "));
    println!("attractor rounds: {}", attr.rounds);

    let opts = SolveOptions::default();
    let plain = solve_otfur(&game, &opts)?;
    let ac = solve_otfur_antichain(&game, &order, &opts)?;
    println!("otfur:    winner {} {:?}", plain.winner, plain.stats);
    println!("otfur-ac: winner {} {:?}", ac.winner, ac.stats);
    Ok(())
}
