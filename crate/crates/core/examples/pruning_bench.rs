//! Compares how many vertices the plain and antichain solvers explore on
//! growing urn games.

use std::time::Instant;

use antichain_games::gamegen::{gen_nim, NimSpec};
use antichain_games::solvers::{solve_otfur, solve_otfur_antichain, SolveOptions, WaitingOrder};

fn main() -> anyhow::Result<()> {
    let opts = SolveOptions {
        waiting: WaitingOrder::Lifo,
        ..Default::default()
    };
    println!("{:>6} {:>10} {:>10} {:>10}", "n", "otfur", "otfur-ac", "ac ms");
    for n in [50, 100, 200, 400] {
        let (game, order, _) = gen_nim(&NimSpec { n, fig1_extras: true })?;
        let plain = solve_otfur(&game, &opts)?;
        let t = Instant::now();
        let ac = solve_otfur_antichain(&game, &order, &opts)?;
        let ms = t.elapsed().as_secs_f64() * 1e3;
        assert_eq!(plain.winner, ac.winner);
        println!(
            "{n:>6} {:>10} {:>10} {ms:>10.2}",
            plain.stats.vertices_explored, ac.stats.vertices_explored
        );
    }
    Ok(())
}
