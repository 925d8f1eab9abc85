//! Cross-checks the three solvers on seeded random games.

use antichain_games::gamegen::{gen_random, RandomSpec};
use antichain_games::order::Equality;
use antichain_games::solvers::{solve_attractor, solve_otfur, solve_otfur_antichain, SolveOptions};

fn main() -> anyhow::Result<()> {
    let opts = SolveOptions::default();
    let mut a_wins = 0;
    for seed in 0..200 {
        let game = gen_random(&RandomSpec::new(10, 0.3, seed))?;
        let attr = solve_attractor(&game)?.win.contains(&game.initial());
        let plain = solve_otfur(&game, &opts)?.winner;
        let ac = solve_otfur_antichain(&game, &Equality, &opts)?.winner;
        assert_eq!(plain, ac, "seed {seed}");
        assert_eq!(attr, plain == antichain_games::solvers::Winner::A, "seed {seed}");
        a_wins += attr as usize;
    }
    println!("200 games agree; player A wins {a_wins}");
    Ok(())
}
