//! Solves games whose successors are computed on demand, without building
//! the arena first.

use antichain_games::gamegen::{NimArena, NimSpec, VectorArena, VectorGameSpec};
use antichain_games::order::{NimMod3, Pointwise};
use antichain_games::solvers::{solve_otfur, solve_otfur_antichain, SolveOptions, WaitingOrder};

fn main() -> anyhow::Result<()> {
    let opts = SolveOptions {
        waiting: WaitingOrder::Lifo,
        ..Default::default()
    };
    for n in [50, 500, 2000] {
        let game = NimArena::from_spec(NimSpec { n, fig1_extras: true });
        let plain = solve_otfur(&game, &opts)?;
        let ac = solve_otfur_antichain(&game, &NimMod3, &opts)?;
        println!(
            "nim{n}: winner {} explored {} vs {}",
            ac.winner, ac.stats.vertices_explored, plain.stats.vertices_explored
        );
    }
    let game = VectorArena::new(VectorGameSpec::new(4, 5))?;
    let ac = solve_otfur_antichain(&game, &Pointwise, &opts)?;
    let plain = solve_otfur(&game, &opts)?;
    println!(
        "vector 4x5: winner {} explored {} vs {}",
        ac.winner, ac.stats.vertices_explored, plain.stats.vertices_explored
    );
    Ok(())
}
