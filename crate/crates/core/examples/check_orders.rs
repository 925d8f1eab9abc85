//! Runs the order checkers on a vector game and on the two simulation
//! counterexamples.

use antichain_games::gamegen::{gen_fig3_left, gen_fig3_right, gen_vector, VectorGameSpec};
use antichain_games::order::{check_partial_order, check_simulation, check_tba_simulation, derive_tba};

fn main() -> anyhow::Result<()> {
    let (game, order, labels) = gen_vector(&VectorGameSpec::new(2, 3))?;
    println!("{}: {} vertices", game.name(), game.num_vertices());
    println!("partial order violations: {}", check_partial_order(&order, &game).len());
    println!("criterion: {:?}", derive_tba(&order, &game, &labels)?);
    println!("direct tba violations: {}", check_tba_simulation(&order, &game).len());

    for (game, order) in [gen_fig3_left(), gen_fig3_right()] {
        println!("{}:", game.name());
        println!("  simulation violations: {:?}", check_simulation(&order, &game));
        for v in check_tba_simulation(&order, &game) {
            println!("  tba violation: {v}");
        }
    }
    Ok(())
}
