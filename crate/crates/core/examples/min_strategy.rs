//! Exact minimum strategy size on the urn game and on a reduced CNF formula.

use antichain_games::gamegen::{gen_nim, NimSpec};
use antichain_games::minsize::{
    assignment_from_strategy, min_star_strategy_size, reduce_sat, CnfFormula, MinSizeOutcome, DEFAULT_BUDGET,
};

fn main() -> anyhow::Result<()> {
    let (game, _, _) = gen_nim(&NimSpec::fig1())?;
    if let MinSizeOutcome::Found { size, witness } = min_star_strategy_size(&game, DEFAULT_BUDGET) {
        let rows: Vec<String> =
            witness.iter().map(|(&v, &w)| format!("{}->{}", game.name_of(v), game.name_of(w))).collect();
        println!("nim8: size {size}: {}", rows.join(" "));
    }

    let phi = CnfFormula::new(3, vec![vec![1, 2, -3], vec![-1, 2, 3]])?;
    let r = reduce_sat(&phi);
    println!("reduction: {} vertices, k = {}", r.game.num_vertices(), r.k);
    match min_star_strategy_size(&r.game, DEFAULT_BUDGET) {
        MinSizeOutcome::Found { size, witness } => {
            println!("minimum size {size}");
            if size <= r.k {
                println!("decoded assignment: {:?}", assignment_from_strategy(&r, &witness)?);
            }
        }
        other => println!("{other:?}"),
    }
    Ok(())
}
