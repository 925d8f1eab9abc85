//! Builds a small game by hand, writes it in the text format and reads it
//! back together with an order file.

use antichain_games::arena::{parse_game, write_game, GameBuilder, Player};
use antichain_games::order::{parse_order, PartialOrder};

fn main() -> anyhow::Result<()> {
    let mut b = GameBuilder::new("corridor");
    let start = b.add_vertex("start", Player::A, false)?;
    let left = b.add_vertex("left", Player::B, false)?;
    let right = b.add_vertex("right", Player::B, false)?;
    let trap = b.add_vertex("trap", Player::A, true)?;
    b.add_edge(start, left, Some("l".into()))?;
    b.add_edge(start, right, Some("r".into()))?;
    b.add_edge(left, start, None)?;
    b.add_edge(right, trap, None)?;
    b.set_initial(start);
    let game = b.build()?;

    let text = write_game(&game);
    print!("{text}");
    let back = parse_game(&text)?;
    assert_eq!(write_game(&back), text);

    let order = parse_order("ge right left\n", &back)?;
    println!("right dominates left: {}", order.ge(&back.v("right"), &back.v("left")));
    Ok(())
}
