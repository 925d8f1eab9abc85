//! Two small games where the order is a simulation but not a tba-simulation.

use crate::arena::{GameBuilder, Player, SafetyGame};
use crate::order::TableOrder;

fn build(
    name: &str,
    vertices: &[(&str, Player, bool)],
    edges: &[(&str, &str)],
    order: &[(&str, &str)],
) -> (SafetyGame, TableOrder) {
    let mut b = GameBuilder::new(name);
    for &(v, owner, bad) in vertices {
        b.add_vertex(v, owner, bad).expect("fixture vertex");
    }
    for &(s, d) in edges {
        b.add_edge_by_name(s, d, None).expect("fixture edge");
    }
    b.set_initial(b.vertex(vertices[0].0).expect("fixture initial"));
    let g = b.build().expect("fixture game");
    let pairs: Vec<_> = order.iter().map(|(a, c)| (g.v(a), g.v(c))).collect();
    let o = TableOrder::closed(&g, pairs).expect("fixture order");
    (g, o)
}

/// Eight vertices where `v1 ⪰ v2` and `v1p ⪰ v2p` form a simulation, yet
/// `v1` wins while `v2` loses. `v3` and `v4` are the two unnamed
/// intermediate B-vertices and stay incomparable.
pub fn gen_fig3_left() -> (SafetyGame, TableOrder) {
    use Player::{A, B};
    build(
        "fig3-left",
        &[
            ("v0", A, false),
            ("v3", B, false),
            ("v4", B, false),
            ("v1", A, false),
            ("v2", A, false),
            ("v1pp", B, false),
            ("v1p", B, true),
            ("v2p", B, true),
        ],
        &[
            ("v0", "v3"),
            ("v0", "v4"),
            ("v3", "v1"),
            ("v4", "v2"),
            ("v1", "v1pp"),
            ("v1", "v1p"),
            ("v2", "v2p"),
        ],
        &[("v1", "v2"), ("v1p", "v2p")],
    )
}

/// Five vertices, `v ⪰ vp` and `b1 ⪰ b2`. A loses, but the antichain solver
/// stops at `vp` because `v` already covers it.
pub fn gen_fig3_right() -> (SafetyGame, TableOrder) {
    use Player::{A, B};
    build(
        "fig3-right",
        &[
            ("v", A, false),
            ("vpp", B, false),
            ("b1", B, true),
            ("vp", A, false),
            ("b2", B, true),
        ],
        &[("v", "vpp"), ("v", "b1"), ("vpp", "vp"), ("vp", "b2")],
        &[("v", "vp"), ("b1", "b2")],
    )
}
