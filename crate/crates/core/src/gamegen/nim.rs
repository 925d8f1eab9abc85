use crate::arena::{GameBuilder, GameGraph, Labeling, Player, SafetyGame};
use crate::order::{nim_mod3_ge, DescriptionOrder, BuiltinOrder, PartialOrder, NimMod3, TableOrder};
use crate::strategy::StarStrategy;

use super::GenError;

/// Urn-filling Nim with `n` balls. Each turn a player adds one or two balls;
/// whoever fills the urn loses. A-states carry the counts `{0} ∪ {2..n-1}`,
/// B-states `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NimSpec {
    pub n: u32,
    /// Adds `B(n-1) -> A(n-2)`, `B(n-1) -> A(n-3)` and `B(n-2) -> A(n-3)`;
    /// for `n = 8` these are the three extra edges of the reference drawing.
    pub fig1_extras: bool,
}

impl NimSpec {
    pub fn new(n: u32) -> Self {
        NimSpec { n, fig1_extras: false }
    }

    /// The eight-ball instance with its extra edges.
    pub fn fig1() -> Self {
        NimSpec { n: 8, fig1_extras: true }
    }

    fn extras(&self) -> Vec<(u32, u32)> {
        let n = self.n;
        if self.fig1_extras && n >= 5 {
            vec![(n - 1, n - 2), (n - 1, n - 3), (n - 2, n - 3)]
        } else {
            Vec::new()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NimState {
    pub owner: Player,
    pub balls: u32,
}

impl NimState {
    pub fn name(&self) -> String {
        format!("{}{}", self.owner, self.balls)
    }
}

fn is_state(n: u32, s: NimState) -> bool {
    match s.owner {
        Player::A => s.balls == 0 || (2..n).contains(&s.balls),
        Player::B => (1..=n).contains(&s.balls),
    }
}

fn nim_successors(spec: &NimSpec, s: NimState) -> Vec<NimState> {
    let owner = s.owner.opponent();
    let mut out: Vec<NimState> = [s.balls + 1, s.balls + 2]
        .into_iter()
        .map(|balls| NimState { owner, balls })
        .filter(|&t| is_state(spec.n, t))
        .collect();
    if s.owner == Player::B {
        for (from, to) in spec.extras() {
            if from == s.balls {
                out.push(NimState { owner, balls: to });
            }
        }
    }
    out
}

fn nim_bad(n: u32, s: NimState) -> bool {
    match s.owner {
        Player::A => s.balls == n - 1,
        Player::B => s.balls == n,
    }
}

fn delta_label(from: u32, to: u32) -> String {
    format!("{:+}", to as i64 - from as i64)
}

/// The explicit Nim game, its order `⊵₀` and the ball-delta labeling.
pub fn gen_nim(spec: &NimSpec) -> Result<(SafetyGame, TableOrder, Labeling), GenError> {
    let n = spec.n;
    if n < 3 {
        return Err(GenError::Degenerate(format!("nim needs at least 3 balls, got {n}")));
    }
    let states: Vec<NimState> = std::iter::once(0)
        .chain(2..n)
        .map(|balls| NimState { owner: Player::A, balls })
        .chain((1..=n).map(|balls| NimState { owner: Player::B, balls }))
        .collect();
    let mut b = GameBuilder::new(format!("nim{n}"));
    for &s in &states {
        b.add_vertex(s.name(), s.owner, nim_bad(n, s))?;
    }
    for &s in &states {
        for t in nim_successors(spec, s) {
            let label = delta_label(s.balls, t.balls);
            b.add_edge_by_name(&s.name(), &t.name(), Some(&label))?;
        }
    }
    b.set_initial(b.vertex("A0")?);
    let g = b.build()?;
    let lab = g.labeling()?;
    let desc = DescriptionOrder::for_game(BuiltinOrder::NimMod3, &g)
        .map_err(|e| GenError::Degenerate(e.to_string()))?;
    let order = TableOrder::from_order(&g, &desc);
    Ok((g, order, lab))
}

/// Nim as an implicit game. Successor lists match [`gen_nim`] exactly.
#[derive(Clone, Copy, Debug)]
pub struct NimArena {
    pub spec: NimSpec,
}

impl NimArena {
    pub fn new(n: u32) -> Self {
        NimArena { spec: NimSpec::new(n) }
    }

    pub fn from_spec(spec: NimSpec) -> Self {
        NimArena { spec }
    }
}

impl GameGraph for NimArena {
    type Vertex = NimState;

    fn initial(&self) -> NimState {
        NimState { owner: Player::A, balls: 0 }
    }
    fn owner(&self, v: &NimState) -> Player {
        v.owner
    }
    fn is_bad(&self, v: &NimState) -> bool {
        nim_bad(self.spec.n, *v)
    }
    fn successors(&self, v: &NimState) -> Vec<NimState> {
        nim_successors(&self.spec, *v)
    }
    fn vertex_name(&self, v: &NimState) -> String {
        v.name()
    }
}

impl PartialOrder<NimState> for NimMod3 {
    fn ge(&self, a: &NimState, b: &NimState) -> bool {
        nim_mod3_ge((a.owner, a.balls as u64), (b.owner, b.balls as u64))
    }
}

/// The three strategy tables drawn next to the eight-ball game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fig1Table {
    /// A winning total strategy.
    A,
    /// A winning ⋆-strategy of size 5.
    B,
    /// A `⊵₀`-winning ⋆-strategy of size 2.
    C,
}

/// The given table as a strategy on `gen_nim(&NimSpec::fig1())`.
pub fn fig1_strategy(g: &SafetyGame, table: Fig1Table) -> StarStrategy {
    let rows: &[(&str, &str)] = match table {
        Fig1Table::A => &[
            ("A0", "B1"),
            ("A2", "B4"),
            ("A3", "B4"),
            ("A4", "B5"),
            ("A5", "B7"),
            ("A6", "B7"),
            ("A7", "B8"),
        ],
        Fig1Table::B => &[("A0", "B1"), ("A2", "B4"), ("A3", "B4"), ("A5", "B7"), ("A6", "B7")],
        Fig1Table::C => &[("A5", "B7"), ("A6", "B7")],
    };
    rows.iter().map(|(v, w)| (g.v(v), g.v(w))).collect()
}
