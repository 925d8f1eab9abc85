//! Partial orders over same-owner vertices, antichains, and the simulation
//! checkers.
//!
//! A [`PartialOrder`] answers `a ⊵ b`. Three kinds exist: [`Equality`],
//! built-ins computed from vertex descriptions ([`NimMod3`], [`Pointwise`]
//! and their explicit-game adapter [`DescriptionOrder`]), and pair tables
//! loaded from order files ([`TableOrder`]).

mod antichain;
mod check;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::arena::{ParseError, Player, SafetyGame, VertexId};

pub use antichain::{max_antichain, min_antichain, Antichain, AntichainMode};
pub use check::{
    check_a_deterministic, check_monotonic_labeling, check_partial_order, check_simulation,
    check_tba_simulation, derive_tba, ADeterminism, DeriveError, LabelingViolation,
    OrderViolation, SimulationViolation, TbaVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// `ge(a, b)` holds iff `a ⊵ b`.
pub trait PartialOrder<V> {
    fn ge(&self, a: &V, b: &V) -> bool;

    fn compare(&self, a: &V, b: &V) -> Comparison
    where
        V: PartialEq,
    {
        if a == b {
            return Comparison::Equal;
        }
        match (self.ge(a, b), self.ge(b, a)) {
            (true, false) => Comparison::Greater,
            (false, true) => Comparison::Less,
            // Both directions on distinct elements break antisymmetry; report
            // it as incomparable and let check_partial_order flag it.
            _ => Comparison::Incomparable,
        }
    }
}

impl<V, O: PartialOrder<V> + ?Sized> PartialOrder<V> for &O {
    fn ge(&self, a: &V, b: &V) -> bool {
        (**self).ge(a, b)
    }
}

impl<V, O: PartialOrder<V> + ?Sized> PartialOrder<V> for Box<O> {
    fn ge(&self, a: &V, b: &V) -> bool {
        (**self).ge(a, b)
    }
}

/// The identity relation. Every game admits it as a tba-simulation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Equality;

impl<V: PartialEq> PartialOrder<V> for Equality {
    fn ge(&self, a: &V, b: &V) -> bool {
        a == b
    }
}

/// Urn-filling order `⊵₀`: same owner, at least as many balls, same residue
/// modulo 3.
#[derive(Clone, Copy, Debug, Default)]
pub struct NimMod3;

pub fn nim_mod3_ge(a: (Player, u64), b: (Player, u64)) -> bool {
    a.0 == b.0 && a.1 >= b.1 && a.1 % 3 == b.1 % 3
}

/// Same owner, same tag, coordinate-wise `>=`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pointwise;

pub fn pointwise_ge(a: &VertexKey, b: &VertexKey) -> bool {
    a.owner == b.owner
        && a.tag == b.tag
        && a.coords.len() == b.coords.len()
        && a.coords.iter().zip(&b.coords).all(|(x, y)| x >= y)
}

/// A vertex description recovered from its name: owner letter, numeric
/// coordinates and an optional tag. `A5` is `(A, [5])`; `B_1_0@dec1` is
/// `(B, [1, 0], "dec1")`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexKey {
    pub owner: Player,
    pub coords: Vec<u64>,
    pub tag: Option<String>,
}

impl VertexKey {
    pub fn parse(name: &str) -> Option<VertexKey> {
        let (body, tag) = match name.split_once('@') {
            Some((b, t)) if !t.is_empty() => (b, Some(t.to_string())),
            Some(_) => return None,
            None => (name, None),
        };
        let owner = match body.chars().next()? {
            'A' => Player::A,
            'B' => Player::B,
            _ => return None,
        };
        let rest = &body[1..];
        let coords = if let Some(list) = rest.strip_prefix('_') {
            list.split('_').map(|c| c.parse().ok()).collect::<Option<Vec<_>>>()?
        } else {
            vec![rest.parse().ok()?]
        };
        Some(VertexKey { owner, coords, tag })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinOrder {
    NimMod3,
    Pointwise,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("vertex `{name}` has no description usable by the {order} order")]
    Undescribed { name: String, order: &'static str },
    #[error("vertex `{name}` is owned by {actual} but its description says {described}")]
    OwnerMismatch {
        name: String,
        actual: Player,
        described: Player,
    },
    #[error("order is not antisymmetric: `{0}` and `{1}` dominate each other")]
    NotAntisymmetric(String, String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown order `{0}` (expected nim-mod3, vector, equality or file:<path>)")]
    UnknownOrder(String),
}

/// A built-in order evaluated on the names of an explicit game's vertices.
#[derive(Clone, Debug)]
pub struct DescriptionOrder {
    kind: BuiltinOrder,
    keys: Vec<VertexKey>,
}

impl DescriptionOrder {
    pub fn for_game(kind: BuiltinOrder, g: &SafetyGame) -> Result<Self, OrderError> {
        let label = match kind {
            BuiltinOrder::NimMod3 => "nim-mod3",
            BuiltinOrder::Pointwise => "vector",
        };
        let mut keys = Vec::with_capacity(g.num_vertices());
        for v in g.vertex_ids() {
            let name = g.name_of(v);
            let key = VertexKey::parse(name)
                .filter(|k| kind != BuiltinOrder::NimMod3 || (k.coords.len() == 1 && k.tag.is_none()))
                .ok_or_else(|| OrderError::Undescribed {
                    name: name.to_string(),
                    order: label,
                })?;
            if key.owner != g.owner(v) {
                return Err(OrderError::OwnerMismatch {
                    name: name.to_string(),
                    actual: g.owner(v),
                    described: key.owner,
                });
            }
            keys.push(key);
        }
        Ok(DescriptionOrder { kind, keys })
    }
}

impl PartialOrder<VertexId> for DescriptionOrder {
    fn ge(&self, a: &VertexId, b: &VertexId) -> bool {
        let (ka, kb) = (&self.keys[a.index()], &self.keys[b.index()]);
        match self.kind {
            BuiltinOrder::NimMod3 => nim_mod3_ge((ka.owner, ka.coords[0]), (kb.owner, kb.coords[0])),
            BuiltinOrder::Pointwise => pointwise_ge(ka, kb),
        }
    }
}

/// Explicit relation over the dense ids of one game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOrder {
    n: usize,
    rel: Vec<bool>,
}

impl TableOrder {
    /// Stores exactly the given pairs plus nothing else, not even
    /// reflexivity. Meant for building deliberately broken relations.
    pub fn raw(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut rel = vec![false; n * n];
        for (a, b) in pairs {
            rel[a.index() * n + b.index()] = true;
        }
        TableOrder { n, rel }
    }

    /// Reflexive-transitive closure of `pairs`; fails on antisymmetry
    /// violations.
    pub fn closed(
        g: &SafetyGame,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, OrderError> {
        let n = g.num_vertices();
        let mut t = TableOrder::raw(n, pairs);
        for i in 0..n {
            t.rel[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if t.rel[i * n + k] {
                    for j in 0..n {
                        if t.rel[k * n + j] {
                            t.rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if t.rel[i * n + j] && t.rel[j * n + i] {
                    return Err(OrderError::NotAntisymmetric(
                        g.name_of(VertexId(i as u32)).to_string(),
                        g.name_of(VertexId(j as u32)).to_string(),
                    ));
                }
            }
        }
        Ok(t)
    }

    /// Materializes any order over the vertices of `g`.
    pub fn from_order(g: &SafetyGame, o: &dyn PartialOrder<VertexId>) -> Self {
        let n = g.num_vertices();
        let pairs = g
            .vertex_ids()
            .flat_map(|a| g.vertex_ids().map(move |b| (a, b)))
            .filter(|(a, b)| o.ge(a, b));
        TableOrder::raw(n, pairs.collect::<Vec<_>>())
    }

    /// Non-reflexive pairs in id order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n)
                .filter(move |&j| i != j && self.rel[i * self.n + j])
                .map(move |j| (VertexId(i as u32), VertexId(j as u32)))
        })
    }
}

impl PartialOrder<VertexId> for TableOrder {
    fn ge(&self, a: &VertexId, b: &VertexId) -> bool {
        let (i, j) = (a.index(), b.index());
        i < self.n && j < self.n && self.rel[i * self.n + j]
    }
}

/// Parses an order file (`ge <v1> <v2>` lines) against `g` and closes it.
pub fn parse_order(input: &str, g: &SafetyGame) -> Result<TableOrder, OrderError> {
    let mut pairs = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let toks = crate::arena::text_tokens(raw);
        match toks.as_slice() {
            [] => {}
            ["ge", a, b] => {
                let lookup = |n: &str| {
                    g.vertex(n)
                        .map_err(|e| ParseError::new(i + 1, e.to_string()))
                };
                pairs.push((lookup(a)?, lookup(b)?));
            }
            _ => return Err(ParseError::new(i + 1, "expected `ge <v1> <v2>`").into()),
        }
    }
    TableOrder::closed(g, pairs)
}

/// Emits every non-reflexive pair of `o` on `g`, in id order.
pub fn write_order(g: &SafetyGame, o: &dyn PartialOrder<VertexId>) -> String {
    let mut out = String::new();
    for (a, b) in TableOrder::from_order(g, o).pairs() {
        writeln!(out, "ge {} {}", g.name_of(a), g.name_of(b)).unwrap();
    }
    out
}

/// Resolves a CLI order spec: `nim-mod3`, `vector`, `equality` or
/// `file:<path>`.
pub fn order_from_spec(
    spec: &str,
    g: &SafetyGame,
) -> Result<Box<dyn PartialOrder<VertexId> + Send + Sync>, anyhow::Error> {
    Ok(match spec {
        "equality" => Box::new(Equality),
        "nim-mod3" => Box::new(DescriptionOrder::for_game(BuiltinOrder::NimMod3, g)?),
        "vector" => Box::new(DescriptionOrder::for_game(BuiltinOrder::Pointwise, g)?),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| anyhow::anyhow!("cannot read order file {path}: {e}"))?;
                Box::new(parse_order(&text, g)?)
            }
            None => return Err(OrderError::UnknownOrder(other.to_string()).into()),
        },
    })
}

/// `↓S` restricted to a finite universe.
pub fn down_closure<V: Clone + Ord>(
    set: &BTreeSet<V>,
    universe: impl IntoIterator<Item = V>,
    o: &dyn PartialOrder<V>,
) -> BTreeSet<V> {
    universe
        .into_iter()
        .filter(|v| set.iter().any(|s| o.ge(s, v)))
        .collect()
}

/// `↑S` restricted to a finite universe.
pub fn up_closure<V: Clone + Ord>(
    set: &BTreeSet<V>,
    universe: impl IntoIterator<Item = V>,
    o: &dyn PartialOrder<V>,
) -> BTreeSet<V> {
    universe
        .into_iter()
        .filter(|v| set.iter().any(|s| o.ge(v, s)))
        .collect()
}
