//! ⋆-strategies: partial memoryless strategies where unmapped A-vertices are
//! "don't care", together with their winning checks.
//!
//! A plain (total) strategy is represented by the same type with every
//! relevant A-vertex mapped.

mod file;

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::arena::{ArenaError, ParseError, Player, SafetyGame, VertexId};
use crate::order::{max_antichain, PartialOrder};

pub use file::{parse_strategy, write_strategy};

/// Partial map from A-vertices to chosen successors. Its size is the number
/// of mapped vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarStrategy<V = VertexId> {
    map: BTreeMap<V, V>,
}

impl<V: Ord> Default for StarStrategy<V> {
    fn default() -> Self {
        StarStrategy { map: BTreeMap::new() }
    }
}

impl<V: Ord + Clone> StarStrategy<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: V, w: V) -> Option<V> {
        self.map.insert(v, w)
    }

    pub fn get<Q: Borrow<V>>(&self, v: Q) -> Option<V> {
        self.map.get(v.borrow()).cloned()
    }

    pub fn contains<Q: Borrow<V>>(&self, v: Q) -> bool {
        self.map.contains_key(v.borrow())
    }

    /// Support entries in key order.
    pub fn iter(&self) -> std::collections::btree_map::Iter<'_, V, V> {
        self.map.iter()
    }

    pub fn support(&self) -> BTreeSet<V> {
        self.map.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<V, V> {
        &self.map
    }
}

impl<V: Ord> FromIterator<(V, V)> for StarStrategy<V> {
    fn from_iter<T: IntoIterator<Item = (V, V)>>(iter: T) -> Self {
        StarStrategy {
            map: iter.into_iter().collect(),
        }
    }
}

impl<V: Ord> IntoIterator for StarStrategy<V> {
    type Item = (V, V);
    type IntoIter = std::collections::btree_map::IntoIter<V, V>;
    fn into_iter(self) -> Self::IntoIter {
        self.map.into_iter()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error(transparent)]
    Arena(#[from] ArenaError),
    #[error("strategy makes no choice at reachable A-vertex `{0}`")]
    Incomplete(String),
    #[error("more than {limit} concretisations")]
    TooManyConcretisations { limit: u128 },
    #[error("strategy is not winning")]
    NotWinning,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Outcome of [`is_order_winning_star`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderVerdict {
    /// Every ⊵-concretisation is winning.
    Winning,
    /// Some ⊵-concretisation reaches a bad vertex (or an A-owned dead end).
    NotWinning,
    /// A reachable A-vertex has successors, but none that a ⊵-concretisation
    /// may pick, so no ⊵-concretisation exists.
    NoConcretisation { vertex: String },
}

impl OrderVerdict {
    pub fn is_winning(&self) -> bool {
        *self == OrderVerdict::Winning
    }
}

/// Which Proposition-style hypothesis a candidate support fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportFailure {
    /// (i) a vertex of `S ∪ σ(S)` is bad.
    BadVertex(String),
    /// (ii) the initial vertex is not dominated by `S`.
    InitialNotCovered,
    /// (iii) a successor of `σ(S)` is not dominated by `S`.
    SuccessorNotCovered { from: String, successor: String },
    /// `σ` makes no choice at a vertex of `S`.
    Undefined(String),
}

/// `σ|_S`.
pub fn restrict(sigma: &StarStrategy, s: &BTreeSet<VertexId>) -> StarStrategy {
    sigma
        .iter()
        .filter(|(v, _)| s.contains(v))
        .map(|(&v, &w)| (v, w))
        .collect()
}

fn check_support(g: &SafetyGame, s: &StarStrategy) -> Result<(), ArenaError> {
    for (&v, &w) in s.iter() {
        if v.index() >= g.num_vertices() || w.index() >= g.num_vertices() {
            return Err(ArenaError::InvalidVertex(if v.index() >= g.num_vertices() { v } else { w }));
        }
        if g.owner(v) != Player::A {
            return Err(ArenaError::StrategyOnBVertex(g.name_of(v).to_string()));
        }
        if !g.has_edge(v, w) {
            return Err(ArenaError::InvalidStrategy(
                g.name_of(v).to_string(),
                g.name_of(w).to_string(),
            ));
        }
    }
    Ok(())
}

/// Reachability from the initial vertex where each A-vertex may only move to
/// `allowed(v)`. Returns the first bad vertex or A-owned dead end reached,
/// and the first A-vertex (with successors) whose allowed set is empty.
fn explore(
    g: &SafetyGame,
    mut allowed: impl FnMut(VertexId) -> Vec<VertexId>,
) -> (Option<VertexId>, Option<VertexId>) {
    let mut seen = vec![false; g.num_vertices()];
    let mut queue = VecDeque::from([g.initial()]);
    seen[g.initial().index()] = true;
    let mut stuck = None;
    while let Some(v) = queue.pop_front() {
        if g.is_bad(v) || (g.owner(v) == Player::A && g.succ(v).is_empty()) {
            return (Some(v), stuck);
        }
        let next = match g.owner(v) {
            Player::A => allowed(v),
            Player::B => g.succ(v).to_vec(),
        };
        if next.is_empty() && stuck.is_none() {
            stuck = Some(v);
        }
        for w in next {
            if !seen[w.index()] {
                seen[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    (None, stuck)
}

/// A plain strategy is winning iff no bad vertex is reachable in `G_σ`.
/// Every reachable A-vertex with successors must have a choice.
pub fn is_winning_total(g: &SafetyGame, sigma: &StarStrategy) -> Result<bool, StrategyError> {
    check_support(g, sigma)?;
    let (lost, stuck) = explore(g, |v| sigma.get(v).into_iter().collect());
    match (lost, stuck) {
        (Some(_), _) => Ok(false),
        (None, Some(v)) => Err(StrategyError::Incomplete(g.name_of(v).to_string())),
        (None, None) => Ok(true),
    }
}

/// A ⋆-strategy is winning iff no bad vertex is reachable once supported
/// A-vertices keep only their chosen edge. A reachable A-owned dead end also
/// counts as a loss.
pub fn is_winning_star(g: &SafetyGame, s: &StarStrategy) -> Result<bool, ArenaError> {
    check_support(g, s)?;
    let (lost, _) = explore(g, |v| match s.get(v) {
        Some(w) => vec![w],
        None => g.succ(v).to_vec(),
    });
    Ok(lost.is_none())
}

/// The successors a ⊵-concretisation may pick at A-vertex `v`.
pub fn order_allowed_successors<O: PartialOrder<VertexId> + ?Sized>(
    g: &SafetyGame,
    s: &StarStrategy,
    o: &O,
    v: VertexId,
) -> Vec<VertexId> {
    if let Some(w) = s.get(v) {
        return vec![w];
    }
    let dominating: Vec<VertexId> = s
        .iter()
        .filter(|(&vb, _)| o.ge(&vb, &v))
        .map(|(_, &w)| w)
        .collect();
    if dominating.is_empty() {
        return g.succ(v).to_vec();
    }
    g.succ(v)
        .iter()
        .copied()
        .filter(|w| dominating.iter().any(|c| o.ge(c, w)))
        .collect()
}

pub fn is_order_winning_star<O: PartialOrder<VertexId> + ?Sized>(
    g: &SafetyGame,
    s: &StarStrategy,
    o: &O,
) -> Result<OrderVerdict, ArenaError> {
    check_support(g, s)?;
    let (lost, stuck) = explore(g, |v| order_allowed_successors(g, s, o, v));
    Ok(match (lost, stuck) {
        (Some(_), _) => OrderVerdict::NotWinning,
        (None, Some(v)) => OrderVerdict::NoConcretisation {
            vertex: g.name_of(v).to_string(),
        },
        (None, None) => OrderVerdict::Winning,
    })
}

/// All total strategies picking an allowed successor at every A-vertex that
/// has successors. Fails once the count would exceed `limit`.
pub fn enumerate_order_concretisations<O: PartialOrder<VertexId> + ?Sized>(
    g: &SafetyGame,
    s: &StarStrategy,
    o: &O,
    limit: u128,
) -> Result<Vec<StarStrategy>, StrategyError> {
    check_support(g, s)?;
    let choices: Vec<(VertexId, Vec<VertexId>)> = g
        .vertices_of(Player::A)
        .filter(|&v| !g.succ(v).is_empty())
        .map(|v| (v, order_allowed_successors(g, s, o, v)))
        .collect();
    let mut total: u128 = 1;
    for (_, c) in &choices {
        total = total.saturating_mul(c.len() as u128);
        if total > limit {
            return Err(StrategyError::TooManyConcretisations { limit });
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; choices.len()];
    if total == 0 {
        return Ok(out);
    }
    loop {
        out.push(choices.iter().zip(&idx).map(|((v, c), &i)| (*v, c[i])).collect());
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < choices[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Checks the three hypotheses under which `σ|_S` is ⊵-winning: `S ∪ σ(S)`
/// avoids `Bad`, `I ∈ ↓S`, and `Succ(σ(S)) ⊆ ↓S`. An empty result means all
/// hold.
pub fn check_proposition_support<O: PartialOrder<VertexId> + ?Sized>(
    g: &SafetyGame,
    sigma: &StarStrategy,
    s_set: &BTreeSet<VertexId>,
    o: &O,
) -> Vec<SupportFailure> {
    let mut out = Vec::new();
    let covered = |x: VertexId| s_set.iter().any(|m| o.ge(m, &x));
    let mut images = Vec::new();
    for &v in s_set {
        match sigma.get(v) {
            Some(w) => images.push(w),
            None => out.push(SupportFailure::Undefined(g.name_of(v).to_string())),
        }
    }
    for &x in s_set.iter().chain(&images) {
        if g.is_bad(x) {
            out.push(SupportFailure::BadVertex(g.name_of(x).to_string()));
        }
    }
    if !covered(g.initial()) {
        out.push(SupportFailure::InitialNotCovered);
    }
    for &w in &images {
        for &x in g.succ(w) {
            if !covered(x) {
                out.push(SupportFailure::SuccessorNotCovered {
                    from: g.name_of(w).to_string(),
                    successor: g.name_of(x).to_string(),
                });
            }
        }
    }
    out
}

/// `σ|_W` with `W = ⌈Reach(G_σ) ∩ V_A⌉` for a winning plain strategy `σ`.
pub fn theorem2_support<O: PartialOrder<VertexId> + ?Sized>(
    g: &SafetyGame,
    sigma: &StarStrategy,
    o: &O,
) -> Result<StarStrategy, StrategyError> {
    if !is_winning_total(g, sigma)? {
        return Err(StrategyError::NotWinning);
    }
    let reach = g.restrict_by_strategy(sigma)?.reach(g.initial())?;
    let w = max_antichain(reach.into_iter().filter(|&v| g.owner(v) == Player::A), o);
    Ok(restrict(sigma, &w.into_iter().collect()))
}
