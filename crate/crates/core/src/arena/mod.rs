//! Finite turn-based safety games.
//!
//! Two representations live here. [`SafetyGame`] is the explicit arena: every
//! vertex is interned to a dense [`VertexId`] and successor lists are stored in
//! insertion order. Implicit games only implement [`GameGraph`], which exposes
//! the initial vertex, ownership, the bad predicate and a successor generator;
//! the on-the-fly solvers never need more than that.

mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::strategy::StarStrategy;

pub use text::{parse_game, write_game, ParseError};
pub(crate) use text::tokens as text_tokens;

/// Dense handle for a vertex of an explicit game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    A,
    B,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::A => f.write_str("A"),
            Player::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArenaError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid vertex id {0}")]
    InvalidVertex(VertexId),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("vertex names must be non-empty and contain no whitespace: `{0}`")]
    BadVertexName(String),
    #[error("game has no initial vertex")]
    MissingInitial,
    #[error("strategy maps `{0}` to `{1}`, which is not an edge")]
    InvalidStrategy(String, String),
    #[error("strategy support contains `{0}`, which is not an A-vertex")]
    StrategyOnBVertex(String),
    #[error("unknown label `{0}`")]
    UnknownSymbol(String),
    #[error("edge {0} -> {1} carries no label")]
    UnlabeledEdge(String, String),
    #[error("operation needs an explicit game")]
    NotExplicit,
}

/// The interface the on-the-fly solvers consume.
///
/// Successor lists must be duplicate-free and deterministic for a fixed game;
/// solvers process them in the order returned.
pub trait GameGraph {
    type Vertex: Clone + Eq + Hash + Ord + fmt::Debug;

    fn initial(&self) -> Self::Vertex;
    fn owner(&self, v: &Self::Vertex) -> Player;
    fn is_bad(&self, v: &Self::Vertex) -> bool;
    fn successors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;
    fn vertex_name(&self, v: &Self::Vertex) -> String;

    /// Full vertex enumeration; `None` for implicit games.
    fn vertices(&self) -> Option<Vec<Self::Vertex>> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub label: Option<String>,
}

/// Explicit safety game `(V_A, V_B, E, I, Bad)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SafetyGame {
    name: String,
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    owners: Vec<Player>,
    bad: Vec<bool>,
    succ: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    initial: VertexId,
}

/// Incremental construction of a [`SafetyGame`].
///
/// The builder accepts structurally odd games (A-to-A edges, a B-owned
/// initial vertex) so that [`SafetyGame::validate`] can report them.
#[derive(Debug, Default)]
pub struct GameBuilder {
    name: String,
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    owners: Vec<Player>,
    bad: Vec<bool>,
    succ: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    initial: Option<VertexId>,
}

impl GameBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        GameBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn add_vertex(
        &mut self,
        name: impl Into<String>,
        owner: Player,
        bad: bool,
    ) -> Result<VertexId, ArenaError> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(ArenaError::BadVertexName(name));
        }
        if self.index.contains_key(&name) {
            return Err(ArenaError::DuplicateVertex(name));
        }
        let id = VertexId(self.names.len() as u32);
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.owners.push(owner);
        self.bad.push(bad);
        self.succ.push(Vec::new());
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, ArenaError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ArenaError::UnknownVertex(name.to_string()))
    }

    pub fn add_edge(
        &mut self,
        src: VertexId,
        dst: VertexId,
        label: Option<String>,
    ) -> Result<(), ArenaError> {
        for v in [src, dst] {
            if v.index() >= self.names.len() {
                return Err(ArenaError::InvalidVertex(v));
            }
        }
        if self.succ[src.index()].contains(&dst) {
            return Err(ArenaError::DuplicateEdge(
                self.names[src.index()].clone(),
                self.names[dst.index()].clone(),
            ));
        }
        self.succ[src.index()].push(dst);
        self.edges.push(Edge { src, dst, label });
        Ok(())
    }

    pub fn add_edge_by_name(
        &mut self,
        src: &str,
        dst: &str,
        label: Option<&str>,
    ) -> Result<(), ArenaError> {
        let s = self.vertex(src)?;
        let d = self.vertex(dst)?;
        self.add_edge(s, d, label.map(str::to_string))
    }

    pub fn set_initial(&mut self, v: VertexId) {
        self.initial = Some(v);
    }

    pub fn has_initial(&self) -> bool {
        self.initial.is_some()
    }

    pub fn build(self) -> Result<SafetyGame, ArenaError> {
        let initial = self.initial.ok_or(ArenaError::MissingInitial)?;
        Ok(SafetyGame {
            name: self.name,
            names: self.names,
            index: self.index,
            owners: self.owners,
            bad: self.bad,
            succ: self.succ,
            edges: self.edges,
            initial,
        })
    }
}

/// A structural problem found by [`SafetyGame::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotBipartite { src: String, dst: String },
    InitialNotOwnedByA { initial: String },
    DuplicateName { name: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBipartite { src, dst } => {
                write!(f, "edge {src} -> {dst} joins two vertices of the same owner")
            }
            Violation::InitialNotOwnedByA { initial } => {
                write!(f, "initial vertex {initial} is not owned by A")
            }
            Violation::DuplicateName { name } => write!(f, "vertex name {name} is not unique"),
        }
    }
}

impl SafetyGame {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn initial(&self) -> VertexId {
        self.initial
    }

    pub fn owner(&self, v: VertexId) -> Player {
        self.owners[v.index()]
    }

    pub fn is_bad(&self, v: VertexId) -> bool {
        self.bad[v.index()]
    }

    pub fn name_of(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, ArenaError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ArenaError::UnknownVertex(name.to_string()))
    }

    /// Shorthand for tests and fixtures; panics on unknown names.
    pub fn v(&self, name: &str) -> VertexId {
        self.vertex(name)
            .unwrap_or_else(|_| panic!("no vertex named {name} in {}", self.name))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn bad_vertices(&self) -> BTreeSet<VertexId> {
        self.vertex_ids().filter(|&v| self.is_bad(v)).collect()
    }

    pub fn vertices_of(&self, player: Player) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_ids().filter(move |&v| self.owner(v) == player)
    }

    /// `Succ(v)`, in insertion order.
    pub fn succ(&self, v: VertexId) -> &[VertexId] {
        &self.succ[v.index()]
    }

    pub fn try_succ(&self, v: VertexId) -> Result<&[VertexId], ArenaError> {
        self.succ
            .get(v.index())
            .map(Vec::as_slice)
            .ok_or(ArenaError::InvalidVertex(v))
    }

    pub fn has_edge(&self, src: VertexId, dst: VertexId) -> bool {
        self.succ(src).contains(&dst)
    }

    /// `Reach(v)`: reflexive-transitive closure of `E` from `from`.
    pub fn reach(&self, from: VertexId) -> Result<BTreeSet<VertexId>, ArenaError> {
        self.try_succ(from)?;
        Ok(reach_by(from, |v| self.succ(v).to_vec()))
    }

    /// `G_σ`: supported A-vertices keep only their chosen edge, everything
    /// else is untouched.
    pub fn restrict_by_strategy(&self, s: &StarStrategy) -> Result<SafetyGame, ArenaError> {
        for (&v, &w) in s.iter() {
            if v.index() >= self.num_vertices() {
                return Err(ArenaError::InvalidVertex(v));
            }
            if self.owner(v) != Player::A {
                return Err(ArenaError::StrategyOnBVertex(self.name_of(v).to_string()));
            }
            if !self.has_edge(v, w) {
                return Err(ArenaError::InvalidStrategy(
                    self.name_of(v).to_string(),
                    self.name_of(w).to_string(),
                ));
            }
        }
        let mut out = self.clone();
        out.edges
            .retain(|e| s.get(e.src).is_none_or(|chosen| chosen == e.dst));
        for (&v, &w) in s.iter() {
            out.succ[v.index()] = vec![w];
        }
        Ok(out)
    }

    /// Structural checks: bipartite edges, A-owned initial vertex and unique
    /// names. An empty result means the game is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for n in &self.names {
            if !seen.insert(n) || self.index.get(n).map(|v| &self.names[v.index()]) != Some(n) {
                out.push(Violation::DuplicateName { name: n.clone() });
            }
        }
        if self.owner(self.initial) != Player::A {
            out.push(Violation::InitialNotOwnedByA {
                initial: self.name_of(self.initial).to_string(),
            });
        }
        for e in &self.edges {
            if self.owner(e.src) == self.owner(e.dst) {
                out.push(Violation::NotBipartite {
                    src: self.name_of(e.src).to_string(),
                    dst: self.name_of(e.dst).to_string(),
                });
            }
        }
        out
    }

    /// The labeling carried by the edge list, if every edge has a label.
    pub fn labeling(&self) -> Result<Labeling, ArenaError> {
        let mut lab = Labeling::default();
        for e in &self.edges {
            let l = e.label.as_ref().ok_or_else(|| {
                ArenaError::UnlabeledEdge(
                    self.name_of(e.src).to_string(),
                    self.name_of(e.dst).to_string(),
                )
            })?;
            lab.set(e.src, e.dst, l.clone());
        }
        Ok(lab)
    }

    /// Replaces all edge labels with those of `lab`.
    pub fn with_labeling(&self, lab: &Labeling) -> SafetyGame {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.label = lab.label(e.src, e.dst).map(str::to_string);
        }
        out
    }

    /// `Succ^a(v)`: the `a`-labeled successors of `v`.
    pub fn succ_by_label(
        &self,
        lab: &Labeling,
        v: VertexId,
        a: &str,
    ) -> Result<Vec<VertexId>, ArenaError> {
        if !lab.alphabet().contains(a) {
            return Err(ArenaError::UnknownSymbol(a.to_string()));
        }
        Ok(self
            .try_succ(v)?
            .iter()
            .copied()
            .filter(|&w| lab.label(v, w) == Some(a))
            .collect())
    }
}

impl GameGraph for SafetyGame {
    type Vertex = VertexId;

    fn initial(&self) -> VertexId {
        self.initial
    }
    fn owner(&self, v: &VertexId) -> Player {
        self.owners[v.index()]
    }
    fn is_bad(&self, v: &VertexId) -> bool {
        self.bad[v.index()]
    }
    fn successors(&self, v: &VertexId) -> Vec<VertexId> {
        self.succ[v.index()].clone()
    }
    fn vertex_name(&self, v: &VertexId) -> String {
        self.names[v.index()].clone()
    }
    fn vertices(&self) -> Option<Vec<VertexId>> {
        Some(self.vertex_ids().collect())
    }
}

/// Edge labeling `lab: E -> Σ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling {
    alphabet: BTreeSet<String>,
    labels: BTreeMap<(VertexId, VertexId), String>,
}

impl Labeling {
    pub fn set(&mut self, src: VertexId, dst: VertexId, label: impl Into<String>) {
        let label = label.into();
        self.alphabet.insert(label.clone());
        self.labels.insert((src, dst), label);
    }

    pub fn label(&self, src: VertexId, dst: VertexId) -> Option<&str> {
        self.labels.get(&(src, dst)).map(String::as_str)
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    /// Adds a symbol to Σ without using it on any edge.
    pub fn add_symbol(&mut self, a: impl Into<String>) {
        self.alphabet.insert(a.into());
    }
}

/// Breadth-first reachability from `from` under an arbitrary successor function.
pub(crate) fn reach_by<V, F>(from: V, mut succ: F) -> BTreeSet<V>
where
    V: Clone + Ord,
    F: FnMut(V) -> Vec<V>,
{
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        for w in succ(v) {
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Explores an implicit game from its initial vertex and builds the explicit
/// arena of everything reachable. Vertices are numbered in discovery order.
pub fn materialize<G: GameGraph>(game: &G, name: &str) -> Result<SafetyGame, ArenaError> {
    let mut b = GameBuilder::new(name);
    let mut ids: HashMap<G::Vertex, VertexId> = HashMap::new();
    let mut queue = VecDeque::new();
    let init = game.initial();
    let id = b.add_vertex(game.vertex_name(&init), game.owner(&init), game.is_bad(&init))?;
    ids.insert(init.clone(), id);
    b.set_initial(id);
    queue.push_back(init);
    let mut pending = Vec::new();
    while let Some(v) = queue.pop_front() {
        let src = ids[&v];
        for w in game.successors(&v) {
            let dst = match ids.get(&w) {
                Some(&d) => d,
                None => {
                    let d = b.add_vertex(game.vertex_name(&w), game.owner(&w), game.is_bad(&w))?;
                    ids.insert(w.clone(), d);
                    queue.push_back(w);
                    d
                }
            };
            pending.push((src, dst));
        }
    }
    for (s, d) in pending {
        b.add_edge(s, d, None)?;
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamegen::{gen_nim, NimSpec};

    fn edgeless() -> SafetyGame {
        let mut b = GameBuilder::new("single");
        let i = b.add_vertex("i", Player::A, false).unwrap();
        b.set_initial(i);
        b.build().unwrap()
    }

    #[test]
    fn succ_of_nim_initial() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        let s: Vec<_> = g.succ(g.v("A0")).iter().map(|&v| g.name_of(v)).collect();
        assert_eq!(s, ["B1", "B2"]);
    }

    #[test]
    fn edgeless_game() {
        let g = edgeless();
        assert!(g.succ(g.initial()).is_empty());
        assert_eq!(g.reach(g.initial()).unwrap(), BTreeSet::from([g.initial()]));
        assert_eq!(g.try_succ(VertexId(7)), Err(ArenaError::InvalidVertex(VertexId(7))));
    }

    #[test]
    fn nim_reach_covers_everything() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        assert_eq!(g.reach(g.initial()).unwrap().len(), 15);
    }

    #[test]
    fn restriction_by_total_and_empty_strategies() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        let empty = StarStrategy::new();
        assert_eq!(g.restrict_by_strategy(&empty).unwrap(), g);
        let total: StarStrategy = g
            .vertices_of(Player::A)
            .map(|v| (v, g.succ(v)[0]))
            .collect();
        let r = g.restrict_by_strategy(&total).unwrap();
        for v in r.vertices_of(Player::A) {
            assert_eq!(r.succ(v).len(), 1);
        }
        let bogus: StarStrategy = [(g.v("A0"), g.v("B5"))].into_iter().collect();
        assert!(matches!(
            g.restrict_by_strategy(&bogus),
            Err(ArenaError::InvalidStrategy(..))
        ));
    }

    #[test]
    fn validate_reports_constructed_violations() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        assert!(g.validate().is_empty());

        let mut b = GameBuilder::new("aa");
        let x = b.add_vertex("x", Player::A, false).unwrap();
        let y = b.add_vertex("y", Player::A, false).unwrap();
        b.add_edge(x, y, None).unwrap();
        b.set_initial(x);
        let v = b.build().unwrap().validate();
        assert_eq!(v, vec![Violation::NotBipartite { src: "x".into(), dst: "y".into() }]);

        let mut b = GameBuilder::new("binit");
        let x = b.add_vertex("x", Player::B, false).unwrap();
        b.set_initial(x);
        let v = b.build().unwrap().validate();
        assert_eq!(v, vec![Violation::InitialNotOwnedByA { initial: "x".into() }]);
    }

    #[test]
    fn builder_rejects_duplicates_and_bad_names() {
        let mut b = GameBuilder::new("d");
        b.add_vertex("x", Player::A, false).unwrap();
        assert!(matches!(b.add_vertex("x", Player::B, false), Err(ArenaError::DuplicateVertex(_))));
        assert!(matches!(b.add_vertex("a b", Player::B, false), Err(ArenaError::BadVertexName(_))));
        assert!(matches!(b.add_vertex("", Player::B, false), Err(ArenaError::BadVertexName(_))));
        let y = b.add_vertex("y", Player::B, false).unwrap();
        let x = b.vertex("x").unwrap();
        b.add_edge(x, y, None).unwrap();
        assert!(matches!(b.add_edge(x, y, None), Err(ArenaError::DuplicateEdge(..))));
    }

    #[test]
    fn label_filtering() {
        let (g, _, lab) = gen_nim(&NimSpec::fig1()).unwrap();
        let a0 = g.v("A0");
        assert_eq!(g.succ_by_label(&lab, a0, "+1").unwrap(), vec![g.v("B1")]);
        assert_eq!(g.succ_by_label(&lab, g.v("A7"), "+2").unwrap(), vec![]);
        assert!(matches!(
            g.succ_by_label(&lab, a0, "+3"),
            Err(ArenaError::UnknownSymbol(_))
        ));
    }

    #[test]
    fn materialize_matches_explicit_reach() {
        let (g, _, _) = gen_nim(&NimSpec::fig1()).unwrap();
        let m = materialize(&g, "copy").unwrap();
        assert_eq!(m.num_vertices(), 15);
        assert_eq!(m.num_edges(), g.num_edges());
    }
}
