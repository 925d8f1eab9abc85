//! Games over bounded integer vectors ordered pointwise.
//!
//! A-vertices are plain vectors. B-vertices remember which A-move produced
//! them, so every A-move leads to its own successor and the move-name
//! labeling is A-deterministic. B-edges all carry the label `env`.

use std::collections::{HashMap, VecDeque};

use crate::arena::{GameBuilder, GameGraph, Labeling, Player, SafetyGame, VertexId};
use crate::order::{BuiltinOrder, DescriptionOrder, PartialOrder, Pointwise, TableOrder};

use super::GenError;

/// Label shared by all B-edges.
pub const ENV_LABEL: &str = "env";

#[derive(Clone, Debug)]
pub enum MoveFn {
    /// Adds the offsets and clamps each coordinate to `[0, bound]`.
    Delta(Vec<i64>),
    /// Arbitrary map; checked for monotonicity by [`VectorGameSpec::validate`].
    Map(fn(&[u32], u32) -> Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct VecMove {
    pub name: String,
    pub apply: MoveFn,
}

impl VecMove {
    pub fn delta(name: impl Into<String>, d: Vec<i64>) -> Self {
        VecMove {
            name: name.into(),
            apply: MoveFn::Delta(d),
        }
    }

    fn eval(&self, v: &[u32], bound: u32) -> Vec<u32> {
        match &self.apply {
            MoveFn::Delta(d) => v
                .iter()
                .zip(d)
                .map(|(&x, &dx)| (x as i64 + dx).clamp(0, bound as i64) as u32)
                .collect(),
            MoveFn::Map(f) => f(v, bound),
        }
    }
}

#[derive(Clone, Debug)]
pub enum BadRule {
    /// Some coordinate equals the bound.
    AnyAtBound,
    Never,
    Custom(fn(&[u32], u32) -> bool),
}

impl BadRule {
    fn eval(&self, v: &[u32], bound: u32) -> bool {
        match self {
            BadRule::AnyAtBound => v.contains(&bound),
            BadRule::Never => false,
            BadRule::Custom(f) => f(v, bound),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VectorGameSpec {
    pub dims: usize,
    pub bound: u32,
    pub a_moves: Vec<VecMove>,
    pub b_moves: Vec<VecMove>,
    pub bad: BadRule,
}

const MAX_VECTORS: u64 = 1 << 16;

impl VectorGameSpec {
    /// A holds or decrements one coordinate, B increments one coordinate,
    /// and a coordinate at the bound is bad.
    pub fn new(dims: usize, bound: u32) -> Self {
        let unit = |i: usize, s: i64| (0..dims).map(|j| if i == j { s } else { 0 }).collect();
        let mut a_moves = vec![VecMove::delta("hold", vec![0; dims])];
        a_moves.extend((0..dims).map(|i| VecMove::delta(format!("dec{i}"), unit(i, -1))));
        let b_moves = (0..dims).map(|i| VecMove::delta(format!("inc{i}"), unit(i, 1))).collect();
        VectorGameSpec {
            dims,
            bound,
            a_moves,
            b_moves,
            bad: BadRule::AnyAtBound,
        }
    }

    pub fn without_bad(mut self) -> Self {
        self.bad = BadRule::Never;
        self
    }

    fn all_vectors(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.dims {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=self.bound).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Checks sizes, move shapes, monotonicity of every move and upward
    /// closure of the bad predicate by exhaustive enumeration.
    pub fn validate(&self) -> Result<(), GenError> {
        if self.dims == 0 || self.bound == 0 {
            return Err(GenError::Degenerate("dims and bound must be positive".into()));
        }
        let count = (self.bound as u64 + 1).checked_pow(self.dims as u32);
        if count.is_none_or(|c| c > MAX_VECTORS) {
            return Err(GenError::Degenerate(format!(
                "{}^{} vectors exceed the enumeration limit",
                self.bound + 1,
                self.dims
            )));
        }
        if self.a_moves.is_empty() || self.b_moves.is_empty() {
            return Err(GenError::Degenerate("both players need at least one move".into()));
        }
        let mut names: Vec<&str> = self.a_moves.iter().map(|m| m.name.as_str()).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) || names.iter().any(|n| n.is_empty() || n.contains(char::is_whitespace)) {
            return Err(GenError::Degenerate("A-move names must be distinct single tokens".into()));
        }
        for m in self.a_moves.iter().chain(&self.b_moves) {
            if let MoveFn::Delta(d) = &m.apply {
                if d.len() != self.dims {
                    return Err(GenError::Degenerate(format!("move `{}` has the wrong arity", m.name)));
                }
            }
        }
        let all = self.all_vectors();
        let ge = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x >= y);
        let show = |v: &[u32]| format!("{v:?}");
        for m in self.a_moves.iter().chain(&self.b_moves) {
            let images: Vec<Vec<u32>> = all.iter().map(|v| m.eval(v, self.bound)).collect();
            for (v, w) in all.iter().zip(&images) {
                if w.len() != self.dims || w.iter().any(|&x| x > self.bound) {
                    return Err(GenError::NonMonotone {
                        name: m.name.clone(),
                        detail: format!("{} maps outside the box", show(v)),
                    });
                }
            }
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    if ge(a, b) && !ge(&images[i], &images[j]) {
                        return Err(GenError::NonMonotone {
                            name: m.name.clone(),
                            detail: format!("{} >= {} but not their images", show(a), show(b)),
                        });
                    }
                }
            }
        }
        for a in &all {
            for b in &all {
                if ge(a, b) && self.bad.eval(b, self.bound) && !self.bad.eval(a, self.bound) {
                    return Err(GenError::BadNotUpward(format!("{} is bad, {} is not", show(b), show(a))));
                }
            }
        }
        Ok(())
    }
}

/// A vertex of a vector game. `tag` indexes the A-move that produced a
/// B-vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecState {
    pub owner: Player,
    pub coords: Vec<u32>,
    pub tag: Option<usize>,
}

/// A vector game explored on demand from the zero vector.
#[derive(Clone, Debug)]
pub struct VectorArena {
    spec: VectorGameSpec,
}

impl VectorArena {
    pub fn new(spec: VectorGameSpec) -> Result<Self, GenError> {
        spec.validate()?;
        Ok(VectorArena { spec })
    }

    pub fn spec(&self) -> &VectorGameSpec {
        &self.spec
    }

    fn label(&self, v: &VecState, w: &VecState) -> String {
        match (v.owner, w.tag) {
            (Player::A, Some(t)) => self.spec.a_moves[t].name.clone(),
            _ => ENV_LABEL.to_string(),
        }
    }
}

impl GameGraph for VectorArena {
    type Vertex = VecState;

    fn initial(&self) -> VecState {
        VecState {
            owner: Player::A,
            coords: vec![0; self.spec.dims],
            tag: None,
        }
    }
    fn owner(&self, v: &VecState) -> Player {
        v.owner
    }
    fn is_bad(&self, v: &VecState) -> bool {
        self.spec.bad.eval(&v.coords, self.spec.bound)
    }
    fn successors(&self, v: &VecState) -> Vec<VecState> {
        let bound = self.spec.bound;
        match v.owner {
            Player::A => self
                .spec
                .a_moves
                .iter()
                .enumerate()
                .map(|(t, m)| VecState {
                    owner: Player::B,
                    coords: m.eval(&v.coords, bound),
                    tag: Some(t),
                })
                .collect(),
            Player::B => {
                let mut out: Vec<VecState> = Vec::new();
                for m in &self.spec.b_moves {
                    let w = VecState {
                        owner: Player::A,
                        coords: m.eval(&v.coords, bound),
                        tag: None,
                    };
                    if !out.contains(&w) {
                        out.push(w);
                    }
                }
                out
            }
        }
    }
    fn vertex_name(&self, v: &VecState) -> String {
        let coords: String = v.coords.iter().map(|x| format!("_{x}")).collect();
        match v.tag {
            Some(t) => format!("{}{}@{}", v.owner, coords, self.spec.a_moves[t].name),
            None => format!("{}{}", v.owner, coords),
        }
    }
}

impl PartialOrder<VecState> for Pointwise {
    fn ge(&self, a: &VecState, b: &VecState) -> bool {
        a.owner == b.owner
            && a.tag == b.tag
            && a.coords.len() == b.coords.len()
            && a.coords.iter().zip(&b.coords).all(|(x, y)| x >= y)
    }
}

/// The reachable part of the vector game, its pointwise order and the
/// move-name labeling (also stored on the edges).
pub fn gen_vector(spec: &VectorGameSpec) -> Result<(SafetyGame, TableOrder, Labeling), GenError> {
    let arena = VectorArena::new(spec.clone())?;
    let mut b = GameBuilder::new(format!("vector-d{}-b{}", spec.dims, spec.bound));
    let mut ids: HashMap<VecState, VertexId> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([arena.initial()]);
    while let Some(v) = queue.pop_front() {
        if ids.contains_key(&v) {
            continue;
        }
        let id = b.add_vertex(arena.vertex_name(&v), v.owner, arena.is_bad(&v))?;
        ids.insert(v.clone(), id);
        order.push(v.clone());
        queue.extend(arena.successors(&v).into_iter().filter(|w| !ids.contains_key(w)));
    }
    for v in &order {
        for w in arena.successors(v) {
            b.add_edge(ids[v], ids[&w], Some(arena.label(v, &w)))?;
        }
    }
    b.set_initial(ids[&arena.initial()]);
    let g = b.build()?;
    let lab = g.labeling()?;
    let desc = DescriptionOrder::for_game(BuiltinOrder::Pointwise, &g)
        .map_err(|e| GenError::Degenerate(e.to_string()))?;
    let o = TableOrder::from_order(&g, &desc);
    Ok((g, o, lab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::materialize;
    use crate::order::{
        check_a_deterministic, check_monotonic_labeling, check_partial_order, check_simulation,
        check_tba_simulation, derive_tba, TbaVerdict,
    };
    use crate::solvers::solve_attractor;

    #[test]
    fn default_spec_meets_the_criterion() {
        for (d, bound) in [(1, 2), (1, 4), (2, 3), (3, 2)] {
            let (g, o, lab) = gen_vector(&VectorGameSpec::new(d, bound)).unwrap();
            assert!(g.validate().is_empty());
            assert_eq!(check_partial_order(&o, &g), vec![]);
            assert_eq!(check_simulation(&o, &g), vec![]);
            assert!(check_a_deterministic(&g, &lab).witness().is_some());
            assert_eq!(check_monotonic_labeling(&o, &g, &lab), vec![]);
            assert!(matches!(derive_tba(&o, &g, &lab), Ok(TbaVerdict::ByCriterion { .. })));
            assert_eq!(check_tba_simulation(&o, &g), vec![]);
        }
    }

    #[test]
    fn shape_of_the_two_dimensional_game() {
        let (g, _, _) = gen_vector(&VectorGameSpec::new(2, 3)).unwrap();
        let a = g.vertices_of(Player::A).count();
        let b = g.vertices_of(Player::B).count();
        assert_eq!(a, 16);
        assert_eq!(b, 16 + 12 + 12);
        assert_eq!(g.name_of(g.initial()), "A_0_0");
        assert!(g.vertex("B_0_0@dec1").is_ok());
        assert!(g.is_bad(g.v("A_3_0")) && !g.is_bad(g.v("A_2_2")));
    }

    #[test]
    fn no_bad_means_everything_wins() {
        let (g, _, _) = gen_vector(&VectorGameSpec::new(2, 3).without_bad()).unwrap();
        assert_eq!(solve_attractor(&g).unwrap().win.len(), g.num_vertices());
    }

    #[test]
    fn explicit_matches_materialized() {
        let spec = VectorGameSpec::new(2, 2);
        let (g, _, _) = gen_vector(&spec).unwrap();
        let m = materialize(&VectorArena::new(spec).unwrap(), "m").unwrap();
        assert_eq!(m.num_vertices(), g.num_vertices());
        assert_eq!(m.num_edges(), g.num_edges());
    }

    #[test]
    fn rejects_non_monotone_moves() {
        let mut spec = VectorGameSpec::new(2, 3);
        spec.a_moves.push(VecMove {
            name: "flip".into(),
            apply: MoveFn::Map(|v, bound| v.iter().map(|x| bound - x).collect()),
        });
        assert!(matches!(gen_vector(&spec), Err(GenError::NonMonotone { .. })));
        let mut spec = VectorGameSpec::new(2, 3);
        spec.bad = BadRule::Custom(|v, _| v[0] == 0);
        assert!(matches!(gen_vector(&spec), Err(GenError::BadNotUpward(_))));
        assert!(matches!(gen_vector(&VectorGameSpec::new(0, 3)), Err(GenError::Degenerate(_))));
    }
}
