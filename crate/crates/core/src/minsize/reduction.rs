//! CNF satisfiability to MinSizeStrat.
//!
//! Vertex names: `initA`, `initB`, `bad`, and per variable `i` the A-vertex
//! `Xi`, literal B-vertices `xiB`/`nxiB` and literal A-vertices `xiA`/`nxiA`;
//! per clause `j` the A-vertex `Cj`.

use crate::arena::{GameBuilder, Player, SafetyGame, VertexId};
use crate::strategy::{is_winning_star, StarStrategy};

use super::cnf::{lit_true, CnfFormula};
use super::MinSizeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarGadget {
    pub x: VertexId,
    pub pos_a: VertexId,
    pub neg_a: VertexId,
    pub pos_b: VertexId,
    pub neg_b: VertexId,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub formula: CnfFormula,
    pub game: SafetyGame,
    /// `2m + n`.
    pub k: usize,
    pub vars: Vec<VarGadget>,
    pub clauses: Vec<VertexId>,
    pub init_a: VertexId,
    pub init_b: VertexId,
    pub bad: VertexId,
}

impl ReductionOutput {
    /// The literal B-vertex of a signed literal.
    pub fn literal_b(&self, lit: i32) -> VertexId {
        let g = &self.vars[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            g.pos_b
        } else {
            g.neg_b
        }
    }

    fn literal_a(&self, lit: i32) -> VertexId {
        let g = &self.vars[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            g.pos_a
        } else {
            g.neg_a
        }
    }
}

pub fn reduce_sat(phi: &CnfFormula) -> ReductionOutput {
    let m = phi.num_vars() as usize;
    let n = phi.clauses().len();
    let mut b = GameBuilder::new("sat-reduction");
    let mut add = |name: String, owner: Player, bad: bool| b.add_vertex(name, owner, bad).expect("fresh name");
    let init_a = add("initA".into(), Player::A, false);
    let xs: Vec<VertexId> = (1..=m).map(|i| add(format!("X{i}"), Player::A, false)).collect();
    let lits_a: Vec<(VertexId, VertexId)> = (1..=m)
        .map(|i| (add(format!("x{i}A"), Player::A, false), add(format!("nx{i}A"), Player::A, false)))
        .collect();
    let cs: Vec<VertexId> = (1..=n).map(|j| add(format!("C{j}"), Player::A, false)).collect();
    let init_b = add("initB".into(), Player::B, false);
    let bad = add("bad".into(), Player::B, true);
    let lits_b: Vec<(VertexId, VertexId)> = (1..=m)
        .map(|i| (add(format!("x{i}B"), Player::B, false), add(format!("nx{i}B"), Player::B, false)))
        .collect();

    let mut edge = |s: VertexId, d: VertexId| {
        // Clauses may repeat a literal; the edge set ignores repeats.
        let _ = b.add_edge(s, d, None);
    };
    edge(init_a, init_b);
    for &v in xs.iter().chain(&cs) {
        edge(init_b, v);
    }
    let vars: Vec<VarGadget> = (0..m)
        .map(|i| VarGadget {
            x: xs[i],
            pos_a: lits_a[i].0,
            neg_a: lits_a[i].1,
            pos_b: lits_b[i].0,
            neg_b: lits_b[i].1,
        })
        .collect();
    for v in &vars {
        edge(v.x, v.pos_b);
        edge(v.x, v.neg_b);
        edge(v.x, bad);
        edge(v.pos_b, v.pos_a);
        edge(v.neg_b, v.neg_a);
        for la in [v.pos_a, v.neg_a] {
            edge(la, init_b);
            edge(la, bad);
        }
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        for &lit in clause {
            let v = &vars[lit.unsigned_abs() as usize - 1];
            edge(cs[j], if lit > 0 { v.pos_b } else { v.neg_b });
        }
        edge(cs[j], bad);
    }
    b.set_initial(init_a);
    ReductionOutput {
        formula: phi.clone(),
        game: b.build().expect("initial set"),
        k: 2 * m + n,
        vars,
        clauses: cs,
        init_a,
        init_b,
        bad,
    }
}

/// The ⋆-strategy built from a satisfying assignment: each `Xi` picks its
/// true literal, each clause its first true literal, each chosen literal
/// A-vertex returns to `initB`.
pub fn strategy_from_assignment(r: &ReductionOutput, a: &[bool]) -> Result<StarStrategy, MinSizeError> {
    if a.len() != r.vars.len() {
        return Err(MinSizeError::AssignmentArity {
            expected: r.vars.len(),
            got: a.len(),
        });
    }
    if !r.formula.eval(a) {
        return Err(MinSizeError::UnsatisfyingAssignment);
    }
    let mut s = StarStrategy::new();
    for (i, v) in r.vars.iter().enumerate() {
        let (lit_b, lit_a) = if a[i] { (v.pos_b, v.pos_a) } else { (v.neg_b, v.neg_a) };
        s.insert(v.x, lit_b);
        s.insert(lit_a, r.init_b);
    }
    for (j, clause) in r.formula.clauses().iter().enumerate() {
        let lit = *clause.iter().find(|&&l| lit_true(l, a)).expect("satisfied clause");
        s.insert(r.clauses[j], r.literal_b(lit));
    }
    Ok(s)
}

/// Reads the assignment off a winning ⋆-strategy of size at most `k`:
/// `x_i` is true iff `Xi` moves to `xiB`.
pub fn assignment_from_strategy(r: &ReductionOutput, s: &StarStrategy) -> Result<Vec<bool>, MinSizeError> {
    if s.len() > r.k {
        return Err(MinSizeError::StrategyTooLarge { size: s.len(), k: r.k });
    }
    if !is_winning_star(&r.game, s)? {
        return Err(MinSizeError::StrategyNotWinning);
    }
    let a: Vec<bool> = r.vars.iter().map(|v| s.get(v.x) == Some(v.pos_b)).collect();
    debug_assert!(r
        .formula
        .clauses()
        .iter()
        .enumerate()
        .all(|(j, c)| c.iter().any(|&l| s.get(r.clauses[j]) == Some(r.literal_b(l)) && s.contains(r.literal_a(l)))));
    if !r.formula.eval(&a) {
        return Err(MinSizeError::UnsatisfyingAssignment);
    }
    Ok(a)
}
