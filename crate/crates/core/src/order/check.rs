//! Exhaustive checkers over explicit games: partial-order axioms, simulation,
//! tba-simulation, and the labeling-based criterion in [`derive_tba`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::PartialOrder;
use crate::arena::{Labeling, Player, SafetyGame, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    NotReflexive { v: String },
    NotAntisymmetric { a: String, b: String },
    NotTransitive { a: String, b: String, c: String },
    CrossOwner { a: String, b: String },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::NotReflexive { v } => write!(f, "not reflexive at {v}"),
            OrderViolation::NotAntisymmetric { a, b } => {
                write!(f, "not antisymmetric: {a} ⊵ {b} and {b} ⊵ {a}")
            }
            OrderViolation::NotTransitive { a, b, c } => {
                write!(f, "not transitive: {a} ⊵ {b} ⊵ {c} but not {a} ⊵ {c}")
            }
            OrderViolation::CrossOwner { a, b } => {
                write!(f, "{a} ⊵ {b} relates vertices of different owners")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimulationViolation {
    /// `successor` has no counterpart on the other side of the pair.
    UnmatchedSuccessor {
        dominant: String,
        dominated: String,
        successor: String,
    },
    /// `dominated` is bad but `dominant` is not.
    BadNotPreserved { dominant: String, dominated: String },
}

impl fmt::Display for SimulationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimulationViolation::UnmatchedSuccessor {
                dominant,
                dominated,
                successor,
            } => write!(
                f,
                "pair {dominant} ⊵ {dominated}: successor {successor} is not matched"
            ),
            SimulationViolation::BadNotPreserved {
                dominant,
                dominated,
            } => write!(
                f,
                "pair {dominant} ⊵ {dominated}: {dominated} is bad but {dominant} is not"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingViolation {
    pub dominant: String,
    pub dominated: String,
    pub label: String,
    pub successor: String,
}

impl fmt::Display for LabelingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair {} ⊵ {}: {}-successor {} of {} has no dominating {}-successor",
            self.dominant, self.dominated, self.label, self.successor, self.dominated, self.label
        )
    }
}

/// Result of [`check_a_deterministic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ADeterminism {
    /// The witness action set `Σ_A`.
    Deterministic(BTreeSet<String>),
    /// One line per offending A-vertex.
    NotDeterministic(Vec<String>),
}

impl ADeterminism {
    pub fn witness(&self) -> Option<&BTreeSet<String>> {
        match self {
            ADeterminism::Deterministic(s) => Some(s),
            ADeterminism::NotDeterministic(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TbaVerdict {
    /// Simulation, A-deterministic and monotonic labeling all hold.
    ByCriterion { sigma_a: BTreeSet<String> },
    /// The criterion does not apply; says nothing about tba-ness itself.
    NotApplicable {
        a_determinism: Option<Vec<String>>,
        labeling: Vec<LabelingViolation>,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeriveError {
    #[error("order is not a simulation: {}", .0[0])]
    NotSimulation(Vec<SimulationViolation>),
}

fn name(g: &SafetyGame, v: VertexId) -> String {
    g.name_of(v).to_string()
}

/// All pairs `(a, b)` with `a ⊵ b` and `a != b`.
fn strict_pairs<O: PartialOrder<VertexId> + ?Sized>(o: &O, g: &SafetyGame) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for a in g.vertex_ids() {
        for b in g.vertex_ids() {
            if a != b && o.ge(&a, &b) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn check_partial_order<O: PartialOrder<VertexId> + ?Sized>(
    o: &O,
    g: &SafetyGame,
) -> Vec<OrderViolation> {
    let mut out = Vec::new();
    for v in g.vertex_ids() {
        if !o.ge(&v, &v) {
            out.push(OrderViolation::NotReflexive { v: name(g, v) });
        }
    }
    let pairs = strict_pairs(o, g);
    let mut above: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in &pairs {
        above.entry(a).or_default().push(b);
        if g.owner(a) != g.owner(b) {
            out.push(OrderViolation::CrossOwner { a: name(g, a), b: name(g, b) });
        }
        if a < b && o.ge(&b, &a) {
            out.push(OrderViolation::NotAntisymmetric { a: name(g, a), b: name(g, b) });
        }
    }
    for &(a, b) in &pairs {
        for &c in above.get(&b).map(Vec::as_slice).unwrap_or(&[]) {
            if c != a && !o.ge(&a, &c) {
                out.push(OrderViolation::NotTransitive {
                    a: name(g, a),
                    b: name(g, b),
                    c: name(g, c),
                });
            }
        }
    }
    out
}

/// Members `s` of `from` with no `m` in `against` such that `covers(m, s)`.
fn unmatched<'a>(
    from: &'a [VertexId],
    against: &'a [VertexId],
    covers: impl Fn(VertexId, VertexId) -> bool + 'a,
) -> impl Iterator<Item = VertexId> + 'a {
    from.iter()
        .copied()
        .filter(move |&s| !against.iter().any(|&m| covers(m, s)))
}

fn all_pairs<O: PartialOrder<VertexId> + ?Sized>(o: &O, g: &SafetyGame) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for a in g.vertex_ids() {
        for b in g.vertex_ids() {
            if o.ge(&a, &b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Simulation compatible with `Bad`: for every `v1 ⊵ v2` with `v1 ∉ Bad`,
/// each successor of `v2` is dominated by a successor of `v1`, and
/// `v2 ∈ Bad` implies `v1 ∈ Bad`.
pub fn check_simulation<O: PartialOrder<VertexId> + ?Sized>(
    o: &O,
    g: &SafetyGame,
) -> Vec<SimulationViolation> {
    let mut out = Vec::new();
    for (v1, v2) in all_pairs(o, g) {
        if g.is_bad(v1) {
            continue;
        }
        for s in unmatched(g.succ(v2), g.succ(v1), |m, s| o.ge(&m, &s)) {
            out.push(SimulationViolation::UnmatchedSuccessor {
                dominant: name(g, v1),
                dominated: name(g, v2),
                successor: name(g, s),
            });
        }
        if g.is_bad(v2) {
            out.push(SimulationViolation::BadNotPreserved {
                dominant: name(g, v1),
                dominated: name(g, v2),
            });
        }
    }
    out
}

/// Turn-based alternating simulation. At A-pairs every move of the dominant
/// vertex is matched by a dominated move of the other; at B-pairs every move
/// of the dominated vertex is matched by a dominating move.
pub fn check_tba_simulation<O: PartialOrder<VertexId> + ?Sized>(
    o: &O,
    g: &SafetyGame,
) -> Vec<SimulationViolation> {
    let mut out = Vec::new();
    for (v1, v2) in all_pairs(o, g) {
        if g.is_bad(v1) {
            continue;
        }
        let missing: Vec<VertexId> = match g.owner(v1) {
            Player::A => unmatched(g.succ(v1), g.succ(v2), |m, s| o.ge(&s, &m)).collect(),
            Player::B => unmatched(g.succ(v2), g.succ(v1), |m, s| o.ge(&m, &s)).collect(),
        };
        for s in missing {
            out.push(SimulationViolation::UnmatchedSuccessor {
                dominant: name(g, v1),
                dominated: name(g, v2),
                successor: name(g, s),
            });
        }
        if g.is_bad(v2) {
            out.push(SimulationViolation::BadNotPreserved {
                dominant: name(g, v1),
                dominated: name(g, v2),
            });
        }
    }
    out
}

/// Looks for `Σ_A` such that every A-vertex has exactly one `a`-successor for
/// each `a ∈ Σ_A` and none for any other symbol. The only candidate is the
/// union of labels used on A-edges.
pub fn check_a_deterministic(g: &SafetyGame, lab: &Labeling) -> ADeterminism {
    let mut sigma_a = BTreeSet::new();
    let mut per_vertex: Vec<(VertexId, BTreeMap<&str, usize>)> = Vec::new();
    let mut diags = Vec::new();
    for v in g.vertices_of(Player::A) {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for &w in g.succ(v) {
            match lab.label(v, w) {
                Some(a) => {
                    *counts.entry(a).or_default() += 1;
                    sigma_a.insert(a.to_string());
                }
                None => diags.push(format!("edge {} -> {} is unlabeled", g.name_of(v), g.name_of(w))),
            }
        }
        per_vertex.push((v, counts));
    }
    for (v, counts) in per_vertex {
        let missing: Vec<&str> = sigma_a
            .iter()
            .map(String::as_str)
            .filter(|a| !counts.contains_key(a))
            .collect();
        let repeated: Vec<&str> = counts.iter().filter(|(_, &c)| c > 1).map(|(a, _)| *a).collect();
        if !missing.is_empty() {
            diags.push(format!("{} offers no move labeled {}", g.name_of(v), missing.join(",")));
        }
        if !repeated.is_empty() {
            diags.push(format!("{} has several moves labeled {}", g.name_of(v), repeated.join(",")));
        }
    }
    if diags.is_empty() {
        ADeterminism::Deterministic(sigma_a)
    } else {
        ADeterminism::NotDeterministic(diags)
    }
}

/// `⊵`-monotonicity: for `v1 ⊵ v2`, every `a`-successor of `v2` is dominated
/// by some `a`-successor of `v1`.
pub fn check_monotonic_labeling<O: PartialOrder<VertexId> + ?Sized>(
    o: &O,
    g: &SafetyGame,
    lab: &Labeling,
) -> Vec<LabelingViolation> {
    let mut out = Vec::new();
    for (v1, v2) in strict_pairs(o, g) {
        for &w2 in g.succ(v2) {
            let Some(a) = lab.label(v2, w2) else { continue };
            let matched = g
                .succ(v1)
                .iter()
                .any(|&w1| lab.label(v1, w1) == Some(a) && o.ge(&w1, &w2));
            if !matched {
                out.push(LabelingViolation {
                    dominant: name(g, v1),
                    dominated: name(g, v2),
                    label: a.to_string(),
                    successor: name(g, w2),
                });
            }
        }
    }
    out
}

/// Applies the labeling criterion: a simulation with an A-deterministic,
/// monotonic labeling is a tba-simulation.
pub fn derive_tba<O: PartialOrder<VertexId> + ?Sized>(
    o: &O,
    g: &SafetyGame,
    lab: &Labeling,
) -> Result<TbaVerdict, DeriveError> {
    let sim = check_simulation(o, g);
    if !sim.is_empty() {
        return Err(DeriveError::NotSimulation(sim));
    }
    let det = check_a_deterministic(g, lab);
    let mono = check_monotonic_labeling(o, g, lab);
    Ok(match det {
        ADeterminism::Deterministic(sigma_a) if mono.is_empty() => TbaVerdict::ByCriterion { sigma_a },
        ADeterminism::Deterministic(_) => TbaVerdict::NotApplicable {
            a_determinism: None,
            labeling: mono,
        },
        ADeterminism::NotDeterministic(d) => TbaVerdict::NotApplicable {
            a_determinism: Some(d),
            labeling: mono,
        },
    })
}
