use std::collections::HashSet;
use std::hash::Hash;

use super::OtfurState;
use crate::arena::{GameGraph, Player};
use crate::order::PartialOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantViolation<V> {
    /// `AntiMaybe` or `AntiLosing` holds two comparable elements.
    NotAntichain { which: &'static str },
    /// A visited vertex no longer in `Waiting` is covered by neither
    /// antichain.
    Inv1 { vertex: V },
    /// An A-vertex of `↓AntiMaybe` has no successor that is either possibly
    /// winning or still pending.
    Inv2 { vertex: V },
    /// A successor of a B-vertex of `↓AntiMaybe` is neither possibly winning
    /// nor pending.
    Inv3 { vertex: V, successor: V },
    /// `AntiLosing` contains a vertex that is actually winning.
    Inv4 { vertex: V },
    /// `Depend[key]` holds an edge whose endpoints `key` does not cover.
    Inv5 { key: V, edge: (V, V) },
}

impl<V> InvariantViolation<V> {
    pub fn describe<G: GameGraph<Vertex = V>>(&self, g: &G) -> String {
        let n = |v: &V| g.vertex_name(v);
        match self {
            InvariantViolation::NotAntichain { which } => format!("{which} is not an antichain"),
            InvariantViolation::Inv1 { vertex } => {
                format!("Inv1: visited {} outside both closures", n(vertex))
            }
            InvariantViolation::Inv2 { vertex } => {
                format!("Inv2: A-vertex {} has no live or pending successor", n(vertex))
            }
            InvariantViolation::Inv3 { vertex, successor } => format!(
                "Inv3: successor {} of B-vertex {} is neither live nor pending",
                n(successor),
                n(vertex)
            ),
            InvariantViolation::Inv4 { vertex } => {
                format!("Inv4: {} is in AntiLosing but winning", n(vertex))
            }
            InvariantViolation::Inv5 { key, edge } => format!(
                "Inv5: Depend[{}] holds ({}, {})",
                n(key),
                n(&edge.0),
                n(&edge.1)
            ),
        }
    }
}

/// Evaluates Inv¹ to Inv⁵ on a solver state.
///
/// `losing` is the true losing set (the attractor); Inv⁴ is skipped without
/// it. An edge is pending when it sits in `Waiting` or in `Depend[k]` for some
/// `k` in `↓AntiMaybe`. Inv¹ exempts every endpoint of a pending edge, not
/// only those in `Waiting`. Inv² and Inv³ are checked on explored vertices of `↓AntiMaybe`, and a
/// successor also counts as pending when a pending successor of the same
/// vertex dominates it. Inv¹ needs the `visited` set,
/// which the solver records only when invariant checking is on.
pub fn invariant_probe<G, O>(
    state: &OtfurState<G::Vertex>,
    g: &G,
    o: &O,
    losing: Option<&HashSet<G::Vertex>>,
) -> Vec<InvariantViolation<G::Vertex>>
where
    G: GameGraph,
    G::Vertex: Hash,
    O: PartialOrder<G::Vertex> + ?Sized,
{
    let mut out = Vec::new();
    if !state.anti_maybe.is_antichain(o) {
        out.push(InvariantViolation::NotAntichain { which: "AntiMaybe" });
    }
    if !state.anti_losing.is_antichain(o) {
        out.push(InvariantViolation::NotAntichain { which: "AntiLosing" });
    }

    let maybe = |v: &G::Vertex| state.anti_maybe.iter().any(|m| o.ge(m, v));
    let lost = |v: &G::Vertex| state.anti_losing.iter().any(|m| o.ge(v, m));

    let universe: Vec<G::Vertex> = match g.vertices() {
        Some(vs) => vs,
        None => {
            let mut seen: Vec<G::Vertex> = state.passed.iter().cloned().collect();
            if let Some(vis) = &state.visited {
                let mut extra: Vec<_> = vis.iter().filter(|v| !state.passed.contains(*v)).cloned().collect();
                extra.sort();
                seen.extend(extra);
            }
            seen
        }
    };

    let pending: HashSet<(G::Vertex, G::Vertex)> = state
        .depend
        .iter()
        .filter(|(k, _)| maybe(k))
        .flat_map(|(_, es)| es.iter().cloned())
        .chain(state.waiting.iter().cloned())
        .collect();
    let in_pending: HashSet<&G::Vertex> = pending.iter().flat_map(|(a, b)| [a, b]).collect();
    if let Some(visited) = &state.visited {
        let mut bad: Vec<_> = visited
            .iter()
            .filter(|v| !in_pending.contains(v) && !maybe(v) && !lost(v))
            .cloned()
            .collect();
        bad.sort();
        out.extend(bad.into_iter().map(|vertex| InvariantViolation::Inv1 { vertex }));
    }

    for v in universe.iter().filter(|v| state.passed.contains(*v) && maybe(v)) {
        let succ = g.successors(v);
        let ok = |w: &G::Vertex| {
            maybe(w)
                || succ
                    .iter()
                    .any(|x| o.ge(x, w) && pending.contains(&(v.clone(), x.clone())))
        };
        match g.owner(v) {
            Player::A => {
                if !succ.iter().any(ok) {
                    out.push(InvariantViolation::Inv2 { vertex: v.clone() });
                }
            }
            Player::B => {
                for w in succ.iter().filter(|w| !ok(w)) {
                    out.push(InvariantViolation::Inv3 {
                        vertex: v.clone(),
                        successor: w.clone(),
                    });
                }
            }
        }
    }

    if let Some(losing) = losing {
        for v in state.anti_losing.iter() {
            if !losing.contains(v) {
                out.push(InvariantViolation::Inv4 { vertex: v.clone() });
            }
        }
    }

    let mut keys: Vec<&G::Vertex> = state.depend.keys().collect();
    keys.sort();
    for key in keys {
        for (v, w) in &state.depend[key] {
            if !(o.ge(key, w) || (o.ge(key, v) && key != v)) {
                out.push(InvariantViolation::Inv5 {
                    key: key.clone(),
                    edge: (v.clone(), w.clone()),
                });
            }
        }
    }
    out
}
