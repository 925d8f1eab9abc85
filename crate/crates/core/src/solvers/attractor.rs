use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::SolveError;
use crate::arena::{GameGraph, Player};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttractorResult<V: Ord> {
    pub attractor: BTreeSet<V>,
    pub win: BTreeSet<V>,
    /// Smallest `i` with `Attr_{i+1} = Attr_i`.
    pub rounds: usize,
    /// Round at which each attractor vertex first appears.
    pub level: BTreeMap<V, usize>,
}

impl<V: Ord + Clone> AttractorResult<V> {
    /// `Attr_i`.
    pub fn per_round(&self, i: usize) -> BTreeSet<V> {
        self.level
            .iter()
            .filter(|(_, &l)| l <= i)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

/// Backward fixpoint computing `Attr_Bad` and `Win = V \ Attr_Bad`.
///
/// Vertices are processed in nondecreasing round order, so the round at
/// which a vertex is first attracted is recorded exactly.
pub fn solve_attractor<G: GameGraph>(g: &G) -> Result<AttractorResult<G::Vertex>, SolveError> {
    let vs = g.vertices().ok_or(SolveError::NotExplicit)?;
    let idx: HashMap<&G::Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let n = vs.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut remaining: Vec<usize> = vec![0; n];
    for (i, v) in vs.iter().enumerate() {
        let succ = g.successors(v);
        remaining[i] = succ.len();
        for w in &succ {
            preds[idx[w]].push(i);
        }
    }

    let mut level: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for (i, v) in vs.iter().enumerate() {
        if g.is_bad(v) {
            level[i] = Some(0);
            queue.push_back(i);
        }
    }
    // A dead end owned by A has all of its (zero) successors in Attr_0.
    for (i, v) in vs.iter().enumerate() {
        if level[i].is_none() && g.owner(v) == Player::A && remaining[i] == 0 {
            level[i] = Some(1);
            queue.push_back(i);
        }
    }
    while let Some(w) = queue.pop_front() {
        let l = level[w].unwrap();
        for &u in &preds[w] {
            if level[u].is_some() {
                continue;
            }
            let attracted = match g.owner(&vs[u]) {
                Player::B => true,
                Player::A => {
                    remaining[u] -= 1;
                    remaining[u] == 0
                }
            };
            if attracted {
                level[u] = Some(l + 1);
                queue.push_back(u);
            }
        }
    }

    let mut attractor = BTreeSet::new();
    let mut win = BTreeSet::new();
    let mut levels = BTreeMap::new();
    let mut rounds = 0;
    for (i, v) in vs.into_iter().enumerate() {
        match level[i] {
            Some(l) => {
                rounds = rounds.max(l);
                levels.insert(v.clone(), l);
                attractor.insert(v);
            }
            None => {
                win.insert(v);
            }
        }
    }
    Ok(AttractorResult {
        attractor,
        win,
        rounds,
        level: levels,
    })
}
