use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arena::{GameBuilder, Player, SafetyGame, VertexId};

use super::GenError;

/// Seeded random bipartite game. Vertex `v0` is the A-owned initial vertex
/// and `v1` is B-owned; the remaining owners are drawn uniformly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub vertices: usize,
    /// Probability of each owner-crossing edge.
    pub density: f64,
    pub seed: u64,
    /// Probability that a B-vertex is bad.
    pub bad_fraction: f64,
    pub allow_deadends: bool,
}

impl RandomSpec {
    pub fn new(vertices: usize, density: f64, seed: u64) -> Self {
        RandomSpec {
            vertices,
            density,
            seed,
            bad_fraction: 0.3,
            allow_deadends: false,
        }
    }
}

pub fn gen_random(spec: &RandomSpec) -> Result<SafetyGame, GenError> {
    let n = spec.vertices;
    if n < 2 {
        return Err(GenError::Degenerate(format!("random games need at least 2 vertices, got {n}")));
    }
    for (what, p) in [("density", spec.density), ("bad fraction", spec.bad_fraction)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenError::Degenerate(format!("{what} {p} is outside [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let owners: Vec<Player> = (0..n)
        .map(|i| match i {
            0 => Player::A,
            1 => Player::B,
            _ if rng.gen_bool(0.5) => Player::A,
            _ => Player::B,
        })
        .collect();
    let bad: Vec<bool> = owners
        .iter()
        .map(|&o| o == Player::B && rng.gen_bool(spec.bad_fraction))
        .collect();

    let mut b = GameBuilder::new(format!("random-{n}-{}-{}", spec.density, spec.seed));
    let ids: Vec<VertexId> = (0..n)
        .map(|i| b.add_vertex(format!("v{i}"), owners[i], bad[i]))
        .collect::<Result<_, _>>()?;
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| owners[j] != owners[i]).collect();
        let mut picked: Vec<usize> = others
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(spec.density))
            .collect();
        if picked.is_empty() && !spec.allow_deadends {
            picked.push(others[rng.gen_range(0..others.len())]);
        }
        for j in picked {
            b.add_edge(ids[i], ids[j], None)?;
        }
    }
    b.set_initial(ids[0]);
    Ok(b.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arena::write_game;

    #[test]
    fn deterministic() {
        let spec = RandomSpec::new(10, 0.4, 7);
        assert_eq!(write_game(&gen_random(&spec).unwrap()), write_game(&gen_random(&spec).unwrap()));
        let other = RandomSpec::new(10, 0.4, 8);
        assert_ne!(write_game(&gen_random(&spec).unwrap()), write_game(&gen_random(&other).unwrap()));
    }

    #[test]
    fn complete_at_full_density() {
        let g = gen_random(&RandomSpec::new(9, 1.0, 3)).unwrap();
        let a = g.vertices_of(Player::A).count();
        let b = g.vertices_of(Player::B).count();
        assert_eq!(g.num_edges(), 2 * a * b);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn no_dead_ends_unless_allowed() {
        for seed in 0..50 {
            let g = gen_random(&RandomSpec::new(8, 0.05, seed)).unwrap();
            assert!(g.vertex_ids().all(|v| !g.succ(v).is_empty()));
            assert!(g.bad_vertices().iter().all(|&v| g.owner(v) == Player::B));
        }
        let spec = RandomSpec {
            allow_deadends: true,
            ..RandomSpec::new(8, 0.0, 1)
        };
        assert_eq!(gen_random(&spec).unwrap().num_edges(), 0);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(gen_random(&RandomSpec::new(1, 0.5, 0)).is_err());
        assert!(gen_random(&RandomSpec::new(4, 1.5, 0)).is_err());
    }
}
