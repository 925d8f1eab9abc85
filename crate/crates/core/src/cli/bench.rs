use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};

use super::{attractor_result, elapsed_ms, Waiting, EXIT_NO, EXIT_YES};
use crate::arena::{SafetyGame, VertexId};
use crate::gamegen::{gen_nim, gen_random, gen_vector, NimSpec, RandomSpec, VectorGameSpec};
use crate::order::{Equality, PartialOrder};
use crate::solvers::{solve_otfur, solve_otfur_antichain, SolveOptions, SolveStats, WaitingOrder, Winner};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Nim,
    Vector,
    Random,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Nim sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [50u32, 100, 200])]
    pub n: Vec<u32>,
    /// Emit only the rule edges for Nim. By default the extra B-edges of the
    /// eight-ball reference game are added, which makes the mod-3 order a
    /// tba-simulation for every size.
    #[arg(long)]
    pub rule_only: bool,
    /// Waiting discipline shared by both on-the-fly solvers.
    #[arg(long, value_enum, default_value_t = Waiting::Lifo)]
    pub waiting: Waiting,
    /// Vector dimensions, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3])]
    pub dims: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub bound: u32,
    #[arg(long, default_value_t = 12)]
    pub vertices: usize,
    #[arg(long, default_value_t = 0.25)]
    pub density: f64,
    /// Random instances, with seeds `seed..seed+count`.
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

struct Instance {
    name: String,
    game: SafetyGame,
    order: Box<dyn PartialOrder<VertexId> + Send + Sync>,
}

/// One table row per solver.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub instance: String,
    pub algo: &'static str,
    pub winner: Winner,
    pub stats: SolveStats,
    pub wall_ms: f64,
}

fn instances(a: &BenchArgs) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    match a.family {
        Family::Nim => {
            for &n in &a.n {
                let (game, order, _) = gen_nim(&NimSpec {
                    n,
                    fig1_extras: !a.rule_only,
                })?;
                out.push(Instance {
                    name: format!("nim{n}"),
                    game,
                    order: Box::new(order),
                });
            }
        }
        Family::Vector => {
            for &d in &a.dims {
                let (game, order, _) = gen_vector(&VectorGameSpec::new(d, a.bound))?;
                out.push(Instance {
                    name: format!("vector{d}x{}", a.bound),
                    game,
                    order: Box::new(order),
                });
            }
        }
        Family::Random => {
            for seed in a.seed..a.seed + a.count {
                let game = gen_random(&RandomSpec::new(a.vertices, a.density, seed))?;
                out.push(Instance {
                    name: format!("random{}s{seed}", a.vertices),
                    game,
                    order: Box::new(Equality),
                });
            }
        }
    }
    Ok(out)
}

fn run_instance(inst: &Instance, waiting: Waiting) -> Result<Vec<BenchRow>> {
    let opts = SolveOptions {
        waiting: match waiting {
            Waiting::Fifo => WaitingOrder::Fifo,
            Waiting::Lifo => WaitingOrder::Lifo,
        },
        ..SolveOptions::default()
    };
    let mut rows = Vec::new();
    let t = Instant::now();
    let (r, _) = attractor_result(&inst.game)?;
    rows.push(BenchRow {
        instance: inst.name.clone(),
        algo: "attractor",
        winner: r.winner,
        stats: r.stats,
        wall_ms: elapsed_ms(t),
    });
    let t = Instant::now();
    let r = solve_otfur(&inst.game, &opts)?;
    rows.push(BenchRow {
        instance: inst.name.clone(),
        algo: "otfur",
        winner: r.winner,
        stats: r.stats,
        wall_ms: elapsed_ms(t),
    });
    let t = Instant::now();
    let r = solve_otfur_antichain(&inst.game, inst.order.as_ref(), &opts)?;
    rows.push(BenchRow {
        instance: inst.name.clone(),
        algo: "otfur-ac",
        winner: r.winner,
        stats: r.stats,
        wall_ms: elapsed_ms(t),
    });
    Ok(rows)
}

/// Runs every solver on every instance, spreading instances over `threads`
/// workers. Rows come back in instance order regardless of scheduling.
pub fn bench_rows(a: &BenchArgs) -> Result<Vec<BenchRow>> {
    if a.threads == 0 {
        bail!("--threads must be at least 1");
    }
    let insts = instances(a)?;
    let mut slots: Vec<Option<Result<Vec<BenchRow>>>> = (0..insts.len()).map(|_| None).collect();
    let workers = a.threads.min(insts.len().max(1));
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let insts = &insts;
                scope.spawn(move || {
                    (w..insts.len())
                        .step_by(workers)
                        .map(|i| (i, run_instance(&insts[i], a.waiting)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("bench worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    let mut rows = Vec::new();
    for s in slots {
        rows.extend(s.expect("every instance is scheduled")?);
    }
    Ok(rows)
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let rows = bench_rows(a)?;
    writeln!(out, "instance algo winner vertices_explored edges_popped")?;
    for r in &rows {
        writeln!(
            out,
            "{} {} {} {} {}",
            r.instance, r.algo, r.winner, r.stats.vertices_explored, r.stats.edges_popped
        )?;
    }
    for r in &rows {
        writeln!(out, "wall_time_ms {} {} {:.3}", r.instance, r.algo, r.wall_ms)?;
    }
    let mut agree = true;
    for chunk in rows.chunks(3) {
        if chunk.iter().any(|r| r.winner != chunk[0].winner) {
            agree = false;
            writeln!(out, "disagreement {}", chunk[0].instance)?;
        }
    }
    Ok(if agree { EXIT_YES } else { EXIT_NO })
}
