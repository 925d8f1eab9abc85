//! The `agames` command line: solve, verify, minsize, gen and bench.
//!
//! Every command exits with 0 (positive answer), 1 (negative answer) or 2
//! (error). Output is line-oriented `key value` text; wall-clock figures
//! always sit on their own `wall_time_ms` lines.

mod bench;
mod report;

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arena::{parse_game, write_game, GameGraph, Player, SafetyGame};
use crate::gamegen::{
    gen_fig3_left, gen_fig3_right, gen_nim, gen_random, gen_vector, NimArena, NimSpec, RandomSpec,
    VectorArena, VectorGameSpec,
};
use crate::minsize::{
    decide_minsizestrat, min_star_strategy_size, parse_dimacs, reduce_sat, MinSizeError, MinSizeOutcome,
    DEFAULT_BUDGET,
};
use crate::order::{
    check_partial_order, check_simulation, check_tba_simulation, derive_tba, order_from_spec, write_order,
    Equality, NimMod3, PartialOrder, Pointwise, TbaVerdict,
};
use crate::solvers::{
    solve_attractor, solve_otfur, solve_otfur_antichain, SolveOptions, SolveResult, WaitingOrder, Winner,
};
use crate::strategy::{is_order_winning_star, is_winning_star, is_winning_total, parse_strategy, write_strategy, OrderVerdict, StarStrategy};

pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "agames", version, about = "Safety game solver with antichains and succinct strategies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the winner and optionally write a strategy.
    Solve(SolveArgs),
    /// Check orders and strategies.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Find the smallest winning ⋆-strategy, or decide whether one of size at most k exists.
    Minsize(MinsizeArgs),
    /// Emit generated games in the arena text format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run solver pairs on a family and report exploration counts.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Attractor,
    Otfur,
    OtfurAc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Waiting {
    Fifo,
    Lifo,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["game", "implicit"])))]
pub struct SolveArgs {
    /// Game file in the arena text format.
    pub game: Option<PathBuf>,
    /// Implicit family instead of a file: `nim:<n>`, `nim-extras:<n>` or `vector:<dims>:<bound>`.
    #[arg(long)]
    pub implicit: Option<String>,
    #[arg(long, value_enum, default_value_t = Algo::Otfur)]
    pub algo: Algo,
    /// `nim-mod3`, `vector`, `equality` or `file:<path>`; only for `otfur-ac`.
    /// Defaults to `equality` for files and to the family order otherwise.
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long, value_enum, default_value_t = Waiting::Fifo)]
    pub waiting: Waiting,
    /// Probe the loop invariants at every iteration (explicit games only).
    #[arg(long)]
    pub check_invariants: bool,
    /// Skip the tba-simulation check of the order.
    #[arg(long)]
    pub trust_order: bool,
    /// Vertices explored when sampling the order of an implicit game.
    #[arg(long, default_value_t = 400)]
    pub order_sample: usize,
    #[arg(long)]
    pub max_iterations: Option<u64>,
    /// Write the computed strategy here.
    #[arg(long)]
    pub strategy_out: Option<PathBuf>,
    /// Write a JSON run report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Exit 0 iff the order is a partial order on the game.
    Order(OrderCheckArgs),
    /// Exit 0 iff the order is a simulation compatible with Bad.
    Simulation(OrderCheckArgs),
    /// Exit 0 iff the order is a turn-based alternating simulation.
    TbaSim(OrderCheckArgs),
    /// Exit 0 iff the edge labels of the game prove the order tba by the
    /// A-determinism and monotonicity criterion.
    Criterion(OrderCheckArgs),
    /// Exit 0 iff the strategy file is winning in the chosen sense.
    Strategy(VerifyStrategyArgs),
}

#[derive(Debug, Args)]
pub struct OrderCheckArgs {
    pub game: PathBuf,
    #[arg(long)]
    pub order: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyMode {
    /// Every concretisation wins.
    Winning,
    /// Every concretisation compatible with the order wins.
    OrderWinning,
    /// The strategy is total on reachable vertices and wins.
    Total,
}

#[derive(Debug, Args)]
pub struct VerifyStrategyArgs {
    pub game: PathBuf,
    pub strategy: PathBuf,
    #[arg(long, value_enum, default_value_t = StrategyMode::Winning)]
    pub mode: StrategyMode,
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct MinsizeArgs {
    pub game: PathBuf,
    /// Decide whether a winning ⋆-strategy of size at most k exists.
    #[arg(long)]
    pub k: Option<usize>,
    /// Search nodes before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write the minimal witness here.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Game output path; standard output when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Also write the family order as an order file.
    #[arg(long)]
    pub order_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    Nim {
        #[arg(long)]
        n: u32,
        /// Add the three extra B-edges of the eight-ball reference game.
        #[arg(long)]
        fig1_extras: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    Vector {
        #[arg(long)]
        dims: usize,
        #[arg(long)]
        bound: u32,
        /// Drop the bad predicate.
        #[arg(long)]
        no_bad: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    Fig3 {
        #[arg(long, value_enum)]
        side: Side,
        #[command(flatten)]
        out: OutArgs,
    },
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        bad_fraction: f64,
        #[arg(long)]
        allow_deadends: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Reduce a DIMACS CNF to a game; prints `k <threshold>`.
    Sat {
        #[arg(long)]
        cnf: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
}

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Runs a parsed command against the process's standard streams.
pub fn run(cli: Cli) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(cli, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs a parsed command and returns its exit code.
pub fn run_with(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Verify(v) => cmd_verify(&v, out),
        Command::Minsize(a) => cmd_minsize(&a, out),
        Command::Gen(g) => cmd_gen(&g, out),
        Command::Bench(b) => bench::cmd_bench(&b, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn load_game(path: &Path) -> Result<SafetyGame> {
    let g = parse_game(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    if let Some(v) = g.validate().first() {
        bail!("{}: malformed game: {v:?}", path.display());
    }
    Ok(g)
}

fn kv(out: &mut dyn Write, key: &str, value: impl Display) -> Result<()> {
    writeln!(out, "{key} {value}")?;
    Ok(())
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn strategy_text<G: GameGraph>(g: &G, s: &StarStrategy<G::Vertex>) -> String {
    s.iter()
        .map(|(v, w)| format!("map {} {}\n", g.vertex_name(v), g.vertex_name(w)))
        .collect()
}

enum Implicit {
    Nim(NimSpec),
    Vector(VectorGameSpec),
}

fn parse_implicit(spec: &str) -> Result<Implicit> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<u64> { s.parse().map_err(|_| anyhow!("bad number `{s}` in `{spec}`")) };
    Ok(match parts.as_slice() {
        ["nim", n] => Implicit::Nim(NimSpec::new(num(n)? as u32)),
        ["nim-extras", n] => Implicit::Nim(NimSpec {
            n: num(n)? as u32,
            fig1_extras: true,
        }),
        ["vector", d, b] => Implicit::Vector(VectorGameSpec::new(num(d)? as usize, num(b)? as u32)),
        _ => bail!("unknown implicit family `{spec}` (expected nim:<n>, nim-extras:<n> or vector:<dims>:<bound>)"),
    })
}

struct Solved {
    winner: Winner,
    stats: crate::solvers::SolveStats,
    rounds: Option<usize>,
    strategy_text: Option<String>,
    strategy_size: Option<usize>,
}

fn attractor_result<G: GameGraph>(g: &G) -> Result<(SolveResult<G::Vertex>, usize)> {
    let r = solve_attractor(g)?;
    let winner = if r.win.contains(&g.initial()) { Winner::A } else { Winner::B };
    let strategy = (winner == Winner::A).then(|| {
        r.win
            .iter()
            .filter(|v| g.owner(v) == Player::A)
            .filter_map(|v| {
                g.successors(v)
                    .into_iter()
                    .find(|w| r.win.contains(w))
                    .map(|w| (v.clone(), w))
            })
            .collect::<StarStrategy<G::Vertex>>()
    });
    let all = g.vertices().map_or(0, |v| v.len()) as u64;
    let stats = crate::solvers::SolveStats {
        vertices_explored: all,
        ..Default::default()
    };
    Ok((
        SolveResult {
            winner,
            strategy,
            anti_maybe: None,
            anti_losing: None,
            stats,
        },
        r.rounds,
    ))
}

/// Comparable pairs among the first `limit` vertices in breadth-first order
/// that break the tba-simulation conditions.
pub fn sample_tba_violations<G, O>(g: &G, o: &O, limit: usize) -> Vec<String>
where
    G: GameGraph,
    O: PartialOrder<G::Vertex> + ?Sized,
{
    let mut seen = indexmap::IndexSet::new();
    seen.insert(g.initial());
    let mut i = 0;
    while i < seen.len() && seen.len() < limit {
        let v = seen[i].clone();
        for w in g.successors(&v) {
            if seen.len() >= limit {
                break;
            }
            seen.insert(w);
        }
        i += 1;
    }
    let mut out = Vec::new();
    for a in &seen {
        if g.is_bad(a) {
            continue;
        }
        for b in &seen {
            if a == b || !o.ge(a, b) {
                continue;
            }
            let (sa, sb) = (g.successors(a), g.successors(b));
            let missing = match g.owner(a) {
                Player::A => sa.iter().find(|x| !sb.iter().any(|y| o.ge(x, y))),
                Player::B => sb.iter().find(|y| !sa.iter().any(|x| o.ge(x, y))),
            };
            if let Some(s) = missing {
                out.push(format!(
                    "{} >= {}: successor {} is unmatched",
                    g.vertex_name(a),
                    g.vertex_name(b),
                    g.vertex_name(s)
                ));
            }
            if g.is_bad(b) {
                out.push(format!("{} >= {}: bad vertex dominated by a safe one", g.vertex_name(a), g.vertex_name(b)));
            }
        }
    }
    out
}

fn run_solver<G, O>(g: &G, algo: Algo, order: &O, args: &SolveArgs) -> Result<Solved>
where
    G: GameGraph,
    O: PartialOrder<G::Vertex> + ?Sized,
{
    let opts = SolveOptions {
        waiting: match args.waiting {
            Waiting::Fifo => WaitingOrder::Fifo,
            Waiting::Lifo => WaitingOrder::Lifo,
        },
        check_invariants: args.check_invariants,
        max_iterations: args.max_iterations,
    };
    let (r, rounds) = match algo {
        Algo::Attractor => {
            let (r, rounds) = attractor_result(g)?;
            (r, Some(rounds))
        }
        Algo::Otfur => (solve_otfur(g, &opts)?, None),
        Algo::OtfurAc => (solve_otfur_antichain(g, order, &opts)?, None),
    };
    Ok(Solved {
        winner: r.winner,
        stats: r.stats,
        rounds,
        strategy_size: r.strategy.as_ref().map(StarStrategy::len),
        strategy_text: r.strategy.as_ref().map(|s| strategy_text(g, s)),
    })
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    if a.order.is_some() && a.algo != Algo::OtfurAc {
        bail!("--order only applies to --algo otfur-ac");
    }
    if a.check_invariants && a.implicit.is_some() {
        bail!("--check-invariants needs an explicit game");
    }
    let started = Instant::now();
    let (solved, input, order_name) = match (&a.game, &a.implicit) {
        (Some(path), _) => {
            let g = load_game(path)?;
            let spec = a.order.clone().unwrap_or_else(|| "equality".into());
            let o = order_from_spec(&spec, &g)?;
            if a.algo == Algo::OtfurAc && !a.trust_order {
                if let Some(v) = check_tba_simulation(o.as_ref(), &g).first() {
                    bail!("order `{spec}` is not a tba-simulation on this game ({v}); pass --trust-order to run anyway");
                }
            }
            (run_solver(&g, a.algo, o.as_ref(), a)?, path.display().to_string(), spec)
        }
        (None, Some(spec)) => {
            let order = a.order.as_deref();
            match parse_implicit(spec)? {
                Implicit::Nim(ns) => {
                    let g = NimArena::from_spec(ns);
                    let name = order.unwrap_or("nim-mod3");
                    match name {
                        "nim-mod3" => (solve_implicit(&g, &NimMod3, a)?, spec.clone(), name.to_string()),
                        "equality" => (solve_implicit(&g, &Equality, a)?, spec.clone(), name.to_string()),
                        other => bail!("order `{other}` is not available for {spec}"),
                    }
                }
                Implicit::Vector(vs) => {
                    let g = VectorArena::new(vs)?;
                    let name = order.unwrap_or("vector");
                    match name {
                        "vector" => (solve_implicit(&g, &Pointwise, a)?, spec.clone(), name.to_string()),
                        "equality" => (solve_implicit(&g, &Equality, a)?, spec.clone(), name.to_string()),
                        other => bail!("order `{other}` is not available for {spec}"),
                    }
                }
            }
        }
        (None, None) => unreachable!("clap requires an input"),
    };
    let wall = elapsed_ms(started);

    kv(out, "winner", solved.winner)?;
    kv(out, "stat vertices_explored", solved.stats.vertices_explored)?;
    kv(out, "stat edges_popped", solved.stats.edges_popped)?;
    kv(out, "stat reevaluations", solved.stats.reevaluations)?;
    kv(out, "stat postponements", solved.stats.postponements)?;
    if let Some(r) = solved.rounds {
        kv(out, "stat rounds", r)?;
    }
    if let Some(n) = solved.strategy_size {
        kv(out, "strategy_size", n)?;
    }
    if let (Some(path), Some(text)) = (&a.strategy_out, &solved.strategy_text) {
        write_file(path, text)?;
    }
    kv(out, "wall_time_ms", format!("{wall:.3}"))?;
    if let Some(path) = &a.report {
        let rep = RunReport {
            command: "solve".into(),
            input,
            algo: a.algo.to_possible_value().map(|v| v.get_name().to_string()),
            order: (a.algo == Algo::OtfurAc).then_some(order_name),
            winner: Some(solved.winner.to_string()),
            stats: Some(solved.stats),
            rounds: solved.rounds,
            strategy_size: solved.strategy_size,
            min_size: None,
            wall_time_ms: wall,
        };
        rep.write(path)?;
    }
    Ok(match solved.winner {
        Winner::A => EXIT_YES,
        Winner::B => EXIT_NO,
    })
}

fn solve_implicit<G, O>(g: &G, o: &O, a: &SolveArgs) -> Result<Solved>
where
    G: GameGraph,
    O: PartialOrder<G::Vertex>,
{
    if a.algo == Algo::OtfurAc && !a.trust_order {
        if let Some(v) = sample_tba_violations(g, o, a.order_sample).first() {
            bail!("sampled order check failed ({v}); pass --trust-order to run anyway");
        }
    }
    run_solver(g, a.algo, o, a)
}

fn report_violations<T: Display>(out: &mut dyn Write, found: &[T]) -> Result<i32> {
    if let Some(first) = found.first() {
        kv(out, "violations", found.len())?;
        kv(out, "first", first)?;
        Ok(EXIT_NO)
    } else {
        writeln!(out, "ok")?;
        Ok(EXIT_YES)
    }
}

fn cmd_verify(v: &VerifyCommand, out: &mut dyn Write) -> Result<i32> {
    match v {
        VerifyCommand::Order(a) => {
            let g = load_game(&a.game)?;
            let o = order_from_spec(&a.order, &g)?;
            report_violations(out, &check_partial_order(o.as_ref(), &g))
        }
        VerifyCommand::Simulation(a) => {
            let g = load_game(&a.game)?;
            let o = order_from_spec(&a.order, &g)?;
            report_violations(out, &check_simulation(o.as_ref(), &g))
        }
        VerifyCommand::TbaSim(a) => {
            let g = load_game(&a.game)?;
            let o = order_from_spec(&a.order, &g)?;
            report_violations(out, &check_tba_simulation(o.as_ref(), &g))
        }
        VerifyCommand::Criterion(a) => {
            let g = load_game(&a.game)?;
            let o = order_from_spec(&a.order, &g)?;
            let lab = g.labeling()?;
            match derive_tba(o.as_ref(), &g, &lab)? {
                TbaVerdict::ByCriterion { sigma_a } => {
                    let actions: Vec<&str> = sigma_a.iter().map(String::as_str).collect();
                    kv(out, "criterion", "holds")?;
                    kv(out, "actions", actions.join(","))?;
                    Ok(EXIT_YES)
                }
                TbaVerdict::NotApplicable { a_determinism, labeling } => {
                    kv(out, "criterion", "not-applicable")?;
                    if let Some(d) = a_determinism.as_ref().and_then(|d| d.first()) {
                        kv(out, "a-determinism", d)?;
                    }
                    if let Some(l) = labeling.first() {
                        kv(out, "monotonicity", l)?;
                    }
                    Ok(EXIT_NO)
                }
            }
        }
        VerifyCommand::Strategy(a) => {
            let g = load_game(&a.game)?;
            let s = parse_strategy(&read(&a.strategy)?, &g)?;
            let (verdict, ok) = match a.mode {
                StrategyMode::Winning => {
                    let w = is_winning_star(&g, &s)?;
                    (if w { "winning".to_string() } else { "not-winning".to_string() }, w)
                }
                StrategyMode::Total => {
                    let w = is_winning_total(&g, &s)?;
                    (if w { "winning".to_string() } else { "not-winning".to_string() }, w)
                }
                StrategyMode::OrderWinning => {
                    let spec = a.order.as_deref().ok_or_else(|| anyhow!("--mode order-winning needs --order"))?;
                    let o = order_from_spec(spec, &g)?;
                    match is_order_winning_star(&g, &s, o.as_ref())? {
                        OrderVerdict::Winning => ("winning".into(), true),
                        OrderVerdict::NotWinning => ("not-winning".into(), false),
                        OrderVerdict::NoConcretisation { vertex } => (format!("no-concretisation {vertex}"), false),
                    }
                }
            };
            kv(out, "verdict", verdict)?;
            kv(out, "size", s.len())?;
            Ok(if ok { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn cmd_minsize(a: &MinsizeArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load_game(&a.game)?;
    let started = Instant::now();
    let (code, min_size) = match a.k {
        Some(k) => match decide_minsizestrat(&g, k, a.budget) {
            Ok(yes) => {
                kv(out, "answer", if yes { "yes" } else { "no" })?;
                (if yes { EXIT_YES } else { EXIT_NO }, None)
            }
            Err(MinSizeError::NoWinningStrategy) => {
                writeln!(out, "no-winning-strategy")?;
                (EXIT_NO, None)
            }
            Err(MinSizeError::BudgetExhausted { .. }) => {
                writeln!(out, "budget-exhausted")?;
                (EXIT_ERROR, None)
            }
            Err(e) => return Err(e.into()),
        },
        None => match min_star_strategy_size(&g, a.budget) {
            MinSizeOutcome::Found { size, witness } => {
                kv(out, "size", size)?;
                if let Some(path) = &a.witness_out {
                    write_file(path, &write_strategy(&g, &witness))?;
                }
                (EXIT_YES, Some(size))
            }
            MinSizeOutcome::NoWinningStrategy => {
                writeln!(out, "no-winning-strategy")?;
                (EXIT_NO, None)
            }
            MinSizeOutcome::BudgetExhausted { .. } => {
                writeln!(out, "budget-exhausted")?;
                (EXIT_ERROR, None)
            }
        },
    };
    let wall = elapsed_ms(started);
    kv(out, "wall_time_ms", format!("{wall:.3}"))?;
    if let Some(path) = &a.report {
        RunReport {
            command: "minsize".into(),
            input: a.game.display().to_string(),
            min_size,
            wall_time_ms: wall,
            ..RunReport::default()
        }
        .write(path)?;
    }
    Ok(code)
}

fn emit(out: &mut dyn Write, args: &OutArgs, g: &SafetyGame, order: Option<&dyn PartialOrder<crate::arena::VertexId>>) -> Result<()> {
    let text = write_game(g);
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if let Some(path) = &args.order_out {
        let o = order.ok_or_else(|| anyhow!("this family has no order to write"))?;
        write_file(path, &write_order(g, o))?;
    }
    Ok(())
}

fn cmd_gen(c: &GenCommand, out: &mut dyn Write) -> Result<i32> {
    match c {
        GenCommand::Nim { n, fig1_extras, out: o } => {
            let (g, order, _) = gen_nim(&NimSpec {
                n: *n,
                fig1_extras: *fig1_extras,
            })?;
            emit(out, o, &g, Some(&order))?;
        }
        GenCommand::Vector { dims, bound, no_bad, out: o } => {
            let mut spec = VectorGameSpec::new(*dims, *bound);
            if *no_bad {
                spec = spec.without_bad();
            }
            let (g, order, _) = gen_vector(&spec)?;
            emit(out, o, &g, Some(&order))?;
        }
        GenCommand::Fig3 { side, out: o } => {
            let (g, order) = match side {
                Side::Left => gen_fig3_left(),
                Side::Right => gen_fig3_right(),
            };
            emit(out, o, &g, Some(&order))?;
        }
        GenCommand::Random {
            vertices,
            density,
            seed,
            bad_fraction,
            allow_deadends,
            out: o,
        } => {
            let g = gen_random(&RandomSpec {
                vertices: *vertices,
                density: *density,
                seed: *seed,
                bad_fraction: *bad_fraction,
                allow_deadends: *allow_deadends,
            })?;
            emit(out, o, &g, Some(&Equality))?;
        }
        GenCommand::Sat { cnf, out: o } => {
            let phi = parse_dimacs(&read(cnf)?).with_context(|| format!("in {}", cnf.display()))?;
            let r = reduce_sat(&phi);
            emit(out, o, &r.game, Some(&Equality))?;
            if o.out.is_some() {
                kv(out, "k", r.k)?;
            } else {
                writeln!(out, "# k {}", r.k)?;
            }
        }
    }
    Ok(EXIT_YES)
}
