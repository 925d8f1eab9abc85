mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::fixture;

fn agames(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agames")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stat(out: &str, key: &str) -> u64 {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("stat {key} ")))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .parse()
        .unwrap()
}

#[test]
fn nim8_fixture_is_what_gen_emits() {
    let o = agames(&["gen", "nim", "--n", "8", "--fig1-extras"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("nim8.tg")).unwrap());
}

#[test]
fn solvers_agree_on_the_nim8_fixture() {
    let nim8 = fixture("nim8.tg");
    for algo in ["attractor", "otfur"] {
        let o = agames(&["solve", path(&nim8), "--algo", algo]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        assert!(stdout(&o).starts_with("winner A\n"));
    }
    let o = agames(&["solve", path(&nim8), "--algo", "attractor"]);
    assert!(stat(&stdout(&o), "rounds") > 0);
    let o = agames(&["solve", path(&nim8), "--algo", "otfur"]);
    assert!(!stdout(&o).contains("stat rounds"));
}

#[test]
fn antichain_solve_writes_a_verifiable_strategy() {
    let dir = tempfile::tempdir().unwrap();
    let strat = dir.path().join("s.txt");
    let report = dir.path().join("r.json");
    let nim8 = fixture("nim8.tg");
    let order = format!("file:{}", path(&fixture("nim8.order")));
    let o = agames(&[
        "solve",
        path(&nim8),
        "--algo",
        "otfur-ac",
        "--order",
        &order,
        "--check-invariants",
        "--strategy-out",
        path(&strat),
        "--report",
        path(&report),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("strategy_size 2\n"));
    assert_eq!(std::fs::read_to_string(&strat).unwrap(), "map A5 B7\nmap A6 B7\n");

    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["command"], "solve");
    assert_eq!(json["algo"], "otfur-ac");
    assert_eq!(json["winner"], "A");
    assert_eq!(json["strategy_size"], 2);
    assert!(json["stats"]["vertices_explored"].as_u64().unwrap() > 0);

    let o = agames(&["verify", "strategy", path(&nim8), path(&strat), "--mode", "order-winning", "--order", &order]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict winning\n"));
    let o = agames(&["verify", "strategy", path(&nim8), path(&strat)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("verdict not-winning\n"));
}

#[test]
fn fig3_right_order_is_refused_unless_trusted() {
    let g = fixture("fig3_right.tg");
    let order = format!("file:{}", path(&fixture("fig3_right.order")));
    let o = agames(&["verify", "tba-sim", path(&g), "--order", &order]);
    assert_eq!(o.status.code(), Some(1));
    let o = agames(&["solve", path(&g), "--algo", "otfur-ac", "--order", &order]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--trust-order"));
    let o = agames(&["solve", path(&g), "--algo", "otfur-ac", "--order", &order, "--trust-order"]);
    assert_eq!(o.status.code(), Some(0));
    let o = agames(&["solve", path(&g), "--algo", "otfur"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("winner B\n"));
}

#[test]
fn fig3_left_order_is_a_simulation_but_not_tba() {
    let g = fixture("fig3_left.tg");
    let order = format!("file:{}", path(&fixture("fig3_left.order")));
    assert_eq!(agames(&["verify", "order", path(&g), "--order", &order]).status.code(), Some(0));
    assert_eq!(agames(&["verify", "simulation", path(&g), "--order", &order]).status.code(), Some(0));
    assert_eq!(agames(&["verify", "tba-sim", path(&g), "--order", &order]).status.code(), Some(1));
}

#[test]
fn minsize_exit_codes() {
    let nim8 = fixture("nim8.tg");
    let o = agames(&["minsize", path(&nim8)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("size 5\n"));
    assert_eq!(agames(&["minsize", path(&nim8), "--k", "5"]).status.code(), Some(0));
    assert_eq!(agames(&["minsize", path(&nim8), "--k", "4"]).status.code(), Some(1));
    let o = agames(&["minsize", path(&nim8), "--budget", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("budget-exhausted"));
}

#[test]
fn minsize_reports_a_losing_game() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("nim10.tg");
    assert_eq!(agames(&["gen", "nim", "--n", "10", "-o", path(&g)]).status.code(), Some(0));
    let o = agames(&["minsize", path(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("no-winning-strategy"));
}

#[test]
fn sat_reduction_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("fig2.tg");
    let o = agames(&["gen", "sat", "--cnf", path(&fixture("fig2.cnf")), "-o", path(&g)]);
    assert_eq!(stdout(&o), "k 8\n");
    assert_eq!(std::fs::read_to_string(&g).unwrap(), std::fs::read_to_string(fixture("fig2.tg")).unwrap());
    let witness = dir.path().join("w.txt");
    let o = agames(&["minsize", path(&g), "--witness-out", path(&witness)]);
    assert!(stdout(&o).starts_with("size 8\n"));
    assert_eq!(agames(&["verify", "strategy", path(&g), path(&witness)]).status.code(), Some(0));
}

#[test]
fn vector_games_pass_the_criterion_check() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("v.tg");
    let ord = dir.path().join("v.order");
    agames(&["gen", "vector", "--dims", "2", "--bound", "3", "-o", path(&g), "--order-out", path(&ord)]);
    let o = agames(&["verify", "criterion", path(&g), "--order", "vector"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("criterion holds\n"));
    let file = format!("file:{}", path(&ord));
    assert_eq!(agames(&["verify", "tba-sim", path(&g), "--order", &file]).status.code(), Some(0));
}

#[test]
fn implicit_runs_match_explicit_ones() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("n.tg");
    agames(&["gen", "nim", "--n", "20", "--fig1-extras", "-o", path(&g)]);
    let e = stdout(&agames(&["solve", path(&g), "--algo", "otfur-ac", "--order", "nim-mod3"]));
    let i = stdout(&agames(&["solve", "--implicit", "nim-extras:20", "--algo", "otfur-ac"]));
    for key in ["vertices_explored", "edges_popped", "reevaluations", "postponements"] {
        assert_eq!(stat(&e, key), stat(&i, key), "{key}");
    }
    let o = agames(&["solve", "--implicit", "nim:20", "--algo", "otfur-ac"]);
    assert_eq!(o.status.code(), Some(2), "rule-only nim is not tba for the mod-3 order");
}

#[test]
fn conflicting_flags_are_rejected() {
    let nim8 = fixture("nim8.tg");
    assert_eq!(agames(&["solve", path(&nim8), "--implicit", "nim:8"]).status.code(), Some(2));
    assert_eq!(agames(&["solve"]).status.code(), Some(2));
    assert_eq!(agames(&["solve", path(&nim8), "--algo", "otfur", "--order", "nim-mod3"]).status.code(), Some(2));
    assert_eq!(agames(&["solve", "--implicit", "nim:8", "--check-invariants"]).status.code(), Some(2));
    assert_eq!(agames(&["solve", "/nonexistent.tg"]).status.code(), Some(2));
}

#[test]
fn bench_shows_pruning_and_is_thread_independent() {
    let one = agames(&["bench", "nim", "--n", "50,100,200"]);
    assert_eq!(one.status.code(), Some(0));
    let four = agames(&["bench", "nim", "--n", "50,100,200", "--threads", "4"]);
    let table = |o: &Output| -> Vec<String> {
        stdout(o).lines().filter(|l| !l.starts_with("wall_time_ms")).map(String::from).collect()
    };
    assert_eq!(table(&one), table(&four));
    let rows = table(&one);
    assert_eq!(rows[0], "instance algo winner vertices_explored edges_popped");
    for n in [50, 100, 200] {
        let explored = |algo: &str| -> u64 {
            let row = rows.iter().find(|r| r.starts_with(&format!("nim{n} {algo} "))).unwrap();
            row.split(' ').nth(3).unwrap().parse().unwrap()
        };
        assert!(explored("otfur-ac") < explored("otfur"), "nim{n}");
    }
}
