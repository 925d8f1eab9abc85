#![allow(dead_code)]

use std::path::PathBuf;

use antichain_games::arena::{parse_game, SafetyGame};
use antichain_games::gamegen::VectorGameSpec;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn load(name: &str) -> SafetyGame {
    parse_game(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

/// The vector games exercised by the property suites.
pub fn vector_family() -> Vec<VectorGameSpec> {
    let mut out: Vec<VectorGameSpec> = [(1, 2), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]
        .into_iter()
        .map(|(d, b)| VectorGameSpec::new(d, b))
        .collect();
    out.push(VectorGameSpec::new(2, 3).without_bad());
    out
}
