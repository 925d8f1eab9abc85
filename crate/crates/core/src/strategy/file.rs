//! Strategy files: one `map <vertex> <successor>` line per support entry,
//! written in ascending vertex-id order. Absent vertices are ⋆.

use std::fmt::Write as _;

use super::{check_support, StarStrategy, StrategyError};
use crate::arena::{text_tokens, ParseError, SafetyGame};

pub fn parse_strategy(input: &str, g: &SafetyGame) -> Result<StarStrategy, StrategyError> {
    let mut s = StarStrategy::new();
    for (i, raw) in input.lines().enumerate() {
        let ln = i + 1;
        match text_tokens(raw).as_slice() {
            [] => {}
            ["map", v, w] => {
                let lookup = |n: &str| g.vertex(n).map_err(|e| ParseError::new(ln, e.to_string()));
                let (v, w) = (lookup(v)?, lookup(w)?);
                if s.insert(v, w).is_some() {
                    return Err(ParseError::new(ln, format!("`{}` mapped twice", g.name_of(v))).into());
                }
            }
            _ => return Err(ParseError::new(ln, "expected `map <vertex> <successor>`").into()),
        }
    }
    check_support(g, &s)?;
    Ok(s)
}

pub fn write_strategy(g: &SafetyGame, s: &StarStrategy) -> String {
    let mut out = String::new();
    for (&v, &w) in s.iter() {
        writeln!(out, "map {} {}", g.name_of(v), g.name_of(w)).unwrap();
    }
    out
}
