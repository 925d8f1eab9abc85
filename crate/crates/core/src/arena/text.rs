//! Line-oriented text format for explicit games.
//!
//! ```text
//! game <name>
//! v <id> <A|B> [bad]
//! e <src> <dst> [<label>]
//! init <id>
//! ```
//!
//! `#` starts a comment. Every `v` line precedes every `e` line and `init`
//! appears exactly once. [`write_game`] emits vertices and edges in insertion
//! order, so parse-then-write is the identity on emitted files.

use std::fmt::Write as _;

use thiserror::Error;

use super::{ArenaError, GameBuilder, Player, SafetyGame};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Strips a trailing `#` comment and splits on whitespace.
pub(crate) fn tokens(line: &str) -> Vec<&str> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    body.split_whitespace().collect()
}

pub fn parse_game(input: &str) -> Result<SafetyGame, ParseError> {
    let mut name: Option<String> = None;
    let mut builder: Option<GameBuilder> = None;
    let mut seen_edge = false;
    let mut init: Option<(usize, String)> = None;

    let arena = |line: usize, e: ArenaError| ParseError::new(line, e.to_string());

    for (i, raw) in input.lines().enumerate() {
        let ln = i + 1;
        let toks = tokens(raw);
        let Some((&kw, args)) = toks.split_first() else {
            continue;
        };
        match kw {
            "game" => {
                if name.is_some() {
                    return Err(ParseError::new(ln, "duplicate `game` line"));
                }
                let [n] = args else {
                    return Err(ParseError::new(ln, "expected `game <name>`"));
                };
                name = Some(n.to_string());
            }
            "v" => {
                if seen_edge {
                    return Err(ParseError::new(ln, "`v` line after an `e` line"));
                }
                let (id, owner, bad) = match args {
                    [id, owner] => (id, owner, false),
                    [id, owner, flag] if *flag == "bad" => (id, owner, true),
                    _ => return Err(ParseError::new(ln, "expected `v <id> <A|B> [bad]`")),
                };
                let owner = match *owner {
                    "A" => Player::A,
                    "B" => Player::B,
                    other => return Err(ParseError::new(ln, format!("unknown owner `{other}`"))),
                };
                let b = builder.get_or_insert_with(|| GameBuilder::new(""));
                b.add_vertex(*id, owner, bad).map_err(|e| arena(ln, e))?;
            }
            "e" => {
                seen_edge = true;
                let (src, dst, label) = match args {
                    [s, d] => (s, d, None),
                    [s, d, l] => (s, d, Some(*l)),
                    _ => return Err(ParseError::new(ln, "expected `e <src> <dst> [<label>]`")),
                };
                let b = builder.get_or_insert_with(|| GameBuilder::new(""));
                b.add_edge_by_name(src, dst, label).map_err(|e| arena(ln, e))?;
            }
            "init" => {
                if init.is_some() {
                    return Err(ParseError::new(ln, "`init` appears more than once"));
                }
                let [id] = args else {
                    return Err(ParseError::new(ln, "expected `init <id>`"));
                };
                init = Some((ln, id.to_string()));
            }
            other => return Err(ParseError::new(ln, format!("unknown directive `{other}`"))),
        }
    }

    let (init_line, init_name) =
        init.ok_or_else(|| ParseError::new(input.lines().count().max(1), "missing `init` line"))?;
    let mut b = builder.ok_or_else(|| ParseError::new(init_line, "game has no vertices"))?;
    let v = b.vertex(&init_name).map_err(|e| arena(init_line, e))?;
    b.set_initial(v);
    b.name = name.unwrap_or_else(|| "unnamed".to_string());
    b.build().map_err(|e| arena(init_line, e))
}

pub fn write_game(g: &SafetyGame) -> String {
    let mut out = String::new();
    writeln!(out, "game {}", g.name()).unwrap();
    for v in g.vertex_ids() {
        let bad = if g.is_bad(v) { " bad" } else { "" };
        writeln!(out, "v {} {}{}", g.name_of(v), g.owner(v), bad).unwrap();
    }
    for e in g.edges() {
        match &e.label {
            Some(l) => writeln!(out, "e {} {} {}", g.name_of(e.src), g.name_of(e.dst), l),
            None => writeln!(out, "e {} {}", g.name_of(e.src), g.name_of(e.dst)),
        }
        .unwrap();
    }
    writeln!(out, "init {}", g.name_of(g.initial())).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# a tiny game
game tiny
v i A
v x B bad   # the trap
v y B
e i x go
e i y
init i
";

    #[test]
    fn parses_comments_and_labels() {
        let g = parse_game(SMALL).unwrap();
        assert_eq!(g.name(), "tiny");
        assert_eq!(g.num_vertices(), 3);
        assert!(g.is_bad(g.v("x")));
        assert_eq!(g.edges()[0].label.as_deref(), Some("go"));
        assert_eq!(g.edges()[1].label, None);
    }

    #[test]
    fn emitted_text_round_trips() {
        let g = parse_game(SMALL).unwrap();
        let text = write_game(&g);
        assert_eq!(write_game(&parse_game(&text).unwrap()), text);
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("v i A\ne i i\nv j B\ninit i\n", 3),
            ("v i A\ninit i\ninit i\n", 3),
            ("v i C\ninit i\n", 1),
            ("v i A\n", 1),
            ("v i A\ne i z\ninit i\n", 2),
            ("v i A\nv i B\ninit i\n", 2),
            ("v i A\nfoo\ninit i\n", 2),
        ];
        for (text, line) in cases {
            let err = parse_game(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?} -> {err}");
        }
    }
}
