use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("literal {lit} is outside variables 1..={num_vars}")]
    VarOutOfRange { lit: i32, num_vars: u32 },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
}

fn parse_err(line: usize, message: impl Into<String>) -> CnfError {
    CnfError::Parse {
        line,
        message: message.into(),
    }
}

/// A CNF formula over variables `1..=num_vars`; literal `-i` is `¬x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>) -> Result<Self, CnfError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(CnfError::EmptyClause(i + 1));
            }
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() > num_vars {
                    return Err(CnfError::VarOutOfRange { lit, num_vars });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| lit_true(l, assignment)))
    }

    /// Satisfying assignment by exhaustive enumeration, in binary counting
    /// order with variable 1 as the lowest bit.
    pub fn solve_by_truth_table(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "truth tables are for small formulas");
        (0u64..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .find(|a| self.eval(a))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for c in &self.clauses {
            for l in c {
                write!(out, "{l} ").unwrap();
            }
            writeln!(out, "0").unwrap();
        }
        out
    }
}

pub(crate) fn lit_true(lit: i32, assignment: &[bool]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        value
    } else {
        !value
    }
}

/// Reads DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// then zero-terminated clauses that may span lines. A final clause without
/// its `0` is accepted; `%` ends the input.
pub fn parse_dimacs(input: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in input.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(parse_err(ln, "duplicate header"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [_, "cnf", v, c] = toks.as_slice() else {
                return Err(parse_err(ln, "expected `p cnf <vars> <clauses>`"));
            };
            let v = v.parse().map_err(|_| parse_err(ln, "bad variable count"))?;
            let c = c.parse().map_err(|_| parse_err(ln, "bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        if header.is_none() {
            return Err(parse_err(ln, "clause before `p cnf` header"));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| parse_err(ln, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(parse_err(ln, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (vars, count) = header.ok_or_else(|| parse_err(last_line, "missing `p cnf` header"))?;
    if clauses.len() != count {
        return Err(parse_err(
            last_line,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses)
}

/// Every formula over exactly `m ≤ max_vars` variables with between one and
/// `max_clauses` distinct clauses, without repeated literals inside a clause,
/// up to renaming and negating variables. Each class appears once, as its
/// lexicographically smallest member.
pub fn canonical_cnf_sweep(max_vars: u32, max_clauses: usize) -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for m in 1..=max_vars {
        let all_clauses = clauses_over(m);
        let symmetries = symmetries(m);
        let mut seen: BTreeSet<Vec<Vec<i32>>> = BTreeSet::new();
        let mut chosen: Vec<usize> = Vec::new();
        subsets(all_clauses.len(), max_clauses, 0, &mut chosen, &mut |idx| {
            let set: Vec<Vec<i32>> = idx.iter().map(|&i| all_clauses[i].clone()).collect();
            let canon = symmetries
                .iter()
                .map(|s| normalise(set.iter().map(|c| c.iter().map(|&l| s(l)).collect())))
                .min()
                .expect("identity symmetry");
            seen.insert(canon);
        });
        out.extend(seen.into_iter().map(|c| CnfFormula::new(m, c).expect("well-formed")));
    }
    out
}

fn clauses_over(m: u32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for code in 1..3u32.pow(m) {
        let mut c = Vec::new();
        let mut x = code;
        for v in 1..=m as i32 {
            match x % 3 {
                1 => c.push(v),
                2 => c.push(-v),
                _ => {}
            }
            x /= 3;
        }
        out.push(c);
    }
    out
}

type Symmetry = Box<dyn Fn(i32) -> i32>;

fn symmetries(m: u32) -> Vec<Symmetry> {
    let mut perms: Vec<Vec<i32>> = vec![vec![]];
    for v in 1..=m as i32 {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, v);
                    q
                })
            })
            .collect();
    }
    let mut out: Vec<Symmetry> = Vec::new();
    for p in perms {
        for flips in 0u32..1 << m {
            let p = p.clone();
            out.push(Box::new(move |l: i32| {
                let v = l.unsigned_abs() as usize;
                let sign = if flips >> (v - 1) & 1 == 1 { -l.signum() } else { l.signum() };
                sign * p[v - 1]
            }));
        }
    }
    out
}

fn normalise(clauses: impl Iterator<Item = Vec<i32>>) -> Vec<Vec<i32>> {
    let mut cs: Vec<Vec<i32>> = clauses
        .map(|mut c| {
            c.sort_by_key(|l| (l.abs(), *l < 0));
            c
        })
        .collect();
    cs.sort();
    cs
}

fn subsets(n: usize, max: usize, start: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if !chosen.is_empty() {
        f(chosen);
    }
    if chosen.len() == max {
        return;
    }
    for i in start..n {
        chosen.push(i);
        subsets(n, max, i + 1, chosen, f);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let text = "c example\np cnf 3 2\n1 2 -3 0\n-1 2\n 3 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.clauses(), &[vec![1, 2, -3], vec![-1, 2, 3]]);
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("1 0\n"), Err(CnfError::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n0\n"), Err(CnfError::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n3 0\n"), Err(CnfError::VarOutOfRange { lit: 3, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 0\n"), Err(CnfError::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 x 0\n"), Err(CnfError::Parse { .. })));
        assert_eq!(parse_dimacs("p cnf 1 1\n1\n%\n0\n").unwrap().clauses(), &[vec![1]]);
    }

    #[test]
    fn rejects_empty_clause() {
        assert_eq!(CnfFormula::new(2, vec![vec![1], vec![]]), Err(CnfError::EmptyClause(2)));
    }

    #[test]
    fn truth_table() {
        let f = CnfFormula::new(3, vec![vec![1, 2, -3], vec![-1, 2, 3]]).unwrap();
        let a = f.solve_by_truth_table().unwrap();
        assert!(f.eval(&a));
        let unsat = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(unsat.solve_by_truth_table(), None);
    }

    #[test]
    fn sweep_sizes() {
        let one = canonical_cnf_sweep(1, 3);
        // (x), (x)(¬x)
        assert_eq!(one.len(), 2);
        let all = canonical_cnf_sweep(3, 3);
        assert!(all.len() > 50 && all.len() < 1000, "{}", all.len());
        assert!(all.iter().any(|f| f.solve_by_truth_table().is_none()));
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }
}
