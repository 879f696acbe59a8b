//! 3-CNF formulas with DIMACS input and an exhaustive satisfiability check.

use std::fmt;

use crate::error::{CnfError, SolveError};

/// Largest variable count [`sat_bruteforce`] accepts.
pub const SAT_VARIABLE_LIMIT: usize = 20;

/// A variable `1..=τ`, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// DIMACS form: `var` or `-var`.
    pub fn signed(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", if self.negated { "~" } else { "" }, self.var)
    }
}

/// Conjunction of clauses with exactly three literals each. Literals may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    variables: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    pub fn new(variables: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, CnfError> {
        if variables == 0 || clauses.is_empty() {
            return Err(CnfError::Empty);
        }
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var == 0 || l.var > variables) {
                return Err(CnfError::VariableOutOfRange { clause: j + 1, literal: l.signed(), variables });
            }
        }
        Ok(Cnf3 { variables, clauses })
    }

    /// Builds from DIMACS-style signed literals.
    pub fn from_signed(variables: usize, clauses: &[[i64; 3]]) -> Result<Self, CnfError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, c) in clauses.iter().enumerate() {
            let mut lits = [Literal::pos(1); 3];
            for (slot, &x) in lits.iter_mut().zip(c) {
                if x == 0 {
                    return Err(CnfError::VariableOutOfRange { clause: j + 1, literal: 0, variables });
                }
                *slot = Literal { var: x.unsigned_abs() as usize, negated: x < 0 };
            }
            out.push(lits);
        }
        Cnf3::new(variables, out)
    }

    pub fn variable_count(&self) -> usize {
        self.variables
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then 0-terminated clauses of exactly three literals.
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<[Literal; 3]> = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            let syntax = |message: String| CnfError::Syntax { line: line_no, message };
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() {
                    return Err(syntax("second problem line".into()));
                }
                match parts.as_slice() {
                    ["p", "cnf", v, c] => {
                        let v = v.parse().map_err(|_| syntax(format!("bad variable count {v:?}")))?;
                        let c = c.parse().map_err(|_| syntax(format!("bad clause count {c:?}")))?;
                        header = Some((v, c));
                    }
                    _ => return Err(syntax("expected `p cnf <variables> <clauses>`".into())),
                }
                continue;
            }
            let Some((variables, _)) = header else {
                return Err(syntax("clause before the `p cnf` header".into()));
            };
            for tok in line.split_whitespace() {
                let x: i64 = tok.parse().map_err(|_| syntax(format!("bad literal {tok:?}")))?;
                if x != 0 {
                    current.push(x);
                    continue;
                }
                let clause = clauses.len() + 1;
                if current.len() != 3 {
                    return Err(CnfError::Arity { clause, got: current.len() });
                }
                if let Some(&bad) = current.iter().find(|x| x.unsigned_abs() as usize > variables) {
                    return Err(CnfError::VariableOutOfRange { clause, literal: bad, variables });
                }
                clauses.push(std::array::from_fn(|i| Literal {
                    var: current[i].unsigned_abs() as usize,
                    negated: current[i] < 0,
                }));
                current.clear();
            }
        }
        let Some((variables, expected)) = header else {
            return Err(CnfError::Syntax { line: 0, message: "missing `p cnf` header".into() });
        };
        if !current.is_empty() {
            return Err(CnfError::Arity { clause: clauses.len() + 1, got: current.len() });
        }
        if clauses.len() != expected {
            return Err(CnfError::ClauseCount { expected, got: clauses.len() });
        }
        Cnf3::new(variables, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variables, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0].signed(), c[1].signed(), c[2].signed()));
        }
        out
    }
}

impl fmt::Display for Cnf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({} | {} | {})", c[0], c[1], c[2])?;
        }
        Ok(())
    }
}

/// Whether some assignment satisfies `f`, by trying all `2^τ`.
pub fn sat_bruteforce(f: &Cnf3) -> Result<bool, SolveError> {
    let tau = f.variable_count();
    if tau > SAT_VARIABLE_LIMIT {
        return Err(SolveError::GuardExceeded {
            what: "variables for brute-force satisfiability",
            value: tau as u128,
            limit: SAT_VARIABLE_LIMIT as u128,
        });
    }
    let mut assignment = vec![false; tau];
    Ok((0u32..1 << tau).any(|bits| {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = bits >> i & 1 == 1;
        }
        f.satisfied_by(&assignment)
    }))
}
