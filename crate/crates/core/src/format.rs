//! Plain-text instance and solution files.
//!
//! Instance:
//!
//! ```text
//! pebblemotion v1
//! graph 4
//! e 0 1
//! e 1 2
//! e 2 3
//! p 0
//! p 3
//! goal stcut 0 3
//! ```
//!
//! Solution: one `mu <pebble> <vertex>` line per pebble. In both formats
//! blank lines and lines starting with `#` are ignored.

use thiserror::Error;

use crate::error::{GraphError, InstanceError};
use crate::graph::{Graph, SimpleGraph};
use crate::instance::{Goal, Instance, Solution};

pub const HEADER: &str = "pebblemotion v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Edge { line: usize, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, words)) if words.join(" ") == HEADER => {}
        Some((line, _)) => return Err(syntax(line, format!("expected header `{HEADER}`"))),
        None => return Err(syntax(0, "empty file")),
    }
    let (mut graph, mut sigma, mut goal): (Option<SimpleGraph>, Vec<usize>, Option<Goal>) =
        (None, Vec::new(), None);
    for (line, words) in lines {
        match words.as_slice() {
            ["graph", n] => {
                if graph.is_some() {
                    return Err(syntax(line, "second `graph` line"));
                }
                graph = Some(SimpleGraph::empty(number(line, n, "a vertex count")?));
            }
            ["e", u, v] => {
                let g = graph.as_mut().ok_or_else(|| syntax(line, "edge before `graph` line"))?;
                let (u, v) = (number(line, u, "a vertex")?, number(line, v, "a vertex")?);
                g.add_edge(u, v).map_err(|source| FormatError::Edge { line, source })?;
            }
            ["p", v] => {
                let n = graph.as_ref().ok_or_else(|| syntax(line, "pebble before `graph` line"))?.vertex_count();
                let v = number(line, v, "a vertex")?;
                if v >= n {
                    return Err(syntax(line, format!("pebble vertex {v} out of range (n = {n})")));
                }
                sigma.push(v);
            }
            ["goal", rest @ ..] => {
                if goal.is_some() {
                    return Err(syntax(line, "second `goal` line"));
                }
                goal = Some(match rest {
                    ["con"] => Goal::Con,
                    ["ind"] => Goal::Ind,
                    ["clique"] => Goal::Clique,
                    ["stcut", s, t] => Goal::StCut {
                        s: number(line, s, "a vertex")?,
                        t: number(line, t, "a vertex")?,
                    },
                    _ => return Err(syntax(line, "expected `goal con|ind|clique|stcut <s> <t>`")),
                });
            }
            _ => return Err(syntax(line, format!("unrecognized line `{}`", words.join(" ")))),
        }
    }
    let graph = graph.ok_or_else(|| syntax(0, "missing `graph` line"))?;
    let goal = goal.ok_or_else(|| syntax(0, "missing `goal` line"))?;
    Ok(Instance::new(Graph::from_simple(graph)?, sigma, goal)?)
}

/// Canonical text: sorted edges, pebbles in id order.
pub fn write_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = format!("{HEADER}\ngraph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for &s in inst.sigma() {
        out.push_str(&format!("p {s}\n"));
    }
    out.push_str(&match inst.goal() {
        Goal::StCut { s, t } => format!("goal stcut {s} {t}\n"),
        other => format!("goal {}\n", other.name()),
    });
    out
}

/// Reads a solution for `inst`; every pebble must appear exactly once.
pub fn parse_solution(text: &str, inst: &Instance) -> Result<Solution, FormatError> {
    let k = inst.pebble_count();
    let n = inst.vertex_count();
    let mut mu: Vec<Option<usize>> = vec![None; k];
    for (line, words) in content_lines(text) {
        let ["mu", p, v] = words.as_slice() else {
            return Err(syntax(line, "expected `mu <pebble> <vertex>`"));
        };
        let (p, v) = (number(line, p, "a pebble")?, number(line, v, "a vertex")?);
        if p >= k {
            return Err(syntax(line, format!("pebble {p} out of range (k = {k})")));
        }
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
        }
        if mu[p].replace(v).is_some() {
            return Err(syntax(line, format!("pebble {p} assigned twice")));
        }
    }
    match mu.iter().position(Option::is_none) {
        Some(p) => Err(syntax(0, format!("pebble {p} has no end vertex"))),
        None => Ok(Solution::new(mu.into_iter().map(Option::unwrap).collect())),
    }
}

pub fn write_solution(sol: &Solution) -> String {
    sol.mu.iter().enumerate().map(|(p, v)| format!("mu {p} {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const STCUT: &str = "pebblemotion v1\ngraph 4\ne 0 1\ne 1 2\ne 2 3\np 0\np 3\ngoal stcut 0 3\n";

    #[test]
    fn canonical_round_trip() {
        let inst = parse_instance(STCUT).unwrap();
        assert_eq!(write_instance(&inst), STCUT);
        let messy = "# a comment\n\npebblemotion v1\ngraph 4\ne 3 2\np 0\ne 1 0\ne 2 1\np 3\ngoal   stcut 0 3\n";
        assert_eq!(write_instance(&parse_instance(messy).unwrap()), STCUT);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = "pebblemotion v1\ngraph 3\ne 0 1\ne 1 0\np 0\ngoal con\n";
        assert_eq!(
            parse_instance(dup).unwrap_err(),
            FormatError::Edge { line: 4, source: GraphError::DuplicateEdge(0, 1) }
        );
        let lp = "pebblemotion v1\ngraph 3\ne 1 1\n";
        assert!(matches!(parse_instance(lp), Err(FormatError::Edge { line: 3, .. })));
        let range = "pebblemotion v1\ngraph 2\ne 0 1\np 5\ngoal con\n";
        assert!(matches!(parse_instance(range), Err(FormatError::Syntax { line: 4, .. })));
        let split = "pebblemotion v1\ngraph 3\ne 0 1\np 0\ngoal con\n";
        assert_eq!(parse_instance(split).unwrap_err(), FormatError::Graph(GraphError::Disconnected));
        let empty = "pebblemotion v1\ngraph 2\ne 0 1\ngoal ind\n";
        assert_eq!(parse_instance(empty).unwrap_err(), FormatError::Instance(InstanceError::NoPebbles));
        assert!(matches!(parse_instance("hello\n"), Err(FormatError::Syntax { line: 1, .. })));
        let goal = "pebblemotion v1\ngraph 2\ne 0 1\np 0\ngoal cut\n";
        assert!(matches!(parse_instance(goal), Err(FormatError::Syntax { line: 5, .. })));
    }

    #[test]
    fn solutions() {
        let inst = parse_instance(STCUT).unwrap();
        let sol = parse_solution("mu 1 2\n# moved\nmu 0 1\n", &inst).unwrap();
        assert_eq!(sol.mu, vec![1, 2]);
        assert_eq!(parse_solution(&write_solution(&sol), &inst).unwrap(), sol);
        assert!(parse_solution("mu 0 1\n", &inst).is_err());
        assert!(matches!(parse_solution("mu 0 1\nmu 0 2\n", &inst), Err(FormatError::Syntax { line: 2, .. })));
    }
}
