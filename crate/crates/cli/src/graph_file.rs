//! DIMACS edge-format graphs: `p edge <n> <m>` then `e <u> <v>` with 1-based ids.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use pebblemotion::SimpleGraph;

pub fn parse(text: &str) -> Result<SimpleGraph> {
    let mut graph: Option<(SimpleGraph, usize)> = None;
    let mut seen = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let words: Vec<&str> = raw.split_whitespace().collect();
        let num = |w: &str| w.parse::<usize>().map_err(|_| anyhow!("line {line}: expected a number, found {w:?}"));
        match words.as_slice() {
            [] | ["c", ..] => {}
            ["p", "edge" | "col", n, m] => {
                if graph.is_some() {
                    bail!("line {line}: second problem line");
                }
                graph = Some((SimpleGraph::empty(num(n)?), num(m)?));
            }
            ["e", u, v] => {
                let (g, _) = graph.as_mut().ok_or_else(|| anyhow!("line {line}: edge before `p edge` line"))?;
                let (u, v) = (num(u)?, num(v)?);
                if u == 0 || v == 0 {
                    bail!("line {line}: vertex ids are 1-based");
                }
                g.add_edge(u - 1, v - 1).with_context(|| format!("line {line}"))?;
                seen += 1;
            }
            _ => bail!("line {line}: unrecognized line {:?}", raw.trim()),
        }
    }
    let (g, m) = graph.ok_or_else(|| anyhow!("missing `p edge <n> <m>` line"))?;
    if m != seen {
        bail!("problem line announces {m} edges, found {seen}");
    }
    Ok(g)
}

pub fn read(path: &Path) -> Result<SimpleGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}
