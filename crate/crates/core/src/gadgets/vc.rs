use crate::error::{GadgetError, SolveError};
use crate::gadgets::{Builder, GadgetInstance, Label};
use crate::graph::{Graph, SimpleGraph};
use crate::instance::{Goal, Measure};

const BRUTE_FORCE_LIMIT: usize = 20;

fn guard(g: &SimpleGraph, what: &'static str) -> Result<(), SolveError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::GuardExceeded { what, value: n as u128, limit: BRUTE_FORCE_LIMIT as u128 });
    }
    Ok(())
}

/// Complement of `h` plus an apex adjacent to everything, one pebble on each
/// vertex of `h`. The apex is the last vertex.
fn complement_with_apex(h: &SimpleGraph) -> Result<GadgetInstance, GadgetError> {
    let n = h.vertex_count();
    let mut b = Builder::default();
    for v in 0..n {
        b.vertex(Label::Original(v));
    }
    let apex = b.vertex(Label::Apex);
    for (u, v) in h.complement().edges() {
        b.edge(u, v);
    }
    for v in 0..n {
        b.edge(v, apex);
    }
    b.finish((0..n).collect(), |_| Goal::Clique, Vec::new())
}

/// Clique-Num instance whose optimum equals the minimum vertex cover of `h`.
pub fn gen_clique_num_from_vc(h: &SimpleGraph) -> Result<GadgetInstance, GadgetError> {
    complement_with_apex(h)
}

/// Clique-Sum instance whose optimum equals the minimum vertex cover of `h`.
/// Every pebble is adjacent to the apex, so a moved pebble pays exactly 1.
pub fn gen_clique_sum_from_vc(h: &SimpleGraph) -> Result<GadgetInstance, GadgetError> {
    complement_with_apex(h)
}

/// Clique-Max instance on `h` itself, a pebble per vertex. The optimum is at
/// most 1 iff `h` has a dominating clique.
pub fn gen_clique_max_from_domclique(h: &Graph) -> Result<GadgetInstance, GadgetError> {
    let mut b = Builder::default();
    for v in 0..h.vertex_count() {
        b.vertex(Label::Original(v));
    }
    for (u, v) in h.edges() {
        b.edge(u, v);
    }
    b.finish((0..h.vertex_count()).collect(), |_| Goal::Clique, vec![(Measure::Max, 1)])
}

fn subsets_by_size(n: usize) -> impl Iterator<Item = u32> {
    let mut all: Vec<u32> = (0..1u32 << n).collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    all.into_iter()
}

/// Size of a minimum vertex cover by exhaustive search (`n <= 20`).
pub fn brute_force_vertex_cover(g: &SimpleGraph) -> Result<usize, SolveError> {
    guard(g, "vertices for brute-force vertex cover")?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Ok(subsets_by_size(g.vertex_count())
        .find(|m| edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
        .map(|m| m.count_ones() as usize)
        .expect("all vertices form a cover"))
}

/// Whether some clique dominates every vertex, by exhaustive search (`n <= 20`).
pub fn has_dominating_clique(g: &SimpleGraph) -> Result<bool, SolveError> {
    guard(g, "vertices for brute-force dominating clique")?;
    let n = g.vertex_count();
    Ok((1..1u32 << n).any(|m| {
        let members: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        g.is_clique(&members)
            && (0..n).all(|v| m >> v & 1 == 1 || g.neighbors(v).iter().any(|&w| m >> w & 1 == 1))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_solve;

    #[test]
    fn vertex_cover_gadgets() {
        let edge = SimpleGraph::new(2, [(0, 1)]).unwrap();
        let tri = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c4 = Graph::cycle(4).unwrap().into_structure();
        for (h, vc) in [(edge, 1), (SimpleGraph::empty(3), 0), (tri, 2), (c4, 2)] {
            assert_eq!(brute_force_vertex_cover(&h).unwrap(), vc);
            let num = gen_clique_num_from_vc(&h).unwrap();
            assert_eq!(oracle_solve(&num.instance, Measure::Num).unwrap().cost, vc as u64);
            let sum = gen_clique_sum_from_vc(&h).unwrap();
            assert_eq!(oracle_solve(&sum.instance, Measure::Sum).unwrap().cost, vc as u64);
            assert_eq!(num.vertex(Label::Apex), Some(h.vertex_count()));
        }
    }

    #[test]
    fn dominating_clique_gadget() {
        for (g, expect) in [
            (Graph::star(3).unwrap(), Some(1)),
            (Graph::complete(3).unwrap(), Some(0)),
            (Graph::path(4).unwrap(), None),
        ] {
            let inst = gen_clique_max_from_domclique(&g).unwrap().instance;
            let opt = oracle_solve(&inst, Measure::Max).unwrap().cost;
            let dom = has_dominating_clique(&g).unwrap();
            assert_eq!(dom, opt <= 1);
            if let Some(e) = expect {
                assert_eq!(opt, e);
            }
        }
    }
}
