//! Classical graph subroutines the approximation algorithms build on.

mod clique;
mod cut;
mod konig;
mod matching;
mod vertex_cover;

pub use clique::{clique_weight, max_weight_clique};
pub use cut::min_st_vertex_cut;
pub use konig::max_independent_set_bipartite;
pub use matching::{max_bipartite_matching, BipartiteGraph, Matching};
pub use vertex_cover::{is_vertex_cover, vertex_cover_2approx};

use crate::error::SolveError;
use crate::graph::SimpleGraph;

/// Largest graph on which a non-bipartite maximum independent set is searched.
pub const MIS_BRUTE_FORCE_LIMIT: usize = 25;

/// A maximum independent set: König on bipartite graphs, exhaustive clique
/// search in the complement otherwise (up to [`MIS_BRUTE_FORCE_LIMIT`] vertices).
pub fn maximum_independent_set(g: &SimpleGraph) -> Result<Vec<usize>, SolveError> {
    if let Some(parts) = g.two_coloring() {
        return Ok(max_independent_set_bipartite(g, &parts)?);
    }
    let n = g.vertex_count();
    if n > MIS_BRUTE_FORCE_LIMIT {
        return Err(SolveError::GuardExceeded {
            what: "vertex count for non-bipartite maximum independent set",
            value: n as u128,
            limit: MIS_BRUTE_FORCE_LIMIT as u128,
        });
    }
    Ok(max_weight_clique(&g.complement(), &vec![1u32; n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn independent_sets_on_both_routes() {
        assert_eq!(maximum_independent_set(&Graph::path(5).unwrap()).unwrap(), vec![0, 2, 4]);
        let c5 = Graph::cycle(5).unwrap();
        let s = maximum_independent_set(&c5).unwrap();
        assert_eq!(s.len(), 2);
        assert!(c5.is_independent(&s));
        let big = Graph::cycle(27).unwrap();
        assert!(matches!(maximum_independent_set(&big), Err(SolveError::GuardExceeded { .. })));
    }
}
