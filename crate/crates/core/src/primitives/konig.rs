use std::collections::VecDeque;

use super::matching::{max_bipartite_matching, BipartiteGraph};
use crate::error::GraphError;
use crate::graph::{Bipartition, SimpleGraph};

/// Maximum independent set of a bipartite graph through König's theorem.
///
/// Let `Z` be the vertices reachable from unmatched left vertices along
/// alternating paths. `(L \ Z) ∪ (R ∩ Z)` is a minimum vertex cover and its
/// complement `(L ∩ Z) ∪ (R \ Z)` is returned, sorted.
pub fn max_independent_set_bipartite(
    g: &SimpleGraph,
    parts: &Bipartition,
) -> Result<Vec<usize>, GraphError> {
    parts.sides(g)?;
    let n = g.vertex_count();
    let mut index = vec![0; n];
    for (i, &v) in parts.left.iter().enumerate() {
        index[v] = i;
    }
    for (i, &v) in parts.right.iter().enumerate() {
        index[v] = i;
    }
    let adj = parts
        .left
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|&v| index[v]).collect())
        .collect();
    let h = BipartiteGraph::from_adjacency(parts.right.len(), adj);
    let m = max_bipartite_matching(&h);

    let mut left_seen = vec![false; parts.left.len()];
    let mut right_seen = vec![false; parts.right.len()];
    let mut queue: VecDeque<usize> =
        (0..parts.left.len()).filter(|&l| m.mate_of_left(l).is_none()).collect();
    for &l in &queue {
        left_seen[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in h.neighbors(l) {
            if right_seen[r] || m.mate_of_left(l) == Some(r) {
                continue;
            }
            right_seen[r] = true;
            if let Some(next) = m.mate_of_right(r) {
                if !left_seen[next] {
                    left_seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }

    let mut set: Vec<usize> = parts
        .left
        .iter()
        .enumerate()
        .filter(|&(i, _)| left_seen[i])
        .map(|(_, &v)| v)
        .chain(parts.right.iter().enumerate().filter(|&(i, _)| !right_seen[i]).map(|(_, &v)| v))
        .collect();
    set.sort_unstable();
    Ok(set)
}
