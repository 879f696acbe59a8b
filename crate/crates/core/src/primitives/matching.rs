use crate::error::GraphError;

/// Bipartite graph given by its two side sizes and `(left, right)` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new<I>(left_count: usize, right_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); left_count];
        for (l, r) in edges {
            if l >= left_count {
                return Err(GraphError::VertexOutOfRange { vertex: l, n: left_count });
            }
            if r >= right_count {
                return Err(GraphError::VertexOutOfRange { vertex: r, n: right_count });
            }
            if adj[l].contains(&r) {
                return Err(GraphError::DuplicateEdge(l, r));
            }
            adj[l].push(r);
        }
        Ok(BipartiteGraph { left_count, right_count, adj })
    }

    /// Edges from a per-left-vertex adjacency builder; never fails.
    pub(crate) fn from_adjacency(right_count: usize, adj: Vec<Vec<usize>>) -> Self {
        BipartiteGraph { left_count: adj.len(), right_count, adj }
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }
}

/// A set of disjoint `(left, right)` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_mate: Vec<Option<usize>>,
    right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_mate.iter().filter(|m| m.is_some()).count()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate.iter().enumerate().filter_map(|(l, m)| m.map(|r| (l, r))).collect()
    }

    pub fn mate_of_left(&self, left: usize) -> Option<usize> {
        self.left_mate[left]
    }

    pub fn mate_of_right(&self, right: usize) -> Option<usize> {
        self.right_mate[right]
    }

    pub fn saturates_left(&self) -> bool {
        self.left_mate.iter().all(Option::is_some)
    }
}

/// Maximum-cardinality matching by repeated augmenting-path search, `O(V * E)`.
pub fn max_bipartite_matching(h: &BipartiteGraph) -> Matching {
    let mut left_mate = vec![None; h.left_count];
    let mut right_mate = vec![None; h.right_count];
    let mut stamp = vec![usize::MAX; h.right_count];
    for l in 0..h.left_count {
        augment(h, l, l, &mut stamp, &mut left_mate, &mut right_mate);
    }
    Matching { left_mate, right_mate }
}

fn augment(
    h: &BipartiteGraph,
    l: usize,
    round: usize,
    stamp: &mut [usize],
    left_mate: &mut [Option<usize>],
    right_mate: &mut [Option<usize>],
) -> bool {
    for &r in &h.adj[l] {
        if stamp[r] == round {
            continue;
        }
        stamp[r] = round;
        let free = match right_mate[r] {
            None => true,
            Some(other) => augment(h, other, round, stamp, left_mate, right_mate),
        };
        if free {
            left_mate[l] = Some(r);
            right_mate[r] = Some(l);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matchings() {
        let k22 = BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(max_bipartite_matching(&k22).size(), 2);
        let single = BipartiteGraph::new(2, 1, [(0, 0)]).unwrap();
        assert_eq!(max_bipartite_matching(&single).size(), 1);
        let h = BipartiteGraph::new(3, 2, [(0, 0), (1, 0), (2, 1)]).unwrap();
        let m = max_bipartite_matching(&h);
        assert_eq!(m.size(), 2);
        for (l, r) in m.pairs() {
            assert!(h.neighbors(l).contains(&r));
            assert_eq!(m.mate_of_right(r), Some(l));
        }
    }

    #[test]
    fn needs_augmentation() {
        // Greedy would match 0-0 and strand 1.
        let h = BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0)]).unwrap();
        let m = max_bipartite_matching(&h);
        assert!(m.saturates_left());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(BipartiteGraph::new(1, 1, [(0, 1)]).is_err());
        assert!(BipartiteGraph::new(1, 1, [(0, 0), (0, 0)]).is_err());
    }
}
