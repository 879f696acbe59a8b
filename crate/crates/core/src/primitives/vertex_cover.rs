use crate::graph::SimpleGraph;

/// Endpoints of a greedy maximal matching; covers every edge and is at most
/// twice the size of a minimum vertex cover. The graph may be disconnected.
pub fn vertex_cover_2approx(g: &SimpleGraph) -> Vec<usize> {
    let mut taken = vec![false; g.vertex_count()];
    for (u, v) in g.edges() {
        if !taken[u] && !taken[v] {
            taken[u] = true;
            taken[v] = true;
        }
    }
    (0..g.vertex_count()).filter(|&v| taken[v]).collect()
}

pub fn is_vertex_cover(g: &SimpleGraph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in cover {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn examples() {
        assert!(vertex_cover_2approx(&SimpleGraph::empty(4)).is_empty());
        assert_eq!(vertex_cover_2approx(&Graph::path(2).unwrap()), vec![0, 1]);
        let tri = Graph::complete(3).unwrap();
        let c = vertex_cover_2approx(&tri);
        assert_eq!(c.len(), 2);
        assert!(is_vertex_cover(&tri, &c));
    }
}
