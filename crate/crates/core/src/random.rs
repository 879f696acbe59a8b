//! Seedable random instance generators for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, SimpleGraph};

/// Uniform random labelled tree on `n >= 1` vertices, decoded from a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "a tree needs a vertex");
    if n <= 2 {
        return Graph::path(n).expect("paths are connected");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::new(n, edges).expect("decoded Prüfer sequences are trees")
}

/// Graph on `n` vertices where each pair is an edge with probability `p`.
/// May be disconnected.
pub fn random_simple_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// A random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_tree(n, rng).into_structure();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("checked absent");
            }
        }
    }
    Graph::from_simple(g).expect("contains a spanning tree")
}

/// Connected bipartite graph: a random tree plus cross-side pairs with probability `p`.
pub fn random_bipartite_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_tree(n, rng).into_structure();
    let sides = g.two_coloring().expect("trees are bipartite").sides(&g).expect("valid");
    for u in 0..n {
        for v in u + 1..n {
            if sides[u] != sides[v] && !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("checked absent");
            }
        }
    }
    Graph::from_simple(g).expect("contains a spanning tree")
}

/// `k` start vertices drawn uniformly with repetition.
pub fn random_sigma<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    (0..k).map(|_| rng.gen_range(0..n)).collect()
}

/// `k <= n` distinct start vertices.
pub fn random_distinct_sigma<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            let t = random_tree(n, &mut rng);
            assert!(t.is_tree());
            assert!(random_connected_graph(n, 0.3, &mut rng).is_connected());
            let b = random_bipartite_graph(n, 0.5, &mut rng);
            assert!(b.is_connected() && b.is_bipartite());
        }
        let s = random_distinct_sigma(10, 4, &mut rng);
        let mut d = s.clone();
        d.sort_unstable();
        d.dedup();
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let a = random_tree(40, &mut ChaCha8Rng::seed_from_u64(3));
        let b = random_tree(40, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }
}
