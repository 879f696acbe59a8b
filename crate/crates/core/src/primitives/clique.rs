use crate::graph::SimpleGraph;
use crate::num::CostValue;

/// Maximum-weight clique by branch and bound.
///
/// Candidates are ordered by descending weight; a branch is cut once its
/// weight plus everything still addable cannot beat the incumbent.
/// Zero-weight vertices never enter the result. Exact on every input,
/// exponential in the worst case.
pub fn max_weight_clique<W: CostValue>(g: &SimpleGraph, weights: &[W]) -> Vec<usize> {
    assert_eq!(weights.len(), g.vertex_count(), "one weight per vertex");
    let mut order: Vec<usize> =
        (0..g.vertex_count()).filter(|&v| weights[v] > W::zero()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));

    let mut search = Search { g, weights, best: Vec::new(), best_weight: W::zero() };
    let mut current = Vec::new();
    search.expand(&mut current, W::zero(), &order);
    search.best.sort_unstable();
    search.best
}

struct Search<'a, W> {
    g: &'a SimpleGraph,
    weights: &'a [W],
    best: Vec<usize>,
    best_weight: W,
}

impl<W: CostValue> Search<'_, W> {
    fn expand(&mut self, current: &mut Vec<usize>, weight: W, candidates: &[usize]) {
        if weight > self.best_weight {
            self.best_weight = weight;
            self.best = current.clone();
        }
        let mut remaining =
            candidates.iter().fold(W::zero(), |acc, &v| acc.plus(self.weights[v]));
        for (i, &v) in candidates.iter().enumerate() {
            if weight.plus(remaining) <= self.best_weight {
                return;
            }
            remaining = remaining - self.weights[v];
            let next: Vec<usize> =
                candidates[i + 1..].iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
            current.push(v);
            self.expand(current, weight.plus(self.weights[v]), &next);
            current.pop();
        }
    }
}

pub fn clique_weight<W: CostValue>(clique: &[usize], weights: &[W]) -> W {
    clique.iter().fold(W::zero(), |acc, &v| acc.plus(weights[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn examples() {
        assert_eq!(max_weight_clique(&SimpleGraph::empty(1), &[5u64]), vec![0]);
        let p3 = Graph::path(3).unwrap();
        let q = max_weight_clique(&p3, &[2u64, 0, 1]);
        assert_eq!(q, vec![0]);
        assert_eq!(clique_weight(&q, &[2u64, 0, 1]), 2);
        assert_eq!(max_weight_clique(&Graph::complete(3).unwrap(), &[1u32, 1, 1]), vec![0, 1, 2]);
    }

    #[test]
    fn zero_weights_excluded() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(max_weight_clique(&k3, &[2u8, 1, 0]), vec![0, 1]);
        assert!(max_weight_clique(&k3, &[0u8, 0, 0]).is_empty());
    }

    #[test]
    fn light_heavy_tradeoff() {
        // Heavy isolated edge 0-1 (weight 3+3) beats a light triangle 2-3-4.
        let g = SimpleGraph::new(5, [(0, 1), (2, 3), (3, 4), (2, 4), (1, 2)]).unwrap();
        assert_eq!(max_weight_clique(&g, &[3u64, 3, 1, 1, 1]), vec![0, 1]);
        assert_eq!(max_weight_clique(&g, &[1u64, 1, 2, 2, 2]), vec![2, 3, 4]);
    }
}
