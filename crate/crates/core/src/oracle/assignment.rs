//! Square min-cost and bottleneck assignment.

use crate::primitives::{max_bipartite_matching, BipartiteGraph};

/// Hungarian algorithm with row/column potentials, `O(k^3)`.
/// Returns the total cost and the column assigned to each row.
pub fn min_cost_assignment(cost: &[Vec<u64>]) -> (u64, Vec<usize>) {
    let k = cost.len();
    if k == 0 {
        return (0, Vec::new());
    }
    assert!(cost.iter().all(|r| r.len() == k), "cost matrix must be square");
    const INF: i64 = i64::MAX / 4;
    // 1-based internally; column 0 is a virtual start.
    let mut u = vec![0i64; k + 1];
    let mut v = vec![0i64; k + 1];
    let mut row_of = vec![0usize; k + 1];
    let mut way = vec![0usize; k + 1];
    for i in 1..=k {
        row_of[0] = i;
        let mut j0 = 0;
        let mut min = vec![INF; k + 1];
        let mut used = vec![false; k + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=k {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] as i64 - u[i0] - v[j];
                    if cur < min[j] {
                        min[j] = cur;
                        way[j] = j0;
                    }
                    if min[j] < delta {
                        delta = min[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=k {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    min[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut col_of = vec![0; k];
    for j in 1..=k {
        col_of[row_of[j] - 1] = j - 1;
    }
    let total = (0..k).map(|r| cost[r][col_of[r]]).sum();
    (total, col_of)
}

/// Assignment minimizing the largest entry: binary search over the distinct
/// values, feasibility by a perfect matching on the entries below the threshold.
pub fn bottleneck_assignment(cost: &[Vec<u64>]) -> (u64, Vec<usize>) {
    let k = cost.len();
    if k == 0 {
        return (0, Vec::new());
    }
    let mut values: Vec<u64> = cost.iter().flatten().copied().collect();
    values.sort_unstable();
    values.dedup();
    let try_cap = |cap: u64| {
        let adj = cost
            .iter()
            .map(|row| (0..k).filter(|&j| row[j] <= cap).collect())
            .collect();
        let m = max_bipartite_matching(&BipartiteGraph::from_adjacency(k, adj));
        m.saturates_left().then(|| (0..k).map(|r| m.mate_of_left(r).unwrap()).collect::<Vec<_>>())
    };
    let (mut lo, mut hi) = (0, values.len() - 1);
    let mut best = try_cap(values[hi]).expect("full matrix has a perfect matching");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match try_cap(values[mid]) {
            Some(a) => {
                best = a;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    (values[lo], best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn matches_permutation_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let k = rng.gen_range(1..=5);
            let cost: Vec<Vec<u64>> =
                (0..k).map(|_| (0..k).map(|_| rng.gen_range(0..9)).collect()).collect();
            let perms = permutations(k);
            let sum = perms.iter().map(|p| (0..k).map(|r| cost[r][p[r]]).sum::<u64>()).min();
            let max = perms.iter().map(|p| (0..k).map(|r| cost[r][p[r]]).max().unwrap()).min();
            let (s, a) = min_cost_assignment(&cost);
            assert_eq!(Some(s), sum);
            assert_eq!(s, (0..k).map(|r| cost[r][a[r]]).sum::<u64>());
            let (m, b) = bottleneck_assignment(&cost);
            assert_eq!(Some(m), max);
            assert_eq!(m, (0..k).map(|r| cost[r][b[r]]).max().unwrap());
        }
    }
}
