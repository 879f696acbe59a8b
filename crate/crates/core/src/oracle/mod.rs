//! Brute-force ground truth for small instances.
//!
//! Every search is guarded: instances whose search space exceeds the limit
//! are rejected with [`SolveError::GuardExceeded`] rather than truncated.

mod assignment;

pub use assignment::{bottleneck_assignment, min_cost_assignment};

use crate::error::SolveError;
use crate::instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
use crate::Cost;

/// Default bound on the number of placements `oracle_solve` and
/// `oracle_bounded` may enumerate.
pub const DEFAULT_PLACEMENT_LIMIT: u128 = 10_000_000;
/// Bound on the number of `k`-subsets `oracle_ind` may scan.
pub const SUBSET_LIMIT: u128 = 1_000_000;
/// Environment variable overriding [`DEFAULT_PLACEMENT_LIMIT`].
pub const LIMIT_ENV: &str = "PEBBLE_ORACLE_LIMIT";

/// Placement limit in effect: the environment override if it parses, else the default.
pub fn placement_limit() -> u128 {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_PLACEMENT_LIMIT)
}

fn guard(what: &'static str, value: u128, limit: u128) -> Result<(), SolveError> {
    if value > limit {
        Err(SolveError::GuardExceeded { what, value, limit })
    } else {
        Ok(())
    }
}

fn saturating_pow(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Exhaustive search over all `n^k` end maps, under [`placement_limit`].
pub fn oracle_solve(inst: &Instance, measure: Measure) -> Result<SolveReport, SolveError> {
    oracle_solve_with_limit(inst, measure, placement_limit())
}

/// Exhaustive search over all `n^k` end maps; the lexicographically smallest
/// optimal map is returned.
pub fn oracle_solve_with_limit(
    inst: &Instance,
    measure: Measure,
    limit: u128,
) -> Result<SolveReport, SolveError> {
    let (n, k) = (inst.vertex_count(), inst.pebble_count());
    guard("placements n^k", saturating_pow(n, k), limit)?;
    let mut search = Exhaustive {
        inst,
        measure,
        mu: vec![0; k],
        count: vec![0; n],
        distinct: 0,
        best: None,
    };
    search.descend(0, 0);
    match search.best {
        Some((cost, mu)) => {
            Ok(SolveReport::with_cost(Solution::new(mu), cost, measure, Guarantee::Exact, "oracle"))
        }
        None => Err(SolveError::Infeasible(format!("no placement satisfies the {} goal", inst.goal().name()))),
    }
}

struct Exhaustive<'a> {
    inst: &'a Instance,
    measure: Measure,
    mu: Vec<usize>,
    count: Vec<usize>,
    distinct: usize,
    best: Option<(Cost, Vec<usize>)>,
}

impl Exhaustive<'_> {
    fn combine(&self, acc: Cost, step: Cost) -> Cost {
        match self.measure {
            Measure::Max => acc.max(step),
            Measure::Sum | Measure::Num => acc + step,
        }
    }

    fn step_cost(&self, p: usize, v: usize) -> Cost {
        let s = self.inst.sigma()[p];
        match self.measure {
            Measure::Num => Cost::from(s != v),
            Measure::Sum | Measure::Max => self.inst.graph().distance(s, v) as Cost,
        }
    }

    // Partial costs only grow, so a branch whose prefix already matches the
    // incumbent cannot produce a strictly better, hence earlier-winning, map.
    fn descend(&mut self, p: usize, acc: Cost) {
        if matches!(&self.best, Some((b, _)) if acc >= *b) {
            return;
        }
        if p == self.mu.len() {
            let mask: Vec<bool> = self.count.iter().map(|&c| c > 0).collect();
            if self.inst.predicate_holds_mask(&mask, self.distinct) {
                self.best = Some((acc, self.mu.clone()));
            }
            return;
        }
        for v in 0..self.count.len() {
            let next = self.combine(acc, self.step_cost(p, v));
            self.mu[p] = v;
            self.count[v] += 1;
            if self.count[v] == 1 {
                self.distinct += 1;
            }
            self.descend(p + 1, next);
            self.count[v] -= 1;
            if self.count[v] == 0 {
                self.distinct -= 1;
            }
        }
    }
}

/// Exact Ind solver scanning independent `k`-sets and assigning pebbles
/// optimally to each.
pub fn oracle_ind(inst: &Instance, measure: Measure) -> Result<SolveReport, SolveError> {
    if inst.goal() != Goal::Ind {
        return Err(SolveError::GoalMismatch { expected: "ind", found: inst.goal().name() });
    }
    let (n, k) = (inst.vertex_count(), inst.pebble_count());
    if k > n {
        return Err(SolveError::Infeasible(format!("{k} pebbles cannot be independent on {n} vertices")));
    }
    guard("k-subsets C(n, k)", binomial(n, k), SUBSET_LIMIT)?;
    let g = inst.graph();
    let phi = inst.start_counts();
    let mut best: Option<(Cost, Vec<usize>)> = None;
    let mut chosen = Vec::with_capacity(k);
    let mut blocked = vec![0usize; n];
    let mut evaluate = |set: &[usize]| {
        let (cost, mu) = assign(inst, measure, set, &phi);
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, mu));
        }
    };
    independent_sets(g.structure(), k, 0, &mut chosen, &mut blocked, &mut evaluate);
    match best {
        Some((cost, mu)) => Ok(SolveReport::with_cost(
            Solution::new(mu),
            cost,
            measure,
            Guarantee::Exact,
            "oracle-ind",
        )),
        None => Err(SolveError::Infeasible(format!("the graph has no independent set of size {k}"))),
    }
}

fn independent_sets<F: FnMut(&[usize])>(
    g: &crate::graph::SimpleGraph,
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    blocked: &mut [usize],
    visit: &mut F,
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let n = g.vertex_count();
    for v in from..n {
        if n - v < k - chosen.len() {
            break;
        }
        if blocked[v] > 0 {
            continue;
        }
        chosen.push(v);
        for &w in g.neighbors(v) {
            blocked[w] += 1;
        }
        independent_sets(g, k, v + 1, chosen, blocked, visit);
        for &w in g.neighbors(v) {
            blocked[w] -= 1;
        }
        chosen.pop();
    }
}

/// Best assignment of the pebbles to the target set under `measure`.
fn assign(inst: &Instance, measure: Measure, set: &[usize], phi: &[usize]) -> (Cost, Vec<usize>) {
    let sigma = inst.sigma();
    if measure == Measure::Num {
        // Every target vertex that already holds a pebble keeps one of them.
        let mut mu = vec![usize::MAX; sigma.len()];
        let mut taken = vec![false; set.len()];
        for (i, &v) in set.iter().enumerate() {
            if phi[v] > 0 {
                let p = sigma.iter().position(|&s| s == v).unwrap();
                mu[p] = v;
                taken[i] = true;
            }
        }
        let mut free = (0..set.len()).filter(|&i| !taken[i]);
        let mut moved = 0;
        for slot in mu.iter_mut().filter(|m| **m == usize::MAX) {
            *slot = set[free.next().unwrap()];
            moved += 1;
        }
        return (moved, mu);
    }
    let g = inst.graph();
    let cost: Vec<Vec<u64>> = sigma
        .iter()
        .map(|&s| set.iter().map(|&v| g.distance(s, v) as u64).collect())
        .collect();
    let (value, cols) = match measure {
        Measure::Sum => min_cost_assignment(&cost),
        _ => bottleneck_assignment(&cost),
    };
    (value, cols.into_iter().map(|c| set[c]).collect())
}

/// Searches for a goal-satisfying map moving every pebble at most `radius`.
/// `Ok(None)` means no such map exists.
pub fn oracle_bounded(inst: &Instance, radius: usize) -> Result<Option<Solution>, SolveError> {
    oracle_bounded_with_limit(inst, radius, placement_limit())
}

pub fn oracle_bounded_with_limit(
    inst: &Instance,
    radius: usize,
    limit: u128,
) -> Result<Option<Solution>, SolveError> {
    let g = inst.graph();
    let balls: Vec<Vec<usize>> = inst
        .sigma()
        .iter()
        .map(|&s| {
            let d = g.distances_from(s);
            (0..g.vertex_count()).filter(|&v| d[v] <= radius).collect()
        })
        .collect();
    let size = balls.iter().fold(1u128, |acc, b| acc.saturating_mul(b.len() as u128));
    guard("bounded placements", size, limit)?;
    let n = g.vertex_count();
    let k = balls.len();
    let mut pick = vec![0usize; k];
    let mut count = vec![0usize; n];
    for b in &balls {
        count[b[0]] += 1;
    }
    loop {
        let mask: Vec<bool> = count.iter().map(|&c| c > 0).collect();
        let distinct = mask.iter().filter(|&&m| m).count();
        if inst.predicate_holds_mask(&mask, distinct) {
            return Ok(Some(Solution::new((0..k).map(|p| balls[p][pick[p]]).collect())));
        }
        // Odometer step, last pebble fastest.
        let mut p = k;
        loop {
            if p == 0 {
                return Ok(None);
            }
            p -= 1;
            count[balls[p][pick[p]]] -= 1;
            pick[p] += 1;
            if pick[p] < balls[p].len() {
                count[balls[p][pick[p]]] += 1;
                break;
            }
            pick[p] = 0;
            count[balls[p][0]] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn solve_examples() {
        let star = Instance::new(Graph::star(3).unwrap(), vec![1, 2], Goal::Con).unwrap();
        let r = oracle_solve(&star, Measure::Sum).unwrap();
        assert_eq!(r.cost, 1);
        assert_eq!(r.solution.mu, vec![0, 2]);
        let done = Instance::new(Graph::path(4).unwrap(), vec![1, 2], Goal::Con).unwrap();
        for m in Measure::ALL {
            assert_eq!(oracle_solve(&done, m).unwrap().cost, 0);
        }
        let crowded = Instance::new(Graph::path(3).unwrap(), vec![0, 1, 2], Goal::Ind).unwrap();
        assert!(oracle_solve(&crowded, Measure::Sum).unwrap_err().is_infeasible());
    }

    #[test]
    fn guards_are_errors() {
        let inst = Instance::new(Graph::path(10).unwrap(), vec![0; 8], Goal::Con).unwrap();
        let err = oracle_solve_with_limit(&inst, Measure::Sum, 1000).unwrap_err();
        assert!(matches!(err, SolveError::GuardExceeded { limit: 1000, .. }));
        assert!(oracle_bounded_with_limit(&inst, 9, 1000).is_err());
    }

    #[test]
    fn ind_examples() {
        let p5 = Instance::new(Graph::path(5).unwrap(), vec![1, 2], Goal::Ind).unwrap();
        assert_eq!(oracle_ind(&p5, Measure::Max).unwrap().cost, 1);
        let spaced = Instance::new(Graph::path(5).unwrap(), vec![0, 4, 2], Goal::Ind).unwrap();
        for m in Measure::ALL {
            let r = oracle_ind(&spaced, m).unwrap();
            assert_eq!(r.cost, 0);
            assert!(spaced.validate(&r.solution));
        }
        let star = Instance::new(Graph::star(3).unwrap(), vec![0, 1, 1], Goal::Ind).unwrap();
        assert_eq!(oracle_ind(&star, Measure::Num).unwrap().cost, 2);
    }

    #[test]
    fn bounded_examples() {
        let p4 = Instance::new(Graph::path(4).unwrap(), vec![0, 3], Goal::Con).unwrap();
        assert_eq!(oracle_bounded(&p4, 0).unwrap(), None);
        assert_eq!(oracle_bounded(&p4, 1).unwrap(), Some(Solution::new(vec![1, 2])));
        let ok = Instance::new(Graph::path(4).unwrap(), vec![1, 1], Goal::Con).unwrap();
        assert_eq!(oracle_bounded(&ok, 0).unwrap(), Some(Solution::new(vec![1, 1])));
    }
}
