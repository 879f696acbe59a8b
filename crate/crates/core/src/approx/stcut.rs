use crate::error::SolveError;
use crate::instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
use crate::primitives::{max_bipartite_matching, min_st_vertex_cut, BipartiteGraph};
use crate::Ratio;

fn endpoints(inst: &Instance) -> Result<(usize, usize), SolveError> {
    match inst.goal() {
        Goal::StCut { s, t } => Ok((s, t)),
        other => Err(SolveError::GoalMismatch { expected: "stcut", found: other.name() }),
    }
}

#[derive(Clone, Copy)]
enum Cover {
    Nearest,
    Bottleneck,
}

/// Puts at least one pebble on every vertex of a minimum `s`-`t` vertex cut.
///
/// Pebbles not needed for the cut stay where they are, except those on `s`
/// or `t`, which move to their nearest cut vertex.
fn cover_min_cut(inst: &Instance, how: Cover) -> Result<Solution, SolveError> {
    let (s, t) = endpoints(inst)?;
    if inst.validate(&inst.identity_solution()) {
        return Ok(inst.identity_solution());
    }
    let g = inst.graph();
    let cut = min_st_vertex_cut(g, s, t)?;
    let k = inst.pebble_count();
    if cut.len() > k {
        return Err(SolveError::Infeasible(format!(
            "minimum s-t vertex cut has {} vertices but there are only {k} pebbles",
            cut.len()
        )));
    }
    let sigma = inst.sigma();
    let dist = |p: usize, c: usize| g.distance(sigma[p], cut[c]);
    let mut mu: Vec<Option<usize>> = vec![None; k];
    match how {
        Cover::Nearest => {
            let mut pairs: Vec<(usize, usize, usize)> = (0..cut.len())
                .flat_map(|c| (0..k).map(move |p| (c, p)))
                .map(|(c, p)| (dist(p, c), c, p))
                .collect();
            pairs.sort_unstable();
            let mut covered = vec![false; cut.len()];
            for (_, c, p) in pairs {
                if !covered[c] && mu[p].is_none() {
                    covered[c] = true;
                    mu[p] = Some(cut[c]);
                }
            }
        }
        Cover::Bottleneck => {
            // Least radius at which the cut vertices can each claim a distinct pebble.
            let saturating = |z: usize| {
                let adj = (0..cut.len()).map(|c| (0..k).filter(|&p| dist(p, c) <= z).collect()).collect();
                let m = max_bipartite_matching(&BipartiteGraph::from_adjacency(k, adj));
                m.saturates_left().then_some(m)
            };
            let (mut lo, mut hi) = (0, g.diameter());
            let mut best = saturating(hi).expect("the diameter reaches every vertex");
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match saturating(mid) {
                    Some(m) => {
                        best = m;
                        hi = mid;
                    }
                    None => lo = mid + 1,
                }
            }
            for (c, &v) in cut.iter().enumerate() {
                mu[best.mate_of_left(c).expect("saturated")] = Some(v);
            }
        }
    }
    let ends = (0..k)
        .map(|p| {
            mu[p].unwrap_or_else(|| {
                if sigma[p] == s || sigma[p] == t {
                    let nearest = (0..cut.len()).min_by_key(|&c| (dist(p, c), c)).unwrap();
                    cut[nearest]
                } else {
                    sigma[p]
                }
            })
        })
        .collect();
    Ok(Solution::new(ends))
}

/// s-t-Cut-Max within a factor of the diameter.
pub fn approx_stcut_max(inst: &Instance) -> Result<SolveReport, SolveError> {
    let sol = cover_min_cut(inst, Cover::Bottleneck)?;
    let d = inst.graph().diameter() as u64;
    Ok(SolveReport::new(inst, sol, Measure::Max, Guarantee::Factor(Ratio::from_integer(d)), "approx-stcut-max"))
}

/// s-t-Cut-Sum within a factor of `k` times the diameter.
pub fn approx_stcut_sum(inst: &Instance) -> Result<SolveReport, SolveError> {
    let sol = cover_min_cut(inst, Cover::Nearest)?;
    let kd = (inst.pebble_count() * inst.graph().diameter()) as u64;
    Ok(SolveReport::new(inst, sol, Measure::Sum, Guarantee::Factor(Ratio::from_integer(kd)), "approx-stcut-sum"))
}

/// Re-evaluates a Num solution under Sum. A `ρ`-approximate Num solver
/// yields a `ρ·d`-approximate Sum solution, since each moved pebble travels
/// at most the diameter `d`.
pub fn stcut_sum_via_num<F>(inst: &Instance, num_solver: F) -> Result<SolveReport, SolveError>
where
    F: FnOnce(&Instance) -> Result<SolveReport, SolveError>,
{
    endpoints(inst)?;
    let inner = num_solver(inst)?;
    if !inst.validate(&inner.solution) {
        return Err(SolveError::InvalidInput("inner solver returned an invalid cut".into()));
    }
    let d = Ratio::from_integer(inst.graph().diameter() as u64);
    let guarantee = match inner.guarantee {
        Guarantee::Exact => Guarantee::Factor(d),
        Guarantee::Factor(rho) => Guarantee::Factor(rho * d),
        Guarantee::AdditivePlusOne | Guarantee::Heuristic => Guarantee::Heuristic,
    };
    Ok(SolveReport::new(inst, inner.solution, Measure::Sum, guarantee, "stcut-sum-via-num"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::oracle_solve;

    fn cut(g: Graph, sigma: Vec<usize>, s: usize, t: usize) -> Instance {
        Instance::new(g, sigma, Goal::StCut { s, t }).unwrap()
    }

    #[test]
    fn max_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(approx_stcut_max(&cut(p4.clone(), vec![2], 0, 3)).unwrap().cost, 0);
        let r = approx_stcut_max(&cut(p4, vec![0], 0, 3)).unwrap();
        assert_eq!(r.cost, 1);
        assert_eq!(r.guarantee, Guarantee::Factor(Ratio::from_integer(3)));
        let two = Graph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        assert!(approx_stcut_max(&cut(two, vec![1], 0, 3)).unwrap_err().is_infeasible());
        let adjacent = cut(Graph::path(3).unwrap(), vec![0], 0, 1);
        assert!(approx_stcut_max(&adjacent).unwrap_err().is_infeasible());
    }

    #[test]
    fn sum_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(approx_stcut_sum(&cut(p4.clone(), vec![2], 0, 3)).unwrap().cost, 0);
        let both = cut(p4, vec![0, 3], 0, 3);
        let r = approx_stcut_sum(&both).unwrap();
        assert!(both.validate(&r.solution));
        assert!(r.cost <= 2 * 3 * oracle_solve(&both, Measure::Sum).unwrap().cost);
    }

    #[test]
    fn via_num_examples() {
        let inst = cut(Graph::path(4).unwrap(), vec![0], 0, 3);
        let r = stcut_sum_via_num(&inst, |i| oracle_solve(i, Measure::Num)).unwrap();
        assert_eq!(r.cost, 1);
        assert_eq!(r.guarantee, Guarantee::Factor(Ratio::from_integer(3)));
        let done = cut(Graph::path(4).unwrap(), vec![1], 0, 3);
        assert_eq!(stcut_sum_via_num(&done, |i| oracle_solve(i, Measure::Num)).unwrap().cost, 0);
    }
}
