use crate::error::SolveError;
use crate::instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
use crate::primitives::{max_bipartite_matching, maximum_independent_set, BipartiteGraph, Matching};

/// Ind-Max within one of the optimum, given a maximum independent set `mis`.
///
/// Finds the least `z` for which every pebble can be matched to its own
/// vertex of `mis` at distance at most `z`, and returns that matching.
/// Independence of `mis` is checked; maximality is trusted.
pub fn approx_ind_max(inst: &Instance, mis: &[usize]) -> Result<SolveReport, SolveError> {
    if inst.goal() != Goal::Ind {
        return Err(SolveError::GoalMismatch { expected: "ind", found: inst.goal().name() });
    }
    let g = inst.graph();
    let n = g.vertex_count();
    if mis.iter().any(|&v| v >= n) || !g.is_independent(mis) {
        return Err(SolveError::InvalidInput("supplied vertex set is not independent".into()));
    }
    let mut targets = mis.to_vec();
    targets.sort_unstable();
    targets.dedup();
    let k = inst.pebble_count();
    if k > targets.len() {
        return Err(SolveError::Infeasible(format!(
            "{k} pebbles exceed the maximum independent set size {}",
            targets.len()
        )));
    }

    let within = |z: usize| -> Matching {
        let adj = inst
            .sigma()
            .iter()
            .map(|&s| {
                let d = g.distances_from(s);
                (0..targets.len()).filter(|&i| d[targets[i]] <= z).collect()
            })
            .collect();
        max_bipartite_matching(&BipartiteGraph::from_adjacency(targets.len(), adj))
    };
    let (mut lo, mut hi) = (0, g.diameter());
    let mut best = within(hi);
    assert!(best.saturates_left(), "connected graphs reach every target within the diameter");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let m = within(mid);
        if m.saturates_left() {
            hi = mid;
            best = m;
        } else {
            lo = mid + 1;
        }
    }
    // Saturation must flip exactly once; otherwise the search would be unsound.
    assert!(lo == 0 || !within(lo - 1).saturates_left(), "matching feasibility not monotone in z");
    let mu = (0..k).map(|p| targets[best.mate_of_left(p).expect("saturated")]).collect();
    Ok(SolveReport::new(
        inst,
        Solution::new(mu),
        Measure::Max,
        Guarantee::AdditivePlusOne,
        "approx-ind-max",
    ))
}

/// [`approx_ind_max`] with the independent set computed here: König on
/// bipartite graphs, exhaustive search on small general graphs.
pub fn approx_ind_max_auto(inst: &Instance) -> Result<SolveReport, SolveError> {
    let mis = maximum_independent_set(inst.graph())?;
    approx_ind_max(inst, &mis)
}
