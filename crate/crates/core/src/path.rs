//! Exact Ind-Max on paths.
//!
//! Vertices are identified with their distance from one endpoint. For a fixed
//! movement bound `z`, sweeping the pebbles in start order and placing each
//! on the leftmost admissible vertex decides feasibility; a binary search over
//! `z` then finds the optimum.

use crate::error::SolveError;
use crate::instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
use crate::Cost;

/// Pebbles on the path `0 - 1 - ... - (n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInstance {
    n: usize,
    /// Start positions in non-decreasing order.
    positions: Vec<usize>,
    /// `pebble[i]`: caller's id of the pebble at `positions[i]`.
    pebble: Vec<usize>,
}

impl PathInstance {
    /// `starts[p]` is the position of pebble `p`; any order, repetitions allowed.
    pub fn new(n: usize, starts: &[usize]) -> Result<Self, SolveError> {
        if n == 0 {
            return Err(SolveError::InvalidInput("path needs at least one vertex".into()));
        }
        if starts.is_empty() {
            return Err(crate::InstanceError::NoPebbles.into());
        }
        if let Some((pebble, &vertex)) = starts.iter().enumerate().find(|(_, &s)| s >= n) {
            return Err(crate::InstanceError::StartOutOfRange { pebble, vertex, n }.into());
        }
        let mut pebble: Vec<usize> = (0..starts.len()).collect();
        pebble.sort_by_key(|&p| starts[p]);
        let positions = pebble.iter().map(|&p| starts[p]).collect();
        Ok(PathInstance { n, positions, pebble })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Start positions indexed by pebble id.
    pub fn starts(&self) -> Vec<usize> {
        let mut s = vec![0; self.k()];
        for (i, &p) in self.pebble.iter().enumerate() {
            s[p] = self.positions[i];
        }
        s
    }
}

/// The leftmost-placement sweep for bound `z`. Returns end positions by
/// pebble id, or `None` if no independent placement within `z` exists.
pub fn greedy_feasible(pi: &PathInstance, z: usize) -> Option<Solution> {
    let mut mu = vec![0; pi.k()];
    let mut next = 0;
    for (i, &s) in pi.positions.iter().enumerate() {
        let h = next.max(s.saturating_sub(z));
        if h >= pi.n || h > s + z {
            return None;
        }
        mu[pi.pebble[i]] = h;
        next = h + 2;
    }
    Some(Solution::new(mu))
}

/// Minimum Max-cost independent placement, in path positions.
pub fn solve_ind_max_path(pi: &PathInstance) -> Result<SolveReport, SolveError> {
    let (n, k) = (pi.n, pi.k());
    if k > n.div_ceil(2) {
        return Err(SolveError::Infeasible(format!(
            "{k} pebbles cannot be independent on a path with {n} vertices"
        )));
    }
    let (mut lo, mut hi) = (0, n - 1);
    let mut best = greedy_feasible(pi, hi).expect("the diameter bounds every move");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match greedy_feasible(pi, mid) {
            Some(sol) => {
                hi = mid;
                best = sol;
            }
            None => lo = mid + 1,
        }
    }
    let starts = pi.starts();
    let cost = starts.iter().zip(&best.mu).map(|(&a, &b)| a.abs_diff(b)).max().unwrap_or(0);
    debug_assert!(cost <= lo);
    Ok(SolveReport::with_cost(best, cost as Cost, Measure::Max, Guarantee::Exact, "path-greedy"))
}

/// Positions of the vertices of a path graph, measured from its smallest endpoint.
fn path_layout(inst: &Instance) -> Result<Vec<usize>, SolveError> {
    let g = inst.graph();
    if !g.is_path() {
        return Err(SolveError::NotAPath);
    }
    let end = (0..g.vertex_count()).find(|&v| g.degree(v) <= 1).expect("paths have endpoints");
    Ok(g.distances_from(end).to_vec())
}

/// [`solve_ind_max_path`] for an instance whose graph is a path.
pub fn solve_ind_max_path_graph(inst: &Instance) -> Result<SolveReport, SolveError> {
    if inst.goal() != Goal::Ind {
        return Err(SolveError::GoalMismatch { expected: "ind", found: inst.goal().name() });
    }
    let position = path_layout(inst)?;
    let mut vertex_at = vec![0; position.len()];
    for (v, &p) in position.iter().enumerate() {
        vertex_at[p] = v;
    }
    let starts: Vec<usize> = inst.sigma().iter().map(|&v| position[v]).collect();
    let report = solve_ind_max_path(&PathInstance::new(position.len(), &starts)?)?;
    let mu = report.solution.mu.iter().map(|&p| vertex_at[p]).collect();
    Ok(SolveReport::new(inst, Solution::new(mu), Measure::Max, Guarantee::Exact, report.method))
}
