//! Problem instances, goal predicates, cost measures and solution reports.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::InstanceError;
use crate::graph::Graph;
use crate::{Cost, Ratio};

/// Target property of the final pebble positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Goal {
    /// Occupied vertices induce a connected subgraph.
    Con,
    /// Occupied vertices are pairwise non-adjacent, one pebble per vertex.
    Ind,
    /// Occupied vertices are pairwise adjacent.
    Clique,
    /// Occupied vertices separate `s` from `t` and avoid both.
    StCut { s: usize, t: usize },
}

impl Goal {
    pub fn name(&self) -> &'static str {
        match self {
            Goal::Con => "con",
            Goal::Ind => "ind",
            Goal::Clique => "clique",
            Goal::StCut { .. } => "stcut",
        }
    }
}

/// What a solution pays for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Total distance travelled.
    Sum,
    /// Largest distance travelled by one pebble.
    Max,
    /// Number of pebbles that move.
    Num,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::Sum, Measure::Max, Measure::Num];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Sum => "sum",
            Measure::Max => "max",
            Measure::Num => "num",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(Measure::Sum),
            "max" => Ok(Measure::Max),
            "num" => Ok(Measure::Num),
            other => Err(format!("unknown measure '{other}' (expected sum, max or num)")),
        }
    }
}

/// End vertex of every pebble, indexed by pebble.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub mu: Vec<usize>,
}

impl Solution {
    pub fn new(mu: Vec<usize>) -> Self {
        Solution { mu }
    }

    /// The set of occupied vertices.
    pub fn image(&self) -> BTreeSet<usize> {
        self.mu.iter().copied().collect()
    }
}

/// How far a reported cost may be from the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guarantee {
    Exact,
    AdditivePlusOne,
    Factor(Ratio),
    Heuristic,
}

impl Guarantee {
    /// Whether `cost` is consistent with this guarantee for optimum `opt`.
    pub fn admits(&self, cost: Cost, opt: Cost) -> bool {
        match self {
            Guarantee::Exact => cost == opt,
            Guarantee::AdditivePlusOne => cost >= opt && cost <= opt + 1,
            Guarantee::Factor(r) => {
                cost >= opt && Ratio::from_integer(cost) <= *r * Ratio::from_integer(opt)
            }
            Guarantee::Heuristic => cost >= opt,
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guarantee::Exact => f.write_str("exact"),
            Guarantee::AdditivePlusOne => f.write_str("additive+1"),
            Guarantee::Factor(r) if r.is_integer() => write!(f, "factor {}", r.to_integer()),
            Guarantee::Factor(r) => write!(f, "factor {}/{}", r.numer(), r.denom()),
            Guarantee::Heuristic => f.write_str("heuristic"),
        }
    }
}

/// A graph, pebble start vertices and a goal.
#[derive(Debug, Clone)]
pub struct Instance {
    graph: Graph,
    sigma: Vec<usize>,
    goal: Goal,
}

impl Instance {
    pub fn new(graph: Graph, sigma: Vec<usize>, goal: Goal) -> Result<Self, InstanceError> {
        let n = graph.vertex_count();
        if sigma.is_empty() {
            return Err(InstanceError::NoPebbles);
        }
        if let Some((pebble, &vertex)) = sigma.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(InstanceError::StartOutOfRange { pebble, vertex, n });
        }
        if let Goal::StCut { s, t } = goal {
            if s == t || s >= n || t >= n {
                return Err(InstanceError::BadCutEndpoints { s, t, n });
            }
        }
        Ok(Instance { graph, sigma, goal })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    #[inline]
    pub fn goal(&self) -> Goal {
        self.goal
    }

    #[inline]
    pub fn pebble_count(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Number of pebbles starting on each vertex.
    pub fn start_counts(&self) -> Vec<usize> {
        let mut phi = vec![0; self.vertex_count()];
        for &v in &self.sigma {
            phi[v] += 1;
        }
        phi
    }

    /// The same graph and pebbles under another goal.
    pub fn with_goal(&self, goal: Goal) -> Result<Self, InstanceError> {
        Instance::new(self.graph.clone(), self.sigma.clone(), goal)
    }

    /// The do-nothing solution.
    pub fn identity_solution(&self) -> Solution {
        Solution::new(self.sigma.clone())
    }

    pub fn check_solution(&self, sol: &Solution) -> Result<(), InstanceError> {
        let n = self.vertex_count();
        if sol.mu.len() != self.pebble_count() {
            return Err(InstanceError::SolutionLength {
                expected: self.pebble_count(),
                got: sol.mu.len(),
            });
        }
        if let Some((pebble, &vertex)) = sol.mu.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(InstanceError::EndOutOfRange { pebble, vertex, n });
        }
        Ok(())
    }

    /// Evaluates the goal predicate on a vertex set.
    pub fn predicate_holds(&self, set: &BTreeSet<usize>) -> bool {
        let n = self.vertex_count();
        if set.iter().any(|&v| v >= n) {
            return false;
        }
        let mut mask = vec![false; n];
        for &v in set {
            mask[v] = true;
        }
        self.predicate_holds_mask(&mask, set.len())
    }

    /// Predicate on a membership mask holding `size` vertices.
    pub(crate) fn predicate_holds_mask(&self, mask: &[bool], size: usize) -> bool {
        let g = self.graph.structure();
        match self.goal {
            Goal::Con => g.is_connected_subset(mask),
            Goal::Ind => {
                size == self.pebble_count()
                    && (0..mask.len())
                        .filter(|&u| mask[u])
                        .all(|u| g.neighbors(u).iter().all(|&v| !mask[v]))
            }
            Goal::Clique => {
                let members: Vec<usize> = (0..mask.len()).filter(|&u| mask[u]).collect();
                g.is_clique(&members)
            }
            Goal::StCut { s, t } => !mask[s] && !mask[t] && !self.reaches_avoiding(s, t, mask),
        }
    }

    fn reaches_avoiding(&self, s: usize, t: usize, blocked: &[bool]) -> bool {
        let g = self.graph.structure();
        let mut seen = vec![false; g.vertex_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == t {
                return true;
            }
            for &v in g.neighbors(u) {
                if !blocked[v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    /// Cost of moving every pebble from its start to `sol`.
    pub fn solution_cost(&self, sol: &Solution, measure: Measure) -> Cost {
        let moves = self.sigma.iter().zip(&sol.mu);
        match measure {
            Measure::Sum => moves.map(|(&a, &b)| self.graph.distance(a, b) as Cost).sum(),
            Measure::Max => {
                moves.map(|(&a, &b)| self.graph.distance(a, b) as Cost).max().unwrap_or(0)
            }
            Measure::Num => moves.filter(|(a, b)| a != b).count() as Cost,
        }
    }

    /// True iff `sol` is well formed and its image satisfies the goal.
    ///
    /// For `Ind` the image must have `k` distinct vertices, so `mu` is injective.
    pub fn validate(&self, sol: &Solution) -> bool {
        if self.check_solution(sol).is_err() {
            return false;
        }
        let mut mask = vec![false; self.vertex_count()];
        let mut size = 0;
        for &v in &sol.mu {
            if !mask[v] {
                mask[v] = true;
                size += 1;
            }
        }
        self.predicate_holds_mask(&mask, size)
    }
}

/// A solver's answer together with how trustworthy it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: Solution,
    pub cost: Cost,
    pub measure: Measure,
    pub guarantee: Guarantee,
    pub method: &'static str,
}

impl SolveReport {
    /// Builds a report, evaluating the cost from the instance.
    pub fn new(
        inst: &Instance,
        solution: Solution,
        measure: Measure,
        guarantee: Guarantee,
        method: &'static str,
    ) -> Self {
        let cost = inst.solution_cost(&solution, measure);
        SolveReport { solution, cost, measure, guarantee, method }
    }

    pub(crate) fn with_cost(
        solution: Solution,
        cost: Cost,
        measure: Measure,
        guarantee: Guarantee,
        method: &'static str,
    ) -> Self {
        SolveReport { solution, cost, measure, guarantee, method }
    }
}
