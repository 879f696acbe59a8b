//! Picks a solver for an instance and measure.

use std::fmt;
use std::str::FromStr;

use crate::approx;
use crate::error::SolveError;
use crate::instance::{Goal, Instance, Measure, SolveReport};
use crate::oracle;
use crate::path::solve_ind_max_path_graph;
use crate::tree_dp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exact algorithm when one applies, else an approximation, else the oracle.
    Auto,
    Exact,
    Approx,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Auto, Method::Exact, Method::Approx, Method::Oracle];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Exact => "exact",
            Method::Approx => "approx",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}, expected auto|exact|approx|oracle"))
    }
}

type Solver = fn(&Instance) -> Result<SolveReport, SolveError>;

fn exact_solver(inst: &Instance, measure: Measure) -> Result<Solver, SolveError> {
    let g = inst.graph();
    let tree_only = |s: Solver| if g.is_tree() { Ok(s) } else { Err(SolveError::NotATree) };
    match (inst.goal(), measure) {
        (Goal::Con, Measure::Sum) => tree_only(tree_dp::solve_con_sum_tree),
        (Goal::Con, Measure::Num) => tree_only(tree_dp::solve_con_num_tree),
        (Goal::Ind, Measure::Sum) => tree_only(tree_dp::solve_ind_sum_tree),
        (Goal::Ind, Measure::Num) => tree_only(tree_dp::solve_ind_num_tree),
        (Goal::Ind, Measure::Max) if g.is_path() => Ok(solve_ind_max_path_graph),
        (Goal::Ind, Measure::Max) => Err(SolveError::NotAPath),
        (Goal::Clique, Measure::Num) => Ok(approx::exact_clique_num_mwc),
        (goal, m) => Err(SolveError::InvalidInput(format!(
            "no exact polynomial solver for {}-{}; use the oracle",
            goal.name(),
            m.name()
        ))),
    }
}

fn approx_solver(inst: &Instance, measure: Measure) -> Result<Solver, SolveError> {
    match (inst.goal(), measure) {
        (Goal::Ind, Measure::Max) => Ok(approx::approx_ind_max_auto),
        (Goal::Clique, Measure::Max) => Ok(approx::approx_clique_max),
        (Goal::Clique, Measure::Num) => Ok(approx::approx_clique_num),
        (Goal::Clique, Measure::Sum) => Ok(approx::approx_clique_sum),
        (Goal::StCut { .. }, Measure::Max) => Ok(approx::approx_stcut_max),
        (Goal::StCut { .. }, Measure::Sum) => Ok(approx::approx_stcut_sum),
        (goal, m) => Err(SolveError::InvalidInput(format!(
            "no approximation algorithm for {}-{}",
            goal.name(),
            m.name()
        ))),
    }
}

fn run_oracle(inst: &Instance, measure: Measure) -> Result<SolveReport, SolveError> {
    if inst.goal() == Goal::Ind {
        match oracle::oracle_ind(inst, measure) {
            Err(SolveError::GuardExceeded { .. }) => {}
            other => return other,
        }
    }
    oracle::oracle_solve(inst, measure)
}

/// Solves `inst` under `measure` with the requested method.
///
/// `Auto` uses the exact tree and path programs where they apply and the
/// maximum-weight-clique search for Clique-Num on small graphs; otherwise an
/// approximation if one exists, and finally the guarded oracle.
pub fn solve(inst: &Instance, measure: Measure, method: Method) -> Result<SolveReport, SolveError> {
    match method {
        Method::Exact => exact_solver(inst, measure)?(inst),
        Method::Approx => approx_solver(inst, measure)?(inst),
        Method::Oracle => run_oracle(inst, measure),
        Method::Auto => {
            let clique_ok = !(inst.goal() == Goal::Clique
                && inst.vertex_count() > approx::MWC_VERTEX_LIMIT);
            if let (Ok(s), true) = (exact_solver(inst, measure), clique_ok) {
                return s(inst);
            }
            match approx_solver(inst, measure) {
                Ok(s) => s(inst),
                Err(_) => run_oracle(inst, measure),
            }
        }
    }
}
