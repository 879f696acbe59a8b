//! Connected final positions on trees.
//!
//! A table computed with root `r` only describes solutions whose pebbles
//! reach `r`. The solvers therefore root the tree at a centroid `c`, then
//! recurse into each component `T` of `T - c` under the assumption that no
//! pebble ends on `c`. Pebbles outside `T` must then move into `T` through the
//! neighbour `v'` of `c` in `T`.

use crate::error::SolveError;
use crate::graph::{RootedTree, SimpleGraph};
use crate::instance::{Goal, Guarantee, Instance, Measure, SolveReport};
use crate::num::{abs_diff, CostValue};
use crate::tree_dp::distribution::DistributionTable;
use crate::tree_dp::table::{make_plan, Charge, DpTable, PebbleCensus, TreePlan};
use crate::Cost;

/// Con-Sum table rooted at local vertex 0.
pub fn con_sum_table<C: CostValue>(
    tree: &RootedTree,
    census: &PebbleCensus,
    k: usize,
) -> DpTable<C> {
    build(tree, k, |u, spread, row, held| {
        let eta = census.eta[u];
        row[0] = C::from_count(eta).plus(spread.exactly(0));
        for j in 1..=k {
            // Fewer than j pebbles go below u, the rest stay on u.
            let (below, used) = spread.at_most(j - 1);
            row[j] = abs_diff::<C>(eta, j).plus(below);
            held[j] = j - used;
        }
    })
}

/// Con-Num table rooted at local vertex 0. Pebbles that start outside the
/// tree are part of `k` but absent from the census.
pub fn con_num_table<C: CostValue>(
    tree: &RootedTree,
    census: &PebbleCensus,
    k: usize,
) -> DpTable<C> {
    build(tree, k, |u, spread, row, held| {
        let phi = census.phi[u];
        row[0] = C::zero();
        for j in 1..=k {
            let mut best = (C::infinity(), 1);
            for z in 1..=j {
                let rest = spread.exactly(j - z);
                if rest.is_infinite() {
                    continue;
                }
                let c = C::from_count(z.saturating_sub(phi)).plus(rest);
                if c < best.0 {
                    best = (c, z);
                }
            }
            row[j] = best.0;
            held[j] = best.1;
        }
    })
}

fn build<C, F>(tree: &RootedTree, k: usize, mut fill: F) -> DpTable<C>
where
    C: CostValue,
    F: FnMut(usize, &DistributionTable<C>, &mut [C], &mut [usize]),
{
    let n = tree.len();
    let mut opt: Vec<Vec<C>> = vec![Vec::new(); n];
    let mut held = vec![Vec::new(); n];
    let mut spread: Vec<Option<DistributionTable<C>>> = vec![None; n];
    for &u in tree.post_order() {
        let rows: Vec<&[C]> = tree.children(u).iter().map(|&c| opt[c].as_slice()).collect();
        let table = DistributionTable::new(&rows, k);
        let mut row = vec![C::infinity(); k + 1];
        let mut keep = vec![0; k + 1];
        fill(u, &table, &mut row, &mut keep);
        opt[u] = row;
        held[u] = keep;
        spread[u] = Some(table);
    }
    DpTable {
        k,
        opt,
        plus: Vec::new(),
        minus: Vec::new(),
        held,
        spread: spread.into_iter().map(Option::unwrap).collect(),
        spread_minus: Vec::new(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variant {
    Sum,
    Num,
}

/// Exact Con-Sum on a tree, with the decision trail.
pub fn plan_con_sum_tree(inst: &Instance) -> Result<TreePlan, SolveError> {
    plan(inst, Variant::Sum)
}

/// Exact Con-Num on a tree, with the decision trail.
pub fn plan_con_num_tree(inst: &Instance) -> Result<TreePlan, SolveError> {
    plan(inst, Variant::Num)
}

pub fn solve_con_sum_tree(inst: &Instance) -> Result<SolveReport, SolveError> {
    let plan = plan_con_sum_tree(inst)?;
    Ok(report(inst, plan, Measure::Sum, "tree-dp-con-sum"))
}

pub fn solve_con_num_tree(inst: &Instance) -> Result<SolveReport, SolveError> {
    let plan = plan_con_num_tree(inst)?;
    Ok(report(inst, plan, Measure::Num, "tree-dp-con-num"))
}

fn report(inst: &Instance, plan: TreePlan, measure: Measure, method: &'static str) -> SolveReport {
    let r = SolveReport::new(inst, plan.solution, measure, Guarantee::Exact, method);
    debug_assert_eq!(r.cost, plan.relocation_cost + plan.dp_cost);
    r
}

fn plan(inst: &Instance, variant: Variant) -> Result<TreePlan, SolveError> {
    if inst.goal() != Goal::Con {
        return Err(SolveError::GoalMismatch { expected: "con", found: inst.goal().name() });
    }
    if !inst.graph().is_tree() {
        return Err(SolveError::NotATree);
    }
    let mut search = Search {
        g: inst.graph().structure(),
        alive: vec![true; inst.vertex_count()],
        k: inst.pebble_count(),
        variant,
        best: None,
    };
    let starts = inst.sigma().iter().map(|&v| Some(v)).collect();
    search.run(0, starts, 0);
    Ok(search.best.expect("the first centroid always yields a finite table"))
}

struct Search<'a> {
    g: &'a SimpleGraph,
    alive: Vec<bool>,
    k: usize,
    variant: Variant,
    best: Option<TreePlan>,
}

impl Search<'_> {
    /// Solves the component of `entry`; `starts` are host ids inside it, or
    /// `None` for pebbles that are outside and not relocated.
    fn run(&mut self, entry: usize, starts: Vec<Option<usize>>, relocation: Cost) {
        let alive = &self.alive;
        let c = RootedTree::spanning(self.g, entry, |v| alive[v]).centroid();
        let tree = RootedTree::spanning(self.g, c, |v| alive[v]);
        let local: Vec<Option<usize>> =
            starts.iter().map(|s| s.map(|v| tree.local(v).expect("start inside"))).collect();
        let census = PebbleCensus::new(&tree, local.iter().flatten().copied());
        let (table, charge) = match self.variant {
            Variant::Sum => (con_sum_table::<Cost>(&tree, &census, self.k), Charge::Distance),
            Variant::Num => (con_num_table::<Cost>(&tree, &census, self.k), Charge::Moves),
        };
        let value = table.opt(0, self.k);
        let incumbent = self.best.as_ref().map_or(Cost::MAX, TreePlan::total);
        if value.is_finite() && relocation + value < incumbent {
            self.best = Some(make_plan(&tree, &table, &census, &local, relocation, charge));
        }
        if tree.len() == 1 {
            return;
        }

        // branch[u]: the child of the root whose subtree holds local vertex u.
        let mut branch = vec![usize::MAX; tree.len()];
        for u in 1..tree.len() {
            let p = tree.parent(u).unwrap();
            branch[u] = if p == 0 { u } else { branch[p] };
        }
        self.alive[c] = false;
        for &child in tree.children(0) {
            let entry = tree.global(child);
            let mut extra: Cost = 0;
            let moved: Vec<Option<usize>> = local
                .iter()
                .zip(&starts)
                .map(|(l, s)| match (l, self.variant) {
                    (Some(l), _) if branch[*l] == child => *s,
                    (Some(l), Variant::Sum) => {
                        extra += tree.depth(*l) as Cost + 1;
                        Some(entry)
                    }
                    _ => None,
                })
                .collect();
            let incumbent = self.best.as_ref().map_or(Cost::MAX, TreePlan::total);
            if self.variant == Variant::Sum && relocation + extra >= incumbent {
                continue;
            }
            self.run(entry, moved, relocation + extra);
        }
    }
}
