//! Independent final positions on trees. A single arbitrary root suffices
//! because every vertex is either occupied or not; no centroid search.

use crate::error::SolveError;
use crate::graph::RootedTree;
use crate::instance::{Goal, Guarantee, Instance, Measure, SolveReport};
use crate::num::{abs_diff, CostValue};
use crate::tree_dp::distribution::DistributionTable;
use crate::tree_dp::table::{make_plan, Charge, DpTable, PebbleCensus, TreePlan};

/// Ind-Sum table rooted at local vertex 0.
pub fn ind_sum_table<C: CostValue>(
    tree: &RootedTree,
    census: &PebbleCensus,
    k: usize,
) -> DpTable<C> {
    build(tree, k, |u, j| abs_diff(census.eta[u], j), |u, j| abs_diff(census.eta[u], j))
}

/// Ind-Num table rooted at local vertex 0.
pub fn ind_num_table<C: CostValue>(
    tree: &RootedTree,
    census: &PebbleCensus,
    k: usize,
) -> DpTable<C> {
    build(
        tree,
        k,
        |u, _| if census.gamma[u] { C::zero() } else { C::one() },
        |_, _| C::zero(),
    )
}

/// `occupied(u, j)` and `empty(u, j)` are the local charges added to the
/// children's best distribution when `u` does or does not hold a pebble.
fn build<C, P, M>(tree: &RootedTree, k: usize, occupied: P, empty: M) -> DpTable<C>
where
    C: CostValue,
    P: Fn(usize, usize) -> C,
    M: Fn(usize, usize) -> C,
{
    let n = tree.len();
    let mut opt: Vec<Vec<C>> = vec![Vec::new(); n];
    let mut plus: Vec<Vec<C>> = vec![Vec::new(); n];
    let mut minus: Vec<Vec<C>> = vec![Vec::new(); n];
    let mut held = vec![Vec::new(); n];
    let mut spread = vec![None; n];
    let mut spread_minus = vec![None; n];
    for &u in tree.post_order() {
        let children = tree.children(u);
        let all = DistributionTable::new(
            &children.iter().map(|&c| opt[c].as_slice()).collect::<Vec<_>>(),
            k,
        );
        let free = DistributionTable::new(
            &children.iter().map(|&c| minus[c].as_slice()).collect::<Vec<_>>(),
            k,
        );
        let mut p = vec![C::infinity(); k + 1];
        let mut m = vec![C::infinity(); k + 1];
        let mut best = vec![C::infinity(); k + 1];
        let mut keep = vec![0; k + 1];
        for j in 0..=k {
            let below = all.exactly(j);
            if below.is_finite() {
                m[j] = empty(u, j).plus(below);
            }
            if j >= 1 {
                let below = free.exactly(j - 1);
                if below.is_finite() {
                    p[j] = occupied(u, j).plus(below);
                }
            }
            // Ties go to the empty root.
            if p[j] < m[j] {
                best[j] = p[j];
                keep[j] = 1;
            } else {
                best[j] = m[j];
            }
        }
        opt[u] = best;
        plus[u] = p;
        minus[u] = m;
        held[u] = keep;
        spread[u] = Some(all);
        spread_minus[u] = Some(free);
    }
    DpTable {
        k,
        opt,
        plus,
        minus,
        held,
        spread: spread.into_iter().map(Option::unwrap).collect(),
        spread_minus: spread_minus.into_iter().map(Option::unwrap).collect(),
    }
}

#[derive(Clone, Copy)]
enum Variant {
    Sum,
    Num,
}

pub fn plan_ind_sum_tree(inst: &Instance) -> Result<TreePlan, SolveError> {
    plan(inst, Variant::Sum)
}

pub fn plan_ind_num_tree(inst: &Instance) -> Result<TreePlan, SolveError> {
    plan(inst, Variant::Num)
}

pub fn solve_ind_sum_tree(inst: &Instance) -> Result<SolveReport, SolveError> {
    let plan = plan_ind_sum_tree(inst)?;
    let r = SolveReport::new(inst, plan.solution, Measure::Sum, Guarantee::Exact, "tree-dp-ind-sum");
    debug_assert_eq!(r.cost, plan.dp_cost);
    Ok(r)
}

pub fn solve_ind_num_tree(inst: &Instance) -> Result<SolveReport, SolveError> {
    let plan = plan_ind_num_tree(inst)?;
    let r = SolveReport::new(inst, plan.solution, Measure::Num, Guarantee::Exact, "tree-dp-ind-num");
    debug_assert_eq!(r.cost, plan.dp_cost);
    Ok(r)
}

fn plan(inst: &Instance, variant: Variant) -> Result<TreePlan, SolveError> {
    if inst.goal() != Goal::Ind {
        return Err(SolveError::GoalMismatch { expected: "ind", found: inst.goal().name() });
    }
    if !inst.graph().is_tree() {
        return Err(SolveError::NotATree);
    }
    let (n, k) = (inst.vertex_count(), inst.pebble_count());
    if k > n {
        return Err(SolveError::Infeasible(format!("{k} pebbles cannot be independent on {n} vertices")));
    }
    let tree = RootedTree::new(inst.graph(), 0)?;
    let local: Vec<Option<usize>> = inst.sigma().iter().map(|&v| tree.local(v)).collect();
    let census = PebbleCensus::new(&tree, local.iter().flatten().copied());
    let (table, charge) = match variant {
        Variant::Sum => (ind_sum_table::<u64>(&tree, &census, k), Charge::Distance),
        Variant::Num => (ind_num_table::<u64>(&tree, &census, k), Charge::Moves),
    };
    if table.opt(0, k).is_infinite() {
        return Err(SolveError::Infeasible(format!("the tree has no independent set of size {k}")));
    }
    Ok(make_plan(&tree, &table, &census, &local, 0, charge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ind(g: Graph, sigma: Vec<usize>) -> Instance {
        Instance::new(g, sigma, Goal::Ind).unwrap()
    }

    #[test]
    fn examples() {
        let p5 = Graph::path(5).unwrap();
        let r = solve_ind_sum_tree(&ind(p5.clone(), vec![1, 2])).unwrap();
        assert_eq!(r.cost, 1);
        assert!([vec![1, 3], vec![0, 2]].contains(&r.solution.mu));
        assert_eq!(solve_ind_num_tree(&ind(p5.clone(), vec![1, 2])).unwrap().cost, 1);
        assert_eq!(solve_ind_sum_tree(&ind(p5.clone(), vec![0, 2, 4])).unwrap().cost, 0);
        assert_eq!(solve_ind_num_tree(&ind(p5, vec![4, 0])).unwrap().cost, 0);
        let r = solve_ind_sum_tree(&ind(Graph::path(3).unwrap(), vec![1, 1])).unwrap();
        assert_eq!(r.cost, 2);
        assert_eq!(r.solution.image().into_iter().collect::<Vec<_>>(), vec![0, 2]);
        let star = ind(Graph::star(3).unwrap(), vec![0, 1, 1]);
        assert_eq!(solve_ind_num_tree(&star).unwrap().cost, 2);
    }

    #[test]
    fn infeasible_sizes() {
        let too_many = ind(Graph::path(3).unwrap(), vec![0, 1, 2]);
        assert!(solve_ind_sum_tree(&too_many).unwrap_err().is_infeasible());
        let beyond_n = ind(Graph::path(2).unwrap(), vec![0, 0, 1]);
        assert!(solve_ind_num_tree(&beyond_n).unwrap_err().is_infeasible());
    }

    #[test]
    fn split_rows() {
        let g = Graph::path(3).unwrap();
        let tree = RootedTree::new(&g, 0).unwrap();
        let census = PebbleCensus::new(&tree, [1usize, 1]);
        let table = ind_sum_table::<u32>(&tree, &census, 2);
        for u in 0..3 {
            for j in 0..=2 {
                let (p, m) = (table.opt_plus(u, j).unwrap(), table.opt_minus(u, j).unwrap());
                assert_eq!(table.opt(u, j), p.min(m));
            }
        }
    }
}
