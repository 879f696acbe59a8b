//! Exact dynamic programs on trees.

mod con;
mod distribution;
mod ind;
mod table;

pub use con::{
    con_num_table, con_sum_table, plan_con_num_tree, plan_con_sum_tree, solve_con_num_tree,
    solve_con_sum_tree,
};
pub use distribution::{optimal_distribution, Budget, DistributionTable};
pub use ind::{
    ind_num_table, ind_sum_table, plan_ind_num_tree, plan_ind_sum_tree, solve_ind_num_tree,
    solve_ind_sum_tree,
};
pub use table::{DpTable, EdgeFlow, PebbleCensus, TreePlan};
