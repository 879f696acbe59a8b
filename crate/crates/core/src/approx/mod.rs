//! Approximation algorithms for general graphs, each labelled with its guarantee.

mod clique;
mod ind_max;
mod stcut;

pub use clique::{
    approx_clique_max, approx_clique_num, approx_clique_sum, exact_clique_num_mwc,
    exact_clique_num_mwc_unguarded, CliqueExpansion, MWC_VERTEX_LIMIT,
};
pub use ind_max::{approx_ind_max, approx_ind_max_auto};
pub use stcut::{approx_stcut_max, approx_stcut_sum, stcut_sum_via_num};
