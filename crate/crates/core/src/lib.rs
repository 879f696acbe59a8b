//! Pebble movement on graphs: move pebbles sitting on vertices so that the
//! occupied vertices become connected, independent, a clique or an `s`-`t`
//! vertex cut, while minimizing the total distance travelled, the largest
//! single distance or the number of pebbles that move.
//!
//! Exact dynamic programs handle trees and paths, approximation algorithms
//! with stated guarantees handle general graphs, and brute-force oracles
//! cover small instances of everything.

pub mod num;
pub mod error;
pub mod graph;
pub mod instance;
pub mod primitives;
pub mod tree_dp;
pub mod path;
pub mod oracle;
pub mod approx;
pub mod gadgets;
pub mod format;
pub mod dispatch;
pub mod random;

/// Movement cost of a solution.
pub type Cost = u64;
/// Exact approximation factors.
pub type Ratio = num_rational::Ratio<u64>;

pub use error::{CnfError, GadgetError, GraphError, InstanceError, SolveError};
pub use graph::{Graph, RootedTree, SimpleGraph};
pub use instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
pub use dispatch::{solve, Method};
