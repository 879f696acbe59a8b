//! Instance generators for the hardness reductions, used as test fixtures
//! whose optimum is known from an independent source (satisfiability or a
//! brute-force vertex cover).

mod cnf;
mod ind;
mod stcut;
mod vc;

pub use cnf::{sat_bruteforce, Cnf3, Literal, SAT_VARIABLE_LIMIT};
pub use ind::gen_ind_gadget;
pub use stcut::{gen_stcut_gadget, gen_stcut_gadget_default};
pub use vc::{
    brute_force_vertex_cover, gen_clique_max_from_domclique, gen_clique_num_from_vc,
    gen_clique_sum_from_vc, has_dominating_clique,
};

use std::fmt;

use crate::error::GadgetError;
use crate::graph::{Graph, SimpleGraph};
use crate::instance::{Goal, Instance, Measure};
use crate::Cost;

/// Role of a gadget vertex. Indices are 0-based; `Display` shows them 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// Pebbled hub of variable `i`.
    U(usize),
    /// Centre of the star of variable `i`.
    V(usize),
    X(usize),
    XBar(usize),
    /// Centre of the star of clause `j`.
    Z(usize),
    W(usize),
    /// Occurrence `position` (0..3) inside clause `clause`.
    ClauseLiteral { clause: usize, position: usize },
    /// First pebbled vertex on the path of clause `j`.
    ClausePebble(usize),
    /// Second pebbled vertex on the path of clause `j`.
    ClausePebblePrime(usize),
    S,
    T,
    PathInternal,
    /// A vertex of the source graph of a vertex-cover or dominating-clique reduction.
    Original(usize),
    /// The added vertex adjacent to every original vertex.
    Apex,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::U(i) => write!(f, "u{}", i + 1),
            Label::V(i) => write!(f, "v{}", i + 1),
            Label::X(i) => write!(f, "x{}", i + 1),
            Label::XBar(i) => write!(f, "~x{}", i + 1),
            Label::Z(j) => write!(f, "z{}", j + 1),
            Label::W(j) => write!(f, "w{}", j + 1),
            Label::ClauseLiteral { clause, position } => write!(f, "l{}.{}", clause + 1, position + 1),
            Label::ClausePebble(j) => write!(f, "c{}", j + 1),
            Label::ClausePebblePrime(j) => write!(f, "c{}'", j + 1),
            Label::S => f.write_str("s"),
            Label::T => f.write_str("t"),
            Label::PathInternal => f.write_str("path"),
            Label::Original(v) => write!(f, "h{v}"),
            Label::Apex => f.write_str("apex"),
        }
    }
}

/// A generated instance, the role of each vertex and the cost bounds that
/// are met exactly when the encoded question has answer "yes".
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub instance: Instance,
    pub labels: Vec<Label>,
    pub thresholds: Vec<(Measure, Cost)>,
}

impl GadgetInstance {
    pub fn threshold(&self, measure: Measure) -> Option<Cost> {
        self.thresholds.iter().find(|(m, _)| *m == measure).map(|&(_, c)| c)
    }

    /// First vertex carrying `label`.
    pub fn vertex(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

/// Incremental vertex/edge collection shared by the generators.
#[derive(Default)]
struct Builder {
    labels: Vec<Label>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: Label) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Path with `h` edges from `a` to `b` through fresh internal vertices.
    fn long_path(&mut self, a: usize, b: usize, h: usize) {
        let mut prev = a;
        for _ in 1..h {
            let v = self.vertex(Label::PathInternal);
            self.edge(prev, v);
            prev = v;
        }
        self.edge(prev, b);
    }

    fn finish(
        self,
        pebbled: Vec<usize>,
        goal: impl FnOnce(&[Label]) -> Goal,
        thresholds: Vec<(Measure, Cost)>,
    ) -> Result<GadgetInstance, GadgetError> {
        let structure = SimpleGraph::new(self.labels.len(), self.edges)?;
        if !structure.is_connected() {
            return Err(GadgetError::Disconnected);
        }
        let goal = goal(&self.labels);
        let instance = Instance::new(Graph::from_simple(structure)?, pebbled, goal)?;
        Ok(GadgetInstance { instance, labels: self.labels, thresholds })
    }
}
