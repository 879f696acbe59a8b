use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance needs at least one pebble")]
    NoPebbles,
    #[error("pebble {pebble} starts on vertex {vertex}, out of range (n = {n})")]
    StartOutOfRange { pebble: usize, vertex: usize, n: usize },
    #[error("s-t cut endpoints must be distinct vertices in range (s = {s}, t = {t}, n = {n})")]
    BadCutEndpoints { s: usize, t: usize, n: usize },
    #[error("solution has {got} end positions, instance has {expected} pebbles")]
    SolutionLength { expected: usize, got: usize },
    #[error("pebble {pebble} ends on vertex {vertex}, out of range (n = {n})")]
    EndOutOfRange { pebble: usize, vertex: usize, n: usize },
}

/// Failure modes shared by every solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("exact solver requires a tree")]
    NotATree,
    #[error("solver requires a path graph")]
    NotAPath,
    #[error("solver handles goal {expected}, instance has goal {found}")]
    GoalMismatch { expected: &'static str, found: &'static str },
    #[error("{what} = {value} exceeds the guard limit {limit}")]
    GuardExceeded { what: &'static str, value: u128, limit: u128 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

impl SolveError {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, SolveError::Infeasible(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("formula needs at least one variable and one clause")]
    Empty,
    #[error("clause {clause} has {got} literals, expected exactly 3")]
    Arity { clause: usize, got: usize },
    #[error("literal {literal} in clause {clause} is outside variables 1..={variables}")]
    VariableOutOfRange { clause: usize, literal: i64, variables: usize },
    #[error("header announces {expected} clauses, found {got}")]
    ClauseCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("long path length h = {h} must exceed the pebble count k = {k}")]
    PathTooShort { h: usize, k: usize },
    #[error("gadget graph is disconnected: the formula splits into parts sharing no variable, or a variable occurs in no clause")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}
