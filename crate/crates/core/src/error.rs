use thiserror::Error;

use crate::constructive::Rule;
use crate::graph::{Colour, IncidenceId, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("incidence {id} unknown (graph has {count} incidences)")]
    UnknownIncidence { id: IncidenceId, count: usize },
    #[error("list of incidence {0} is empty")]
    EmptyList(IncidenceId),
    #[error("expected {expected} lists, found {found}")]
    ListCount { expected: usize, found: usize },
    #[error("incidence echo does not match the graph: {0}")]
    EchoMismatch(String),
    #[error("malformed document: {0}")]
    Format(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("{family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl GenError {
    pub(crate) fn invalid(family: &'static str, reason: impl Into<String>) -> Self {
        Self::InvalidParameters {
            family,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("list assignment has {found} lists, graph has {expected} incidences")]
    MalformedLists { expected: usize, found: usize },
    #[error("universe size {universe} is smaller than list size {k}")]
    UniverseTooSmall { universe: usize, k: usize },
    #[error(
        "universe size {universe} exceeds k * incidences = {limit}; larger universes add nothing"
    )]
    UniverseTooLarge { universe: usize, limit: usize },
    #[error("canonical list enumeration exceeded the budget of {budget} assignments")]
    Infeasible { budget: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("lists too small: need {needed} colours per incidence, smallest list has {found}")]
    ListTooSmall { needed: usize, found: usize },
    #[error("invalid pre-colouring: {0}")]
    BadPrecolouring(String),
    #[error("no colour available for incidence {incidence} at step {rule}")]
    Stuck { incidence: IncidenceId, rule: Rule },
    #[error("selection step {rule} found no admissible colour")]
    SelectionFailed { rule: Rule },
    #[error(
        "colour {colour} for incidence {incidence} at step {rule} clashes with incidence {with}"
    )]
    Clash {
        incidence: IncidenceId,
        colour: Colour,
        with: IncidenceId,
        rule: Rule,
    },
    #[error("colour {colour} for incidence {incidence} at step {rule} is not in its list")]
    OffList {
        incidence: IncidenceId,
        colour: Colour,
        rule: Rule,
    },
    #[error("incidence {0} left uncoloured")]
    Incomplete(IncidenceId),
    #[error("unsupported family: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ConstructError {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Self::Precondition(msg.into())
    }

    /// True when the error means the algorithm itself failed on an input that
    /// satisfied all preconditions.
    pub fn is_algorithm_failure(&self) -> bool {
        matches!(
            self,
            Self::Stuck { .. }
                | Self::SelectionFailed { .. }
                | Self::Clash { .. }
                | Self::OffList { .. }
                | Self::Incomplete(_)
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("list size {k} must lie in 1..={universe}")]
    ListSize { k: usize, universe: usize },
    #[error("invalid campaign: {0}")]
    Config(String),
}
