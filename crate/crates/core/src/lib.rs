//! Incidence list-colouring of graphs.
//!
//! * [`graph`]: graphs, incidences, list assignments, colourings, validation.
//! * [`generators`]: grids, Halin graphs, coronae, cactuses, Hamiltonian
//!   cubic graphs and friends, with the structure the constructions need.
//! * [`solver`]: exact backtracking, incidence chromatic number, exhaustive
//!   choosability over a finite universe, degeneracy greedy.
//! * [`constructive`]: polynomial-time list colourings for the families above.
//! * [`harness`]: random list assignments, fuzz campaigns, regressions.
//! * [`io`]: JSON documents and DOT export.

pub mod constructive;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solver;

pub use error::{ConstructError, GenError, GraphError, HarnessError, SolverError};
pub use graph::{
    incidence_adjacent, validate_colouring, Colour, Graph, Incidence, IncidenceColouring,
    IncidenceId, ListAssignment, Verdict, Vertex,
};
