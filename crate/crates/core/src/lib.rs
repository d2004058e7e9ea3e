//! Competition graphs of digraphs, exact clique cover numbers, lower bounds
//! on competition numbers, and exact competition numbers of small graphs.
//!
//! The competition graph of a digraph joins two vertices whenever they share
//! an out-neighbor. The competition number `k(G)` of a graph `G` is the
//! least number of isolated vertices that must be added to `G` so that the
//! result is the competition graph of some acyclic digraph. This crate
//! computes `k(G)` exactly at small scale, evaluates the classical closed
//! forms and lower bounds, and can verify explicit construction
//! certificates — including a bundled one showing `k = 4` for the
//! icosahedron.
//!
//! Everything is deterministic: solvers break ties lexicographically, so
//! witnesses are stable across runs.

pub mod bounds;
pub mod chordal;
pub mod clique;
pub mod competition;
pub mod cover;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iso;

pub use bounds::{
    best_lower_bound, chordal_exact, opsut_edge_bound, opsut_vertex_bound, sano_bound,
    triangle_free_exact, tripartite_exact, BoundEntry, BoundKind, BoundReport, BoundsError,
};
pub use clique::{cliques_within, is_clique, maximal_cliques, Clique};
pub use competition::{
    certificate_to_digraph, competition_graph, exact_competition_number, heuristic_upper_bound,
    verify_certificate, Budget, Certificate, CertificateError, ExactOutcome, ExactResult,
    SearchStats, Verification,
};
pub use cover::{theta_e, theta_e_restricted, theta_v, CliqueCover, CoverError, CoverSolution};
pub use generate::{generate, Family, FamilyError};
pub use graph::{Acyclicity, Digraph, Graph, GraphError, VertexOrdering, VertexSet, MAX_VERTICES};
