//! Positive definite completion of partial symmetric matrices whose pattern
//! is the skeleton of a directed acyclic graph.
//!
//! The library decides whether such a partial matrix can be completed in the
//! covariance space PD_D or the inverse-covariance space P_D of the Gaussian
//! model over the DAG, constructs the unique completion when it exists, and
//! computes the completed matrix's inverse and determinant in closed form
//! from the partial entries alone.
//!
//! Modules:
//! - [`symlin`]: dense symmetric kernel (LDLᵀ, Schur complements, inverses).
//! - [`graph`]: DAGs and undirected graphs, moralization, chordality,
//!   cliques, acyclic orientations.
//! - [`partial`]: the partial-matrix data model and file format.
//! - [`completion`]: the completion procedures and membership verifiers.
//! - [`analytics`]: closed-form inverse/determinant, separation splits, the
//!   non-completable witness, and the four-cycle inequalities.
//!
//! ```
//! use pdc_core::{complete_in_pd, markov_inverse, verify_in_pd, Dag, PartialMatrix};
//!
//! // vertices are numbered so every edge i -> j has i > j
//! let dag = Dag::new(5, &[(2, 1), (4, 1), (5, 1), (3, 2), (4, 3), (5, 3)]).unwrap();
//! let gamma = PartialMatrix::parse(
//!     "1 0.3 * 0.4 0.6\n\
//!      0.3 1 0.4 * *\n\
//!      * 0.4 1 -0.3 0.5\n\
//!      0.4 * -0.3 1 *\n\
//!      0.6 * 0.5 * 1\n",
//! )
//! .unwrap();
//!
//! let result = complete_in_pd(&gamma, &dag, 1e-10).unwrap();
//! assert!(result.is_completed());
//! assert!(verify_in_pd(&result.sigma, &dag, 1e-8).unwrap());
//!
//! // inverse of the completion, straight from the partial entries
//! let report = markov_inverse(&gamma, &dag, 1e-10).unwrap();
//! let direct = result.sigma.inverse().unwrap();
//! assert!(report.omega.rel_frobenius_dist(&direct) < 1e-10);
//! ```

pub mod analytics;
pub mod completion;
pub mod graph;
pub mod partial;
pub mod symlin;

pub use analytics::{
    c4_inequalities, c4_partial_matrix, counterexample_partial_matrix, markov_determinant,
    markov_determinant_ratio, markov_inverse, separation_split_inverse, AnalyticsError, C4Report,
    FamilyTerm, InverseReport, SplitInverse,
};
pub use completion::{
    completable_in_p, complete_in_p, complete_in_pd, complete_in_pd_diagnose,
    complete_in_pd_perfect, complete_via_immorality_closure, eq_residual_max, verify_in_p,
    verify_in_pd, ClosureCompletion, CompletionError, PCompletionResult, PdCompletionResult,
    PdStatus,
};
pub use graph::{
    parse_graph_edges, parse_graph_file, topological_relabel, Dag, GraphError, GraphFile,
    GraphKind, RawGraph, Relabeling, UGraph,
};
pub use partial::{zero_fill_in, PartialError, PartialMatrix};
pub use symlin::{LdlFactor, Matrix, SymMatrix, SymlinError, DEFAULT_PD_TOL};
