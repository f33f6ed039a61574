//! Minimum labelling bi-connectivity: graph types, connectivity analysis,
//! and solvers.
//!
//! A labelled graph assigns one label to every edge. Picking a set of
//! labels `L` induces the subgraph `G(L)` containing exactly the edges
//! whose label lies in `L`. The solvers here search for the smallest `L`
//! such that `G(L)` is bi-connected, either in the edge sense (connected,
//! no bridges) or the vertex sense (connected, no cut-vertices). Both
//! notions additionally require at least three vertices.
//!
//! The crate is `no_std` (alloc only). Everything that touches the OS --
//! files, wall clocks, command lines -- lives in a companion crate.
//! Solvers that honor a time limit poll a caller-supplied
//! [`clock::Stopwatch`] instead of reading a clock themselves.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod clock;
pub mod connectivity;
pub mod exact;
pub mod graph;
pub mod heuristic;
pub mod incremental;
pub mod oracle;

pub use clock::{NullStopwatch, Stopwatch};
pub use connectivity::{
    analyze, analyze_graph, is_biconnected, labels_biconnected, ConnectivityReport, Mode,
};
pub use exact::{feasibility_check, solve_exact, SolverConfig, SolverResult, SolverStatus};
pub use graph::{Edge, GraphError, LabelSet, LabeledGraph, SubgraphView};
pub use heuristic::{
    grasp, greedy_construct, greedy_solve, prune_labels, GraspConfig, HeuristicError,
};
pub use incremental::{CounterDelta, IncrementalError, IncrementalState};
pub use oracle::{
    brute_force_optimum, naive_biconnected, naive_bridges, naive_cut_vertices, OracleError,
};
