//! Exact solver: depth-first search over label subsets with pruning.
//!
//! Subsets grow along a fixed label order (non-increasing edge count,
//! ties by id), so each subset is visited once. Feasibility is monotone
//! in the label set, which justifies both pruning rules:
//!
//! * cardinality: once a subset has reached one less than the incumbent
//!   size and is still infeasible, every strict superset on this branch
//!   is at least the incumbent size;
//! * lookahead: if the subset joined with every label still allowed to
//!   enter is infeasible, no extension is feasible.
//!
//! Labels with zero edges never change the induced subgraph and are never
//! branched on. The search is anytime: the incumbent is feasible from the
//! start (seeded with all useful labels, optionally improved by the
//! deterministic greedy), so hitting a node or time limit still returns a
//! valid solution, downgraded from `Optimal` to `Feasible`.

use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::time::Duration;

use crate::clock::Stopwatch;
use crate::connectivity::{analyze_graph, is_biconnected, labels_biconnected, Mode};
use crate::graph::{LabelSet, LabeledGraph};
use crate::heuristic;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverStatus {
    /// Search completed; the result is a minimum.
    Optimal,
    /// Valid solution, optimality not proven (limit hit, or heuristic).
    Feasible,
    /// No label set induces a bi-connected subgraph in the given mode.
    Infeasible,
}

impl SolverStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverStatus::Optimal => "optimal",
            SolverStatus::Feasible => "feasible",
            SolverStatus::Infeasible => "infeasible",
        }
    }
}

impl fmt::Display for SolverStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub status: SolverStatus,
    /// Best label set found; empty when infeasible.
    pub labels: LabelSet,
    /// Cardinality of `labels`.
    pub objective: usize,
    /// Exact search: subsets evaluated. Heuristics: greedy gain
    /// evaluations. Oracle: subsets tested.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolverResult {
    pub(crate) fn infeasible(num_labels: usize, nodes_explored: u64, elapsed: Duration) -> Self {
        SolverResult {
            status: SolverStatus::Infeasible,
            labels: LabelSet::empty(num_labels),
            objective: 0,
            nodes_explored,
            elapsed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub mode: Mode,
    /// Wall-clock budget, polled through the caller's stopwatch.
    pub time_limit: Option<Duration>,
    /// Maximum subsets to evaluate.
    pub node_limit: Option<u64>,
    /// Seed the incumbent with the pruned deterministic greedy solution
    /// before searching. On by default; the search is correct either way,
    /// this only tightens the cardinality prune earlier.
    pub seed_incumbent_with_greedy: bool,
    /// Disable to search without pruning rules (differential testing).
    pub enable_prunes: bool,
}

impl SolverConfig {
    pub fn new(mode: Mode) -> Self {
        SolverConfig {
            mode,
            time_limit: None,
            node_limit: None,
            seed_incumbent_with_greedy: true,
            enable_prunes: true,
        }
    }
}

/// Whether the whole graph (all labels) is bi-connected in `mode`. If it
/// is not, no label subset is, and every solver reports infeasible.
pub fn feasibility_check(graph: &LabeledGraph, mode: Mode) -> bool {
    is_biconnected(&analyze_graph(graph), mode)
}

struct Search<'a, C: Stopwatch> {
    graph: &'a LabeledGraph,
    mode: Mode,
    clock: &'a C,
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
    prunes: bool,
    /// Branchable labels, non-increasing edge count, ties by id.
    order: Vec<usize>,
    /// `suffix[i]` = union of `order[i..]`, for the lookahead prune.
    suffix: Vec<LabelSet>,
    incumbent: LabelSet,
    nodes: u64,
    limit_hit: bool,
}

impl<C: Stopwatch> Search<'_, C> {
    fn over_limit(&self) -> bool {
        if self.node_limit.is_some_and(|limit| self.nodes >= limit) {
            return true;
        }
        self.time_limit.is_some_and(|limit| self.clock.elapsed() >= limit)
    }

    fn visit(&mut self, current: &mut LabelSet, next_index: usize) {
        if self.over_limit() {
            self.limit_hit = true;
            return;
        }
        self.nodes += 1;
        if labels_biconnected(self.graph, current, self.mode) {
            // Feasible; supersets cannot be smaller, stop extending.
            if current.len() < self.incumbent.len() {
                self.incumbent = current.clone();
            }
            return;
        }
        if self.prunes {
            if current.len() + 2 > self.incumbent.len() {
                // One more label reaches incumbent size at best.
                return;
            }
            let reachable = current.union(&self.suffix[next_index]);
            if !labels_biconnected(self.graph, &reachable, self.mode) {
                return;
            }
        }
        for i in next_index..self.order.len() {
            current.insert(self.order[i]);
            self.visit(current, i + 1);
            current.remove(self.order[i]);
            if self.limit_hit {
                return;
            }
        }
    }
}

/// Branch-and-prune search for a minimum label set whose induced subgraph
/// is bi-connected in `config.mode`.
///
/// Deterministic: identical inputs and config yield identical results
/// (elapsed time aside). With limits unset the status is `Optimal` or
/// `Infeasible`; a hit limit downgrades to `Feasible` with the best
/// incumbent found.
pub fn solve_exact<C: Stopwatch>(
    graph: &LabeledGraph,
    config: &SolverConfig,
    clock: &C,
) -> SolverResult {
    if let Some(limit) = config.node_limit {
        assert!(limit > 0, "node limit must be positive");
    }
    if let Some(limit) = config.time_limit {
        assert!(limit > Duration::ZERO, "time limit must be positive");
    }
    let q = graph.num_labels();
    if !feasibility_check(graph, config.mode) {
        return SolverResult::infeasible(q, 0, clock.elapsed());
    }

    let frequencies = graph.label_frequencies();
    let mut incumbent = LabelSet::empty(q);
    for label in 0..q {
        if frequencies[label] > 0 {
            incumbent.insert(label);
        }
    }
    if config.seed_incumbent_with_greedy {
        let greedy = heuristic::greedy_construct(graph, config.mode, 1, None)
            .expect("host graph verified feasible");
        let pruned = heuristic::prune_labels(graph, &greedy, config.mode)
            .expect("greedy output is feasible");
        if pruned.len() < incumbent.len() {
            incumbent = pruned;
        }
    }

    let mut order: Vec<usize> = (0..q).filter(|&l| frequencies[l] > 0).collect();
    order.sort_unstable_by_key(|&l| (Reverse(frequencies[l]), l));
    let mut suffix = alloc::vec![LabelSet::empty(q); order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1].clone();
        suffix[i].insert(order[i]);
    }

    let mut search = Search {
        graph,
        mode: config.mode,
        clock,
        time_limit: config.time_limit,
        node_limit: config.node_limit,
        prunes: config.enable_prunes,
        order,
        suffix,
        incumbent,
        nodes: 0,
        limit_hit: false,
    };
    let mut working = LabelSet::empty(q);
    search.visit(&mut working, 0);

    let status = if search.limit_hit { SolverStatus::Feasible } else { SolverStatus::Optimal };
    SolverResult {
        status,
        objective: search.incumbent.len(),
        labels: search.incumbent,
        nodes_explored: search.nodes,
        elapsed: clock.elapsed(),
    }
}
