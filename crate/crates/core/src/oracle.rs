//! Slow reference implementations used as ground truth in tests.
//!
//! Everything here recomputes from first principles: bridges and
//! cut-vertices by deleting one element and re-counting components with a
//! plain flood fill, optima by enumerating label subsets in
//! cardinality-then-lexicographic order. None of it shares algorithm code
//! with the fast paths, which is the point.

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::connectivity::Mode;
use crate::exact::{SolverResult, SolverStatus};
use crate::graph::{LabelSet, LabeledGraph, SubgraphView};

/// Unbounded subset enumeration is refused above this label count.
pub const BRUTE_FORCE_LABEL_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// Enumerating 2^q subsets would not terminate in reasonable time;
    /// pass a max_cardinality bound to search anyway.
    TooManyLabels { num_labels: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OracleError::TooManyLabels { num_labels, limit } => write!(
                f,
                "brute force over {num_labels} labels exceeds the {limit}-label limit; \
                 set max_cardinality to bound the search"
            ),
        }
    }
}

impl core::error::Error for OracleError {}

/// Number of components, optionally pretending one edge or one vertex is
/// deleted. A deleted vertex is not counted and not traversed.
fn component_count(view: &SubgraphView, skip_edge: Option<usize>, skip_vertex: Option<usize>) -> usize {
    let graph = view.graph();
    let n = graph.num_vertices();
    let mut seen = alloc::vec![false; n];
    if let Some(v) = skip_vertex {
        seen[v] = true;
    }
    let mut count = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push(start);
        while let Some(v) = queue.pop() {
            for (w, e) in view.neighbors(v) {
                if Some(e) == skip_edge || seen[w] {
                    continue;
                }
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    count
}

/// Edges whose deletion increases the component count, ascending.
pub fn naive_bridges(view: &SubgraphView) -> Vec<usize> {
    let base = component_count(view, None, None);
    view.active_edges()
        .filter(|&e| component_count(view, Some(e), None) > base)
        .collect()
}

/// Vertices whose deletion increases the component count, ascending.
/// Deleting an isolated vertex or a leaf never qualifies: the remaining
/// graph has at most as many components as before.
pub fn naive_cut_vertices(view: &SubgraphView) -> Vec<usize> {
    let base = component_count(view, None, None);
    (0..view.num_vertices())
        .filter(|&v| component_count(view, None, Some(v)) > base)
        .collect()
}

/// Bi-connectivity from first principles: connected, at least three
/// vertices, and free of bridges (edge mode) or cut-vertices (vertex
/// mode).
pub fn naive_biconnected(view: &SubgraphView, mode: Mode) -> bool {
    if view.num_vertices() < 3 || component_count(view, None, None) != 1 {
        return false;
    }
    match mode {
        Mode::Edge => naive_bridges(view).is_empty(),
        Mode::Vertex => naive_cut_vertices(view).is_empty(),
    }
}

/// Ascending k-combinations of `0..n`.
struct Combinations {
    n: usize,
    indices: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            indices: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.indices.clone();
        let k = self.indices.len();
        // Advance: bump the rightmost index that still has headroom.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.indices[i] < self.n - k + i {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

/// Exhaustive optimum by testing label subsets in cardinality order,
/// lexicographic within each cardinality; the first feasible subset is a
/// minimum (and the lexicographically smallest one of that size).
///
/// Refuses to run with more than [`BRUTE_FORCE_LABEL_LIMIT`] labels unless
/// `max_cardinality` bounds the subset size. `nodes_explored` counts
/// subsets tested.
pub fn brute_force_optimum(
    graph: &LabeledGraph,
    mode: Mode,
    max_cardinality: Option<usize>,
) -> Result<SolverResult, OracleError> {
    let q = graph.num_labels();
    if max_cardinality.is_none() && q > BRUTE_FORCE_LABEL_LIMIT {
        return Err(OracleError::TooManyLabels { num_labels: q, limit: BRUTE_FORCE_LABEL_LIMIT });
    }
    let cap = max_cardinality.unwrap_or(q).min(q);
    let mut tested = 0u64;
    for k in 0..=cap {
        for combo in Combinations::new(q, k) {
            tested += 1;
            let labels = LabelSet::from_labels(q, &combo);
            if naive_biconnected(&graph.induced_subgraph(&labels), mode) {
                return Ok(SolverResult {
                    status: SolverStatus::Optimal,
                    objective: labels.len(),
                    labels,
                    nodes_explored: tested,
                    elapsed: Duration::ZERO,
                });
            }
        }
    }
    Ok(SolverResult {
        status: SolverStatus::Infeasible,
        objective: 0,
        labels: LabelSet::empty(q),
        nodes_explored: tested,
        elapsed: Duration::ZERO,
    })
}
