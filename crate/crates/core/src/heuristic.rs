//! Greedy construction, pruning, and GRASP for minimum labelling
//! bi-connectivity.
//!
//! The greedy value of a label set `L` is
//! `g(L) = components(G(L)) + blocks(G(L))`, counting edge-blocks in edge
//! mode and vertex-blocks in vertex mode. On a host with at least three
//! vertices, `g(L) == 2` holds exactly when `G(L)` is bi-connected in the
//! chosen mode (one component, one block). Construction adds one label at
//! a time, tracking `g` with the incremental counters instead of
//! re-analyzing from scratch.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clock::Stopwatch;
use crate::connectivity::{labels_biconnected, Mode};
use crate::exact::{feasibility_check, SolverResult, SolverStatus};
use crate::graph::{LabelSet, LabeledGraph};
use crate::incremental::IncrementalState;

/// `g(L) == 2` marks a bi-connected induced subgraph.
const FEASIBLE_VALUE: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeuristicError {
    /// The host graph itself is not bi-connected in the requested mode,
    /// so no label subset can be.
    Infeasible,
    /// prune_labels was handed a label set that is not feasible.
    InfeasibleInput,
}

impl fmt::Display for HeuristicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeuristicError::Infeasible => {
                write!(f, "the full graph is not bi-connected in the requested mode")
            }
            HeuristicError::InfeasibleInput => {
                write!(f, "label set to prune does not induce a bi-connected subgraph")
            }
        }
    }
}

impl core::error::Error for HeuristicError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraspConfig {
    pub mode: Mode,
    /// Construction + local-search rounds. Must be at least 1.
    pub iterations: usize,
    /// Restricted candidate list size. 1 reduces to deterministic greedy.
    pub alpha: usize,
    /// Iteration `i` draws from a counter-based RNG seeded with `seed`
    /// on stream `i`, so results do not depend on evaluation order.
    pub seed: u64,
    pub time_limit: Option<core::time::Duration>,
}

impl GraspConfig {
    pub fn new(mode: Mode, iterations: usize, alpha: usize, seed: u64) -> Self {
        GraspConfig { mode, iterations, alpha, seed, time_limit: None }
    }
}

/// One construction step, recorded for diagnostics and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GreedyStep {
    before: usize,
    after: usize,
    plateau: bool,
}

fn greedy_value(state: &IncrementalState, mode: Mode) -> usize {
    let (components, vertex_blocks, edge_blocks) = state.snapshot_counters();
    components
        + match mode {
            Mode::Edge => edge_blocks,
            Mode::Vertex => vertex_blocks,
        }
}

/// Adds labels to `selected` (mirrored in `state`) until `g` reaches 2.
/// Returns false if the candidates run out first, which can only happen
/// when `banned` blocks the host's feasibility.
///
/// Improving steps choose uniformly from the `rcl_size` candidates with
/// the smallest resulting `g` (ties broken by id when truncating); with
/// no RNG the single best candidate wins. If no candidate strictly
/// decreases `g`, the plateau rule adds the candidate bringing the most
/// new edges, ties by id, to force progress.
#[allow(clippy::too_many_arguments)]
fn construct(
    graph: &LabeledGraph,
    mode: Mode,
    state: &mut IncrementalState,
    selected: &mut LabelSet,
    banned: Option<usize>,
    rcl_size: usize,
    mut rng: Option<&mut dyn RngCore>,
    evals: &mut u64,
    mut trace: Option<&mut Vec<GreedyStep>>,
) -> bool {
    assert!(rcl_size >= 1, "candidate list size must be positive");
    let frequencies = graph.label_frequencies();
    let mut current = greedy_value(state, mode);
    while current > FEASIBLE_VALUE {
        let mut scored: Vec<(usize, usize)> = Vec::new();
        for label in 0..graph.num_labels() {
            if frequencies[label] == 0 || selected.contains(label) || banned == Some(label) {
                continue;
            }
            let mut probe = state.clone();
            probe
                .add_label(graph, label)
                .expect("unselected label edges are absent from the state");
            *evals += 1;
            scored.push((greedy_value(&probe, mode), label));
        }
        if scored.is_empty() {
            return false;
        }
        scored.sort_unstable();
        let best_value = scored[0].0;
        let plateau = best_value >= current;
        let chosen = if plateau {
            // No candidate helps; force progress with the most new edges.
            scored
                .iter()
                .map(|&(_, label)| label)
                .min_by_key(|&label| (core::cmp::Reverse(frequencies[label]), label))
                .expect("candidate list is non-empty")
        } else {
            let rcl = &scored[..rcl_size.min(scored.len())];
            let pick = match &mut rng {
                Some(r) => r.gen_range(0..rcl.len()),
                None => 0,
            };
            rcl[pick].1
        };
        state
            .add_label(graph, chosen)
            .expect("chosen label edges are absent from the state");
        selected.insert(chosen);
        let after = greedy_value(state, mode);
        if let Some(t) = trace.as_deref_mut() {
            t.push(GreedyStep { before: current, after, plateau });
        }
        current = after;
    }
    true
}

/// Greedy construction from scratch. `rcl_size` 1 with no RNG is the
/// deterministic constructor; larger sizes with an RNG give the
/// randomized GRASP variant. Fails only when the host graph is not
/// bi-connected in `mode`.
pub fn greedy_construct(
    graph: &LabeledGraph,
    mode: Mode,
    rcl_size: usize,
    rng: Option<&mut dyn RngCore>,
) -> Result<LabelSet, HeuristicError> {
    if !feasibility_check(graph, mode) {
        return Err(HeuristicError::Infeasible);
    }
    let mut state = IncrementalState::new(graph.num_vertices());
    let mut selected = LabelSet::empty(graph.num_labels());
    let mut evals = 0;
    let done = construct(
        graph, mode, &mut state, &mut selected, None, rcl_size, rng, &mut evals, None,
    );
    debug_assert!(done, "a feasible host always completes construction");
    Ok(selected)
}

/// Deterministic greedy packaged as a solver run. `nodes_explored`
/// counts greedy gain evaluations.
pub fn greedy_solve<C: Stopwatch>(graph: &LabeledGraph, mode: Mode, clock: &C) -> SolverResult {
    if !feasibility_check(graph, mode) {
        return SolverResult::infeasible(graph.num_labels(), 0, clock.elapsed());
    }
    let mut state = IncrementalState::new(graph.num_vertices());
    let mut selected = LabelSet::empty(graph.num_labels());
    let mut evals = 0;
    construct(graph, mode, &mut state, &mut selected, None, 1, None, &mut evals, None);
    SolverResult {
        status: SolverStatus::Feasible,
        objective: selected.len(),
        labels: selected,
        nodes_explored: evals,
        elapsed: clock.elapsed(),
    }
}

/// Single removal pass in non-decreasing edge-count order (ties by id):
/// drops every label whose removal keeps the set feasible. The result is
/// 1-minimal: removing any single remaining label breaks feasibility,
/// because feasibility is monotone in the label set and each survivor
/// was tested against a subset of the final set.
pub fn prune_labels(
    graph: &LabeledGraph,
    labels: &LabelSet,
    mode: Mode,
) -> Result<LabelSet, HeuristicError> {
    if !labels_biconnected(graph, labels, mode) {
        return Err(HeuristicError::InfeasibleInput);
    }
    let frequencies = graph.label_frequencies();
    let mut order: Vec<usize> = labels.iter().collect();
    order.sort_unstable_by_key(|&l| (frequencies[l], l));
    let mut kept = labels.clone();
    for label in order {
        kept.remove(label);
        if !labels_biconnected(graph, &kept, mode) {
            kept.insert(label);
        }
    }
    Ok(kept)
}

/// Rebuilds a state holding `base`, then greedily completes it to
/// feasibility without using `banned`. None when that is impossible.
fn complete_without(
    graph: &LabeledGraph,
    mode: Mode,
    base: &LabelSet,
    banned: usize,
    evals: &mut u64,
) -> Option<LabelSet> {
    let mut state = IncrementalState::new(graph.num_vertices());
    let mut selected = LabelSet::empty(graph.num_labels());
    for label in base.iter() {
        state
            .add_label(graph, label)
            .expect("base labels carry pairwise distinct edges");
        selected.insert(label);
    }
    let done = construct(
        graph, mode, &mut state, &mut selected, Some(banned), 1, None, evals, None,
    );
    done.then_some(selected)
}

/// First-improvement 1-swap descent. For each member (non-decreasing
/// edge count, ties by id): drop it, greedily re-add other labels until
/// feasible, prune, and accept the result if strictly smaller. Restarts
/// the scan after each accepted move; stops at a local optimum.
fn local_search(graph: &LabeledGraph, mode: Mode, start: LabelSet, evals: &mut u64) -> LabelSet {
    let frequencies = graph.label_frequencies();
    let mut current = start;
    loop {
        let mut members: Vec<usize> = current.iter().collect();
        members.sort_unstable_by_key(|&l| (frequencies[l], l));
        let mut improved = false;
        for &label in &members {
            let mut reduced = current.clone();
            reduced.remove(label);
            let candidate = if labels_biconnected(graph, &reduced, mode) {
                Some(reduced)
            } else {
                complete_without(graph, mode, &reduced, label, evals)
            };
            let Some(candidate) = candidate else {
                continue;
            };
            let candidate =
                prune_labels(graph, &candidate, mode).expect("completion result is feasible");
            if candidate.len() < current.len() {
                current = candidate;
                improved = true;
                break;
            }
        }
        if !improved {
            return current;
        }
    }
}

/// GRASP: repeated randomized construction, pruning, and 1-swap descent,
/// keeping the best solution by (cardinality, lexicographic labels). The
/// incumbent starts from the pruned deterministic greedy, so the result
/// never trails it. Iteration `i` uses RNG stream `i`; reruns with the
/// same config reproduce the same result. The time limit is checked at
/// iteration starts; `nodes_explored` counts greedy gain evaluations.
pub fn grasp<C: Stopwatch>(
    graph: &LabeledGraph,
    config: &GraspConfig,
    clock: &C,
) -> SolverResult {
    assert!(config.iterations >= 1, "iterations must be positive");
    assert!(config.alpha >= 1, "alpha must be positive");
    let mut evals: u64 = 0;
    if !feasibility_check(graph, config.mode) {
        return SolverResult::infeasible(graph.num_labels(), 0, clock.elapsed());
    }

    let mut state = IncrementalState::new(graph.num_vertices());
    let mut seed_set = LabelSet::empty(graph.num_labels());
    construct(
        graph, config.mode, &mut state, &mut seed_set, None, 1, None, &mut evals, None,
    );
    let mut incumbent =
        prune_labels(graph, &seed_set, config.mode).expect("greedy output is feasible");

    for iteration in 0..config.iterations {
        if let Some(limit) = config.time_limit {
            if clock.elapsed() >= limit {
                break;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(iteration as u64);

        let mut state = IncrementalState::new(graph.num_vertices());
        let mut selected = LabelSet::empty(graph.num_labels());
        let done = construct(
            graph,
            config.mode,
            &mut state,
            &mut selected,
            None,
            config.alpha,
            Some(&mut rng),
            &mut evals,
            None,
        );
        debug_assert!(done, "a feasible host always completes construction");
        let pruned =
            prune_labels(graph, &selected, config.mode).expect("construction result is feasible");
        let refined = local_search(graph, config.mode, pruned, &mut evals);
        if refined.cardinality_lex_cmp(&incumbent).is_lt() {
            incumbent = refined;
        }
    }

    SolverResult {
        status: SolverStatus::Feasible,
        objective: incumbent.len(),
        labels: incumbent,
        nodes_explored: evals,
        elapsed: clock.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clock::NullStopwatch;
    use alloc::vec;
    use alloc::vec::Vec;

    fn square_abab() -> LabeledGraph {
        LabeledGraph::build(4, 2, &[(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)]).unwrap()
    }

    /// Two squares sharing vertex 3, a chord inside the first, and one
    /// edge joining the square interiors that breaks the cut vertex.
    fn two_squares() -> LabeledGraph {
        LabeledGraph::build(
            7,
            4,
            &[
                (0, 1, 0),
                (1, 2, 0),
                (2, 3, 0),
                (0, 3, 0),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (3, 6, 1),
                (0, 4, 2),
                (0, 2, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn deterministic_greedy_on_square() {
        let got = greedy_construct(&square_abab(), Mode::Edge, 1, None).unwrap();
        assert_eq!(got.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn greedy_value_decreases_strictly_without_plateaus() {
        let g = two_squares();
        let mut state = IncrementalState::new(g.num_vertices());
        let mut selected = LabelSet::empty(g.num_labels());
        let mut evals = 0;
        let mut steps = Vec::new();
        let done = construct(
            &g,
            Mode::Vertex,
            &mut state,
            &mut selected,
            None,
            1,
            None,
            &mut evals,
            Some(&mut steps),
        );
        assert!(done);
        assert_eq!(selected.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        for step in &steps {
            assert!(!step.plateau);
            assert!(step.after < step.before);
        }
        assert_eq!(steps.last().unwrap().after, FEASIBLE_VALUE);
        assert!(evals > 0);
    }

    #[test]
    fn banned_essential_label_forces_plateau_then_exhaustion() {
        // Without label 2 the cut vertex 3 cannot be broken: after both
        // squares are in, only the chord remains. It changes no counter
        // (plateau), and the candidates then run out.
        let g = two_squares();
        let mut state = IncrementalState::new(g.num_vertices());
        let mut selected = LabelSet::empty(g.num_labels());
        let mut evals = 0;
        let mut steps = Vec::new();
        let done = construct(
            &g,
            Mode::Vertex,
            &mut state,
            &mut selected,
            Some(2),
            1,
            None,
            &mut evals,
            Some(&mut steps),
        );
        assert!(!done);
        assert!(steps.iter().any(|s| s.plateau));
        assert_eq!(selected.iter().collect::<Vec<_>>(), vec![0, 1, 3]);
    }

    #[test]
    fn infeasible_host_is_reported() {
        let path = LabeledGraph::build(3, 2, &[(0, 1, 0), (1, 2, 1)]).unwrap();
        assert_eq!(
            greedy_construct(&path, Mode::Edge, 1, None),
            Err(HeuristicError::Infeasible)
        );
        let r = grasp(&path, &GraspConfig::new(Mode::Edge, 3, 2, 7), &NullStopwatch);
        assert_eq!(r.status, SolverStatus::Infeasible);
        assert!(r.labels.is_empty());
    }

    #[test]
    fn prune_drops_redundant_labels() {
        // Square a, b plus a diagonal under its own label: the diagonal
        // is redundant once the square is present.
        let g = LabeledGraph::build(
            4,
            3,
            &[(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1), (0, 2, 2)],
        )
        .unwrap();
        let full = LabelSet::full(3);
        let pruned = prune_labels(&g, &full, Mode::Edge).unwrap();
        assert_eq!(pruned.iter().collect::<Vec<_>>(), vec![0, 1]);

        // Already 1-minimal input comes back unchanged.
        let two = LabelSet::from_labels(3, &[0, 1]);
        assert_eq!(prune_labels(&g, &two, Mode::Edge).unwrap(), two);

        // Infeasible input is rejected.
        let one = LabelSet::from_labels(3, &[0]);
        assert_eq!(
            prune_labels(&g, &one, Mode::Edge),
            Err(HeuristicError::InfeasibleInput)
        );
    }

    #[test]
    fn grasp_is_reproducible_and_no_worse_than_greedy() {
        let g = two_squares();
        let config = GraspConfig::new(Mode::Vertex, 8, 2, 42);
        let a = grasp(&g, &config, &NullStopwatch);
        let b = grasp(&g, &config, &NullStopwatch);
        assert_eq!(a.labels, b.labels);
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.status, SolverStatus::Feasible);

        let greedy = greedy_solve(&g, Mode::Vertex, &NullStopwatch);
        assert!(a.objective <= greedy.objective);
        assert!(labels_biconnected(&g, &a.labels, Mode::Vertex));
    }

    #[test]
    fn local_search_shrinks_a_padded_solution() {
        // Feasible but padded start: the square labels plus the chord.
        let g = two_squares();
        let padded = LabelSet::from_labels(4, &[0, 1, 2, 3]);
        let mut evals = 0;
        let out = local_search(&g, Mode::Vertex, padded, &mut evals);
        assert_eq!(out.len(), 3);
        assert!(labels_biconnected(&g, &out, Mode::Vertex));
    }

    #[test]
    fn grasp_time_limit_stops_iterating() {
        let g = two_squares();
        let mut config = GraspConfig::new(Mode::Vertex, 1_000_000, 2, 1);
        config.time_limit = Some(core::time::Duration::from_millis(1));
        // A clock that trips immediately: no iteration may run.
        struct AlwaysElapsed;
        impl Stopwatch for AlwaysElapsed {
            fn elapsed(&self) -> core::time::Duration {
                core::time::Duration::from_secs(1)
            }
        }
        let r = grasp(&g, &config, &AlwaysElapsed);
        // Incumbent comes from the deterministic seed; no iterations ran.
        assert_eq!(r.status, SolverStatus::Feasible);
        assert!(labels_biconnected(&g, &r.labels, Mode::Vertex));
    }
}
