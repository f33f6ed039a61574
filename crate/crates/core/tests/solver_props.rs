//! Solver-level properties: exactness against the brute-force oracle,
//! prune safety, heuristic ordering, and determinism.

mod common;

use common::{random_graph, random_label_set, DENSITIES};
use mlbp_core::{
    brute_force_optimum, feasibility_check, grasp, greedy_solve, labels_biconnected,
    prune_labels, solve_exact, GraspConfig, IncrementalState, Mode, NullStopwatch, SolverConfig,
    SolverStatus,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The exact solver agrees with subset enumeration on the objective
    /// and status, in both modes.
    #[test]
    fn exact_matches_brute_force(seed in any::<u64>(), density_idx in 0usize..4) {
        let g = random_graph(seed, 8, 6, DENSITIES[density_idx]);
        for mode in [Mode::Edge, Mode::Vertex] {
            let exact = solve_exact(&g, &SolverConfig::new(mode), &NullStopwatch);
            let brute = brute_force_optimum(&g, mode, None).unwrap();
            prop_assert_eq!(exact.status, brute.status);
            prop_assert_eq!(exact.objective, brute.objective);
            if exact.status == SolverStatus::Optimal {
                prop_assert!(labels_biconnected(&g, &exact.labels, mode));
            }
        }
    }

    /// Feasibility is monotone: any superset of a feasible label set is
    /// feasible.
    #[test]
    fn feasibility_is_monotone(seed in any::<u64>(), density_idx in 0usize..4) {
        let g = random_graph(seed, 10, 6, DENSITIES[density_idx]);
        let small = random_label_set(&g, seed, 0.5);
        let mut big = small.clone();
        for label in 0..g.num_labels() {
            if (seed >> (label % 60)) & 1 == 1 {
                big.insert(label);
            }
        }
        for mode in [Mode::Edge, Mode::Vertex] {
            if labels_biconnected(&g, &small, mode) {
                prop_assert!(labels_biconnected(&g, &big, mode));
            }
        }
    }
}

#[test]
fn prunes_never_change_the_objective() {
    for seed in 0..80u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 9, 6, density);
        for mode in [Mode::Edge, Mode::Vertex] {
            let mut with = SolverConfig::new(mode);
            with.enable_prunes = true;
            let mut without = SolverConfig::new(mode);
            without.enable_prunes = false;
            let a = solve_exact(&g, &with, &NullStopwatch);
            let b = solve_exact(&g, &without, &NullStopwatch);
            assert_eq!(a.status, b.status, "seed {seed}, {mode} mode");
            assert_eq!(a.objective, b.objective, "seed {seed}, {mode} mode");
            assert!(
                a.nodes_explored <= b.nodes_explored,
                "pruning explored more nodes (seed {seed}, {mode} mode)"
            );
        }
    }
}

#[test]
fn heuristics_sandwich_the_optimum() {
    for seed in 0..60u64 {
        let density = [0.4, 0.6, 0.8, 0.95][(seed % 4) as usize];
        let g = random_graph(seed, 12, 8, density);
        for mode in [Mode::Edge, Mode::Vertex] {
            let feasible = feasibility_check(&g, mode);
            let exact = solve_exact(&g, &SolverConfig::new(mode), &NullStopwatch);
            let greedy = greedy_solve(&g, mode, &NullStopwatch);
            let config = GraspConfig::new(mode, 5, 2, seed);
            let grasp_result = grasp(&g, &config, &NullStopwatch);

            if !feasible {
                assert_eq!(exact.status, SolverStatus::Infeasible);
                assert_eq!(greedy.status, SolverStatus::Infeasible);
                assert_eq!(grasp_result.status, SolverStatus::Infeasible);
                continue;
            }
            assert_eq!(exact.status, SolverStatus::Optimal);
            assert!(
                exact.objective <= grasp_result.objective
                    && grasp_result.objective <= greedy.objective,
                "sandwich violated (seed {seed}, {mode} mode): exact {} grasp {} greedy {}",
                exact.objective,
                grasp_result.objective,
                greedy.objective
            );
            // Every returned set is feasible by from-scratch analysis.
            assert!(labels_biconnected(&g, &exact.labels, mode));
            assert!(labels_biconnected(&g, &greedy.labels, mode));
            assert!(labels_biconnected(&g, &grasp_result.labels, mode));
            // The grasp result is 1-minimal: no single label is removable.
            for label in grasp_result.labels.iter() {
                let mut smaller = grasp_result.labels.clone();
                smaller.remove(label);
                assert!(
                    !labels_biconnected(&g, &smaller, mode),
                    "grasp result not 1-minimal (seed {seed}, {mode} mode)"
                );
            }
        }
    }
}

#[test]
fn prune_output_is_1_minimal_superset_invariant() {
    for seed in 0..60u64 {
        let g = random_graph(seed, 10, 6, 0.7);
        for mode in [Mode::Edge, Mode::Vertex] {
            if !feasibility_check(&g, mode) {
                continue;
            }
            let full = mlbp_core::LabelSet::full(g.num_labels());
            let pruned = prune_labels(&g, &full, mode).unwrap();
            assert!(pruned.is_subset_of(&full));
            assert!(labels_biconnected(&g, &pruned, mode));
            for label in pruned.iter() {
                let mut smaller = pruned.clone();
                smaller.remove(label);
                assert!(!labels_biconnected(&g, &smaller, mode));
            }
        }
    }
}

#[test]
fn grasp_reruns_are_identical() {
    for seed in 0..20u64 {
        let g = random_graph(seed, 12, 7, 0.7);
        for mode in [Mode::Edge, Mode::Vertex] {
            let config = GraspConfig::new(mode, 6, 3, seed.wrapping_mul(7919));
            let a = grasp(&g, &config, &NullStopwatch);
            let b = grasp(&g, &config, &NullStopwatch);
            assert_eq!(a.labels, b.labels);
            assert_eq!(a.objective, b.objective);
            assert_eq!(a.nodes_explored, b.nodes_explored);
            assert_eq!(a.status, b.status);
        }
    }
}

#[test]
fn greedy_value_two_means_biconnected() {
    // g(L) = components + mode-matched blocks reaches 2 exactly when the
    // induced subgraph is bi-connected, provided the host has >= 3
    // vertices.
    for seed in 0..120u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 10, 5, density);
        if g.num_vertices() < 3 {
            continue;
        }
        let labels = random_label_set(&g, seed, 0.5);
        let mut state = IncrementalState::new(g.num_vertices());
        for label in labels.iter() {
            state.add_label(&g, label).unwrap();
        }
        let (components, vertex_blocks, edge_blocks) = state.snapshot_counters();
        assert_eq!(
            components + edge_blocks == 2,
            labels_biconnected(&g, &labels, Mode::Edge),
            "edge-mode potential mismatch (seed {seed})"
        );
        assert_eq!(
            components + vertex_blocks == 2,
            labels_biconnected(&g, &labels, Mode::Vertex),
            "vertex-mode potential mismatch (seed {seed})"
        );
    }
}
