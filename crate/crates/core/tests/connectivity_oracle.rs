//! Differential tests: the linear-time analysis against the deletion
//! oracles, plus structural laws that must hold for every graph.

mod common;

use common::{canonical_partition, random_graph, random_label_set, DENSITIES};
use mlbp_core::{
    analyze, is_biconnected, naive_biconnected, naive_bridges, naive_cut_vertices, Mode,
    SubgraphView,
};

/// Plain flood fill, independent of the module under test.
fn flood_components(view: &SubgraphView) -> Vec<usize> {
    let n = view.num_vertices();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for (w, _) in view.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    comp
}

fn check_against_oracles(view: &SubgraphView) {
    let report = analyze(view);
    report.check_invariants(view).unwrap();

    assert_eq!(report.bridges, naive_bridges(view), "bridge sets differ");
    assert_eq!(report.cut_vertices, naive_cut_vertices(view), "cut-vertex sets differ");

    let flood = flood_components(view);
    let distinct = flood.iter().max().map_or(0, |&m| m + 1);
    assert_eq!(report.num_components, distinct, "component counts differ");
    assert_eq!(
        canonical_partition(&report.component_of),
        canonical_partition(&flood),
        "component partitions differ"
    );

    for mode in [Mode::Edge, Mode::Vertex] {
        assert_eq!(
            is_biconnected(&report, mode),
            naive_biconnected(view, mode),
            "bi-connectivity flag differs in {mode} mode"
        );
    }
}

#[test]
fn analysis_matches_oracles_on_random_graphs() {
    for seed in 0..240u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 14, 6, density);
        check_against_oracles(&g.full_view());
        let labels = random_label_set(&g, seed, 0.6);
        check_against_oracles(&g.induced_subgraph(&labels));
    }
}

#[test]
fn edge_blocks_are_components_after_bridge_deletion() {
    for seed in 0..120u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 16, 5, density);
        let view = g.full_view();
        let report = analyze(&view);

        let mut mask = vec![true; g.num_edges()];
        for &e in &report.bridges {
            mask[e] = false;
        }
        let bridgeless = SubgraphView::from_edge_mask(&g, mask);
        assert_eq!(
            canonical_partition(&report.edge_block_of),
            canonical_partition(&flood_components(&bridgeless)),
            "edge-blocks differ from bridge-free components (seed {seed})"
        );
    }
}

#[test]
fn summary_is_invariant_under_vertex_relabeling() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    for seed in 0..80u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 12, 5, density);
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31));
        perm.shuffle(&mut rng);

        let relabeled: Vec<(usize, usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (perm[e.u()], perm[e.v()], e.label()))
            .collect();
        let h = mlbp_core::LabeledGraph::build(n, g.num_labels(), &relabeled).unwrap();

        let a = analyze(&g.full_view());
        let b = analyze(&h.full_view());
        assert_eq!(a.num_components, b.num_components);
        assert_eq!(a.bridges.len(), b.bridges.len());
        assert_eq!(a.cut_vertices.len(), b.cut_vertices.len());
        assert_eq!(a.num_vertex_blocks, b.num_vertex_blocks);
        assert_eq!(a.num_edge_blocks, b.num_edge_blocks);
        assert_eq!(a.isolated_vertices.len(), b.isolated_vertices.len());
        assert_eq!(a.edge_biconnected, b.edge_biconnected);
        assert_eq!(a.vertex_biconnected, b.vertex_biconnected);
        // Cut-vertices map through the permutation.
        let mut mapped: Vec<usize> = a.cut_vertices.iter().map(|&v| perm[v]).collect();
        mapped.sort_unstable();
        assert_eq!(mapped, b.cut_vertices);
    }
}

#[test]
fn work_stays_linear_in_host_size() {
    for seed in 0..60u64 {
        let density = DENSITIES[(seed % 4) as usize];
        let g = random_graph(seed, 40, 6, density);
        let view = g.full_view();
        let report = analyze(&view);
        let bound = 5 * (g.num_vertices() + g.num_edges());
        assert!(
            report.edge_scans <= bound,
            "edge_scans {} exceeds 5(n+m) = {bound}",
            report.edge_scans
        );
    }
}
