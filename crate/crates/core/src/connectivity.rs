//! From-scratch connectivity analysis: components, bridges, cut-vertices,
//! and both block decompositions, in one linear pass.
//!
//! Terminology used throughout the crate:
//!
//! * A *bridge* is an edge whose removal increases the component count; a
//!   *cut-vertex* is a vertex whose removal does.
//! * *Vertex-blocks* partition the active edges into maximal subgraphs
//!   without internal cut-vertices (every bridge is a singleton block);
//!   each isolated vertex counts as one extra vertex-block.
//! * *Edge-blocks* partition the vertices: two vertices share an
//!   edge-block exactly when they are connected after deleting all
//!   bridges.
//!
//! Every vertex-block's vertex set lies inside a single edge-block, and
//! vertex bi-connectivity implies edge bi-connectivity. Graphs on fewer
//! than three vertices are never bi-connected in either sense.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{LabelSet, LabeledGraph, SubgraphView};

/// Which bi-connectivity notion a solver targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Connected, no bridges, at least three vertices.
    Edge,
    /// Connected, no cut-vertices, at least three vertices.
    Vertex,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Edge => "edge",
            Mode::Vertex => "vertex",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything the analysis derives from a subgraph view. Block and
/// component ids are deterministic for this implementation (discovery
/// order) but only the induced partitions are meaningful across
/// implementations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub num_components: usize,
    /// Component id per vertex.
    pub component_of: Vec<usize>,
    /// Bridge edge indices, ascending.
    pub bridges: Vec<usize>,
    /// Cut-vertices, ascending.
    pub cut_vertices: Vec<usize>,
    /// Vertex-block id per host edge; `None` for inactive edges.
    pub vertex_block_of: Vec<Option<usize>>,
    /// Vertices with no active edge, ascending. Each adds one
    /// vertex-block on top of the edge-partition blocks.
    pub isolated_vertices: Vec<usize>,
    pub num_vertex_blocks: usize,
    /// Edge-block id per vertex.
    pub edge_block_of: Vec<usize>,
    pub num_edge_blocks: usize,
    pub edge_biconnected: bool,
    pub vertex_biconnected: bool,
    /// Adjacency entries inspected; stays within a small constant times
    /// (vertices + host edges).
    pub edge_scans: usize,
}

const UNVISITED: usize = usize::MAX;
const NONE: usize = usize::MAX;

struct Frame {
    vertex: usize,
    cursor: usize,
}

/// Analyzes the whole graph (all edges active).
pub fn analyze_graph(graph: &LabeledGraph) -> ConnectivityReport {
    analyze(&graph.full_view())
}

/// Whether the subgraph induced by `labels` is bi-connected in `mode`.
pub fn labels_biconnected(graph: &LabeledGraph, labels: &LabelSet, mode: Mode) -> bool {
    is_biconnected(&analyze(&graph.induced_subgraph(labels)), mode)
}

pub fn is_biconnected(report: &ConnectivityReport, mode: Mode) -> bool {
    match mode {
        Mode::Edge => report.edge_biconnected,
        Mode::Vertex => report.vertex_biconnected,
    }
}

/// Single-pass analysis of a subgraph view.
///
/// Runs an iterative depth-first search maintaining discovery depths and
/// lowpoints with an explicit frame stack (recursion would overflow on
/// long paths) plus a LIFO edge stack. When a child's lowpoint cannot
/// reach above its parent, the edges accumulated since entering the child
/// form one vertex-block and are popped; the block is a bridge exactly
/// when the child's lowpoint lies strictly below the parent. A second
/// sweep floods over non-bridge edges to assign edge-blocks.
pub fn analyze(view: &SubgraphView) -> ConnectivityReport {
    let graph = view.graph();
    let n = graph.num_vertices();
    let m = graph.num_edges();

    let mut depth = alloc::vec![UNVISITED; n];
    let mut low = alloc::vec![0usize; n];
    let mut parent_edge = alloc::vec![NONE; n];
    let mut component_of = alloc::vec![0usize; n];
    let mut vertex_block_of: Vec<Option<usize>> = alloc::vec![None; m];
    let mut is_bridge = alloc::vec![false; m];
    let mut is_cut = alloc::vec![false; n];
    let mut isolated_vertices = Vec::new();

    let mut frames: Vec<Frame> = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut num_components = 0usize;
    let mut edge_partition_blocks = 0usize;
    let mut edge_scans = 0usize;

    for root in 0..n {
        if depth[root] != UNVISITED {
            continue;
        }
        let comp = num_components;
        num_components += 1;
        depth[root] = 0;
        low[root] = 0;
        component_of[root] = comp;
        let mut root_children = 0usize;
        frames.push(Frame { vertex: root, cursor: 0 });

        while let Some(top) = frames.last_mut() {
            let v = top.vertex;
            let adjacency = graph.adjacency(v);
            if top.cursor < adjacency.len() {
                let (w, e) = adjacency[top.cursor];
                top.cursor += 1;
                edge_scans += 1;
                if !view.edge_active(e) || parent_edge[v] == e {
                    continue;
                }
                if depth[w] == UNVISITED {
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    low[w] = depth[w];
                    component_of[w] = comp;
                    edge_stack.push(e);
                    frames.push(Frame { vertex: w, cursor: 0 });
                } else if depth[w] < depth[v] {
                    // Back edge to an ancestor; the deeper endpoint records
                    // it, so each non-tree edge is stacked exactly once.
                    edge_stack.push(e);
                    low[v] = low[v].min(depth[w]);
                }
            } else {
                frames.pop();
                let Some(parent) = frames.last() else { continue };
                let u = parent.vertex;
                low[u] = low[u].min(low[v]);
                if low[v] >= depth[u] {
                    // v's subtree cannot reach above u: the edges stacked
                    // since the tree edge (u, v) close one vertex-block.
                    let block = edge_partition_blocks;
                    edge_partition_blocks += 1;
                    let closing = parent_edge[v];
                    let mut popped = 0usize;
                    while let Some(e) = edge_stack.pop() {
                        vertex_block_of[e] = Some(block);
                        popped += 1;
                        if e == closing {
                            break;
                        }
                    }
                    if low[v] > depth[u] {
                        is_bridge[closing] = true;
                        debug_assert_eq!(popped, 1, "a bridge block holds one edge");
                    }
                    if u == root {
                        root_children += 1;
                    } else {
                        is_cut[u] = true;
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty());

        if root_children == 0 {
            isolated_vertices.push(root);
        } else if root_children > 1 {
            is_cut[root] = true;
        }
    }

    // Edge-blocks: components of the view after deleting bridges.
    let mut edge_block_of = alloc::vec![NONE; n];
    let mut num_edge_blocks = 0usize;
    let mut stack: Vec<usize> = Vec::new();
    for start in 0..n {
        if edge_block_of[start] != NONE {
            continue;
        }
        let block = num_edge_blocks;
        num_edge_blocks += 1;
        edge_block_of[start] = block;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &(w, e) in graph.adjacency(v) {
                edge_scans += 1;
                if !view.edge_active(e) || is_bridge[e] || edge_block_of[w] != NONE {
                    continue;
                }
                edge_block_of[w] = block;
                stack.push(w);
            }
        }
    }

    let bridges: Vec<usize> = (0..m).filter(|&e| is_bridge[e]).collect();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let edge_biconnected = num_components == 1 && bridges.is_empty() && n >= 3;
    let vertex_biconnected = edge_biconnected && cut_vertices.is_empty();

    ConnectivityReport {
        num_components,
        component_of,
        bridges,
        cut_vertices,
        vertex_block_of,
        num_vertex_blocks: edge_partition_blocks + isolated_vertices.len(),
        isolated_vertices,
        edge_block_of,
        num_edge_blocks,
        edge_biconnected,
        vertex_biconnected,
        edge_scans,
    }
}

impl ConnectivityReport {
    /// Cross-checks the structural laws the report promises against the
    /// view it was computed from. Returns the first violation found.
    /// Intended for tests and debugging; cost is O(n + m) with small
    /// allocations.
    pub fn check_invariants(&self, view: &SubgraphView) -> Result<(), String> {
        let graph = view.graph();
        let n = graph.num_vertices();
        let m = graph.num_edges();

        if self.component_of.len() != n
            || self.edge_block_of.len() != n
            || self.vertex_block_of.len() != m
        {
            return Err(String::from("per-vertex or per-edge array length mismatch"));
        }

        let check_partition = |ids: &mut dyn Iterator<Item = usize>, count: usize, what: &str| {
            let mut seen = alloc::vec![false; count];
            for id in ids {
                if id >= count {
                    return Err(format!("{what} id {id} out of range {count}"));
                }
                seen[id] = true;
            }
            if let Some(missing) = seen.iter().position(|&s| !s) {
                return Err(format!("{what} id {missing} has no members"));
            }
            Ok(())
        };

        check_partition(
            &mut self.component_of.iter().copied(),
            self.num_components,
            "component",
        )?;
        check_partition(
            &mut self.edge_block_of.iter().copied(),
            self.num_edge_blocks,
            "edge-block",
        )?;
        let edge_partition_blocks = self.num_vertex_blocks - self.isolated_vertices.len();
        check_partition(
            &mut self.vertex_block_of.iter().filter_map(|b| *b),
            edge_partition_blocks,
            "vertex-block",
        )?;

        for e in 0..m {
            if self.vertex_block_of[e].is_some() != view.edge_active(e) {
                return Err(format!("edge {e}: block assignment disagrees with activity"));
            }
        }

        let isolated_expected: Vec<usize> = (0..n).filter(|&v| view.degree(v) == 0).collect();
        if self.isolated_vertices != isolated_expected {
            return Err(String::from("isolated vertex list incorrect"));
        }

        let mut bridge_set = alloc::vec![false; m];
        let mut last = None;
        for &e in &self.bridges {
            if e >= m || !view.edge_active(e) {
                return Err(format!("bridge {e} is not an active edge"));
            }
            if last.is_some_and(|p| p >= e) {
                return Err(String::from("bridge list not strictly ascending"));
            }
            last = Some(e);
            bridge_set[e] = true;
        }
        let mut cut_set = alloc::vec![false; n];
        let mut last = None;
        for &v in &self.cut_vertices {
            if v >= n {
                return Err(format!("cut-vertex {v} out of range"));
            }
            if last.is_some_and(|p| p >= v) {
                return Err(String::from("cut-vertex list not strictly ascending"));
            }
            last = Some(v);
            cut_set[v] = true;
        }

        // Block sizes; bridges must be singleton vertex-blocks.
        let mut block_size = alloc::vec![0usize; edge_partition_blocks];
        for e in view.active_edges() {
            block_size[self.vertex_block_of[e].unwrap()] += 1;
        }
        for &e in &self.bridges {
            if block_size[self.vertex_block_of[e].unwrap()] != 1 {
                return Err(format!("bridge {e} shares a vertex-block with another edge"));
            }
        }

        for e in view.active_edges() {
            let (u, v) = graph.edges()[e].endpoints();
            if self.component_of[u] != self.component_of[v] {
                return Err(format!("edge {e} spans two components"));
            }
            if bridge_set[e] {
                // A bridge joins two different edge-blocks.
                if self.edge_block_of[u] == self.edge_block_of[v] {
                    return Err(format!("bridge {e} lies inside one edge-block"));
                }
            } else if self.edge_block_of[u] != self.edge_block_of[v] {
                return Err(format!("non-bridge edge {e} spans two edge-blocks"));
            }
        }

        // Each non-bridge vertex-block's vertex set lies inside one
        // edge-block. Bridge blocks are exempt: a bridge joins two
        // edge-blocks by definition.
        let mut block_home = alloc::vec![NONE; edge_partition_blocks];
        for e in view.active_edges() {
            if bridge_set[e] {
                continue;
            }
            let block = self.vertex_block_of[e].unwrap();
            let (u, v) = graph.edges()[e].endpoints();
            for vertex in [u, v] {
                let home = self.edge_block_of[vertex];
                if block_home[block] == NONE {
                    block_home[block] = home;
                } else if block_home[block] != home {
                    return Err(format!("vertex-block {block} crosses edge-blocks"));
                }
            }
        }

        // A bridge endpoint of degree >= 2 is a cut-vertex; every
        // cut-vertex touches at least two distinct vertex-blocks.
        for &e in &self.bridges {
            let (u, v) = graph.edges()[e].endpoints();
            for vertex in [u, v] {
                if view.degree(vertex) >= 2 && !cut_set[vertex] {
                    return Err(format!(
                        "bridge endpoint {vertex} of degree >= 2 is not a cut-vertex"
                    ));
                }
            }
        }
        for &v in &self.cut_vertices {
            let mut first = NONE;
            let mut distinct = 0;
            for (_, e) in view.neighbors(v) {
                let block = self.vertex_block_of[e].unwrap();
                if first == NONE {
                    first = block;
                    distinct = 1;
                } else if block != first {
                    distinct = 2;
                    break;
                }
            }
            if distinct < 2 {
                return Err(format!("cut-vertex {v} touches fewer than two vertex-blocks"));
            }
        }

        let edge_flag = self.num_components == 1 && self.bridges.is_empty() && n >= 3;
        if self.edge_biconnected != edge_flag {
            return Err(String::from("edge_biconnected flag inconsistent"));
        }
        if self.vertex_biconnected != (edge_flag && self.cut_vertices.is_empty()) {
            return Err(String::from("vertex_biconnected flag inconsistent"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabeledGraph;
    use alloc::vec;

    fn analyze_all(g: &LabeledGraph) -> ConnectivityReport {
        let view = g.full_view();
        let report = analyze(&view);
        report.check_invariants(&view).unwrap();
        report
    }

    #[test]
    fn path_has_bridges_and_inner_cut() {
        let g = LabeledGraph::build(3, 1, &[(0, 1, 0), (1, 2, 0)]).unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 1);
        assert_eq!(r.bridges, vec![0, 1]);
        assert_eq!(r.cut_vertices, vec![1]);
        assert_eq!(r.num_vertex_blocks, 2);
        assert_eq!(r.num_edge_blocks, 3);
        assert!(!r.edge_biconnected);
        assert!(!r.vertex_biconnected);
    }

    #[test]
    fn triangle_is_biconnected_both_ways() {
        let g = LabeledGraph::build(3, 3, &[(0, 1, 0), (1, 2, 1), (0, 2, 2)]).unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 1);
        assert!(r.bridges.is_empty());
        assert!(r.cut_vertices.is_empty());
        assert_eq!(r.num_vertex_blocks, 1);
        assert_eq!(r.num_edge_blocks, 1);
        assert!(r.edge_biconnected);
        assert!(r.vertex_biconnected);
        assert!(is_biconnected(&r, Mode::Edge));
        assert!(is_biconnected(&r, Mode::Vertex));
    }

    #[test]
    fn bowtie_is_edge_but_not_vertex_biconnected() {
        // Two triangles sharing vertex 2.
        let g = LabeledGraph::build(
            5,
            1,
            &[(0, 1, 0), (1, 2, 0), (0, 2, 0), (2, 3, 0), (3, 4, 0), (2, 4, 0)],
        )
        .unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 1);
        assert!(r.bridges.is_empty());
        assert_eq!(r.cut_vertices, vec![2]);
        assert_eq!(r.num_vertex_blocks, 2);
        assert_eq!(r.num_edge_blocks, 1);
        assert!(r.edge_biconnected);
        assert!(!r.vertex_biconnected);
    }

    #[test]
    fn two_vertices_one_edge_is_never_biconnected() {
        let g = LabeledGraph::build(2, 1, &[(0, 1, 0)]).unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 1);
        assert_eq!(r.bridges, vec![0]);
        assert!(r.cut_vertices.is_empty());
        assert!(!r.edge_biconnected);
        assert!(!r.vertex_biconnected);
    }

    #[test]
    fn edgeless_graph_counts_singletons() {
        let g = LabeledGraph::build(5, 1, &[]).unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 5);
        assert_eq!(r.num_vertex_blocks, 5);
        assert_eq!(r.num_edge_blocks, 5);
        assert_eq!(r.isolated_vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn empty_view_of_triangle() {
        let g = LabeledGraph::build(3, 1, &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        let view = g.induced_subgraph(&LabelSet::empty(1));
        let r = analyze(&view);
        r.check_invariants(&view).unwrap();
        assert_eq!(r.num_components, 3);
        assert_eq!(r.vertex_block_of, vec![None, None, None]);
        assert_eq!(r.num_vertex_blocks, 3);
        assert_eq!(r.isolated_vertices, vec![0, 1, 2]);
    }

    #[test]
    fn cycle_with_pendant_edge() {
        // Triangle 0-1-2 plus pendant edge 2-3: one bridge, one cut-vertex.
        let g =
            LabeledGraph::build(4, 1, &[(0, 1, 0), (1, 2, 0), (0, 2, 0), (2, 3, 0)]).unwrap();
        let r = analyze_all(&g);
        let bridge = g.edge_index(2, 3).unwrap();
        assert_eq!(r.bridges, vec![bridge]);
        assert_eq!(r.cut_vertices, vec![2]);
        assert_eq!(r.num_vertex_blocks, 2);
        assert_eq!(r.num_edge_blocks, 2);
        // Triangle vertices share an edge-block; the pendant sits alone.
        assert_eq!(r.edge_block_of[0], r.edge_block_of[1]);
        assert_eq!(r.edge_block_of[1], r.edge_block_of[2]);
        assert_ne!(r.edge_block_of[2], r.edge_block_of[3]);
    }

    #[test]
    fn two_component_mix() {
        // Component A: square 0-1-2-3. Component B: path 4-5-6.
        let g = LabeledGraph::build(
            7,
            2,
            &[(0, 1, 0), (1, 2, 0), (2, 3, 0), (0, 3, 0), (4, 5, 1), (5, 6, 1)],
        )
        .unwrap();
        let r = analyze_all(&g);
        assert_eq!(r.num_components, 2);
        assert_eq!(r.bridges.len(), 2);
        assert_eq!(r.cut_vertices, vec![5]);
        assert_eq!(r.num_vertex_blocks, 3);
        assert_eq!(r.num_edge_blocks, 4);
        assert!(!r.edge_biconnected);
    }

    #[test]
    fn work_is_linear_in_host_size() {
        let g = LabeledGraph::build(
            5,
            1,
            &[(0, 1, 0), (1, 2, 0), (0, 2, 0), (2, 3, 0), (3, 4, 0), (2, 4, 0)],
        )
        .unwrap();
        let r = analyze_all(&g);
        assert!(r.edge_scans <= 5 * (g.num_vertices() + g.num_edges()));
    }

    #[test]
    fn deterministic_report() {
        let g = LabeledGraph::build(
            6,
            2,
            &[(0, 1, 0), (1, 2, 1), (2, 0, 0), (2, 3, 1), (3, 4, 0), (4, 5, 1), (5, 3, 0)],
        )
        .unwrap();
        assert_eq!(analyze_all(&g), analyze_all(&g));
    }
}
