//! Incremental maintenance of connectivity counters under edge insertion.
//!
//! The state tracks, for a growing edge set over a fixed vertex set, the
//! number of components, vertex-blocks, and edge-blocks, plus per-element
//! membership queries. Insertion distinguishes three cases:
//!
//! * endpoints already share a vertex-block: the edge joins that block
//!   and nothing else changes;
//! * endpoints lie in different components: the edge is a bridge joining
//!   them, forming a singleton vertex-block of its own;
//! * endpoints share a component but not a vertex-block: the new cycle
//!   merges every vertex-block and edge-block met by a shortest path
//!   between the endpoints, and path bridges stop being bridges.
//!
//! The contract, relied on by the greedy heuristics and enforced by the
//! differential tests: after any insertion sequence the counters and
//! partitions equal a from-scratch analysis of the same edge set.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::graph::{Edge, LabeledGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncrementalError {
    EdgeAlreadyPresent { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    LabelOutOfRange { label: usize, num_labels: usize },
}

impl fmt::Display for IncrementalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IncrementalError::EdgeAlreadyPresent { u, v } => {
                write!(f, "edge ({u}, {v}) already present")
            }
            IncrementalError::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex {vertex} out of range (state has {num_vertices} vertices)")
            }
            IncrementalError::LabelOutOfRange { label, num_labels } => {
                write!(f, "label {label} out of range (graph has {num_labels} labels)")
            }
        }
    }
}

impl core::error::Error for IncrementalError {}

/// Signed change of the three counters caused by an insertion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CounterDelta {
    pub components: i64,
    pub vertex_blocks: i64,
    pub edge_blocks: i64,
}

impl CounterDelta {
    pub const ZERO: CounterDelta = CounterDelta { components: 0, vertex_blocks: 0, edge_blocks: 0 };
}

impl Add for CounterDelta {
    type Output = CounterDelta;

    fn add(self, rhs: CounterDelta) -> CounterDelta {
        CounterDelta {
            components: self.components + rhs.components,
            vertex_blocks: self.vertex_blocks + rhs.vertex_blocks,
            edge_blocks: self.edge_blocks + rhs.edge_blocks,
        }
    }
}

impl AddAssign for CounterDelta {
    fn add_assign(&mut self, rhs: CounterDelta) {
        *self = *self + rhs;
    }
}

/// Union-find with path compression on mutable finds. Unions keep the
/// smaller root id, so representatives are deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn grow(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Root lookup without compression, for `&self` queries.
    fn find_readonly(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (keep, absorb) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[absorb] = keep;
        true
    }
}

/// Growing edge set over `0..num_vertices` with live connectivity
/// counters. Equality compares full internal state, so a cloned snapshot
/// restores (and verifies) bit-identical rollback.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncrementalState {
    num_vertices: usize,
    /// Inserted edges in insertion order; positions are state edge ids.
    edges: Vec<Edge>,
    /// `(neighbor, state edge id)` per vertex, in insertion order.
    adjacency: Vec<Vec<(usize, usize)>>,
    /// Component and edge-block partitions over vertices.
    components: UnionFind,
    edge_blocks: UnionFind,
    /// Vertex-block partition over state edge ids.
    vertex_blocks: UnionFind,
    bridge: Vec<bool>,
    num_components: usize,
    num_vertex_blocks: usize,
    num_edge_blocks: usize,
}

impl IncrementalState {
    /// Empty edge set: every vertex is its own component, its own
    /// edge-block, and (being isolated) its own vertex-block.
    pub fn new(num_vertices: usize) -> Self {
        assert!(num_vertices > 0, "state needs at least one vertex");
        IncrementalState {
            num_vertices,
            edges: Vec::new(),
            adjacency: alloc::vec![Vec::new(); num_vertices],
            components: UnionFind::new(num_vertices),
            edge_blocks: UnionFind::new(num_vertices),
            vertex_blocks: UnionFind::new(0),
            bridge: Vec::new(),
            num_components: num_vertices,
            num_vertex_blocks: num_vertices,
            num_edge_blocks: num_vertices,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Inserted edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.num_vertices && self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn num_vertex_blocks(&self) -> usize {
        self.num_vertex_blocks
    }

    pub fn num_edge_blocks(&self) -> usize {
        self.num_edge_blocks
    }

    /// `(components, vertex_blocks, edge_blocks)` in one call.
    pub fn snapshot_counters(&self) -> (usize, usize, usize) {
        (self.num_components, self.num_vertex_blocks, self.num_edge_blocks)
    }

    /// Component representative (smallest vertex id in the component's
    /// union history).
    pub fn component_of(&self, vertex: usize) -> usize {
        self.components.find_readonly(vertex)
    }

    /// Edge-block representative of a vertex.
    pub fn edge_block_of(&self, vertex: usize) -> usize {
        self.edge_blocks.find_readonly(vertex)
    }

    /// Vertex-block representative of a state edge id.
    pub fn vertex_block_of(&self, edge: usize) -> usize {
        self.vertex_blocks.find_readonly(edge)
    }

    pub fn is_bridge(&self, edge: usize) -> bool {
        self.bridge[edge]
    }

    /// Inserts one edge and returns the counter changes. The state is
    /// untouched on error.
    pub fn add_edge(&mut self, edge: Edge) -> Result<CounterDelta, IncrementalError> {
        let (u, v) = edge.endpoints();
        if v >= self.num_vertices {
            // u < v by construction, so v is the only candidate violation.
            return Err(IncrementalError::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices,
            });
        }
        if self.contains_edge(u, v) {
            return Err(IncrementalError::EdgeAlreadyPresent { u, v });
        }

        if self.components.find(u) != self.components.find(v) {
            // Bridge joining two components. Each endpoint that was
            // isolated stops being a singleton vertex-block; the bridge
            // itself becomes one.
            let formerly_isolated =
                [u, v].iter().filter(|&&x| self.adjacency[x].is_empty()).count();
            self.push_edge(edge, true);
            self.components.union(u, v);
            self.num_components -= 1;
            self.num_vertex_blocks += 1;
            self.num_vertex_blocks -= formerly_isolated;
            return Ok(CounterDelta {
                components: -1,
                vertex_blocks: 1 - formerly_isolated as i64,
                edge_blocks: 0,
            });
        }

        let (path_vertices, path_edges) = self.shortest_path(u, v);
        let mut touched_vblocks: Vec<usize> =
            path_edges.iter().map(|&e| self.vertex_blocks.find(e)).collect();
        touched_vblocks.sort_unstable();
        touched_vblocks.dedup();

        if touched_vblocks.len() == 1 {
            // Endpoints already share a vertex-block; the edge joins it.
            debug_assert!(path_vertices
                .iter()
                .all(|&x| self.edge_blocks.find_readonly(x)
                    == self.edge_blocks.find_readonly(u)));
            let idx = self.push_edge(edge, false);
            self.vertex_blocks.union(idx, touched_vblocks[0]);
            return Ok(CounterDelta::ZERO);
        }

        // New cycle: every vertex-block and edge-block met by the path
        // merges into one, and path bridges stop being bridges.
        let mut touched_eblocks: Vec<usize> =
            path_vertices.iter().map(|&x| self.edge_blocks.find(x)).collect();
        touched_eblocks.sort_unstable();
        touched_eblocks.dedup();
        let merged_vblocks = touched_vblocks.len();
        let merged_eblocks = touched_eblocks.len();

        let idx = self.push_edge(edge, false);
        for &e in &path_edges {
            self.vertex_blocks.union(idx, e);
            self.bridge[e] = false;
        }
        for &x in &path_vertices {
            self.edge_blocks.union(u, x);
        }
        self.num_vertex_blocks -= merged_vblocks - 1;
        self.num_edge_blocks -= merged_eblocks - 1;
        Ok(CounterDelta {
            components: 0,
            vertex_blocks: -((merged_vblocks - 1) as i64),
            edge_blocks: -((merged_eblocks - 1) as i64),
        })
    }

    /// Inserts every edge of `graph` carrying `label`, in the graph's
    /// edge order, and returns the aggregated delta. Validates all edges
    /// up front so a failure leaves the state untouched. A label with no
    /// edges yields a zero delta.
    pub fn add_label(
        &mut self,
        graph: &LabeledGraph,
        label: usize,
    ) -> Result<CounterDelta, IncrementalError> {
        assert_eq!(
            graph.num_vertices(),
            self.num_vertices,
            "graph and state disagree on vertex count"
        );
        if label >= graph.num_labels() {
            return Err(IncrementalError::LabelOutOfRange {
                label,
                num_labels: graph.num_labels(),
            });
        }
        for &e in graph.edges_with_label(label) {
            let (u, v) = graph.edges()[e].endpoints();
            if self.contains_edge(u, v) {
                return Err(IncrementalError::EdgeAlreadyPresent { u, v });
            }
        }
        let mut total = CounterDelta::ZERO;
        for &e in graph.edges_with_label(label) {
            total += self
                .add_edge(graph.edges()[e])
                .expect("label edges validated before insertion");
        }
        Ok(total)
    }

    fn push_edge(&mut self, edge: Edge, bridge: bool) -> usize {
        let idx = self.edges.len();
        let (u, v) = edge.endpoints();
        self.adjacency[u].push((v, idx));
        self.adjacency[v].push((u, idx));
        self.edges.push(edge);
        self.bridge.push(bridge);
        let slot = self.vertex_blocks.grow();
        debug_assert_eq!(slot, idx);
        idx
    }

    /// Shortest path by BFS over stored adjacency (insertion order), so
    /// the result is deterministic. Caller guarantees both endpoints
    /// share a component.
    fn shortest_path(&self, from: usize, to: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent_edge = alloc::vec![usize::MAX; self.num_vertices];
        let mut seen = alloc::vec![false; self.num_vertices];
        let mut queue = VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        'bfs: while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adjacency[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent_edge[y] = e;
                if y == to {
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        debug_assert!(seen[to], "endpoints must share a component");
        let mut vertices = alloc::vec![to];
        let mut edges = Vec::new();
        let mut cursor = to;
        while cursor != from {
            let e = parent_edge[cursor];
            edges.push(e);
            let (a, b) = self.edges[e].endpoints();
            cursor = if a == cursor { b } else { a };
            vertices.push(cursor);
        }
        vertices.reverse();
        edges.reverse();
        (vertices, edges)
    }
}
