//! Labelled undirected graphs, label sets, and label-induced subgraphs.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Input rejected by [`LabeledGraph::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    NoVertices,
    NoLabels,
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    LabelOutOfRange { label: usize, num_labels: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::NoVertices => write!(f, "graph needs at least one vertex"),
            GraphError::NoLabels => write!(f, "graph needs at least one label"),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex {vertex} out of range (graph has {num_vertices} vertices)")
            }
            GraphError::LabelOutOfRange { label, num_labels } => {
                write!(f, "label {label} out of range (graph has {num_labels} labels)")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected labelled edge. Endpoints are stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
    label: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a self-loop; graph construction
    /// rejects those before building edges.
    pub fn new(u: usize, v: usize, label: usize) -> Self {
        assert_ne!(u, v, "self-loop at vertex {u}");
        if u < v {
            Edge { u, v, label }
        } else {
            Edge { u: v, v: u, label }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// Subset of the labels `0..num_labels`, stored as a dense bit set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelSet {
    words: Vec<u64>,
    num_labels: usize,
    len: usize,
}

impl LabelSet {
    pub fn empty(num_labels: usize) -> Self {
        LabelSet {
            words: alloc::vec![0; num_labels.div_ceil(64)],
            num_labels,
            len: 0,
        }
    }

    pub fn full(num_labels: usize) -> Self {
        let mut set = LabelSet::empty(num_labels);
        for label in 0..num_labels {
            set.insert(label);
        }
        set
    }

    /// Panics if any label is out of range.
    pub fn from_labels(num_labels: usize, labels: &[usize]) -> Self {
        let mut set = LabelSet::empty(num_labels);
        for &label in labels {
            set.insert(label);
        }
        set
    }

    pub fn num_labels(&self) -> usize {
        self.num_labels
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, label: usize) -> bool {
        assert!(label < self.num_labels, "label {label} out of range");
        self.words[label / 64] >> (label % 64) & 1 == 1
    }

    /// Returns true if the label was newly added.
    pub fn insert(&mut self, label: usize) -> bool {
        assert!(label < self.num_labels, "label {label} out of range");
        let word = &mut self.words[label / 64];
        let bit = 1u64 << (label % 64);
        if *word & bit == 0 {
            *word |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    /// Returns true if the label was present.
    pub fn remove(&mut self, label: usize) -> bool {
        assert!(label < self.num_labels, "label {label} out of range");
        let word = &mut self.words[label / 64];
        let bit = 1u64 << (label % 64);
        if *word & bit != 0 {
            *word &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        assert_eq!(self.num_labels, other.num_labels);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out.len = out.words.iter().map(|w| w.count_ones() as usize).sum();
        out
    }

    pub fn is_subset_of(&self, other: &LabelSet) -> bool {
        assert_eq!(self.num_labels, other.num_labels);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Member labels in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_labels).filter(move |&l| self.words[l / 64] >> (l % 64) & 1 == 1)
    }

    /// Orders by cardinality first, then lexicographically on the ascending
    /// label sequence. Incumbent comparisons use this.
    pub fn cardinality_lex_cmp(&self, other: &LabelSet) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected graph with one label per edge, in canonical form: edges
/// sorted by `(u, v)`, adjacency lists sorted by edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    num_vertices: usize,
    num_labels: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
    label_edges: Vec<Vec<usize>>,
}

impl LabeledGraph {
    /// Validates and canonicalizes an edge list given as `(u, v, label)`
    /// triples. Rejects self-loops, duplicate vertex pairs (regardless of
    /// label), and out-of-range endpoints or labels.
    pub fn build(
        num_vertices: usize,
        num_labels: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<LabeledGraph, GraphError> {
        if num_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        if num_labels == 0 {
            return Err(GraphError::NoLabels);
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v, label) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for vertex in [u, v] {
                if vertex >= num_vertices {
                    return Err(GraphError::VertexOutOfRange { vertex, num_vertices });
                }
            }
            if label >= num_labels {
                return Err(GraphError::LabelOutOfRange { label, num_labels });
            }
            canonical.push(Edge::new(u, v, label));
        }
        canonical.sort_unstable_by_key(|e| e.endpoints());
        for pair in canonical.windows(2) {
            if pair[0].endpoints() == pair[1].endpoints() {
                let (u, v) = pair[0].endpoints();
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        let mut adjacency = alloc::vec![Vec::new(); num_vertices];
        let mut label_edges = alloc::vec![Vec::new(); num_labels];
        for (idx, e) in canonical.iter().enumerate() {
            adjacency[e.u].push((e.v, idx));
            adjacency[e.v].push((e.u, idx));
            label_edges[e.label].push(idx);
        }
        Ok(LabeledGraph {
            num_vertices,
            num_labels,
            edges: canonical,
            adjacency,
            label_edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_labels(&self) -> usize {
        self.num_labels
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(u, v)` order; positions are the edge indices
    /// used everywhere else.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `(neighbor, edge index)` pairs, ordered by edge index.
    pub fn adjacency(&self, vertex: usize) -> &[(usize, usize)] {
        &self.adjacency[vertex]
    }

    /// Index of the edge joining `u` and `v`, in either endpoint order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return None;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&key, |e| e.endpoints())
            .ok()
    }

    /// Edge indices carrying `label`, ascending.
    pub fn edges_with_label(&self, label: usize) -> &[usize] {
        &self.label_edges[label]
    }

    /// Edge count per label; zero-edge labels report 0. Counts sum to the
    /// number of edges.
    pub fn label_frequencies(&self) -> Vec<usize> {
        self.label_edges.iter().map(Vec::len).collect()
    }

    /// Subgraph containing exactly the edges whose label is in `labels`.
    /// All vertices stay present.
    pub fn induced_subgraph(&self, labels: &LabelSet) -> SubgraphView<'_> {
        assert_eq!(labels.num_labels(), self.num_labels);
        let active = self.edges.iter().map(|e| labels.contains(e.label)).collect();
        SubgraphView::from_edge_mask(self, active)
    }

    /// View with every edge active.
    pub fn full_view(&self) -> SubgraphView<'_> {
        SubgraphView::from_edge_mask(self, alloc::vec![true; self.edges.len()])
    }
}

/// Subgraph of a host graph: same vertex set, a subset of the edges.
#[derive(Clone, Debug)]
pub struct SubgraphView<'a> {
    graph: &'a LabeledGraph,
    active: Vec<bool>,
    num_active: usize,
}

impl<'a> SubgraphView<'a> {
    /// `active[i]` keeps host edge `i`. Panics if the mask length differs
    /// from the host edge count.
    pub fn from_edge_mask(graph: &'a LabeledGraph, active: Vec<bool>) -> Self {
        assert_eq!(active.len(), graph.num_edges(), "edge mask length mismatch");
        let num_active = active.iter().filter(|&&a| a).count();
        SubgraphView { graph, active, num_active }
    }

    pub fn graph(&self) -> &'a LabeledGraph {
        self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    /// Active edge count.
    pub fn num_edges(&self) -> usize {
        self.num_active
    }

    pub fn edge_active(&self, edge: usize) -> bool {
        self.active[edge]
    }

    /// Active edge indices, ascending.
    pub fn active_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.active.len()).filter(move |&e| self.active[e])
    }

    /// Active `(neighbor, edge index)` pairs of `vertex`.
    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .adjacency(vertex)
            .iter()
            .copied()
            .filter(move |&(_, e)| self.active[e])
    }

    /// Degree of `vertex` counting active edges only.
    pub fn degree(&self, vertex: usize) -> usize {
        self.neighbors(vertex).count()
    }
}
