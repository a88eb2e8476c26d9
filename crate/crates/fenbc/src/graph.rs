//! Simple undirected graphs with dense vertex ids, plus the degree and
//! connectivity primitives the solvers are built on.

use std::fmt;

/// Dense 0-based vertex id.
pub type VertexId = usize;

/// Immutable simple undirected graph in CSR form.
///
/// Adjacency lists are strictly increasing, so the graph is guaranteed to be
/// simple (no self-loops, no parallel edges) and symmetric by construction.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from `(u, v)` pairs over vertices `0..n`.
    /// Duplicate edges are collapsed. Panics on self-loops or out-of-range ids.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Graph {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            assert_ne!(u, v, "self-loop");
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(adjacency.iter().map(Vec::len).sum());
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets, edge_count: 0, labels: None }.with_edge_count()
    }

    fn with_edge_count(mut self) -> Graph {
        self.edge_count = self.targets.len() / 2;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Original input token for `v`, if the graph was built from a token list.
    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    /// Subgraph induced by `vertices` (which must be sorted and deduplicated).
    /// Vertex `i` of the result corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                if local[w] != usize::MAX && local[w] > i {
                    edges.push((i, local[w]));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }
}

/// Error from [`build_graph`]; `pair_index` is 0-based into the input slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    SelfLoop { pair_index: usize, token: String },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::SelfLoop { pair_index, token } => {
                write!(f, "self-loop on token {:?} (pair {})", token, pair_index + 1)
            }
        }
    }
}

impl std::error::Error for BuildError {}

/// Graph built from labelled token pairs, plus the number of duplicate edges
/// that were collapsed.
#[derive(Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// Builds a graph from arbitrary string token pairs.
///
/// Vertex ids are assigned densely in first-appearance order and the tokens
/// are retained as labels. Duplicate edges (in either orientation) are
/// collapsed and counted; a self-loop pair is an error.
pub fn build_graph<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<BuiltGraph, BuildError> {
    let mut ids: std::collections::HashMap<String, VertexId> = std::collections::HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut intern = |tok: &str, labels: &mut Vec<String>| -> VertexId {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = labels.len();
        ids.insert(tok.to_string(), id);
        labels.push(tok.to_string());
        id
    };

    let mut edges = Vec::with_capacity(pairs.len());
    for (i, (a, b)) in pairs.iter().enumerate() {
        let (a, b) = (a.as_ref(), b.as_ref());
        if a == b {
            return Err(BuildError::SelfLoop { pair_index: i, token: a.to_string() });
        }
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }

    let mut graph = Graph::from_edges(labels.len(), edges);
    let duplicate_edges = pairs.len() - graph.edge_count();
    graph.labels = Some(labels);
    Ok(BuiltGraph { graph, duplicate_edges })
}

/// Vertices of degree one, two, and at least three. Isolated vertices are in
/// none of the three sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    pub deg1: Vec<VertexId>,
    pub deg2: Vec<VertexId>,
    pub deg3plus: Vec<VertexId>,
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let mut p = DegreePartition { deg1: Vec::new(), deg2: Vec::new(), deg3plus: Vec::new() };
    for v in 0..g.vertex_count() {
        match g.degree(v) {
            0 => {}
            1 => p.deg1.push(v),
            2 => p.deg2.push(v),
            _ => p.deg3plus.push(v),
        }
    }
    p
}

/// Feedback edge number `m - n + c` together with one concrete feedback edge
/// set of that size (the non-tree edges of a BFS spanning forest).
pub fn feedback_edge_number(g: &Graph) -> (usize, Vec<(VertexId, VertexId)>) {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut feedback = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        parent[root] = root;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w && v < w {
                    // non-tree edge; seen from both ends, recorded once
                    feedback.push((v, w));
                }
            }
        }
    }
    (feedback.len(), feedback)
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = vec![root];
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Graph plus per-vertex pending-tree weights (positive integers).
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub pend: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, pend: Vec<u64>) -> WeightedGraph {
        assert_eq!(graph.vertex_count(), pend.len());
        debug_assert!(pend.iter().all(|&p| p >= 1), "pend weights must be positive");
        WeightedGraph { graph, pend }
    }

    /// All weights one: the unweighted problem.
    pub fn unit(graph: Graph) -> WeightedGraph {
        let n = graph.vertex_count();
        WeightedGraph { graph, pend: vec![1; n] }
    }

    pub fn total_pend(&self) -> u64 {
        self.pend.iter().sum()
    }
}

/// Per-vertex accumulated betweenness centrality values.
#[derive(Clone, Debug, PartialEq)]
pub struct BCScores(pub Vec<f64>);

impl BCScores {
    pub fn zeros(n: usize) -> BCScores {
        BCScores(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<VertexId> for BCScores {
    type Output = f64;
    fn index(&self, v: VertexId) -> &f64 {
        &self.0[v]
    }
}

impl std::ops::IndexMut<VertexId> for BCScores {
    fn index_mut(&mut self, v: VertexId) -> &mut f64 {
        &mut self.0[v]
    }
}
