//! Finite directed multigraphs, finite paths and the structural predicates
//! the symmetry classification is phrased in.
//!
//! Vertices and edges are addressed by dense indices ([`VertexId`],
//! [`EdgeId`]) whose order is the declaration order. That order is fixed at
//! construction and drives every deterministic choice downstream, in
//! particular the special edge used by the normal form.

mod enumerate;
mod families;
mod format;

pub use enumerate::{enumerate_graphs, enumerate_graphs_exact, EnumerationBudget, GraphEnumerator};
pub use families::{make_family, GraphFamily};
pub use format::{parse_graph, GraphJson};

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("edge `{edge}` references undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family parameter must be at least 1, got {0}")]
    InvalidParameter(usize),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("edge sequence is not a path: {0}")]
    NotAPath(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: VertexId,
    pub range: VertexId,
}

/// A finite directed multigraph with total source and range maps.
///
/// Equality is structural: two graphs are equal when their vertex names,
/// edge names and endpoint maps agree in order.
#[derive(Debug, Clone)]
pub struct DirectedMultigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl PartialEq for DirectedMultigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for DirectedMultigraph {}

impl DirectedMultigraph {
    /// Builds a graph from named vertices and `(id, source, range)` edge
    /// declarations.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, name) in vertices.iter().enumerate() {
            if vertex_index
                .insert(name.clone(), VertexId(i as u32))
                .is_some()
            {
                return Err(GraphError::DuplicateIdentifier(name.clone()));
            }
        }
        let mut resolved = Vec::new();
        let mut seen = HashSet::new();
        for (id, src, dst) in edges {
            if !seen.insert(id.clone()) {
                return Err(GraphError::DuplicateIdentifier(id));
            }
            let lookup = |name: &str| {
                vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| GraphError::DanglingEndpoint {
                        edge: id.clone(),
                        vertex: name.to_string(),
                    })
            };
            let source = lookup(&src)?;
            let range = lookup(&dst)?;
            resolved.push(Edge { id, source, range });
        }
        Ok(Self::assemble(vertices, resolved, vertex_index))
    }

    /// Builds a graph on `vertex_count` vertices named `v1..` with edges
    /// named `e1..` given as `(source, range)` index pairs.
    ///
    /// Panics if an endpoint is out of range.
    pub fn from_index_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Self {
        let vertices: Vec<String> = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(s, r))| {
                assert!(
                    s < vertex_count && r < vertex_count,
                    "endpoint out of range"
                );
                Edge {
                    id: format!("e{}", i + 1),
                    source: VertexId(s as u32),
                    range: VertexId(r as u32),
                }
            })
            .collect();
        Self::assemble(vertices, edges, vertex_index)
    }

    fn assemble(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        vertex_index: HashMap<String, VertexId>,
    ) -> Self {
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let id = EdgeId(i as u32);
            out_edges[e.source.index()].push(id);
            in_edges[e.range.index()].push(id);
            edge_index.insert(e.id.clone(), id);
        }
        Self {
            vertices,
            edges,
            out_edges,
            in_edges,
            vertex_index,
            edge_index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + Clone {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].id
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_decls(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].range
    }

    /// Outgoing edges of `v` in edge order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    /// Incoming edges of `v` in edge order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.index()]
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.out_edges[v.index()].len()
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.in_edges[v.index()].len()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let edge = &self.edges[e.index()];
        edge.source == edge.range
    }

    pub fn has_loops(&self) -> bool {
        self.edges().any(|e| self.is_loop(e))
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.index()].is_empty()
    }

    pub fn is_rigid_source(&self, v: VertexId) -> bool {
        self.in_edges[v.index()].is_empty()
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.is_sink(v) && self.is_rigid_source(v)
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_isolated(v)).collect()
    }

    /// The least outgoing edge of a non-sink vertex.
    pub fn special_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.out_edges[v.index()].first().copied()
    }

    /// Entry `(i, j)` counts the edges from vertex `i` to vertex `j`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0u64; n]; n];
        for e in &self.edges {
            a[e.source.index()][e.range.index()] += 1;
        }
        a
    }

    /// Connected in the undirected sense: every pair of distinct vertices is
    /// joined by a chain of adjacent vertices.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            let v = VertexId(v as u32);
            let neighbours = self
                .out_edges(v)
                .iter()
                .map(|&e| self.range(e))
                .chain(self.in_edges(v).iter().map(|&e| self.source(e)));
            for w in neighbours {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    reached += 1;
                    stack.push(w.index());
                }
            }
        }
        reached == n
    }

    pub fn has_path_of_length_two(&self) -> bool {
        self.edges
            .iter()
            .any(|e| !self.out_edges[e.range.index()].is_empty())
    }

    /// True when the graph has no directed cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm.
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.indegree(v)).collect();
        let mut ready: Vec<VertexId> = self.vertices().filter(|v| indeg[v.index()] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &e in self.out_edges(v) {
                let w = self.range(e);
                indeg[w.index()] -= 1;
                if indeg[w.index()] == 0 {
                    ready.push(w);
                }
            }
        }
        removed == self.vertex_count()
    }

    pub fn predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            indegree: self.vertices().map(|v| self.indegree(v)).collect(),
            outdegree: self.vertices().map(|v| self.outdegree(v)).collect(),
            sinks: self.vertices().filter(|&v| self.is_sink(v)).collect(),
            rigid_sources: self
                .vertices()
                .filter(|&v| self.is_rigid_source(v))
                .collect(),
            loops: self.edges().filter(|&e| self.is_loop(e)).collect(),
            isolated: self.isolated_vertices(),
            connected: self.is_connected(),
            has_path_of_length_two: self.has_path_of_length_two(),
        }
    }

    /// All paths of length `0..=max_len`, grouped by length. Within a length
    /// the order is lexicographic in the edge order; length-0 paths follow
    /// the vertex order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut all: Vec<Path> = self.vertices().map(Path::vertex).collect();
        let mut frontier: Vec<Path> = self.edges().map(|e| Path::edge(self, e)).collect();
        for _ in 1..=max_len {
            if frontier.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for p in &frontier {
                for &f in self.out_edges(p.range()) {
                    next.push(p.extended(self, f));
                }
            }
            next.sort();
            all.append(&mut frontier);
            frontier = next;
        }
        all
    }

    /// Relabels the graph: `vertex_perm[i]` is the new position of vertex
    /// `i` and `edge_perm[j]` the new position of edge `j`. Names travel
    /// with the items, so the result is isomorphic with a different order.
    pub fn permuted(&self, vertex_perm: &[usize], edge_perm: &[usize]) -> Self {
        assert_eq!(vertex_perm.len(), self.vertex_count());
        assert_eq!(edge_perm.len(), self.edge_count());
        let mut vertices = vec![String::new(); self.vertex_count()];
        for (i, &to) in vertex_perm.iter().enumerate() {
            vertices[to] = self.vertices[i].clone();
        }
        let mut edges = vec![(String::new(), String::new(), String::new()); self.edge_count()];
        for (j, &to) in edge_perm.iter().enumerate() {
            let e = &self.edges[j];
            edges[to] = (
                e.id.clone(),
                self.vertices[e.source.index()].clone(),
                self.vertices[e.range.index()].clone(),
            );
        }
        Self::new(vertices, edges).expect("relabeling preserves validity")
    }

    pub fn display_path<'a>(&'a self, path: &'a Path) -> PathDisplay<'a> {
        PathDisplay { graph: self, path }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub indegree: Vec<usize>,
    pub outdegree: Vec<usize>,
    pub sinks: Vec<VertexId>,
    pub rigid_sources: Vec<VertexId>,
    pub loops: Vec<EdgeId>,
    pub isolated: Vec<VertexId>,
    pub connected: bool,
    pub has_path_of_length_two: bool,
}

/// A finite path. The anchor is the source vertex; for the empty path it is
/// also the range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    anchor: VertexId,
    range: VertexId,
    edges: SmallVec<[EdgeId; 4]>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path {
            anchor: v,
            range: v,
            edges: SmallVec::new(),
        }
    }

    pub fn edge(g: &DirectedMultigraph, e: EdgeId) -> Self {
        let mut edges = SmallVec::new();
        edges.push(e);
        Path {
            anchor: g.source(e),
            range: g.range(e),
            edges,
        }
    }

    /// Validates that consecutive edges compose.
    pub fn from_edges(g: &DirectedMultigraph, edges: &[EdgeId]) -> Result<Self, GraphError> {
        let (&first, rest) = edges
            .split_first()
            .ok_or_else(|| GraphError::NotAPath("empty edge sequence needs an anchor".into()))?;
        let mut p = Path::edge(g, first);
        for &e in rest {
            if g.source(e) != p.range {
                return Err(GraphError::NotAPath(format!(
                    "{} does not start where {} ends",
                    g.edge_name(e),
                    g.display_path(&p)
                )));
            }
            p = p.extended(g, e);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.anchor
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Appends `e`; the caller guarantees `s(e) = r(self)`.
    pub fn extended(&self, g: &DirectedMultigraph, e: EdgeId) -> Path {
        debug_assert_eq!(g.source(e), self.range);
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            anchor: self.anchor,
            range: g.range(e),
            edges,
        }
    }

    /// Drops the last edge; `new_range` is its source.
    pub fn truncated(&self, new_range: VertexId) -> Path {
        let mut edges = self.edges.clone();
        edges.pop();
        Path {
            anchor: self.anchor,
            range: new_range,
            edges,
        }
    }

    /// Concatenation; the caller guarantees `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Path {
        debug_assert_eq!(self.range, other.anchor);
        if other.is_empty() {
            return self.clone();
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Path {
            anchor: self.anchor,
            range: other.range,
            edges,
        }
    }

    /// If `prefix` is an initial segment of `self`, the remaining suffix.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.anchor != prefix.anchor || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path {
            anchor: prefix.range,
            range: self.range,
            edges: SmallVec::from_slice(&self.edges[prefix.edges.len()..]),
        })
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.anchor.cmp(&other.anchor))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    graph: &'a DirectedMultigraph,
    path: &'a Path,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "[{}]", self.graph.vertex_name(self.path.anchor));
        }
        for (i, &e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.edge_name(e))?;
        }
        Ok(())
    }
}
