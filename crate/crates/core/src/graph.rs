//! Simple undirected graphs, their incidences, and the combined element set
//! `V(G) ∪ I(G)` that vi-colorings are defined on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {{{0},{1}}}")]
    ParallelEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("invalid json graph: {0}")]
    Json(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored in compressed sparse row form with every neighbor list
/// sorted, so the position of `u` inside the row of `v` doubles as the index of
/// the incidence `(v, u)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    nbrs: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::ParallelEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds from adjacency lists that are already symmetric and simple.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut nbrs = Vec::new();
        offsets.push(0);
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            nbrs.extend_from_slice(row);
            offsets.push(nbrs.len());
        }
        Graph { offsets, nbrs }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::new(n, &edges).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges).expect("complete graph is simple")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges).expect("star is simple")
    }

    /// Apex 0 joined to every vertex of a path `1..n`.
    pub fn fan(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((2..n).map(|i| (i - 1, i)));
        Self::new(n, &edges).expect("fan is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.nbrs.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Number of incidences, `2|E|`.
    #[inline]
    pub fn incidence_count(&self) -> usize {
        self.nbrs.len()
    }

    /// Dense index of the incidence `(v, u)`, if `{v,u}` is an edge.
    #[inline]
    pub fn incidence_index(&self, v: usize, u: usize) -> Option<usize> {
        self.neighbors(v)
            .binary_search(&u)
            .ok()
            .map(|p| self.offsets[v] + p)
    }

    /// Inverse of [`Graph::incidence_index`].
    pub fn incidence_at(&self, idx: usize) -> Incidence {
        let v = self.offsets.partition_point(|&o| o <= idx) - 1;
        Incidence::new(v, self.nbrs[idx])
    }

    /// Range of incidence indices forming `I_1(v)`.
    #[inline]
    pub fn first_incidences(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || crate::structure::components(self).len() == 1
    }

    pub fn subgraph_without_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&(a, b)| !((a == u && b == v) || (a == v && b == u)))
            .collect();
        Graph::new(self.n(), &edges).expect("subgraph of a simple graph")
    }

    /// Induced subgraph on `keep` (in the given order). Returns the subgraph
    /// and, for each new id, the old vertex.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&u| new_id[u] != usize::MAX)
                    .map(|&u| new_id[u])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), keep.to_vec())
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("relabeling keeps the graph simple")
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges = self.edge_list();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n() + other.n(), &edges).expect("disjoint union is simple")
    }

    /// Canonical text edge list (`n m` header, one edge per line).
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format: `n m` then `m` lines of `u v`. Blank lines
    /// and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let nums = nums.map_err(|e| GraphError::Parse {
                line: lineno + 1,
                msg: e.to_string(),
            })?;
            if nums.len() != 2 {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("expected two integers, found {}", nums.len()),
                });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some(_) => edges.push((nums[0], nums[1])),
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::EdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        raw.try_into()
    }

    /// Reads either format, JSON when the first non-space byte is `{`.
    pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::parse_edge_list(text)
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edge_list())
    }
}

/// Serialized form `{"n": .., "edges": [[u,v], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(raw: GraphJson) -> Result<Graph, GraphError> {
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(raw.n, &edges)
    }
}

/// The incidence `(vertex, {vertex, other})`, written `(vertex, other)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: usize,
    pub other: usize,
}

impl Incidence {
    #[inline]
    pub const fn new(vertex: usize, other: usize) -> Self {
        Incidence { vertex, other }
    }

    /// The incidence on the same edge at the other end.
    #[inline]
    pub const fn reversed(self) -> Self {
        Incidence::new(self.other, self.vertex)
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.other)
    }
}

/// All `2|E|` incidences, sorted lexicographically.
pub fn incidences(g: &Graph) -> Vec<Incidence> {
    (0..g.n())
        .flat_map(|v| g.neighbors(v).iter().map(move |&u| Incidence::new(v, u)))
        .collect()
}

/// An element of `V(G) ∪ I(G)`: a t-vertex or an i-vertex.
///
/// Ordered by tag first (vertices before incidences), then by ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ElementId {
    Vertex(usize),
    Incidence(Incidence),
}

impl ElementId {
    /// Dense index: vertices occupy `0..n`, incidence `k` sits at `n + k`.
    pub fn index(self, g: &Graph) -> Option<usize> {
        match self {
            ElementId::Vertex(v) => (v < g.n()).then_some(v),
            ElementId::Incidence(i) => g.incidence_index(i.vertex, i.other).map(|k| g.n() + k),
        }
    }

    pub fn from_index(g: &Graph, idx: usize) -> ElementId {
        if idx < g.n() {
            ElementId::Vertex(idx)
        } else {
            ElementId::Incidence(g.incidence_at(idx - g.n()))
        }
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Vertex(v) => write!(f, "{v}"),
            ElementId::Incidence(i) => write!(f, "{i}"),
        }
    }
}

/// Number of elements, `|V| + 2|E|`.
pub fn element_count(g: &Graph) -> usize {
    g.n() + g.incidence_count()
}

/// Why two elements must receive distinct colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AdjacentTt,
    AdjacentIi,
    IncidentTi,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AdjacentTt => "adjacent-tt",
            Relation::AdjacentIi => "adjacent-ii",
            Relation::IncidentTi => "incident-ti",
        })
    }
}

/// Whether two incidences are adjacent in the incidence graph.
pub fn incidences_adjacent(a: Incidence, b: Incidence) -> bool {
    if a == b {
        return false;
    }
    a.vertex == b.vertex
        || a == b.reversed()
        || a.other == b.vertex
        || b.other == a.vertex
}

/// The element-level conflict relation, evaluated directly from the rules.
/// Assumes both elements exist in `g`.
pub fn conflict(g: &Graph, a: ElementId, b: ElementId) -> Option<Relation> {
    match (a, b) {
        (ElementId::Vertex(u), ElementId::Vertex(v)) => g.has_edge(u, v).then_some(Relation::AdjacentTt),
        (ElementId::Vertex(v), ElementId::Incidence(i)) | (ElementId::Incidence(i), ElementId::Vertex(v)) => {
            (i.vertex == v || i.other == v).then_some(Relation::IncidentTi)
        }
        (ElementId::Incidence(i), ElementId::Incidence(j)) => {
            incidences_adjacent(i, j).then_some(Relation::AdjacentIi)
        }
    }
}

/// Dense element indices conflicting with element `idx`, computed from the
/// local structure around it.
pub fn element_neighbors(g: &Graph, idx: usize) -> Vec<usize> {
    let n = g.n();
    let mut out = Vec::new();
    if idx < n {
        let v = idx;
        out.extend(g.neighbors(v).iter().copied());
        out.extend(g.first_incidences(v).map(|k| n + k));
        for &u in g.neighbors(v) {
            out.push(n + g.incidence_index(u, v).expect("symmetric adjacency"));
        }
    } else {
        let Incidence { vertex: v, other: u } = g.incidence_at(idx - n);
        out.push(v);
        out.push(u);
        for &x in g.neighbors(v) {
            if x != u {
                out.push(n + g.incidence_index(v, x).unwrap());
                out.push(n + g.incidence_index(x, v).unwrap());
            }
        }
        out.push(n + g.incidence_index(u, v).unwrap());
        for &x in g.neighbors(u) {
            if x != v {
                out.push(n + g.incidence_index(u, x).unwrap());
            }
        }
    }
    out
}

/// Element-level conflict graph over dense element indices.
pub fn element_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..element_count(g)).map(|i| element_neighbors(g, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]), Err(GraphError::ParallelEdge(0, 1)));
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn incidences_of_k2_and_c3() {
        assert_eq!(
            incidences(&Graph::complete(2)),
            vec![Incidence::new(0, 1), Incidence::new(1, 0)]
        );
        assert_eq!(incidences(&Graph::cycle(3)).len(), 6);
    }

    #[test]
    fn incidence_index_round_trip() {
        let g = Graph::fan(6);
        for (k, inc) in incidences(&g).into_iter().enumerate() {
            assert_eq!(g.incidence_index(inc.vertex, inc.other), Some(k));
            assert_eq!(g.incidence_at(k), inc);
        }
        for idx in 0..element_count(&g) {
            assert_eq!(ElementId::from_index(&g, idx).index(&g), Some(idx));
        }
    }

    #[test]
    fn element_neighbors_match_rule_evaluation() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let total = element_count(&g);
        for a in 0..total {
            let mut fast = element_neighbors(&g, a);
            fast.sort_unstable();
            let mut slow: Vec<_> = (0..total)
                .filter(|&b| {
                    conflict(&g, ElementId::from_index(&g, a), ElementId::from_index(&g, b)).is_some()
                })
                .collect();
            slow.sort_unstable();
            assert_eq!(fast, slow, "element {}", ElementId::from_index(&g, a));
        }
    }

    #[test]
    fn edge_list_format_with_comments() {
        let text = "# a triangle\n3 3\n\n0 1\n1 2 # closing\n2 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::cycle(3));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list_text()).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCount { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn json_format() {
        let g = Graph::parse_any(r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }
}
