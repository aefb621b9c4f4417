//! Simple undirected graphs: construction, elementary generators, degree
//! bookkeeping, and regularity classification.
//!
//! Vertices are dense 0-based indices. Adjacency is stored as one sorted
//! neighbor list per vertex; graphs are immutable after construction, so
//! every operation here is a pure function.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An undirected simple graph: no self-loops, no multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Errors from graph construction and the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    ParameterBelowMinimum { name: &'static str, value: usize, min: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::ParameterBelowMinimum { name, value, min } => {
                write!(f, "parameter {name} = {value} below minimum {min}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a simple graph from an explicit edge list.
    ///
    /// Endpoints must lie in `[0, n)`; self-loops and duplicate pairs are
    /// errors rather than being silently repaired.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
        }
        let m = edges.len();
        Ok(Graph { adj, m })
    }

    /// Internal constructor for edge lists that are valid by construction.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            debug_assert!(u < n && v < n && u != v);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] != w[1]));
        }
        Graph { adj, m: edges.len() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(|list| list.is_empty())
    }

    /// Complete graph `K_p`, `p >= 1`.
    pub fn complete(p: usize) -> Result<Self, GraphError> {
        require_min("p", p, 1)?;
        let edges: Vec<_> =
            (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
        Ok(Graph::from_edges_unchecked(p, &edges))
    }

    /// Cycle `C_p`, `p >= 3`.
    pub fn cycle(p: usize) -> Result<Self, GraphError> {
        require_min("p", p, 3)?;
        let edges: Vec<_> = (0..p).map(|u| (u, (u + 1) % p)).collect();
        Ok(Graph::from_edges_unchecked(p, &edges))
    }

    /// Path `P_p` on `p` vertices, `p >= 1`.
    pub fn path(p: usize) -> Result<Self, GraphError> {
        require_min("p", p, 1)?;
        let edges: Vec<_> = (1..p).map(|v| (v - 1, v)).collect();
        Ok(Graph::from_edges_unchecked(p, &edges))
    }

    /// Star `K_{1,k}` with center 0, `k >= 1`.
    pub fn star(k: usize) -> Result<Self, GraphError> {
        require_min("k", k, 1)?;
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Ok(Graph::from_edges_unchecked(k + 1, &edges))
    }

    /// Complete bipartite graph `K_{a,b}`; part A is `0..a`, part B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        require_min("a", a, 1)?;
        require_min("b", b, 1)?;
        let edges: Vec<_> =
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Ok(Graph::from_edges_unchecked(a + b, &edges))
    }

    /// Disjoint union; vertices of `other` are relabeled by offset `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + offset).collect::<Vec<_>>()),
        );
        Graph { adj, m: self.m + other.m }
    }

    /// Subdivision: one new degree-2 vertex on every edge. The result has
    /// `n + m` vertices and `2m` edges; original vertices keep their degrees.
    pub fn subdivision(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(2 * self.m);
        for (idx, (u, v)) in self.edges().enumerate() {
            let mid = n + idx;
            edges.push((u, mid));
            edges.push((mid, v));
        }
        Graph::from_edges_unchecked(n + self.m, &edges)
    }

    /// Degree of every vertex, sorted ascending (a multiset).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(|l| l.len()).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Distinct degrees, sorted ascending: the set `D(G)`.
    pub fn degree_set(&self) -> Vec<usize> {
        let mut degrees = self.degree_sequence();
        degrees.dedup();
        degrees
    }

    /// How many vertices have each degree.
    pub fn degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for list in &self.adj {
            *counts.entry(list.len()).or_insert(0) += 1;
        }
        counts
    }

    /// Edge counts per unordered degree pair: `m[i,j]` for `i <= j`.
    pub fn edge_class_counts(&self) -> EdgeClassCounts {
        let mut counts = BTreeMap::new();
        for (u, v) in self.edges() {
            let (du, dv) = (self.degree(u), self.degree(v));
            let key = (du.min(dv), du.max(dv));
            *counts.entry(key).or_insert(0) += 1;
        }
        EdgeClassCounts { counts }
    }

    /// True iff some edge joins two vertices of equal degree.
    pub fn has_equal_degree_edge(&self) -> bool {
        self.edges().any(|(u, v)| self.degree(u) == self.degree(v))
    }

    /// Classifies by the number of distinct degrees and, for two or three of
    /// them, by whether any edge joins vertices of equal degree (class 2) or
    /// none does (class 1).
    pub fn classify_regularity(&self) -> RegularityClass {
        let degrees = self.degree_set();
        match degrees.len() {
            // edgeless graphs (including n = 0 and n = 1) count as 0-regular
            0 => RegularityClass::Regular(0),
            1 => RegularityClass::Regular(degrees[0]),
            2 => {
                if self.has_equal_degree_edge() {
                    RegularityClass::BiregularClass2(degrees[0], degrees[1])
                } else {
                    RegularityClass::BiregularClass1(degrees[0], degrees[1])
                }
            }
            3 => {
                if self.has_equal_degree_edge() {
                    RegularityClass::TriregularClass2(degrees[0], degrees[1], degrees[2])
                } else {
                    RegularityClass::TriregularClass1(degrees[0], degrees[1], degrees[2])
                }
            }
            _ => RegularityClass::Other(degrees),
        }
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The empty
    /// graph is considered connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut component = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        component.push(v);
                        stack.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }
}

fn require_min(name: &'static str, value: usize, min: usize) -> Result<(), GraphError> {
    if value < min {
        Err(GraphError::ParameterBelowMinimum { name, value, min })
    } else {
        Ok(())
    }
}

/// Map from unordered degree pair `(i, j)`, `i <= j`, to the number of edges
/// joining a degree-`i` vertex to a degree-`j` one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeClassCounts {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeClassCounts {
    pub fn count(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Degree classes in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn class_count(&self) -> usize {
        self.counts.len()
    }

    /// Total number of edges across all classes.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// True iff some class `(i, i)` is populated.
    pub fn has_diagonal_class(&self) -> bool {
        self.counts.iter().any(|(&(i, j), &c)| i == j && c > 0)
    }
}

/// Structural classification by distinct degree count and adjacency of
/// equal-degree vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    Regular(usize),
    BiregularClass1(usize, usize),
    BiregularClass2(usize, usize),
    TriregularClass1(usize, usize, usize),
    TriregularClass2(usize, usize, usize),
    Other(Vec<usize>),
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityClass::Regular(k) => write!(f, "regular({k})"),
            RegularityClass::BiregularClass1(a, b) => write!(f, "biregular-class1({a},{b})"),
            RegularityClass::BiregularClass2(a, b) => write!(f, "biregular-class2({a},{b})"),
            RegularityClass::TriregularClass1(a, b, c) => {
                write!(f, "triregular-class1({a},{b},{c})")
            }
            RegularityClass::TriregularClass2(a, b, c) => {
                write!(f, "triregular-class2({a},{b},{c})")
            }
            RegularityClass::Other(degrees) => {
                write!(f, "other(")?;
                for (i, d) in degrees.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn builds_path_p3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1, 2]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn single_vertex_has_no_edges() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.isolated_vertex(), Some(0));
    }

    #[test]
    fn k5_is_4_regular() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.classify_regularity(), RegularityClass::Regular(4));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn generator_minimums() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete_bipartite(0, 4).is_err());
        assert!(Graph::star(0).is_err());
    }

    #[test]
    fn star_degrees() {
        let g = Graph::star(4).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn cycle3_equals_complete3() {
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn disjoint_union_counts() {
        let g = Graph::complete(5)
            .unwrap()
            .disjoint_union(&Graph::complete_bipartite(3, 6).unwrap());
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 28);
        assert!(!g.is_connected());
    }

    #[test]
    fn degree_sets() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        assert_eq!(p4.degree_set(), vec![1, 2]);
        let k34 = Graph::complete_bipartite(3, 4).unwrap();
        assert_eq!(k34.degree_set(), vec![3, 4]);
    }

    #[test]
    fn edge_classes_p4_and_star() {
        let p4 = Graph::path(4).unwrap();
        let classes = p4.edge_class_counts();
        assert_eq!(classes.count(1, 2), 2);
        assert_eq!(classes.count(2, 2), 1);
        assert_eq!(classes.total(), 3);

        let star = Graph::star(4).unwrap();
        let classes = star.edge_class_counts();
        assert_eq!(classes.count(1, 4), 4);
        assert_eq!(classes.class_count(), 1);
    }

    #[test]
    fn regularity_classification() {
        assert_eq!(
            Graph::cycle(5).unwrap().classify_regularity(),
            RegularityClass::Regular(2)
        );
        assert_eq!(
            Graph::complete_bipartite(3, 4).unwrap().classify_regularity(),
            RegularityClass::BiregularClass1(3, 4)
        );
        assert_eq!(
            Graph::path(4).unwrap().classify_regularity(),
            RegularityClass::BiregularClass2(1, 2)
        );
        // K_{1,3} with one edge subdivided: degrees {1,2,3}, no equal pair adjacent
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(g.classify_regularity(), RegularityClass::TriregularClass1(1, 2, 3));
        // edgeless and singleton graphs are 0-regular
        assert_eq!(Graph::empty(1).classify_regularity(), RegularityClass::Regular(0));
        assert_eq!(Graph::empty(4).classify_regularity(), RegularityClass::Regular(0));
    }

    #[test]
    fn subdivision_shape() {
        // subdividing a cycle doubles its length
        let s = Graph::cycle(4).unwrap().subdivision();
        assert_eq!(s.vertex_count(), 8);
        assert_eq!(s.classify_regularity(), RegularityClass::Regular(2));
        assert!(s.is_connected());
        assert_eq!(
            crate::enumerate::canonical_mask(&s),
            crate::enumerate::canonical_mask(&Graph::cycle(8).unwrap())
        );

        let s = Graph::complete(4).unwrap().subdivision();
        assert_eq!(s.vertex_count(), 10);
        assert_eq!(s.edge_count(), 12);
        assert_eq!(s.classify_regularity(), RegularityClass::BiregularClass1(2, 3));
        // no two new vertices are adjacent
        for (u, v) in s.edges() {
            assert!(u < 4 || v < 4);
        }
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).unwrap().is_connected());
        let g = Graph::complete(5)
            .unwrap()
            .disjoint_union(&Graph::complete_bipartite(3, 6).unwrap());
        assert!(!g.is_connected());
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn handshake() {
        let g = Graph::complete_bipartite(3, 6).unwrap();
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }
}
