//! Simple undirected graphs and the combinatorial routines the phase
//! constructions rely on.
//!
//! Vertices are `0..n`. Whenever a construction has a distinguished vertex
//! (the apex of a cone, the centre of a star) it is vertex `0`.

mod euler;
mod family;
mod matching;

pub use euler::{eulerian_circuit, EulerianOrientation};
pub use family::{generate_family, Family};
pub use matching::{maximum_matching, perfect_matching, Matching};

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph with canonical (`u < v`), sorted, duplicate-free
/// edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        Graph::new(repr.n, repr.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Result of [`build_graph`]: the canonical graph plus how many input pairs
/// were dropped as duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBuild {
    pub graph: Graph,
    pub duplicates_collapsed: usize,
}

/// Builds a canonical simple graph from an edge list.
///
/// Reversed and repeated pairs are collapsed and counted; loops and
/// out-of-range endpoints are rejected.
pub fn build_graph<I>(n: usize, edges: I) -> Result<GraphBuild>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut set = BTreeSet::new();
    let mut duplicates = 0;
    for (u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if !set.insert((u.min(v), u.max(v))) {
            duplicates += 1;
        }
    }
    let edges: Vec<_> = set.into_iter().collect();
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(GraphBuild {
        graph: Graph { n, edges, adjacency },
        duplicates_collapsed: duplicates,
    })
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        build_graph(n, edges).map(|b| b.graph)
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of the canonical edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }
}

/// Cone over `g`: a new apex `0` joined to every vertex, original vertices
/// shifted by one.
pub fn cone(g: &Graph) -> Graph {
    let spokes = (1..=g.n).map(|v| (0, v));
    let base = g.edges.iter().map(|&(u, v)| (u + 1, v + 1));
    Graph::new(g.n + 1, spokes.chain(base)).expect("cone of a simple graph is simple")
}

/// Disjoint union; vertices of `b` are offset by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.n;
    let edges = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
    Graph::new(a.n + b.n, edges).expect("union of simple graphs is simple")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_connected: bool,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
}

impl GraphStats {
    pub fn is_regular(&self) -> bool {
        self.regular_degree.is_some()
    }
}

pub fn analyze(g: &Graph) -> GraphStats {
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    GraphStats {
        is_connected: g.components().len() <= 1,
        regular_degree: (min_degree == max_degree).then_some(min_degree),
        degrees,
        min_degree,
        max_degree,
    }
}
