//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integers `0..n`. Adjacency is stored one bitmask per
//! vertex, which keeps degree counts, neighborhood intersections and flood
//! fills cheap during enumeration. Values are immutable after construction;
//! edits return fresh graphs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Hard vertex-count bound of this crate.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("operation requires a connected graph")]
    Disconnected,
}

/// Simple undirected graph, vertices `0..n`, no loops or multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph on `n` vertices with the given edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path on `n` vertices, edges `(i, i+1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,n-1}` with center `0`.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.delete_edge(u, v)?;
        Ok(g)
    }

    /// Copy with edge `uv` replaced by a new degree-2 vertex adjacent to both
    /// `u` and `v`. The new vertex gets label `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if !self.has_edge(u, v) {
            self.check_pair(u, v)?;
            return Err(GraphError::MissingEdge(u, v));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let mut g = Graph {
            n: self.n + 1,
            adj: {
                let mut a = self.adj.clone();
                a.push(0);
                a
            },
        };
        g.delete_edge(u, v)?;
        g.insert_edge(u, g.n - 1)?;
        g.insert_edge(v, g.n - 1)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let all: u64 = if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        };
        let mut unseen = all;
        let mut comps = 0;
        while unseen != 0 {
            comps += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut reach: u64 = 1 << start;
            loop {
                let mut next = reach;
                let mut m = reach;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    next |= self.adj[v];
                    m &= m - 1;
                }
                if next == reach {
                    break;
                }
                reach = next;
            }
            unseen &= !reach;
        }
        comps
    }

    /// The empty graph on 0 vertices is connected by convention.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `m - n + 1` for connected graphs; rejects disconnected input.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n == 0 {
            return Ok(0);
        }
        Ok(self.edge_count() + 1 - self.n)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts = BTreeMap::new();
        for v in 0..self.n {
            *counts.entry(self.degree(v)).or_insert(0) += 1;
        }
        DegreeProfile {
            counts,
            n: self.n,
            max_degree: self.max_degree(),
        }
    }

    pub fn edge_type_signature(&self) -> EdgeTypeSignature {
        let degs = self.degrees();
        let mut counts = BTreeMap::new();
        for (u, v) in self.edges() {
            let key = ordered_pair(degs[u], degs[v]);
            *counts.entry(key).or_insert(0) += 1;
        }
        EdgeTypeSignature { counts }
    }

    /// Relabeled copy: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    pub fn canonical_code(&self) -> crate::canon::CanonicalCode {
        crate::canon::canonical_form(self).code
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::write(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self, crate::graph6::Graph6Error> {
        crate::graph6::parse(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub(crate) fn ordered_pair(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Vertex counts by degree: `counts[i] = n_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
    pub n: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// Degree counts with zero entries dropped (the stored form).
    pub fn nonzero(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in &self.counts {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{d}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Edge counts by unordered endpoint-degree pair: `counts[(i, j)] = m_{i,j}`
/// with `i <= j`. Zero counts are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeTypeSignature {
    pub counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeTypeSignature {
    pub fn from_counts(entries: &[((usize, usize), usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &((i, j), c) in entries {
            if c > 0 {
                let key = ordered_pair(i, j);
                *counts.entry(key).or_insert(0) += c;
            }
        }
        EdgeTypeSignature { counts }
    }

    pub fn count(&self, i: usize, j: usize) -> usize {
        self.counts.get(&ordered_pair(i, j)).copied().unwrap_or(0)
    }

    pub fn total_edges(&self) -> usize {
        self.counts.values().sum()
    }
}

impl fmt::Display for EdgeTypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(i, j), c) in &self.counts {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "({i},{j}):{c}")?;
            first = false;
        }
        Ok(())
    }
}
