//! Undirected simple graphs on at most 64 vertices.
//!
//! Each vertex owns one adjacency word, so neighborhood intersections and
//! clique extension are single bitwise operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{CliqueError, Result};

pub const MAX_VERTICES: usize = 64;

/// An edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    /// Normalizes the endpoint order. Rejects loops.
    pub fn new(a: usize, b: usize) -> Result<EdgeRef> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgeRef { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(EdgeRef { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(CliqueError::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

impl From<EdgeRef> for [usize; 2] {
    fn from(e: EdgeRef) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for EdgeRef {
    type Error = CliqueError;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        EdgeRef::new(pair[0], pair[1])
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph with one adjacency bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(CliqueError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            let e = EdgeRef::new(a, b)?;
            g.insert(e);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert(EdgeRef { u, v });
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for u in 0..n {
                g.insert(EdgeRef::new(u, (u + 1) % n)?);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.insert(EdgeRef { u: u - 1, v: u });
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for e in self.edges().chain(other.edges().map(|e| EdgeRef {
            u: e.u + self.n,
            v: e.v + self.n,
        })) {
            g.insert(e);
        }
        Ok(g)
    }

    // Callers guarantee both endpoints are in range.
    pub(crate) fn insert(&mut self, e: EdgeRef) {
        if self.adj[e.u] >> e.v & 1 == 0 {
            self.adj[e.u] |= 1 << e.v;
            self.adj[e.v] |= 1 << e.u;
            self.m += 1;
        }
    }

    fn remove(&mut self, e: EdgeRef) {
        if self.adj[e.u] >> e.v & 1 == 1 {
            self.adj[e.u] &= !(1 << e.v);
            self.adj[e.v] &= !(1 << e.u);
            self.m -= 1;
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(CliqueError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::below(self.n)
    }

    /// Open neighborhood of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u])
                .above(u)
                .iter()
                .map(move |v| EdgeRef { u, v })
        })
    }

    /// Validated edge reference for a pair that must be an edge of this graph.
    pub fn edge(&self, a: usize, b: usize) -> Result<EdgeRef> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let e = EdgeRef::new(a, b)?;
        if self.has_edge(a, b) {
            Ok(e)
        } else {
            Err(CliqueError::EdgeAbsent(e.u, e.v))
        }
    }

    /// Whether every pair of members of `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// `G - v`: the induced subgraph on the other vertices, re-indexed
    /// contiguously in the original order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertices().without(v)))
    }

    /// `G - e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        self.delete_edge_set(&[e])
    }

    /// `G - M`: removes exactly the edges of `M`, keeping every vertex.
    pub fn delete_edge_set(&self, edges: &[EdgeRef]) -> Result<Graph> {
        for e in edges {
            if !self.has_edge(e.u, e.v) {
                return Err(CliqueError::EdgeAbsent(e.u, e.v));
            }
        }
        let mut g = self.clone();
        for &e in edges {
            g.remove(e);
        }
        Ok(g)
    }

    /// Intersection of the neighborhoods of the members of `set`.
    ///
    /// An empty `set` is rejected instead of answering with all vertices.
    pub fn common_neighborhood(&self, set: VertexSet) -> Result<VertexSet> {
        if set.is_empty() {
            return Err(CliqueError::EmptyVertexSet);
        }
        if let Some(v) = set.iter().find(|&v| v >= self.n) {
            return Err(CliqueError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.common_neighbors_unchecked(set))
    }

    #[inline]
    pub(crate) fn common_neighbors_unchecked(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(self.vertices(), |acc, v| acc.intersect(self.neighbors(v)))
    }

    /// `G[S]` with the members of `keep` re-indexed to `0..|S|` in ascending order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersect(self.vertices());
        let old: Vec<usize> = keep.to_vec();
        let mut adj = vec![0u64; old.len()];
        let mut m2 = 0;
        for (i, &u) in old.iter().enumerate() {
            let row = self.adj[u] & keep.0;
            let mut packed = 0u64;
            for (j, &w) in old.iter().enumerate() {
                packed |= (row >> w & 1) << j;
            }
            adj[i] = packed;
            m2 += packed.count_ones() as usize;
        }
        Graph {
            n: old.len(),
            adj,
            m: m2 / 2,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)));
            frontier = next.minus(seen);
            seen = seen.union(frontier);
        }
        seen.len() == self.n
    }

    /// Triangles as sorted vertex triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let na = self.neighbors(a).above(a);
            for b in na.iter() {
                for c in na.intersect(self.neighbors(b)).above(b).iter() {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// The triangle graph `T(G)`: one vertex per triangle (lexicographic
    /// order), adjacent when the two triangles share an edge.
    pub fn triangle_graph(&self) -> Result<Graph> {
        let tri = self.triangles();
        if tri.len() > MAX_VERTICES {
            return Err(CliqueError::TooManyTriangles(tri.len()));
        }
        let mut t = Graph::empty(tri.len())?;
        for i in 0..tri.len() {
            for j in i + 1..tri.len() {
                let shared = VertexSet::from_slice(&tri[i])
                    .intersect(VertexSet::from_slice(&tri[j]))
                    .len();
                if shared == 2 {
                    t.insert(EdgeRef { u: i, v: j });
                }
            }
        }
        Ok(t)
    }

    /// Raw adjacency rows, one word per vertex.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}
