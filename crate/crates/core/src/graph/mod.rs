//! Immutable weighted undirected simple graphs.
//!
//! Vertex ids are dense `0..n`, edge ids are dense `0..m` in insertion
//! order. Adjacency lists are sorted by neighbor id so edge lookup is a
//! binary search.

mod edge_set;
mod generate;
mod io;

pub use edge_set::EdgeSet;
pub use generate::generate_gnp;
pub use io::{load_graph, parse_graph, save_graph, write_graph};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: f64,
}

impl Edge {
    /// The endpoint opposite `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Neighbor {
    pub vertex: VertexId,
    pub weight: f64,
    pub edge: EdgeId,
}

/// Reasons an edge is refused by [`GraphBuilder::add_edge`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRejection {
    VertexOutOfRange,
    SelfLoop,
    NonPositiveWeight,
    Duplicate,
}

impl std::fmt::Display for EdgeRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeRejection::VertexOutOfRange => "vertex id out of range",
            EdgeRejection::SelfLoop => "self-loop",
            EdgeRejection::NonPositiveWeight => "weight must be a positive finite number",
            EdgeRejection::Duplicate => "duplicate edge",
        })
    }
}

/// Incremental, validating constructor for [`Graph`].
#[derive(Debug)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<Edge>,
    seen: std::collections::HashSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: Vec::new(),
            seen: Default::default(),
        }
    }

    pub fn with_capacity(n: usize, m: usize) -> Self {
        GraphBuilder {
            n,
            edges: Vec::with_capacity(m),
            seen: std::collections::HashSet::with_capacity(m),
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: f64) -> Result<EdgeId, EdgeRejection> {
        if u >= self.n || v >= self.n {
            return Err(EdgeRejection::VertexOutOfRange);
        }
        if u == v {
            return Err(EdgeRejection::SelfLoop);
        }
        if !(w > 0.0 && w.is_finite()) {
            return Err(EdgeRejection::NonPositiveWeight);
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeRejection::Duplicate);
        }
        self.edges.push(Edge { u, v, w });
        Ok(self.edges.len() - 1)
    }

    pub fn build(self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push(Neighbor {
                vertex: e.v,
                weight: e.w,
                edge: id,
            });
            adj[e.v].push(Neighbor {
                vertex: e.u,
                weight: e.w,
                edge: id,
            });
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|nb| nb.vertex);
        }
        let w_max = self.edges.iter().fold(0.0_f64, |acc, e| acc.max(e.w));
        Graph {
            n: self.n,
            edges: self.edges,
            adj,
            w_max,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Neighbor>>,
    w_max: f64,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from `(u, v, w)` triples, rejecting anything that
    /// would break simplicity or positivity.
    pub fn from_edges<I>(n: usize, edges: I) -> crate::Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, f64)>,
    {
        let mut b = GraphBuilder::new(n);
        for (i, (u, v, w)) in edges.into_iter().enumerate() {
            b.add_edge(u, v, w)
                .map_err(|r| crate::Error::invalid(format!("edge #{i} ({u}, {v}, {w}): {r}")))?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Maximum edge weight, 0 for an edgeless graph.
    #[inline]
    pub fn w_max(&self) -> f64 {
        self.w_max
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[Neighbor] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// A vertex is d-heavy when its degree is at least `d`.
    #[inline]
    pub fn is_d_heavy(&self, v: VertexId, d: usize) -> bool {
        self.degree(v) >= d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |nb| nb.vertex)
            .ok()
            .map(|i| list[i].edge)
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        std::iter::once(v).chain(self.adj[v].iter().map(|nb| nb.vertex))
    }

    /// Edge list with `u < v`, sorted; equal for graphs that differ only
    /// in edge order or orientation.
    pub fn canonical_edges(&self) -> Vec<(VertexId, VertexId, f64)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v), e.w))
            .collect();
        out.sort_by_key(|&(u, v, _)| (u, v));
        out
    }

    /// The subgraph on the same vertex set keeping only edges in `keep`,
    /// in ascending edge-id order.
    pub fn restrict(&self, keep: &EdgeSet) -> Graph {
        let mut b = GraphBuilder::with_capacity(self.n, keep.len());
        for id in keep.iter() {
            let e = self.edges[id];
            b.add_edge(e.u, e.v, e.w)
                .expect("edges of a valid graph stay valid in a subgraph");
        }
        b.build()
    }
}
