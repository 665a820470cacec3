//! The spanner under construction and d-light initialization.

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::{Error, Result};

/// A subgraph H of a fixed base graph G, tracked as a set of G's edge ids.
/// Edges of G outside H are *missing*.
#[derive(Clone, Debug)]
pub struct SpannerBuild<'g> {
    base: &'g Graph,
    in_h: EdgeSet,
    d: usize,
}

impl<'g> SpannerBuild<'g> {
    /// H with no edges.
    pub fn new(base: &'g Graph) -> Self {
        SpannerBuild {
            base,
            in_h: EdgeSet::empty(base.m()),
            d: 0,
        }
    }

    /// Wraps an existing edge set over `base`.
    pub fn from_edge_set(base: &'g Graph, in_h: EdgeSet) -> Result<Self> {
        if in_h.capacity() != base.m() {
            return Err(Error::invalid(format!(
                "edge set ranges over {} ids but the graph has {} edges",
                in_h.capacity(),
                base.m()
            )));
        }
        Ok(SpannerBuild { base, in_h, d: 0 })
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.in_h
    }

    pub fn into_edges(self) -> EdgeSet {
        self.in_h
    }

    /// Light-init parameter of the last initialization (0 if none).
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.in_h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_h.is_empty()
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_h.contains(e)
    }

    #[inline]
    pub fn is_missing(&self, e: EdgeId) -> bool {
        !self.in_h.contains(e)
    }

    /// Adds the `d` lightest incident edges of every vertex, ties broken by
    /// edge id. When `alive` is given only those edges are considered, both
    /// for ranking and for insertion. Returns the number of new edges.
    pub fn light_init(&mut self, alive: Option<&EdgeSet>, d: usize) -> usize {
        self.d = d;
        if d == 0 {
            return 0;
        }
        let g = self.base;
        let before = self.in_h.len();
        let mut incident: Vec<(f64, EdgeId)> = Vec::new();
        for v in 0..g.n() {
            incident.clear();
            incident.extend(
                g.neighbors(v)
                    .iter()
                    .filter(|nb| alive.is_none_or(|a| a.contains(nb.edge)))
                    .map(|nb| (nb.weight, nb.edge)),
            );
            if incident.len() > d {
                incident.select_nth_unstable_by(d - 1, |a, b| {
                    a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))
                });
                incident.truncate(d);
            }
            for &(_, e) in &incident {
                self.in_h.insert(e);
            }
        }
        self.in_h.len() - before
    }

    /// Edge ids along a vertex walk in G.
    pub fn path_edges(&self, path: &[VertexId]) -> Result<Vec<EdgeId>> {
        path.windows(2)
            .map(|w| {
                self.base.find_edge(w[0], w[1]).ok_or_else(|| {
                    Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1]))
                })
            })
            .collect()
    }

    /// Number of edges of `path` not in H.
    pub fn count_missing_on_path(&self, path: &[VertexId]) -> Result<usize> {
        Ok(self
            .path_edges(path)?
            .into_iter()
            .filter(|&e| self.is_missing(e))
            .count())
    }

    /// Puts every edge of `path` into H. Returns the number of new edges.
    pub fn add_path(&mut self, path: &[VertexId]) -> Result<usize> {
        let edges = self.path_edges(path)?;
        Ok(self.add_edges(edges))
    }

    /// Returns the number of new edges.
    pub fn add_edges(&mut self, edges: impl IntoIterator<Item = EdgeId>) -> usize {
        edges
            .into_iter()
            .filter(|&e| self.in_h.insert(e))
            .count()
    }

    /// H as a standalone graph on the same vertex set.
    pub fn to_graph(&self) -> Graph {
        self.base.restrict(&self.in_h)
    }
}

/// H = union over vertices of each vertex's `d` lightest incident edges.
pub fn d_light_init(g: &Graph, d: usize) -> SpannerBuild<'_> {
    let mut sb = SpannerBuild::new(g);
    sb.light_init(None, d);
    sb
}
