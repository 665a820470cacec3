//! Constrained shortest paths over a spanner snapshot.
//!
//! Both engines take the base graph, the current spanner H (which decides
//! which edges are *missing*), an optional alive mask for working copies
//! with deleted edges, and a source vertex.
//!
//! * [`mecsp`] computes, for every budget `l` below a bound, the lightest
//!   path using at most `l` missing edges. Layer `l` is a Dijkstra sweep
//!   over H-edges seeded from the settled layer `l - 1`.
//! * [`weak_csssp`] runs one Dijkstra after surcharging every missing edge
//!   by `(eps0 / g) * w_max`.

use std::collections::BinaryHeap;

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::shortest_paths::{dijkstra_with, HeapEntry, SsspResult};
use crate::{Error, Result};

/// A walk in G with its total weight and missing-edge count relative to
/// the H snapshot it was computed against.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstrainedPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub weight: f64,
    pub missing: usize,
}

impl ConstrainedPath {
    fn trivial(source: VertexId) -> Self {
        ConstrainedPath {
            vertices: vec![source],
            edges: Vec::new(),
            weight: 0.0,
            missing: 0,
        }
    }

    /// Builds the path from `source` along `edges`, summing weights in path
    /// order.
    fn from_edges(g: &Graph, source: VertexId, edges: Vec<EdgeId>, missing: usize) -> Self {
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        let mut v = source;
        let mut weight = 0.0;
        vertices.push(v);
        for &e in &edges {
            let edge = g.edge(e);
            v = edge.other(v);
            weight += edge.w;
            vertices.push(v);
        }
        ConstrainedPath {
            vertices,
            edges,
            weight,
            missing,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pred {
    None,
    /// Same vertex, one layer down.
    Inherit,
    /// Reached over `edge` from `from`; `down` when the edge is missing and
    /// the predecessor lives one layer down.
    Edge {
        from: VertexId,
        edge: EdgeId,
        down: bool,
    },
}

/// Layered table `f[l][v]`: minimum weight of a source→v path with at most
/// `l` missing edges, for `l < budget`.
///
/// Layers are computed until one equals its predecessor; every later layer
/// would repeat it, so lookups above the last stored layer read that layer.
#[derive(Clone, Debug)]
pub struct MecspTable {
    source: VertexId,
    budget: usize,
    f: Vec<Vec<f64>>,
    pred: Vec<Vec<Pred>>,
}

impl MecspTable {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Number of distinct layers actually stored.
    pub fn stored_layers(&self) -> usize {
        self.f.len()
    }

    fn layer_index(&self, l: usize) -> usize {
        assert!(l < self.budget, "layer {l} outside budget {}", self.budget);
        l.min(self.f.len() - 1)
    }

    /// `f[l][v]`, infinite when no path within the budget exists.
    pub fn dist(&self, l: usize, v: VertexId) -> f64 {
        self.f[self.layer_index(l)][v]
    }

    /// The top layer, i.e. paths with fewer than `budget` missing edges.
    pub fn best(&self, v: VertexId) -> f64 {
        self.dist(self.budget - 1, v)
    }
}

/// MECSP over all edges of `g`.
pub fn mecsp(g: &Graph, sb: &SpannerBuild<'_>, source: VertexId, budget: usize) -> MecspTable {
    mecsp_in(g, None, sb, source, budget)
}

/// MECSP restricted to the edges in `alive`.
pub fn mecsp_in(
    g: &Graph,
    alive: Option<&EdgeSet>,
    sb: &SpannerBuild<'_>,
    source: VertexId,
    budget: usize,
) -> MecspTable {
    assert!(budget >= 1, "MECSP budget must be at least 1");
    let n = g.n();
    let is_alive = |e: EdgeId| alive.is_none_or(|a| a.contains(e));

    // Layer 0: plain Dijkstra over H-edges.
    let base = dijkstra_with(g, source, |e| is_alive(e) && sb.contains(e), |_, w| w);
    let mut pred0 = vec![Pred::None; n];
    for v in 0..n {
        if let Some(e) = base.parent[v] {
            pred0[v] = Pred::Edge {
                from: g.edge(e).other(v),
                edge: e,
                down: false,
            };
        }
    }
    let mut f = vec![base.dist];
    let mut pred = vec![pred0];

    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    for _ in 1..budget {
        let prev = f.last().expect("layer 0 exists");
        let mut cur = prev.clone();
        let mut cur_pred: Vec<Pred> = prev
            .iter()
            .map(|d| if d.is_finite() { Pred::Inherit } else { Pred::None })
            .collect();

        // Missing edges charge the settled previous layer.
        for v in 0..n {
            let dv = prev[v];
            if !dv.is_finite() {
                continue;
            }
            for nb in g.neighbors(v) {
                if !is_alive(nb.edge) || sb.contains(nb.edge) {
                    continue;
                }
                let cand = dv + nb.weight;
                if cand < cur[nb.vertex] {
                    cur[nb.vertex] = cand;
                    cur_pred[nb.vertex] = Pred::Edge {
                        from: v,
                        edge: nb.edge,
                        down: true,
                    };
                }
            }
        }

        // H-edges stay within the layer.
        settled.iter_mut().for_each(|s| *s = false);
        heap.clear();
        heap.extend(cur.iter().enumerate().filter(|(_, d)| d.is_finite()).map(|(v, &d)| HeapEntry {
            key: d,
            tie: 0.0,
            vertex: v,
        }));
        while let Some(HeapEntry { key, vertex: v, .. }) = heap.pop() {
            if settled[v] || key > cur[v] {
                continue;
            }
            settled[v] = true;
            for nb in g.neighbors(v) {
                let t = nb.vertex;
                if settled[t] || !is_alive(nb.edge) || !sb.contains(nb.edge) {
                    continue;
                }
                let cand = key + nb.weight;
                if cand < cur[t] {
                    cur[t] = cand;
                    cur_pred[t] = Pred::Edge {
                        from: v,
                        edge: nb.edge,
                        down: false,
                    };
                    heap.push(HeapEntry {
                        key: cand,
                        tie: 0.0,
                        vertex: t,
                    });
                }
            }
        }

        if cur.iter().zip(prev).all(|(a, b)| a == b) {
            break;
        }
        f.push(cur);
        pred.push(cur_pred);
    }

    MecspTable {
        source,
        budget,
        f,
        pred,
    }
}

/// Reconstructs the path realizing `f[l][target]`, or `None` if it is
/// infinite. The missing count is relative to the H the table was built on.
pub fn mecsp_path(
    table: &MecspTable,
    g: &Graph,
    target: VertexId,
    l: usize,
) -> Option<ConstrainedPath> {
    let mut layer = table.layer_index(l);
    if !table.f[layer][target].is_finite() {
        return None;
    }
    if target == table.source {
        return Some(ConstrainedPath::trivial(target));
    }
    let mut edges = Vec::new();
    let mut missing = 0;
    let mut v = target;
    loop {
        match table.pred[layer][v] {
            Pred::None => break,
            Pred::Inherit => layer -= 1,
            Pred::Edge { from, edge, down } => {
                edges.push(edge);
                v = from;
                if down {
                    missing += 1;
                    layer -= 1;
                }
            }
        }
    }
    debug_assert_eq!(v, table.source);
    edges.reverse();
    Some(ConstrainedPath::from_edges(g, table.source, edges, missing))
}

/// Union of the edges of `mecsp_path(table, g, t, l)` over all targets,
/// each edge once. Shared path suffixes are walked only once.
pub fn mecsp_union_edges(table: &MecspTable, g: &Graph, targets: &[VertexId], l: usize) -> Vec<EdgeId> {
    let top = table.layer_index(l);
    let n = g.n();
    let mut seen = vec![false; (top + 1) * n];
    let mut out = Vec::new();
    for &t in targets {
        if !table.f[top][t].is_finite() {
            continue;
        }
        let (mut layer, mut v) = (top, t);
        while !seen[layer * n + v] {
            seen[layer * n + v] = true;
            match table.pred[layer][v] {
                Pred::None => break,
                Pred::Inherit => layer -= 1,
                Pred::Edge { from, edge, down } => {
                    out.push(edge);
                    v = from;
                    layer -= usize::from(down);
                }
            }
        }
    }
    out
}

/// Surcharge settings for Weak CSSSP: each missing edge costs an extra
/// `(eps0 / budget) * w_max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReweightConfig {
    pub budget: usize,
    pub eps0: f64,
    pub w_max: f64,
}

impl ReweightConfig {
    pub fn new(budget: usize, eps0: f64, w_max: f64) -> Result<Self> {
        if budget == 0 {
            return Err(Error::invalid("missing-edge budget must be at least 1"));
        }
        if !(eps0 > 0.0 && eps0 < 1.0) {
            return Err(Error::invalid(format!("eps0 = {eps0} not in (0, 1)")));
        }
        if !(w_max >= 0.0 && w_max.is_finite()) {
            return Err(Error::invalid(format!("w_max = {w_max} must be finite and >= 0")));
        }
        Ok(ReweightConfig {
            budget,
            eps0,
            w_max,
        })
    }

    pub fn surcharge(&self) -> f64 {
        self.eps0 / self.budget as f64 * self.w_max
    }

    /// Reweighted length of a path with the given weight and missing count.
    pub fn delta(&self, weight: f64, missing: usize) -> f64 {
        weight + missing as f64 * self.surcharge()
    }
}

/// Result of [`weak_csssp`]: a Dijkstra tree over surcharged weights, with
/// the original weight and missing count of each tree path.
#[derive(Clone, Debug)]
pub struct WeakCsssp {
    /// Distances and tree over the surcharged weights.
    pub tree: SsspResult,
    /// Original (unsurcharged) weight of each tree path.
    pub weight: Vec<f64>,
    pub missing: Vec<usize>,
    snapshot: EdgeSet,
}

impl WeakCsssp {
    pub fn delta(&self, v: VertexId) -> f64 {
        self.tree.dist[v]
    }

    pub fn path_to(&self, g: &Graph, target: VertexId) -> Option<ConstrainedPath> {
        let edges = self.tree.edges_to(g, target)?;
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        let mut v = self.tree.source;
        vertices.push(v);
        for &e in &edges {
            v = g.edge(e).other(v);
            vertices.push(v);
        }
        Some(ConstrainedPath {
            vertices,
            missing: edges.iter().filter(|&&e| !self.snapshot.contains(e)).count(),
            edges,
            weight: self.weight[target],
        })
    }
}

pub fn weak_csssp(
    g: &Graph,
    sb: &SpannerBuild<'_>,
    source: VertexId,
    cfg: &ReweightConfig,
) -> WeakCsssp {
    weak_csssp_in(g, None, sb, source, cfg)
}

pub fn weak_csssp_in(
    g: &Graph,
    alive: Option<&EdgeSet>,
    sb: &SpannerBuild<'_>,
    source: VertexId,
    cfg: &ReweightConfig,
) -> WeakCsssp {
    let surcharge = cfg.surcharge();
    let tree = dijkstra_with(
        g,
        source,
        |e| alive.is_none_or(|a| a.contains(e)),
        |e, w| if sb.contains(e) { w } else { w + surcharge },
    );
    let n = g.n();
    let mut weight = vec![f64::INFINITY; n];
    let mut missing = vec![usize::MAX; n];
    for &v in &tree.order {
        match tree.parent[v] {
            None => {
                weight[v] = 0.0;
                missing[v] = 0;
            }
            Some(e) => {
                let edge = g.edge(e);
                let u = edge.other(v);
                weight[v] = weight[u] + edge.w;
                missing[v] = missing[u] + usize::from(sb.is_missing(e));
            }
        }
    }
    WeakCsssp {
        tree,
        weight,
        missing,
        snapshot: sb.edges().clone(),
    }
}
