//! Exact single-source and all-pairs shortest paths.
//!
//! Unreachable vertices carry `f64::INFINITY`. Heap ties are broken by
//! the smaller vertex id and parents are only replaced on strict
//! improvement, which makes every tree here a deterministic function of
//! the graph.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::{Error, Result};

pub const APSP_DEFAULT_CAP: usize = 2000;

/// Min-heap entry keyed on `(key, tie, vertex)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct HeapEntry {
    pub key: f64,
    pub tie: f64,
    pub vertex: VertexId,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .key
            .total_cmp(&self.key)
            .then_with(|| other.tie.total_cmp(&self.tie))
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct SsspResult {
    pub source: VertexId,
    pub dist: Vec<f64>,
    /// Tree edge into each vertex; `None` at the source and when unreachable.
    pub parent: Vec<Option<EdgeId>>,
    /// Vertices in the order they were settled.
    pub order: Vec<VertexId>,
}

impl SsspResult {
    pub fn reachable(&self, v: VertexId) -> bool {
        self.dist[v].is_finite()
    }

    /// Tree edges from the source to `target`, in path order.
    pub fn edges_to(&self, g: &Graph, target: VertexId) -> Option<Vec<EdgeId>> {
        if !self.reachable(target) {
            return None;
        }
        let mut out = Vec::new();
        let mut v = target;
        while let Some(e) = self.parent[v] {
            out.push(e);
            v = g.edge(e).other(v);
        }
        out.reverse();
        Some(out)
    }

    /// Union of the tree paths to every reachable target, each edge once.
    pub fn union_edges_to(&self, g: &Graph, targets: &[VertexId]) -> Vec<EdgeId> {
        let mut seen = vec![false; self.dist.len()];
        let mut out = Vec::new();
        for &t in targets {
            let mut v = t;
            while let (false, Some(e)) = (seen[v], self.parent[v]) {
                seen[v] = true;
                out.push(e);
                v = g.edge(e).other(v);
            }
        }
        out
    }

    /// Tree path from the source to `target` as a vertex sequence.
    pub fn path_to(&self, g: &Graph, target: VertexId) -> Option<Vec<VertexId>> {
        let edges = self.edges_to(g, target)?;
        let mut out = Vec::with_capacity(edges.len() + 1);
        let mut v = self.source;
        out.push(v);
        for e in edges {
            v = g.edge(e).other(v);
            out.push(v);
        }
        Some(out)
    }

    /// Heaviest edge on each tree path (0 at the source, infinite when
    /// unreachable).
    pub fn tree_bottleneck(&self, g: &Graph) -> Vec<f64> {
        let mut out = vec![f64::INFINITY; self.dist.len()];
        for &v in &self.order {
            out[v] = match self.parent[v] {
                None => 0.0,
                Some(e) => {
                    let edge = g.edge(e);
                    out[edge.other(v)].max(edge.w)
                }
            };
        }
        out
    }
}

/// Dijkstra over the edges accepted by `allow`, with per-edge costs from
/// `cost(edge id, weight)`.
pub(crate) fn dijkstra_with<A, C>(g: &Graph, source: VertexId, allow: A, cost: C) -> SsspResult
where
    A: Fn(EdgeId) -> bool,
    C: Fn(EdgeId, f64) -> f64,
{
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent = vec![None; n];
    let mut settled = vec![false; n];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();

    dist[source] = 0.0;
    heap.push(HeapEntry {
        key: 0.0,
        tie: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry { key, vertex: v, .. }) = heap.pop() {
        if settled[v] || key > dist[v] {
            continue;
        }
        settled[v] = true;
        order.push(v);
        for nb in g.neighbors(v) {
            if settled[nb.vertex] || !allow(nb.edge) {
                continue;
            }
            let nd = key + cost(nb.edge, nb.weight);
            if nd < dist[nb.vertex] {
                dist[nb.vertex] = nd;
                parent[nb.vertex] = Some(nb.edge);
                heap.push(HeapEntry {
                    key: nd,
                    tie: 0.0,
                    vertex: nb.vertex,
                });
            }
        }
    }
    SsspResult {
        source,
        dist,
        parent,
        order,
    }
}

/// Shortest paths from `source`, traversing only edges in `filter` when
/// one is given.
pub fn dijkstra(g: &Graph, source: VertexId, filter: Option<&EdgeSet>) -> SsspResult {
    match filter {
        Some(set) => dijkstra_with(g, source, |e| set.contains(e), |_, w| w),
        None => dijkstra_with(g, source, |_| true, |_, w| w),
    }
}

#[derive(Clone, Debug)]
pub struct BottleneckResult {
    pub source: VertexId,
    pub dist: Vec<f64>,
    /// Smallest possible heaviest edge over all shortest paths.
    pub bottleneck: Vec<f64>,
    pub parent: Vec<Option<EdgeId>>,
}

/// Dijkstra on the lexicographic key (distance, bottleneck). Since every
/// predecessor on a shortest path has strictly smaller distance, each
/// vertex is settled with the minimum bottleneck among its shortest paths.
pub fn bottleneck_dijkstra(g: &Graph, source: VertexId) -> BottleneckResult {
    bottleneck_dijkstra_filtered(g, source, None)
}

pub(crate) fn bottleneck_dijkstra_filtered(
    g: &Graph,
    source: VertexId,
    filter: Option<&EdgeSet>,
) -> BottleneckResult {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut bottleneck = vec![f64::INFINITY; n];
    let mut parent = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[source] = 0.0;
    bottleneck[source] = 0.0;
    heap.push(HeapEntry {
        key: 0.0,
        tie: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry { key, tie, vertex: v }) = heap.pop() {
        if settled[v] || key > dist[v] || (key == dist[v] && tie > bottleneck[v]) {
            continue;
        }
        settled[v] = true;
        for nb in g.neighbors(v) {
            let t = nb.vertex;
            if settled[t] || filter.is_some_and(|f| !f.contains(nb.edge)) {
                continue;
            }
            let nd = key + nb.weight;
            let nb_max = tie.max(nb.weight);
            if nd < dist[t] || (nd == dist[t] && nb_max < bottleneck[t]) {
                dist[t] = nd;
                bottleneck[t] = nb_max;
                parent[t] = Some(nb.edge);
                heap.push(HeapEntry {
                    key: nd,
                    tie: nb_max,
                    vertex: t,
                });
            }
        }
    }
    BottleneckResult {
        source,
        dist,
        bottleneck,
        parent,
    }
}

/// Dense all-pairs distance and min-bottleneck matrices.
#[derive(Clone, Debug)]
pub struct Apsp {
    n: usize,
    dist: Vec<f64>,
    bottleneck: Vec<f64>,
}

impl Apsp {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, s: VertexId, t: VertexId) -> f64 {
        self.dist[s * self.n + t]
    }

    #[inline]
    pub fn bottleneck(&self, s: VertexId, t: VertexId) -> f64 {
        self.bottleneck[s * self.n + t]
    }

    pub fn dist_row(&self, s: VertexId) -> &[f64] {
        &self.dist[s * self.n..(s + 1) * self.n]
    }
}

/// Runs [`bottleneck_dijkstra`] from every vertex. Refuses graphs with
/// more than `cap` vertices.
pub fn apsp(g: &Graph, cap: usize) -> Result<Apsp> {
    apsp_filtered(g, None, cap)
}

pub(crate) fn apsp_filtered(g: &Graph, filter: Option<&EdgeSet>, cap: usize) -> Result<Apsp> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let rows: Vec<BottleneckResult> = (0..n)
        .into_par_iter()
        .map(|s| bottleneck_dijkstra_filtered(g, s, filter))
        .collect();
    let mut dist = Vec::with_capacity(n * n);
    let mut bottleneck = Vec::with_capacity(n * n);
    for row in rows {
        dist.extend_from_slice(&row.dist);
        bottleneck.extend_from_slice(&row.bottleneck);
    }
    Ok(Apsp {
        n,
        dist,
        bottleneck,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_gnp;

    /// Bellman–Ford reference.
    fn bellman_ford(g: &Graph, s: VertexId) -> Vec<f64> {
        let mut d = vec![f64::INFINITY; g.n()];
        d[s] = 0.0;
        for _ in 0..g.n() {
            let mut changed = false;
            for e in g.edges() {
                for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                    if d[a] + e.w < d[b] {
                        d[b] = d[a] + e.w;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        d
    }

    /// Floyd–Warshall reference.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<f64>> {
        let n = g.n();
        let mut d = vec![vec![f64::INFINITY; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for e in g.edges() {
            d[e.u][e.v] = d[e.u][e.v].min(e.w);
            d[e.v][e.u] = d[e.v][e.u].min(e.w);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    fn close(a: f64, b: f64) -> bool {
        a == b || (a - b).abs() <= 1e-9 * (1.0 + a.abs())
    }

    #[test]
    fn path_graph() {
        let g = Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let r = dijkstra(&g, 0, None);
        assert_eq!(r.dist, vec![0.0, 1.0, 3.0]);
        assert_eq!(r.parent[0], None);
        assert_eq!(r.path_to(&g, 2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn unreachable_is_infinite() {
        let g = Graph::from_edges(3, [(0, 1, 1.0)]).unwrap();
        let r = dijkstra(&g, 0, None);
        assert!(r.dist[2].is_infinite());
        assert_eq!(r.parent[2], None);
        assert_eq!(r.path_to(&g, 2), None);
    }

    #[test]
    fn matches_bellman_ford() {
        for seed in 0..5 {
            let g = generate_gnp(50, 0.1, 1.0, 10.0, seed).unwrap();
            for s in [0, 17, 49] {
                let r = dijkstra(&g, s, None);
                let bf = bellman_ford(&g, s);
                assert_eq!(r.dist[s], 0.0);
                for v in 0..g.n() {
                    assert!(close(r.dist[v], bf[v]), "seed {seed} s {s} v {v}");
                }
                // Tree edges are tight and every edge is relaxed.
                for v in 0..g.n() {
                    if let Some(e) = r.parent[v] {
                        let edge = g.edge(e);
                        assert_eq!(r.dist[v], r.dist[edge.other(v)] + edge.w);
                    }
                }
                for e in g.edges() {
                    assert!(r.dist[e.u] + e.w >= r.dist[e.v]);
                    assert!(r.dist[e.v] + e.w >= r.dist[e.u]);
                }
            }
        }
    }

    #[test]
    fn full_filter_is_unfiltered() {
        let g = generate_gnp(40, 0.2, 1.0, 10.0, 3).unwrap();
        let all = EdgeSet::full(g.m());
        for s in 0..g.n() {
            let a = dijkstra(&g, s, None);
            let b = dijkstra(&g, s, Some(&all));
            assert_eq!(a.dist, b.dist);
            assert_eq!(a.parent, b.parent);
        }
    }

    #[test]
    fn filter_restricts_edges() {
        let g = Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)]).unwrap();
        let mut keep = EdgeSet::full(3);
        keep.remove(1);
        assert_eq!(dijkstra(&g, 0, Some(&keep)).dist, vec![0.0, 1.0, 5.0]);
    }

    #[test]
    fn bottleneck_prefers_lighter_max_edge() {
        // s=0, t=3. Route A: 0-3 direct weight 5. Route B: 0-1 (2), 1-3 (3).
        // Both have length 5; min bottleneck is 3. A pendant 2-0 edge.
        let g = Graph::from_edges(4, [(0, 3, 5.0), (0, 1, 2.0), (1, 3, 3.0), (0, 2, 1.0)])
            .unwrap();
        let r = bottleneck_dijkstra(&g, 0);
        assert_eq!(r.dist[3], 5.0);
        assert_eq!(r.bottleneck[3], 3.0);
        assert_eq!(r.bottleneck[0], 0.0);
        assert_eq!(r.dist[0], 0.0);
    }

    #[test]
    fn unit_weight_bottleneck() {
        let g = generate_gnp(30, 0.2, 1.0, 1.0, 1).unwrap();
        let r = bottleneck_dijkstra(&g, 0);
        for v in 1..g.n() {
            if r.dist[v].is_finite() {
                assert_eq!(r.bottleneck[v], 1.0);
            }
        }
    }

    #[test]
    fn apsp_matches_floyd_warshall() {
        let g = generate_gnp(30, 0.15, 1.0, 10.0, 11).unwrap();
        let a = apsp(&g, APSP_DEFAULT_CAP).unwrap();
        let fw = floyd_warshall(&g);
        for s in 0..g.n() {
            assert_eq!(a.dist(s, s), 0.0);
            for t in 0..g.n() {
                assert!(close(a.dist(s, t), fw[s][t]));
                assert!(close(a.dist(s, t), a.dist(t, s)));
            }
            let row = bottleneck_dijkstra(&g, s);
            assert_eq!(a.dist_row(s), &row.dist[..]);
        }
    }

    #[test]
    fn apsp_cap_refuses() {
        let g = Graph::edgeless(10);
        assert!(matches!(apsp(&g, 9), Err(Error::CapExceeded { n: 10, cap: 9 })));
    }

    #[test]
    fn tree_bottleneck_bounds_min_bottleneck() {
        let g = generate_gnp(40, 0.2, 1.0, 3.0, 5).unwrap();
        for s in 0..g.n() {
            let plain = dijkstra(&g, s, None);
            let tree = plain.tree_bottleneck(&g);
            let lex = bottleneck_dijkstra(&g, s);
            for v in 0..g.n() {
                if plain.reachable(v) {
                    assert!(lex.bottleneck[v] <= tree[v]);
                    assert!(tree[v] <= g.w_max());
                }
            }
        }
    }
}
