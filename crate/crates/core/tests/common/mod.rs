//! Brute-force oracles for small graphs. Everything here enumerates simple
//! paths explicitly and shares no code with the library's searches.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wspan::{EdgeSet, Graph};

/// Calls `visit(vertices, edges)` for every simple path starting at `s`,
/// including the trivial one.
pub fn for_each_simple_path(g: &Graph, s: usize, visit: &mut dyn FnMut(&[usize], &[usize])) {
    fn go(
        g: &Graph,
        verts: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[usize], &[usize]),
    ) {
        visit(verts, edges);
        let v = *verts.last().unwrap();
        for nb in g.neighbors(v) {
            if on_path[nb.vertex] {
                continue;
            }
            on_path[nb.vertex] = true;
            verts.push(nb.vertex);
            edges.push(nb.edge);
            go(g, verts, edges, on_path, visit);
            edges.pop();
            verts.pop();
            on_path[nb.vertex] = false;
        }
    }
    let mut on_path = vec![false; g.n()];
    on_path[s] = true;
    go(g, &mut vec![s], &mut Vec::new(), &mut on_path, visit);
}

pub fn path_weight(g: &Graph, edges: &[usize]) -> f64 {
    edges.iter().map(|&e| g.edge(e).w).sum()
}

pub fn path_max(g: &Graph, edges: &[usize]) -> f64 {
    edges.iter().map(|&e| g.edge(e).w).fold(0.0, f64::max)
}

/// `best[l][v]`: lightest simple s–v path with at most `l` edges outside
/// `h`, for `l < budget`.
pub fn brute_constrained(g: &Graph, h: &EdgeSet, s: usize, budget: usize) -> Vec<Vec<f64>> {
    let mut best = vec![vec![f64::INFINITY; g.n()]; budget];
    for_each_simple_path(g, s, &mut |verts, edges| {
        let missing = edges.iter().filter(|&&e| !h.contains(e)).count();
        let w = path_weight(g, edges);
        let v = *verts.last().unwrap();
        for row in best.iter_mut().skip(missing) {
            if w < row[v] {
                row[v] = w;
            }
        }
    });
    best
}

/// `(dist, min over shortest paths of the heaviest edge)` from `s`.
/// Integer weights keep the float sums exact.
pub fn brute_bottleneck(g: &Graph, s: usize) -> (Vec<f64>, Vec<f64>) {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut bottleneck = vec![f64::INFINITY; n];
    for_each_simple_path(g, s, &mut |verts, edges| {
        let v = *verts.last().unwrap();
        let w = path_weight(g, edges);
        let b = path_max(g, edges);
        if w < dist[v] {
            dist[v] = w;
            bottleneck[v] = b;
        } else if w == dist[v] && b < bottleneck[v] {
            bottleneck[v] = b;
        }
    });
    (dist, bottleneck)
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for nb in g.neighbors(v) {
            if !seen[nb.vertex] {
                seen[nb.vertex] = true;
                stack.push(nb.vertex);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Every connected labelled graph on `n` vertices, edges given by a
/// bitmask over the `n(n-1)/2` pairs, with integer weights from `weight`.
pub fn connected_graphs(n: usize, mut weight: impl FnMut(usize) -> f64) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(i, &(u, v))| (u, v, weight(i)))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}

/// Connected random graph on `n` vertices: a random spanning tree plus
/// extra edges with probability `p`, integer weights in `1..=wmax`.
pub fn random_connected(n: usize, p: f64, wmax: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = wspan::GraphBuilder::new(n);
    let mut used = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        used.insert((u, v));
        b.add_edge(u, v, rng.random_range(1..=wmax) as f64).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !used.contains(&(u, v)) && rng.random_bool(p) {
                b.add_edge(u, v, rng.random_range(1..=wmax) as f64).unwrap();
            }
        }
    }
    b.build()
}

/// Compares every MECSP layer against [`brute_constrained`] for each
/// source of each graph, with d-light initializations for `d` in `ds`.
/// Returns the number of `(l, v)` entries compared and a description of
/// each mismatch.
pub fn mecsp_sweep(graphs: &[Graph], ds: &[usize]) -> (usize, Vec<String>) {
    use wspan::paths::{mecsp, mecsp_path};
    let mut checked = 0;
    let mut bad = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        let budget = g.n();
        for &d in ds {
            let h = wspan::d_light_init(g, d);
            for s in 0..g.n() {
                let table = mecsp(g, &h, s, budget);
                let oracle = brute_constrained(g, h.edges(), s, budget);
                for (l, row) in oracle.iter().enumerate() {
                    for (v, &want) in row.iter().enumerate() {
                        checked += 1;
                        let got = table.dist(l, v);
                        if got != want {
                            bad.push(format!("graph {gi} d={d} s={s} l={l} v={v}: {got} != {want}"));
                            continue;
                        }
                        if let Some(p) = mecsp_path(&table, g, v, l) {
                            let ok = p.weight == want
                                && p.missing <= l
                                && path_weight(g, &p.edges) == want
                                && p.edges.iter().filter(|&&e| h.is_missing(e)).count() == p.missing;
                            if !ok {
                                bad.push(format!("graph {gi} d={d} s={s} l={l} v={v}: bad path {p:?}"));
                            }
                        } else if want.is_finite() {
                            bad.push(format!("graph {gi} d={d} s={s} l={l} v={v}: no path"));
                        }
                    }
                }
            }
        }
    }
    (checked, bad)
}

/// MECSP catalog: every connected graph on 2..=5 vertices with seeded
/// weights in 1..=3, plus `random` connected graphs on 6..=8 vertices.
pub fn mecsp_catalog(random: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut graphs = Vec::new();
    for n in 2..=5 {
        graphs.extend(connected_graphs(n, |_| rng.random_range(1..=3) as f64));
    }
    for k in 0..random {
        let n = 6 + k % 3;
        let p = [0.2, 0.4, 0.7][k % 3];
        graphs.push(random_connected(n, p, 4, 1000 + k as u64));
    }
    graphs
}

#[derive(Debug, Default)]
pub struct WeakSummary {
    pub instances: usize,
    pub attempts: u64,
    pub failures: Vec<String>,
}

/// Builds `count` instances of the constrained-path hypothesis: a shortest
/// s–t path `pi` that needs at least `l` missing edges, and a strictly
/// longer candidate with fewer than `l` missing edges whose weight is at
/// most `|pi| + c1 W_st + c2 W_max`. Checks the weight and missing-edge
/// guarantees of the path Weak CSSSP returns.
pub fn weak_csssp_instances(count: usize, seed: u64) -> WeakSummary {
    use wspan::graph::generate_gnp;
    use wspan::paths::{mecsp, mecsp_path, weak_csssp, ReweightConfig};
    use wspan::shortest_paths::bottleneck_dijkstra;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = WeakSummary::default();
    while out.instances < count {
        out.attempts += 1;
        assert!(out.attempts < 1000 * count as u64, "could not build enough instances");
        let n = rng.random_range(12..=40);
        let g = generate_gnp(n, rng.random_range(0.1..0.4), 1.0, 10.0, seed ^ out.attempts).unwrap();
        let h = wspan::d_light_init(&g, rng.random_range(1..=2));
        let s = rng.random_range(0..n);
        let t = rng.random_range(0..n);
        let l = rng.random_range(1..=3);
        let eps0 = [0.1, 0.25, 0.5, 0.9][rng.random_range(0..4)];
        let c1 = [0.0, 1.0, 2.0, 4.0][rng.random_range(0..4)];
        let c2 = [0.0, 0.5, 1.0, 2.0][rng.random_range(0..4)];

        let exact = bottleneck_dijkstra(&g, s);
        if s == t || !exact.dist[t].is_finite() {
            continue;
        }
        let (pi, w_st, w_max) = (exact.dist[t], exact.bottleneck[t], g.w_max());
        let table = mecsp(&g, &h, s, l);
        let Some(candidate) = mecsp_path(&table, &g, t, l - 1) else {
            continue;
        };
        if candidate.weight <= pi || candidate.weight > pi + c1 * w_st + c2 * w_max {
            continue;
        }
        out.instances += 1;

        let cfg = ReweightConfig::new(l, eps0, w_max).unwrap();
        let found = weak_csssp(&g, &h, s, &cfg);
        let star = found.path_to(&g, t).expect("t is reachable");
        let weight_ok = star.weight < pi + c1 * w_st + (c2 + eps0) * w_max;
        let missing_ok = star.missing as f64 <= (c1 + c2 + 1.0) * l as f64 / eps0;
        if !(weight_ok && missing_ok) {
            out.failures.push(format!(
                "attempt {}: n={n} s={s} t={t} l={l} eps0={eps0} c1={c1} c2={c2} \
                 |pi|={pi} |pi*|={} phi(pi*)={}",
                out.attempts, star.weight, star.missing
            ));
        }
    }
    out
}
