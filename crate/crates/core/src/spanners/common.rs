use std::time::Instant;

use super::{Algorithm, BuildReport, ResolvedParams, SampleSize};
use crate::graph::{EdgeSet, Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::sampling::{sample_vertices, SampleConfig};
use crate::shortest_paths::dijkstra;

/// `ceil(n^(num/den))`, exact for perfect powers.
pub fn ceil_root(n: usize, num: u32, den: u32) -> usize {
    assert!(den > 0);
    if n <= 1 {
        return n;
    }
    let target = (n as u128).pow(num);
    let mut k = ((n as f64).powf(num as f64 / den as f64).floor() as u128).max(1);
    while k.pow(den) >= target && k > 1 {
        k -= 1;
    }
    while k.pow(den) < target {
        k += 1;
    }
    k as usize
}

/// `ceil(log2 n)`, 0 for `n <= 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Collects per-phase edge counts, timings and sample sizes.
pub(super) struct Recorder {
    algorithm: Algorithm,
    seed: u64,
    started: Instant,
    last_len: usize,
    phase_names: Vec<String>,
    phase_edges: Vec<usize>,
    phase_millis: Vec<f64>,
    sample_sizes: Vec<SampleSize>,
}

impl Recorder {
    pub fn new(algorithm: Algorithm, seed: u64) -> Self {
        Recorder {
            algorithm,
            seed,
            started: Instant::now(),
            last_len: 0,
            phase_names: Vec::new(),
            phase_edges: Vec::new(),
            phase_millis: Vec::new(),
            sample_sizes: Vec::new(),
        }
    }

    pub fn sample(&mut self, n: usize, p: f64, label: String) -> Vec<VertexId> {
        let cfg = SampleConfig::new(p, self.seed, label);
        let set = sample_vertices(n, &cfg);
        self.sample_sizes.push(SampleSize {
            p: cfg.p(),
            label: cfg.label,
            size: set.len(),
        });
        set
    }

    /// Closes the current phase.
    pub fn phase(&mut self, name: &str, sb: &SpannerBuild<'_>) {
        let now = Instant::now();
        self.phase_names.push(name.to_string());
        self.phase_edges.push(sb.len() - self.last_len);
        self.phase_millis
            .push(now.duration_since(self.started).as_secs_f64() * 1e3);
        self.last_len = sb.len();
        self.started = now;
    }

    pub fn finish(self, sb: &SpannerBuild<'_>, params: ResolvedParams) -> BuildReport {
        let g = sb.base();
        BuildReport {
            algorithm: self.algorithm,
            seed: self.seed,
            n: g.n(),
            m: g.m(),
            spanner_edges: sb.len(),
            params,
            phase_names: self.phase_names,
            phase_edges: self.phase_edges,
            phase_millis: self.phase_millis,
            sample_sizes: self.sample_sizes,
        }
    }
}

/// Adds the shortest-path tree of `source` in the alive subgraph.
pub(super) fn add_shortest_path_tree(
    g: &Graph,
    alive: Option<&EdgeSet>,
    sb: &mut SpannerBuild<'_>,
    source: VertexId,
) -> usize {
    let tree = dijkstra(g, source, alive);
    sb.add_edges(tree.parent.into_iter().flatten())
}

/// Removes every alive edge incident to a vertex whose alive degree is at
/// least `threshold`. Degrees are taken before any removal.
pub(super) fn remove_heavy_edges(g: &Graph, alive: &mut EdgeSet, threshold: usize) -> usize {
    let heavy: Vec<bool> = (0..g.n())
        .map(|v| alive_degree(g, alive, v) >= threshold)
        .collect();
    let mut removed = 0;
    for (id, e) in g.edges().iter().enumerate() {
        if (heavy[e.u] || heavy[e.v]) && alive.remove(id) {
            removed += 1;
        }
    }
    removed
}

pub(super) fn alive_degree(g: &Graph, alive: &EdgeSet, v: VertexId) -> usize {
    g.neighbors(v).iter().filter(|nb| alive.contains(nb.edge)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_are_exact_on_perfect_powers() {
        assert_eq!(ceil_root(512, 1, 3), 8);
        assert_eq!(ceil_root(513, 1, 3), 9);
        assert_eq!(ceil_root(512, 2, 3), 64);
        assert_eq!(ceil_root(1000, 1, 3), 10);
        assert_eq!(ceil_root(1001, 1, 3), 11);
        assert_eq!(ceil_root(32, 1, 5), 2);
        assert_eq!(ceil_root(32, 3, 5), 8);
        assert_eq!(ceil_root(33, 2, 5), 5);
        assert_eq!(ceil_root(100, 1, 2), 10);
        assert_eq!(ceil_root(1, 1, 3), 1);
        assert_eq!(ceil_root(0, 1, 3), 0);
        for n in 2..3000usize {
            let k = ceil_root(n, 1, 3);
            assert!(k.pow(3) >= n && (k - 1).pow(3) < n);
        }
    }

    #[test]
    fn log2_ceiling() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(512), 9);
        assert_eq!(ceil_log2(513), 10);
    }

    #[test]
    fn heavy_removal_uses_initial_degrees() {
        // Star with center 0 plus edge 1-2.
        let g = Graph::from_edges(5, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0), (1, 2, 1.0)])
            .unwrap();
        let mut alive = EdgeSet::full(g.m());
        assert_eq!(remove_heavy_edges(&g, &mut alive, 3), 4);
        assert_eq!(alive.iter().collect::<Vec<_>>(), vec![4]);
        assert!((0..5).all(|v| alive_degree(&g, &alive, v) < 3));
    }
}
