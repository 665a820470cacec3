//! Seeded Bernoulli vertex sampling.
//!
//! Every sampled set draws from its own ChaCha stream keyed by
//! `(seed, label)`, so a set is reproducible regardless of how many other
//! sets were drawn before it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::graph::VertexId;

/// Deterministic RNG for the stream named `label` under `seed`.
pub fn stream_rng(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(b"wspan-stream\0");
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

/// Clamps into `[0, 1]`; NaN maps to 0.
pub fn clamp_probability(p: f64) -> f64 {
    if p.is_nan() {
        0.0
    } else {
        p.clamp(0.0, 1.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleConfig {
    p: f64,
    pub seed: u64,
    pub label: String,
}

impl SampleConfig {
    pub fn new(p: f64, seed: u64, label: impl Into<String>) -> Self {
        SampleConfig {
            p: clamp_probability(p),
            seed,
            label: label.into(),
        }
    }

    /// Inclusion probability after clamping.
    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Each vertex of `0..n` independently with probability `cfg.p()`, in
/// ascending order.
pub fn sample_vertices(n: usize, cfg: &SampleConfig) -> Vec<VertexId> {
    let mut rng = stream_rng(cfg.seed, &cfg.label);
    (0..n).filter(|_| rng.random_bool(cfg.p)).collect()
}

/// `min(1, 2 ln n / d)`: the rate at which every d-heavy vertex has a
/// sampled closed neighbor with probability at least `1 - 1/n`.
pub fn rate_heavy_hit(n: usize, d: usize) -> f64 {
    heavy_rate(ln(n), d as f64)
}

/// `min(1, ln n / (d l))`: the rate that hits a shortest path with `l`
/// missing edges through a light spanner edge.
pub fn rate_path_hit(n: usize, d: usize, l: usize) -> f64 {
    path_rate(ln(n), d as f64, l as f64)
}

fn ln(n: usize) -> f64 {
    (n as f64).ln()
}

fn heavy_rate(ln_n: f64, d: f64) -> f64 {
    clamp_probability(2.0 * ln_n / d)
}

fn path_rate(ln_n: f64, d: f64, l: f64) -> f64 {
    clamp_probability(ln_n / (d * l))
}
