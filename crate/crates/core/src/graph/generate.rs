use rand::Rng;

use super::{Graph, GraphBuilder};
use crate::sampling::stream_rng;
use crate::{Error, Result};

/// Erdős–Rényi G(n, p) with weights drawn uniformly from
/// `[w_min, w_max]`. Unordered pairs are visited in lexicographic order,
/// so edge ids and the output file are a pure function of the arguments.
pub fn generate_gnp(n: usize, p: f64, w_min: f64, w_max: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("edge probability {p} not in [0, 1]")));
    }
    if !(w_min > 0.0 && w_min <= w_max && w_max.is_finite()) {
        return Err(Error::invalid(format!(
            "weight range [{w_min}, {w_max}] must satisfy 0 < w_min <= w_max"
        )));
    }
    let mut rng = stream_rng(seed, "gnp");
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                let w = rng.random_range(w_min..=w_max);
                b.add_edge(u, v, w).expect("generated pairs are simple");
            }
        }
    }
    Ok(b.build())
}
