//! +2W subsetwise spanners: `d = ceil(sqrt(|S|))` light initialization,
//! then lightest paths with fewer than `2^(i+1)` missing edges from each
//! sampled `D_i` to every vertex of S.

use super::common::{ceil_log2, ceil_root, Recorder};
use super::{Algorithm, BuildParams, BuildReport, ResolvedParams};
use crate::graph::{Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::paths::{mecsp, mecsp_path};
use crate::sampling::rate_path_hit;
use crate::{Error, Result};

pub fn build_2w_subsetwise<'g>(
    g: &'g Graph,
    subset: &[VertexId],
    params: &BuildParams,
) -> Result<(SpannerBuild<'g>, BuildReport)> {
    let n = g.n();
    let mut s: Vec<VertexId> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(Error::invalid("subset must be nonempty"));
    }
    if let Some(&bad) = s.iter().find(|&&v| v >= n) {
        return Err(Error::invalid(format!("subset vertex {bad} out of range (n = {n})")));
    }

    let d = params.d.unwrap_or_else(|| ceil_root(s.len(), 1, 2)).max(1);
    let mut rec = Recorder::new(Algorithm::TwoWSubset, params.seed);
    let mut sb = SpannerBuild::new(g);
    sb.light_init(None, d);
    rec.phase("light-init", &sb);

    for i in 0..=ceil_log2(n) {
        let sources = rec.sample(n, rate_path_hit(n, d, 1 << i), format!("D_{i}"));
        let budget = 1usize << (i + 1);
        for &v in &sources {
            let table = mecsp(g, &sb, v, budget);
            for &u in &s {
                if let Some(p) = mecsp_path(&table, g, u, budget - 1) {
                    sb.add_edges(p.edges);
                }
            }
        }
    }
    rec.phase("paths", &sb);

    let resolved = ResolvedParams {
        d: Some(d),
        subset_size: Some(s.len()),
        log_n: ceil_log2(n),
        ..Default::default()
    };
    let report = rec.finish(&sb, resolved);
    Ok((sb, report))
}
