//! +6W spanners: d-light initialization with `d = ceil(n^(1/3))`, then for
//! every scale `i` connect a sample `D_i` to the sample `R` by lightest
//! paths with fewer than `2^(i+1)` missing edges.

use super::common::{ceil_log2, ceil_root, Recorder};
use super::{Algorithm, BuildParams, BuildReport, ResolvedParams};
use crate::graph::{EdgeSet, Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::paths::{mecsp_in, mecsp_path, mecsp_union_edges, MecspTable};
use crate::sampling::{rate_heavy_hit, rate_path_hit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Granularity {
    /// Fresh constrained search per `(v, u)` pair against the current H.
    PerPair,
    /// One MECSP table per source, reused for all its targets.
    PerSource,
}

/// Scale loop shared by the +6W family. `alive` restricts the graph for
/// builders that removed heavy vertices first.
pub(super) fn connect_scales(
    g: &Graph,
    alive: Option<&EdgeSet>,
    sb: &mut SpannerBuild<'_>,
    rec: &mut Recorder,
    d: usize,
    targets: &[VertexId],
    granularity: Granularity,
) {
    let n = g.n();
    for i in 0..=ceil_log2(n) {
        let sources = rec.sample(n, rate_path_hit(n, d, 1 << i), format!("D_{i}"));
        let budget = 1usize << (i + 1);
        for &v in &sources {
            match granularity {
                Granularity::PerSource => {
                    let table = mecsp_in(g, alive, sb, v, budget);
                    sb.add_edges(mecsp_union_edges(&table, g, targets, budget - 1));
                }
                Granularity::PerPair => {
                    // A table stays exact for later pairs until H changes.
                    let mut cached: Option<(MecspTable, usize)> = None;
                    for &u in targets {
                        let stale = cached.as_ref().is_none_or(|(_, len)| *len != sb.len());
                        if stale {
                            cached = Some((mecsp_in(g, alive, sb, v, budget), sb.len()));
                        }
                        let (table, _) = cached.as_ref().expect("just filled");
                        if let Some(p) = mecsp_path(table, g, u, budget - 1) {
                            sb.add_edges(p.edges);
                        }
                    }
                }
            }
        }
    }
}

fn build_6w_with<'g>(g: &'g Graph, params: &BuildParams, alg: Algorithm, granularity: Granularity) -> (SpannerBuild<'g>, BuildReport) {
    let n = g.n();
    let d = params.d.unwrap_or_else(|| ceil_root(n, 1, 3)).max(1);
    let mut rec = Recorder::new(alg, params.seed);
    let mut sb = SpannerBuild::new(g);

    sb.light_init(None, d);
    rec.phase("light-init", &sb);

    let r = rec.sample(n, rate_heavy_hit(n, d), "R".into());
    connect_scales(g, None, &mut sb, &mut rec, d, &r, granularity);
    rec.phase("paths", &sb);

    let resolved = ResolvedParams {
        d: Some(d),
        log_n: ceil_log2(n),
        ..Default::default()
    };
    let report = rec.finish(&sb, resolved);
    (sb, report)
}

/// +6W spanner with a constrained lightest-path search per `(D_i, R)` pair.
pub fn build_6w<'g>(g: &'g Graph, params: &BuildParams) -> (SpannerBuild<'g>, BuildReport) {
    build_6w_with(g, params, Algorithm::SixW, Granularity::PerPair)
}

/// +6W spanner with one MECSP run per sampled source.
pub fn build_6w_fast<'g>(g: &'g Graph, params: &BuildParams) -> (SpannerBuild<'g>, BuildReport) {
    build_6w_with(g, params, Algorithm::SixWFast, Granularity::PerSource)
}
