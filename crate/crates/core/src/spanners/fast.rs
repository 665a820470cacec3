//! Faster constructions that trade a `W_max` term for running time: a
//! heavy-vertex filter covered by sampled shortest-path trees, followed by
//! constrained path search on the residual graph.

use super::common::{add_shortest_path_tree, ceil_log2, ceil_root, remove_heavy_edges, Recorder};
use super::six_w::{connect_scales, Granularity};
use super::{Algorithm, BuildParams, BuildReport, ResolvedParams};
use crate::graph::{EdgeSet, Graph};
use crate::light_init::SpannerBuild;
use crate::paths::{mecsp_in, mecsp_union_edges, weak_csssp_in, ReweightConfig};
use crate::sampling::{rate_heavy_hit, rate_path_hit};
use crate::{Error, Result};

/// Samples `S` at `2 ln n / heavy`, adds a full shortest-path tree from
/// each sampled vertex, then deletes all edges of `heavy`-heavy vertices
/// from the returned alive mask.
fn filter_heavy(
    g: &Graph,
    sb: &mut SpannerBuild<'_>,
    rec: &mut Recorder,
    heavy: usize,
) -> EdgeSet {
    let n = g.n();
    for s in rec.sample(n, rate_heavy_hit(n, heavy), "S".into()) {
        add_shortest_path_tree(g, None, sb, s);
    }
    let mut alive = EdgeSet::full(g.m());
    remove_heavy_edges(g, &mut alive, heavy);
    alive
}

/// +max(6W, 2W_max) spanner: heavy filter at `ceil(n^(2/3))`, then the
/// MECSP-based +6W construction on the residual graph.
pub fn build_6wmax_fast<'g>(g: &'g Graph, params: &BuildParams) -> (SpannerBuild<'g>, BuildReport) {
    let n = g.n();
    let heavy = params.heavy.unwrap_or_else(|| ceil_root(n, 2, 3)).max(1);
    let d = params.d.unwrap_or_else(|| ceil_root(n, 1, 3)).max(1);
    let mut rec = Recorder::new(Algorithm::SixWMaxFast, params.seed);
    let mut sb = SpannerBuild::new(g);

    let alive = filter_heavy(g, &mut sb, &mut rec, heavy);
    rec.phase("heavy-trees", &sb);

    sb.light_init(Some(&alive), d);
    rec.phase("light-init", &sb);

    let r = rec.sample(n, rate_heavy_hit(n, d), "R".into());
    connect_scales(g, Some(&alive), &mut sb, &mut rec, d, &r, Granularity::PerSource);
    rec.phase("paths", &sb);

    let resolved = ResolvedParams {
        d: Some(d),
        heavy: Some(heavy),
        log_n: ceil_log2(n),
        ..Default::default()
    };
    let report = rec.finish(&sb, resolved);
    (sb, report)
}

/// +(4W + (2+eps)W_max) spanner, hence +(6+eps)W_max, using Weak CSSSP.
///
/// Scales run `j` (degree) and `i` (missing edges) from `ceil(log2 n)`
/// down to 0. After each `j` round, edges of vertices with working degree
/// at least `2^j` are deleted, so the working max degree drops below `2^j`.
pub fn build_6eps_wmax<'g>(
    g: &'g Graph,
    epsilon: f64,
    params: &BuildParams,
) -> Result<(SpannerBuild<'g>, BuildReport)> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::invalid(format!("epsilon = {epsilon} not in (0, 1)")));
    }
    let n = g.n();
    let d = params.d.unwrap_or_else(|| ceil_root(n, 1, 3)).max(1);
    let log_n = ceil_log2(n);
    let mut rec = Recorder::new(Algorithm::SixEpsWMax, params.seed);
    let mut sb = SpannerBuild::new(g);

    sb.light_init(None, d);
    rec.phase("light-init", &sb);

    let r = rec.sample(n, rate_heavy_hit(n, d), "R".into());
    let mut alive = EdgeSet::full(g.m());
    for j in (0..=log_n).rev() {
        let degree_scale = 1u128 << j;
        for i in (0..=log_n).rev() {
            let missing_scale = 1usize << i;
            let p = if degree_scale > missing_scale as u128 * d as u128 {
                rate_heavy_hit(n, 1 << j)
            } else {
                rate_path_hit(n, d, missing_scale)
            };
            let sources = rec.sample(n, p, format!("D_{j}_{i}"));
            let cfg = ReweightConfig::new(2 * missing_scale, epsilon / 2.0, g.w_max())?;
            for &v in &sources {
                let found = weak_csssp_in(g, Some(&alive), &sb, v, &cfg);
                sb.add_edges(found.tree.union_edges_to(g, &r));
            }
        }
        remove_heavy_edges(g, &mut alive, 1 << j);
    }
    rec.phase("paths", &sb);

    let resolved = ResolvedParams {
        d: Some(d),
        epsilon: Some(epsilon),
        log_n,
        ..Default::default()
    };
    let report = rec.finish(&sb, resolved);
    Ok((sb, report))
}

/// +max(4W, 2W_max) spanner with `heavy = ceil(n^(3/5))`,
/// `d = ceil(n^(2/5))`, `ell = ceil(n^(1/5))`.
///
/// Paths with at least `ell` missing edges are covered by shortest-path
/// trees from `R`; shorter ones by MECSP between vertices of `D`.
pub fn build_4w_fast<'g>(g: &'g Graph, params: &BuildParams) -> (SpannerBuild<'g>, BuildReport) {
    let n = g.n();
    let heavy = params.heavy.unwrap_or_else(|| ceil_root(n, 3, 5)).max(1);
    let d = params.d.unwrap_or_else(|| ceil_root(n, 2, 5)).max(1);
    let ell = params.ell.unwrap_or_else(|| ceil_root(n, 1, 5)).max(1);
    let mut rec = Recorder::new(Algorithm::FourWFast, params.seed);
    let mut sb = SpannerBuild::new(g);

    let alive = filter_heavy(g, &mut sb, &mut rec, heavy);
    rec.phase("heavy-trees", &sb);

    sb.light_init(Some(&alive), d);
    rec.phase("light-init", &sb);

    for v in rec.sample(n, rate_path_hit(n, d, ell), "R".into()) {
        add_shortest_path_tree(g, Some(&alive), &mut sb, v);
    }
    rec.phase("sample-trees", &sb);

    let hubs = rec.sample(n, rate_heavy_hit(n, d), "D".into());
    for &u in &hubs {
        let table = mecsp_in(g, Some(&alive), &sb, u, ell);
        sb.add_edges(mecsp_union_edges(&table, g, &hubs, ell - 1));
    }
    rec.phase("paths", &sb);

    let resolved = ResolvedParams {
        d: Some(d),
        heavy: Some(heavy),
        ell: Some(ell),
        log_n: ceil_log2(n),
        ..Default::default()
    };
    let report = rec.finish(&sb, resolved);
    (sb, report)
}
