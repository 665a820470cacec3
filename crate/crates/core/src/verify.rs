//! Exact certification of spanner guarantees.
//!
//! Stretch is checked against all-pairs distances in G and H. The local
//! weight `W_st` is the smallest possible heaviest edge over all shortest
//! s–t paths in G; a pair that breaks the bound under that strict `W_st`
//! is re-checked with the heaviest edge of G's Dijkstra-tree path, and both
//! verdicts are kept.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{generate_gnp, Graph, VertexId};
use crate::light_init::{d_light_init, SpannerBuild};
use crate::sampling::{rate_heavy_hit, rate_path_hit, sample_vertices, stream_rng, SampleConfig};
use crate::shortest_paths::{bottleneck_dijkstra, dijkstra};
use crate::spanners::BuildReport;
use crate::{Error, Result};

/// Allowed excess `d_H(s,t) - d_G(s,t)` as a function of `W_st`, `W_max`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Bound {
    /// `6 W_st`
    SixW,
    /// `2 W_st`, only for pairs inside a subset.
    TwoWSubset,
    /// `max(6 W_st, 2 W_max)`
    MaxSixWTwoWMax,
    /// `4 W_st + (2 + epsilon) W_max`
    FourWPlusEpsWMax { epsilon: f64 },
    /// `max(4 W_st, 2 W_max)`
    MaxFourWTwoWMax,
    /// `a W_st + b W_max`
    Custom { a: f64, b: f64 },
}

impl Bound {
    pub fn allowed(&self, w_st: f64, w_max: f64) -> f64 {
        match *self {
            Bound::SixW => 6.0 * w_st,
            Bound::TwoWSubset => 2.0 * w_st,
            Bound::MaxSixWTwoWMax => (6.0 * w_st).max(2.0 * w_max),
            Bound::FourWPlusEpsWMax { epsilon } => 4.0 * w_st + (2.0 + epsilon) * w_max,
            Bound::MaxFourWTwoWMax => (4.0 * w_st).max(2.0 * w_max),
            Bound::Custom { a, b } => a * w_st + b * w_max,
        }
    }

    pub fn requires_subset(&self) -> bool {
        matches!(self, Bound::TwoWSubset)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::SixW => f.write_str("6w"),
            Bound::TwoWSubset => f.write_str("2w-subset"),
            Bound::MaxSixWTwoWMax => f.write_str("6wmax"),
            Bound::FourWPlusEpsWMax { epsilon } => write!(f, "6eps-wmax:{epsilon}"),
            Bound::MaxFourWTwoWMax => f.write_str("4wmax"),
            Bound::Custom { a, b } => write!(f, "custom:{a}:{b}"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    /// Accepts `6w`, `2w-subset`, `6wmax`, `6eps-wmax:<eps>`, `4wmax` and
    /// `custom:<a>:<b>`.
    fn from_str(s: &str) -> Result<Self> {
        let num = |x: &str| {
            x.parse::<f64>()
                .map_err(|_| Error::invalid(format!("bad number `{x}` in bound `{s}`")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts[..] {
            ["6w"] => Ok(Bound::SixW),
            ["2w-subset"] => Ok(Bound::TwoWSubset),
            ["6wmax"] => Ok(Bound::MaxSixWTwoWMax),
            ["6eps-wmax", eps] => Ok(Bound::FourWPlusEpsWMax { epsilon: num(eps)? }),
            ["4wmax"] => Ok(Bound::MaxFourWTwoWMax),
            ["custom", a, b] => Ok(Bound::Custom {
                a: num(a)?,
                b: num(b)?,
            }),
            _ => Err(Error::invalid(format!("unknown bound `{s}`"))),
        }
    }
}

/// Which unordered pairs to check.
#[derive(Clone, Copy, Debug)]
pub enum Pairs<'a> {
    All,
    Subset(&'a [VertexId]),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairRecord {
    pub s: VertexId,
    pub t: VertexId,
    pub d_g: f64,
    pub d_h: f64,
    pub w_st: f64,
    pub w_st_tree: f64,
    /// `d_h - d_g`; infinite when H disconnects the pair.
    pub excess: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub s: VertexId,
    pub t: VertexId,
    pub d_g: f64,
    pub d_h: f64,
    pub w_st: f64,
    pub w_st_tree: f64,
    pub excess: f64,
    pub allowed: f64,
    /// Still a violation when `W_st` is taken from G's Dijkstra-tree path.
    pub tree_violation: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StretchReport {
    pub bound: String,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
    pub tree_violations: usize,
    /// Largest `excess / allowed` over connected pairs with positive allowance.
    pub max_excess_ratio: f64,
    pub max_excess_over_w_st: f64,
    pub max_excess_over_w_max: f64,
    pub seeds: Vec<u64>,
    #[serde(skip)]
    pub records: Vec<PairRecord>,
}

impl StretchReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn slack(d_g: f64) -> f64 {
    1e-9 * (1.0 + d_g)
}

/// Checks every requested pair of `h` against `bound`. Pairs disconnected
/// in G are skipped; pairs connected in G but not in H always violate.
pub fn verify_stretch(
    g: &Graph,
    h: &SpannerBuild<'_>,
    bound: Bound,
    pairs: Pairs<'_>,
    cap: usize,
) -> Result<StretchReport> {
    let n = g.n();
    if !std::ptr::eq(g, h.base()) && g.m() != h.base().m() {
        return Err(Error::invalid("spanner was built over a different graph"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let selected: Vec<VertexId> = match pairs {
        Pairs::All => {
            if bound.requires_subset() {
                return Err(Error::invalid(format!("bound `{bound}` needs a vertex subset")));
            }
            (0..n).collect()
        }
        Pairs::Subset(s) => {
            let mut s = s.to_vec();
            s.sort_unstable();
            s.dedup();
            if let Some(&bad) = s.iter().find(|&&v| v >= n) {
                return Err(Error::invalid(format!("subset vertex {bad} out of range")));
            }
            s
        }
    };
    let w_max = g.w_max();

    let rows: Vec<Vec<PairRecord>> = selected
        .par_iter()
        .enumerate()
        .map(|(k, &s)| {
            let lex = bottleneck_dijkstra(g, s);
            let tree = dijkstra(g, s, None).tree_bottleneck(g);
            let in_h = dijkstra(g, s, Some(h.edges()));
            selected[k + 1..]
                .iter()
                .filter(|&&t| lex.dist[t].is_finite())
                .map(|&t| PairRecord {
                    s,
                    t,
                    d_g: lex.dist[t],
                    d_h: in_h.dist[t],
                    w_st: lex.bottleneck[t],
                    w_st_tree: tree[t],
                    excess: in_h.dist[t] - lex.dist[t],
                })
                .collect()
        })
        .collect();
    let records: Vec<PairRecord> = rows.into_iter().flatten().collect();

    let mut report = StretchReport {
        bound: bound.to_string(),
        pairs_checked: records.len(),
        violations: Vec::new(),
        tree_violations: 0,
        max_excess_ratio: 0.0,
        max_excess_over_w_st: 0.0,
        max_excess_over_w_max: 0.0,
        seeds: Vec::new(),
        records: Vec::new(),
    };
    for r in &records {
        let allowed = bound.allowed(r.w_st, w_max);
        let excess = r.excess.max(0.0);
        if allowed > 0.0 {
            report.max_excess_ratio = report.max_excess_ratio.max(excess / allowed);
        }
        if r.w_st > 0.0 {
            report.max_excess_over_w_st = report.max_excess_over_w_st.max(excess / r.w_st);
        }
        if w_max > 0.0 {
            report.max_excess_over_w_max = report.max_excess_over_w_max.max(excess / w_max);
        }
        if r.excess > allowed + slack(r.d_g) {
            let tree_violation = r.excess > bound.allowed(r.w_st_tree, w_max) + slack(r.d_g);
            report.tree_violations += usize::from(tree_violation);
            report.violations.push(Violation {
                s: r.s,
                t: r.t,
                d_g: r.d_g,
                d_h: r.d_h,
                w_st: r.w_st,
                w_st_tree: r.w_st_tree,
                excess: r.excess,
                allowed,
                tree_violation,
            });
        }
    }
    report.records = records;
    Ok(report)
}

/// `edges / (n^exponent * (log2 n)^polylog_power)`; 0 when there are no
/// edges.
pub fn size_ratio(edges: usize, n: usize, exponent: f64, polylog_power: i32) -> f64 {
    if edges == 0 {
        return 0.0;
    }
    let n = n.max(2) as f64;
    edges as f64 / (n.powf(exponent) * n.log2().powi(polylog_power))
}

pub fn verify_size(report: &BuildReport, exponent: f64, polylog_power: i32) -> f64 {
    size_ratio(report.spanner_edges, report.n, exponent, polylog_power)
}

/// True when every ratio after index `start` is at most `(1 + band)` times
/// its predecessor.
pub fn non_increasing_within(ratios: &[f64], start: usize, band: f64) -> bool {
    ratios
        .windows(2)
        .skip(start)
        .all(|w| w[1] <= w[0] * (1.0 + band))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaRate {
    pub name: &'static str,
    /// Trials in which the event's hypothesis could be instantiated.
    pub eligible: usize,
    pub successes: usize,
    pub rate: f64,
    pub threshold: f64,
}

impl LemmaRate {
    pub fn passed(&self) -> bool {
        self.rate >= self.threshold
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SamplingVerdict {
    pub trials: usize,
    pub n: usize,
    pub d: usize,
    pub l: usize,
    pub rates: Vec<LemmaRate>,
}

impl SamplingVerdict {
    pub fn passed(&self) -> bool {
        self.rates.iter().all(LemmaRate::passed)
    }

    pub fn rate(&self, name: &str) -> Option<&LemmaRate> {
        self.rates.iter().find(|r| r.name == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SamplingSetup {
    pub trials: usize,
    pub n: usize,
    pub d: usize,
    pub l: usize,
    /// Edge probability of the G(n, p) instances.
    pub edge_p: f64,
    pub seed: u64,
}

impl SamplingSetup {
    pub fn new(trials: usize, n: usize, d: usize, l: usize) -> Self {
        SamplingSetup {
            trials,
            n,
            d,
            l,
            edge_p: 0.3,
            seed: 0,
        }
    }
}

struct TrialPath {
    vertices: Vec<VertexId>,
    edges: Vec<usize>,
    w_st: f64,
}

/// Monte Carlo success rates of the four hitting events on fresh
/// `G(n, edge_p)` instances with U[1, 10] weights and d-light
/// initialization:
///
/// * `heavy-neighborhood`: sampling at `2 ln n / d`, every d-heavy vertex
///   has a sampled closed neighbor.
/// * `path-neighborhood`: sampling at `ln n / k` with `k = d l`, a path with
///   `|N[path]| >= k` has a sampled closed neighbor.
/// * `vertex-hit`: sampling at `2 ln n / d`, every endpoint of a missing
///   edge on a shortest path has an H-edge of weight `<= W_st` to a sample.
/// * `path-hit`: sampling at `ln n / (d l)`, a shortest path with exactly
///   `l` missing edges has an H-edge of weight `<= W_st` from one of its
///   vertices to a sample.
///
/// Each rate is compared against `1 - 5/n`.
pub fn verify_sampling_lemmas(setup: &SamplingSetup) -> Result<SamplingVerdict> {
    let SamplingSetup {
        trials,
        n,
        d,
        l,
        edge_p,
        seed,
    } = *setup;
    if trials < 100 {
        return Err(Error::invalid(format!("need at least 100 trials, got {trials}")));
    }
    if n < 2 || d < 1 || l < 1 {
        return Err(Error::invalid("need n >= 2, d >= 1, l >= 1"));
    }
    let threshold = 1.0 - 5.0 / n as f64;
    let names = ["heavy-neighborhood", "path-neighborhood", "vertex-hit", "path-hit"];
    let mut eligible = [0usize; 4];
    let mut successes = [0usize; 4];

    for trial in 0..trials {
        let trial_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(trial as u64);
        let g = generate_gnp(n, edge_p, 1.0, 10.0, trial_seed)?;
        let h = d_light_init(&g, d);
        let sample = |p: f64, label: &str| {
            let mut mark = vec![false; n];
            for v in sample_vertices(n, &SampleConfig::new(p, trial_seed, label)) {
                mark[v] = true;
            }
            mark
        };
        let mut rng = stream_rng(trial_seed, "hit-paths");
        let mut sources: Vec<VertexId> = (0..n).collect();
        sources.shuffle(&mut rng);
        let trees: Vec<_> = sources.iter().map(|&s| dijkstra(&g, s, None)).collect();
        let mut pick = |accept: &dyn Fn(&TrialPath) -> bool| -> Option<TrialPath> {
            for tree in &trees {
                let mut candidates: Vec<TrialPath> = (0..n)
                    .filter(|&t| t != tree.source && tree.reachable(t))
                    .map(|t| {
                        let edges = tree.edges_to(&g, t).expect("reachable");
                        TrialPath {
                            vertices: tree.path_to(&g, t).expect("reachable"),
                            w_st: edges.iter().map(|&e| g.edge(e).w).fold(0.0, f64::max),
                            edges,
                        }
                    })
                    .filter(|p| accept(p))
                    .collect();
                if !candidates.is_empty() {
                    let k = rng.random_range(0..candidates.len());
                    return Some(candidates.swap_remove(k));
                }
            }
            None
        };
        let missing = |p: &TrialPath| p.edges.iter().filter(|&&e| h.is_missing(e)).count();
        let light_hit = |u: VertexId, w_st: f64, marked: &[bool]| {
            g.neighbors(u)
                .iter()
                .any(|nb| h.contains(nb.edge) && nb.weight <= w_st && marked[nb.vertex])
        };

        // Heavy closed neighborhoods.
        let s1 = sample(rate_heavy_hit(n, d), "heavy-neighborhood");
        eligible[0] += 1;
        if (0..n)
            .filter(|&u| g.is_d_heavy(u, d))
            .all(|u| g.closed_neighborhood(u).any(|x| s1[x]))
        {
            successes[0] += 1;
        }

        // Path neighborhoods of size at least k = d l.
        let k = d * l;
        let closed_size = |p: &TrialPath| {
            let mut mark = vec![false; n];
            for &v in &p.vertices {
                for x in g.closed_neighborhood(v) {
                    mark[x] = true;
                }
            }
            mark
        };
        if let Some(p) = pick(&|p| closed_size(p).iter().filter(|&&b| b).count() >= k) {
            eligible[1] += 1;
            let s2 = sample(rate_path_hit(n, k, 1), "path-neighborhood");
            let nbhd = closed_size(&p);
            if (0..n).any(|x| nbhd[x] && s2[x]) {
                successes[1] += 1;
            }
        }

        // Missing-edge endpoints hit through light H-edges.
        if let Some(p) = pick(&|p| missing(p) >= 1) {
            eligible[2] += 1;
            let s3 = sample(rate_heavy_hit(n, d), "vertex-hit");
            let endpoints = p.edges.iter().filter(|&&e| h.is_missing(e)).flat_map(|&e| {
                let edge = g.edge(e);
                [edge.u, edge.v]
            });
            if endpoints.clone().all(|u| light_hit(u, p.w_st, &s3)) {
                successes[2] += 1;
            }
        }

        // Paths with exactly l missing edges.
        if let Some(p) = pick(&|p| missing(p) == l) {
            eligible[3] += 1;
            let s4 = sample(rate_path_hit(n, d, l), "path-hit");
            if p.vertices.iter().any(|&r| light_hit(r, p.w_st, &s4)) {
                successes[3] += 1;
            }
        }
    }

    let rates = (0..4)
        .map(|i| LemmaRate {
            name: names[i],
            eligible: eligible[i],
            successes: successes[i],
            rate: if eligible[i] == 0 {
                1.0
            } else {
                successes[i] as f64 / eligible[i] as f64
            },
            threshold,
        })
        .collect();
    Ok(SamplingVerdict {
        trials,
        n,
        d,
        l,
        rates,
    })
}
