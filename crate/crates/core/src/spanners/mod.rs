//! Spanner constructions.
//!
//! | selector     | guarantee (w.h.p.)                  | builder                   |
//! |--------------|-------------------------------------|---------------------------|
//! | `6w`         | `d_G + 6 W_st`                      | [`build_6w`]              |
//! | `2w-subset`  | `d_G + 2 W_st` on `S x S`           | [`build_2w_subsetwise`]   |
//! | `6w-fast`    | `d_G + 6 W_st`                      | [`build_6w_fast`]         |
//! | `6wmax-fast` | `d_G + max(6 W_st, 2 W_max)`        | [`build_6wmax_fast`]      |
//! | `6eps-wmax`  | `d_G + 4 W_st + (2 + eps) W_max`    | [`build_6eps_wmax`]       |
//! | `4w-fast`    | `d_G + max(4 W_st, 2 W_max)`        | [`build_4w_fast`]         |
//!
//! All randomness comes from `BuildParams::seed`; each sampled set uses its
//! own labelled stream. Fractional parameters such as `n^(1/3)` are rounded
//! up and sampling probabilities are clamped to 1.

mod common;
mod fast;
mod six_w;
mod subsetwise;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};
use crate::light_init::SpannerBuild;
use crate::{Error, Result};

pub use common::{ceil_log2, ceil_root};
pub use fast::{build_4w_fast, build_6eps_wmax, build_6wmax_fast};
pub use six_w::{build_6w, build_6w_fast};
pub use subsetwise::build_2w_subsetwise;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "6w")]
    SixW,
    #[serde(rename = "2w-subset")]
    TwoWSubset,
    #[serde(rename = "6w-fast")]
    SixWFast,
    #[serde(rename = "6wmax-fast")]
    SixWMaxFast,
    #[serde(rename = "6eps-wmax")]
    SixEpsWMax,
    #[serde(rename = "4w-fast")]
    FourWFast,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::SixW,
        Algorithm::TwoWSubset,
        Algorithm::SixWFast,
        Algorithm::SixWMaxFast,
        Algorithm::SixEpsWMax,
        Algorithm::FourWFast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SixW => "6w",
            Algorithm::TwoWSubset => "2w-subset",
            Algorithm::SixWFast => "6w-fast",
            Algorithm::SixWMaxFast => "6wmax-fast",
            Algorithm::SixEpsWMax => "6eps-wmax",
            Algorithm::FourWFast => "4w-fast",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown algorithm `{s}`")))
    }
}

/// Inputs shared by all builders. Unset overrides fall back to each
/// algorithm's default schedule.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BuildParams {
    pub seed: u64,
    /// Required by `6eps-wmax`, in (0, 1).
    pub epsilon: Option<f64>,
    /// Required by `2w-subset`.
    pub subset: Option<Vec<VertexId>>,
    /// Light-initialization degree.
    pub d: Option<usize>,
    /// Degree threshold of the heavy-vertex filter (`4w-fast`, `6wmax-fast`).
    pub heavy: Option<usize>,
    /// Missing-edge split point of `4w-fast`.
    pub ell: Option<usize>,
}

impl BuildParams {
    pub fn with_seed(seed: u64) -> Self {
        BuildParams {
            seed,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSize {
    pub label: String,
    pub p: f64,
    pub size: usize,
}

/// Parameters a build actually used after defaults were applied.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResolvedParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heavy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset_size: Option<usize>,
    /// Largest scale index, `ceil(log2 n)`.
    pub log_n: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuildReport {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub spanner_edges: usize,
    pub params: ResolvedParams,
    pub phase_names: Vec<String>,
    pub phase_edges: Vec<usize>,
    pub phase_millis: Vec<f64>,
    pub sample_sizes: Vec<SampleSize>,
}

impl BuildReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the builder selected by `alg`.
pub fn build<'g>(
    g: &'g Graph,
    alg: Algorithm,
    params: &BuildParams,
) -> Result<(SpannerBuild<'g>, BuildReport)> {
    match alg {
        Algorithm::SixW => Ok(build_6w(g, params)),
        Algorithm::SixWFast => Ok(build_6w_fast(g, params)),
        Algorithm::TwoWSubset => {
            let subset = params
                .subset
                .as_deref()
                .ok_or_else(|| Error::invalid("2w-subset needs a vertex subset"))?;
            build_2w_subsetwise(g, subset, params)
        }
        Algorithm::SixWMaxFast => Ok(build_6wmax_fast(g, params)),
        Algorithm::SixEpsWMax => {
            let eps = params
                .epsilon
                .ok_or_else(|| Error::invalid("6eps-wmax needs epsilon"))?;
            build_6eps_wmax(g, eps, params)
        }
        Algorithm::FourWFast => Ok(build_4w_fast(g, params)),
    }
}
