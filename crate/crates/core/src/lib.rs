//! Additive spanners for weighted undirected graphs.
//!
//! A spanner H of G keeps a subset of G's edges while guaranteeing
//! `d_H(s,t) <= d_G(s,t) + c W_st` for every pair, where `W_st` is the
//! heaviest edge on a shortest s–t path in G. See [`spanners`] for the
//! available constructions and [`verify`] for exact certification.
//!
//! ```
//! use wspan::graph::generate_gnp;
//! use wspan::spanners::{build, Algorithm, BuildParams};
//! use wspan::verify::{verify_stretch, Bound, Pairs};
//!
//! let g = generate_gnp(60, 0.3, 1.0, 10.0, 7)?;
//! let (h, report) = build(&g, Algorithm::SixWFast, &BuildParams::with_seed(1))?;
//! assert_eq!(report.spanner_edges, h.len());
//!
//! let check = verify_stretch(&g, &h, Bound::SixW, Pairs::All, 2000)?;
//! assert!(check.passed());
//! # Ok::<(), wspan::Error>(())
//! ```

pub mod cli;
mod error;
pub mod graph;
pub mod light_init;
pub mod paths;
pub mod sampling;
pub mod shortest_paths;
pub mod spanners;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, EdgeSet, Graph, GraphBuilder, VertexId};
pub use light_init::{d_light_init, SpannerBuild};
pub use spanners::{build, Algorithm, BuildParams, BuildReport};
