//! C interface to `wspan`.
//!
//! Graphs and spanners are opaque handles owned by the caller and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`WspanStatus`]; on failure [`wspan_last_error_message`] describes the
//! error for the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wspan::cli::embed_spanner;
use wspan::graph::{generate_gnp, load_graph, save_graph, Graph};
use wspan::shortest_paths::APSP_DEFAULT_CAP;
use wspan::spanners::{build, Algorithm, BuildParams, BuildReport};
use wspan::verify::{verify_stretch, Bound, Pairs};
use wspan::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WspanStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    CapExceeded = 5,
    NotSubgraph = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct WspanGraph {
    graph: Graph,
}

/// Opaque spanner handle.
pub struct WspanSpanner {
    graph: Graph,
    report: BuildReport,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WspanEdge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Build options. Zero (or a non-positive epsilon) means "use the
/// algorithm's default"; `subset` may be null when `subset_len` is 0.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct WspanBuildParams {
    pub seed: u64,
    pub epsilon: f64,
    pub subset: *const usize,
    pub subset_len: usize,
    pub d: usize,
    pub heavy: usize,
    pub ell: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct WspanVerifySummary {
    pub pairs_checked: usize,
    pub violations: usize,
    pub tree_violations: usize,
    pub max_excess_ratio: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(WspanStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => WspanStatus::Parse,
            Error::Io { .. } | Error::InvalidPath(_) => WspanStatus::Io,
            Error::InvalidArgument(_) => WspanStatus::InvalidArgument,
            Error::CapExceeded { .. } => WspanStatus::CapExceeded,
            Error::NotSubgraph(_) => WspanStatus::NotSubgraph,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WspanStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(WspanStatus::InvalidArgument, msg.into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WspanStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            WspanStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            WspanStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn new_graph(graph: Graph) -> *mut WspanGraph {
    Box::into_raw(Box::new(WspanGraph { graph }))
}

/// Message for the last failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn wspan_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wspan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Loads an edge-list file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_load(path: *const c_char, out: *mut *mut WspanGraph) -> WspanStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let graph = load_graph(str_arg(path, "path")?)?;
        *out = new_graph(graph);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` edges.
///
/// # Safety
/// `edges` must point to `m` readable elements (or be null with `m == 0`);
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_from_edges(
    n: usize,
    edges: *const WspanEdge,
    m: usize,
    out: *mut *mut WspanGraph,
) -> WspanStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let edges = slice_arg(edges, m, "edges")?;
        let graph = Graph::from_edges(n, edges.iter().map(|e| (e.u, e.v, e.w)))?;
        *out = new_graph(graph);
        Ok(())
    })
}

/// Erdős–Rényi G(n, p) with weights uniform in `[wmin, wmax]`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_generate_gnp(
    n: usize,
    p: f64,
    wmin: f64,
    wmax: f64,
    seed: u64,
    out: *mut *mut WspanGraph,
) -> WspanStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        if n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        *out = new_graph(generate_gnp(n, p, wmin, wmax, seed)?);
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_free(g: *mut WspanGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_vertex_count(g: *const WspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Edge count, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_edge_count(g: *const WspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.m())
}

/// Writes the graph in edge-list format.
///
/// # Safety
/// `g` must be a live graph handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn wspan_graph_save(g: *const WspanGraph, path: *const c_char) -> WspanStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        save_graph(&g.graph, str_arg(path, "path")?)?;
        Ok(())
    })
}

/// All-default build options with the given seed.
#[no_mangle]
pub extern "C" fn wspan_build_params_default(seed: u64) -> WspanBuildParams {
    WspanBuildParams {
        seed,
        epsilon: 0.0,
        subset: ptr::null(),
        subset_len: 0,
        d: 0,
        heavy: 0,
        ell: 0,
    }
}

unsafe fn to_build_params(p: &WspanBuildParams) -> Result<BuildParams, Failure> {
    let nonzero = |x: usize| (x > 0).then_some(x);
    let subset = slice_arg(p.subset, p.subset_len, "subset")?;
    Ok(BuildParams {
        seed: p.seed,
        epsilon: (p.epsilon > 0.0).then_some(p.epsilon),
        subset: (!subset.is_empty()).then(|| subset.to_vec()),
        d: nonzero(p.d),
        heavy: nonzero(p.heavy),
        ell: nonzero(p.ell),
    })
}

/// Builds a spanner of `g` with the algorithm named `alg` (`6w`,
/// `2w-subset`, `6w-fast`, `6wmax-fast`, `6eps-wmax`, `4w-fast`).
///
/// # Safety
/// `g` must be a live graph handle, `alg` a NUL-terminated string,
/// `params` null or valid, and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wspan_build(
    g: *const WspanGraph,
    alg: *const c_char,
    params: *const WspanBuildParams,
    out: *mut *mut WspanSpanner,
) -> WspanStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let g = handle(g, "graph")?;
        let alg: Algorithm = str_arg(alg, "alg")?.parse()?;
        let params = match params.as_ref() {
            Some(p) => to_build_params(p)?,
            None => BuildParams::default(),
        };
        let (h, report) = build(&g.graph, alg, &params)?;
        *out = Box::into_raw(Box::new(WspanSpanner {
            graph: h.to_graph(),
            report,
        }));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a spanner handle that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wspan_spanner_free(s: *mut WspanSpanner) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of spanner edges, 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live spanner handle.
#[no_mangle]
pub unsafe extern "C" fn wspan_spanner_edge_count(s: *const WspanSpanner) -> usize {
    s.as_ref().map_or(0, |s| s.graph.m())
}

/// Copies the spanner's edges into `buf`. `written` receives the edge
/// count; if `cap` is too small nothing is copied and the call fails with
/// `WSPAN_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `s` must be a live spanner handle, `buf` must have room for `cap`
/// edges (or be null with `cap == 0`), and `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wspan_spanner_edges(
    s: *const WspanSpanner,
    buf: *mut WspanEdge,
    cap: usize,
    written: *mut usize,
) -> WspanStatus {
    guard(|| {
        let s = handle(s, "spanner")?;
        let written = out_arg(written, "written")?;
        let edges = s.graph.edges();
        *written = edges.len();
        if edges.len() > cap {
            return Err(invalid(format!("buffer holds {cap} edges, need {}", edges.len())));
        }
        if edges.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        for (i, e) in edges.iter().enumerate() {
            buf.add(i).write(WspanEdge { u: e.u, v: e.v, w: e.w });
        }
        Ok(())
    })
}

/// Writes the spanner in edge-list format.
///
/// # Safety
/// `s` must be a live spanner handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn wspan_spanner_save(s: *const WspanSpanner, path: *const c_char) -> WspanStatus {
    guard(|| {
        let s = handle(s, "spanner")?;
        save_graph(&s.graph, str_arg(path, "path")?)?;
        Ok(())
    })
}

/// Build report as a newly allocated JSON string, or null for a null
/// handle. Release with [`wspan_string_free`].
///
/// # Safety
/// `s` must be null or a live spanner handle.
#[no_mangle]
pub unsafe extern "C" fn wspan_spanner_report_json(s: *const WspanSpanner) -> *mut c_char {
    s.as_ref().map_or(ptr::null_mut(), |s| {
        CString::new(s.report.to_json()).map_or(ptr::null_mut(), CString::into_raw)
    })
}

/// # Safety
/// `p` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn wspan_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Checks the stretch of spanner `s` of graph `g` under `bound`
/// (`6w`, `2w-subset`, `6wmax`, `6eps-wmax:<eps>`, `4wmax`,
/// `custom:<a>:<b>`). A non-empty `subset` restricts the pairs checked.
/// Violations are reported through `out`, not the status.
///
/// # Safety
/// Handles must be live, `bound` NUL-terminated, `subset` readable for
/// `subset_len` elements (or null with length 0) and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wspan_verify(
    g: *const WspanGraph,
    s: *const WspanSpanner,
    bound: *const c_char,
    subset: *const usize,
    subset_len: usize,
    out: *mut WspanVerifySummary,
) -> WspanStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let g = handle(g, "graph")?;
        let s = handle(s, "spanner")?;
        let bound: Bound = str_arg(bound, "bound")?.parse()?;
        let subset = slice_arg(subset, subset_len, "subset")?;
        let h = embed_spanner(&g.graph, &s.graph)?;
        let pairs = if subset.is_empty() { Pairs::All } else { Pairs::Subset(subset) };
        let r = verify_stretch(&g.graph, &h, bound, pairs, APSP_DEFAULT_CAP)?;
        *out = WspanVerifySummary {
            pairs_checked: r.pairs_checked,
            violations: r.violations.len(),
            tree_violations: r.tree_violations,
            max_excess_ratio: r.max_excess_ratio,
        };
        Ok(())
    })
}
