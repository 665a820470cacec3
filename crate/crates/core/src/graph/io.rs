//! Edge-list text format: a header line `n m`, then exactly `m` lines
//! `u v w` with 0-based ids and a positive decimal weight. Lines whose
//! first non-blank character is `#` are comments; blank lines are skipped.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{Graph, GraphBuilder};
use crate::{Error, Result};

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_graph(BufReader::new(file), &path.display().to_string())
}

/// Parses the edge-list format from any reader. `source` names the input
/// in error messages.
pub fn parse_graph(reader: impl BufRead, source: &str) -> Result<Graph> {
    let err = |line: usize, reason: String| Error::Parse {
        path: source.to_string(),
        line,
        reason,
    };

    let mut builder: Option<(GraphBuilder, usize)> = None;
    let mut last_line = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.map_err(|e| Error::io(source, e))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        match builder.as_mut() {
            None => {
                let [n, m] = fields[..] else {
                    return Err(err(lineno, format!("expected header `n m`, got `{text}`")));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex count `{n}`")))?;
                let m: usize = m
                    .parse()
                    .map_err(|_| err(lineno, format!("bad edge count `{m}`")))?;
                builder = Some((GraphBuilder::with_capacity(n, m), m));
            }
            Some((b, m)) => {
                if b.edges.len() == *m {
                    return Err(err(lineno, format!("more than the declared {m} edges")));
                }
                let [u, v, w] = fields[..] else {
                    return Err(err(lineno, format!("expected `u v w`, got `{text}`")));
                };
                let u: usize = u
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex id `{u}`")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex id `{v}`")))?;
                let w: f64 = w
                    .parse()
                    .map_err(|_| err(lineno, format!("bad weight `{w}`")))?;
                b.add_edge(u, v, w)
                    .map_err(|r| err(lineno, format!("{r}: ({u}, {v}, {w})")))?;
            }
        }
    }

    match builder {
        None => Err(err(last_line.max(1), "missing header `n m`".into())),
        Some((b, m)) if b.edges.len() != m => Err(err(
            last_line,
            format!("declared {m} edges but found {}", b.edges.len()),
        )),
        Some((b, _)) => Ok(b.build()),
    }
}

/// Writes `g` in edge-list format, edges in id order. Weights use the
/// shortest decimal form that parses back to the same `f64`.
pub fn write_graph(g: &Graph, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.w)?;
    }
    out.flush()
}

pub fn save_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_graph(g, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}
