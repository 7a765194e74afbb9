//! Edge-stream file format: UTF-8 text, header line `n=<count>`, then one
//! update per line; `u v` for an insert, `-` for a no-op, `#` prefix for
//! comments.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::{canonical_edge, EdgeStream, GraphError, Update};

pub fn parse_stream(text: &str, cbar: f64) -> Result<EdgeStream, GraphError> {
    let mut n: Option<u32> = None;
    let mut updates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(GraphError::Parse { line: lineno, msg: "duplicate header".into() });
            }
            n = Some(rest.trim().parse().map_err(|_| GraphError::Parse {
                line: lineno,
                msg: format!("bad vertex count '{rest}'"),
            })?);
            continue;
        }
        let n = n.ok_or_else(|| GraphError::Parse {
            line: lineno,
            msg: "update before n= header".into(),
        })?;
        if line == "-" {
            updates.push(Update::Noop);
            continue;
        }
        let mut parts = line.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("expected 'u v' or '-', got '{line}'"),
                })
            }
        };
        let parse_id = |s: &str| {
            s.parse::<u32>().map_err(|_| GraphError::Parse {
                line: lineno,
                msg: format!("bad vertex id '{s}'"),
            })
        };
        let e = canonical_edge(parse_id(a)?, parse_id(b)?, n)?;
        updates.push(Update::Insert(e));
    }
    let n = n.ok_or(GraphError::Parse { line: 0, msg: "missing n= header".into() })?;
    EdgeStream::new(n, updates, cbar)
}

pub fn read_stream(path: &Path, cbar: f64) -> std::io::Result<Result<EdgeStream, GraphError>> {
    let text = fs::read_to_string(path)?;
    Ok(parse_stream(&text, cbar))
}

pub fn write_stream(stream: &EdgeStream, path: &Path) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    writeln!(out, "n={}", stream.n())?;
    for upd in stream.iter() {
        match upd {
            Update::Insert(e) => writeln!(out, "{} {}", e.u(), e.v())?,
            Update::Noop => writeln!(out, "-")?,
        }
    }
    out.flush()
}
