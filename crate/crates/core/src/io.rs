//! Reading and writing hypergraphs.
//!
//! The `.lhg` text format: a header line `n k`, then one edge per line as
//! space-separated ascending vertices, lines sorted. `#` starts a comment and
//! blank lines are ignored. JSON uses `{"n": .., "k": .., "edges": [[..], ..]}`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError, Vertex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Lhg,
    Json,
}

impl Format {
    /// `.json` files are JSON; everything else is `.lhg`.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Lhg,
        }
    }
}

pub fn to_lhg(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.k());
    for e in h.edges() {
        let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).expect("writing to a String");
    }
    out
}

pub fn parse_lhg(text: &str) -> Result<Hypergraph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| IoError::Parse {
                    line: i + 1,
                    message: format!("not a number: {t:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        match header {
            None => {
                let [n, k] = nums[..] else {
                    return Err(IoError::Parse {
                        line: i + 1,
                        message: "header must be \"n k\"".into(),
                    });
                };
                header = Some((n as usize, k as usize));
            }
            Some(_) => {
                let edge = nums
                    .iter()
                    .map(|&v| {
                        Vertex::try_from(v).map_err(|_| IoError::Parse {
                            line: i + 1,
                            message: format!("vertex {v} too large"),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if edge.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(IoError::Parse {
                        line: i + 1,
                        message: "vertices must be strictly ascending".into(),
                    });
                }
                if edges.last().is_some_and(|last| *last >= edge) {
                    return Err(IoError::Parse {
                        line: i + 1,
                        message: "edges must be sorted and distinct".into(),
                    });
                }
                edges.push(edge);
            }
        }
    }
    let (n, k) = header.ok_or(IoError::Parse {
        line: 0,
        message: "missing \"n k\" header".into(),
    })?;
    Ok(Hypergraph::new(n, k, edges)?)
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraphs serialize")
}

pub fn parse_json(text: &str) -> Result<Hypergraph, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn render(h: &Hypergraph, format: Format) -> String {
    match format {
        Format::Lhg => to_lhg(h),
        Format::Json => to_json(h) + "\n",
    }
}

/// Read a file, choosing the format from its extension.
pub fn read(path: &Path) -> Result<Hypergraph, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })?;
    match Format::from_path(path) {
        Format::Lhg => parse_lhg(&text),
        Format::Json => parse_json(&text),
    }
}

/// Write a file, choosing the format from its extension.
pub fn write(path: &Path, h: &Hypergraph) -> Result<(), IoError> {
    fs::write(path, render(h, Format::from_path(path))).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lhg_round_trip() {
        let h = Hypergraph::new(7, 3, [[1, 2, 3], [3, 4, 5], [1, 5, 6]]).unwrap();
        let text = to_lhg(&h);
        assert_eq!(text, "7 3\n1 2 3\n1 5 6\n3 4 5\n");
        assert_eq!(parse_lhg(&text).unwrap(), h);
    }

    #[test]
    fn comments_and_blank_lines() {
        let h = parse_lhg("# pasch\n6 3\n\n1 2 3 # first\n1 5 6\n2 4 6\n3 4 5\n").unwrap();
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_lhg(""), Err(IoError::Parse { line: 0, .. })));
        assert!(matches!(parse_lhg("3\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_lhg("4 3\n2 1 3\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_lhg("5 3\n2 3 4\n1 2 3\n"),
            Err(IoError::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_lhg("3 3\n1 2 x\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(parse_lhg("3 3\n1 2 4\n"), Err(IoError::Hypergraph(_))));
    }

    #[test]
    fn json_round_trip() {
        let h = Hypergraph::new(4, 2, [[1, 2], [3, 4]]).unwrap();
        let text = to_json(&h);
        assert_eq!(text, r#"{"n":4,"k":2,"edges":[[1,2],[3,4]]}"#);
        assert_eq!(parse_json(&text).unwrap(), h);
        assert!(parse_json(r#"{"n":2,"k":2,"edges":[[1,3]]}"#).is_err());
    }
}
