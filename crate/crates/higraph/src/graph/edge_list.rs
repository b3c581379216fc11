//! Whitespace-separated edge-list ingestion.
//!
//! Format: one `src dst [weight]` per line, `#` starts a comment line,
//! blank lines are skipped, LF or CRLF endings. Missing weights default
//! to 1. Vertex ids are dense and 0-based; the loader compacts nothing,
//! so the vertex count is one past the largest id seen.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::{CsrGraph, Edge, GraphError, VertexId};

pub fn load_edge_list_path<P: AsRef<Path>>(path: P) -> Result<CsrGraph, GraphError> {
    load_edge_list(BufReader::new(File::open(path)?))
}

pub fn load_edge_list<R: BufRead>(reader: R) -> Result<CsrGraph, GraphError> {
    let mut pairs: Vec<(VertexId, Edge)> = Vec::new();
    let mut max_id: i64 = -1;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut fields = text.split_whitespace();
        let src = parse_id(fields.next(), line_no, "missing source vertex")?;
        let dst = parse_id(fields.next(), line_no, "missing destination vertex")?;
        let weight = match fields.next() {
            None => 1,
            Some(w) => w.parse::<u32>().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("invalid weight '{w}'"),
            })?,
        };
        if let Some(extra) = fields.next() {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("unexpected trailing field '{extra}'"),
            });
        }
        max_id = max_id.max(src as i64).max(dst as i64);
        pairs.push((src, Edge { dst, weight }));
    }

    let num_vertices = (max_id + 1) as usize;
    Ok(CsrGraph::from_pairs(num_vertices, &pairs))
}

fn parse_id(field: Option<&str>, line: usize, missing: &str) -> Result<VertexId, GraphError> {
    let field = field.ok_or_else(|| GraphError::Parse {
        line,
        msg: missing.to_string(),
    })?;
    let value: i64 = field.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid vertex id '{field}'"),
    })?;
    if value < 0 {
        return Err(GraphError::NegativeId { line, value });
    }
    if value > u32::MAX as i64 {
        return Err(GraphError::Parse {
            line,
            msg: format!("vertex id {value} exceeds the 32-bit id space"),
        });
    }
    Ok(value as VertexId)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn load(text: &str) -> Result<CsrGraph, GraphError> {
        load_edge_list(Cursor::new(text))
    }

    #[test]
    fn unweighted_triangle() {
        let g = load("0 1\n0 2\n1 2").unwrap();
        assert_eq!(g.offsets(), &[0, 2, 3, 3]);
        assert_eq!(
            g.edges(),
            &[
                Edge { dst: 1, weight: 1 },
                Edge { dst: 2, weight: 1 },
                Edge { dst: 2, weight: 1 },
            ]
        );
    }

    #[test]
    fn empty_input() {
        let g = load("").unwrap();
        assert_eq!(g.num_vertices(), 0);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn weighted_and_unsorted() {
        // Hand CSR construction: vertex 0 -> (1,5); vertex 1 no edges;
        // vertex 2 -> (0,7).
        let g = load("0 1 5\n2 0 7").unwrap();
        assert_eq!(g.offsets(), &[0, 1, 1, 2]);
        assert_eq!(
            g.edges(),
            &[Edge { dst: 1, weight: 5 }, Edge { dst: 0, weight: 7 }]
        );
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let g = load("# header\r\n\r\n0 1\r\n# tail\n1 0\n").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 2);
    }

    #[test]
    fn parse_error_carries_line_number() {
        let err = load("0 1\nx 2\n").unwrap_err();
        match err {
            GraphError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn negative_id_is_a_range_error() {
        let err = load("0 1\n-3 2\n").unwrap_err();
        match err {
            GraphError::NegativeId { line, value } => {
                assert_eq!(line, 2);
                assert_eq!(value, -3);
            }
            other => panic!("expected negative id error, got {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_rejected() {
        assert!(load("0 1 2 3\n").is_err());
    }
}
