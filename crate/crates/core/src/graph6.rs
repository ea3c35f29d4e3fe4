//! graph6 encoding and decoding.
//!
//! Bytes are offset by 63 and carry 6 bits each, big-endian. The vertex count
//! takes one byte for `n <= 62`, `~` plus three bytes up to 258047, and `~~`
//! plus six bytes beyond that. The upper triangle of the adjacency matrix
//! follows in column order: `x(0,1) x(0,2) x(1,2) x(0,3) ...`, zero padded to
//! a multiple of six bits.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::CubicGraph;

pub const HEADER: &[u8] = b">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes the vertex count and the edge list of any simple graph.
/// Offsets in errors are relative to the start of `line`.
pub fn decode(line: &[u8]) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut start = 0;
    let mut end = line.len();
    while start < end && line[start].is_ascii_whitespace() {
        start += 1;
    }
    while end > start && line[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    if line[start..end].starts_with(HEADER) {
        start += HEADER.len();
    }
    let body = &line[start..end];
    if body.is_empty() {
        return Err(parse_err(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(start + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }

    let six = |i: usize| (body[i] - 63) as usize;
    let (n, mut pos) = if body[0] != 126 {
        (six(0), 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(parse_err(start + body.len(), "truncated vertex count"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if body.len() < 8 {
            return Err(parse_err(start + body.len(), "truncated vertex count"));
        }
        let n = (2..8).fold(0usize, |acc, i| (acc << 6) | six(i));
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(parse_err(
            start + pos.min(body.len()),
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                body.len() - pos
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = six(pos + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = six(pos - 1);
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(start + pos - 1, "nonzero padding bits"));
        }
    }
    Ok((n, edges))
}

/// Parses one graph6 line into a validated cubic graph.
pub fn parse_graph6(line: &[u8]) -> Result<CubicGraph> {
    let (n, edges) = decode(line)?;
    CubicGraph::from_edges(n, &edges)
}

/// Encodes the graph as a graph6 line without header or newline.
pub fn write_graph6(g: &CubicGraph) -> Vec<u8> {
    encode(g.vertex_count(), g.edges())
}

/// Encodes an arbitrary simple graph.
pub fn encode(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u8; bits.div_ceil(6)];
    for &(a, b) in edges {
        let (i, j) = (a.min(b), a.max(b));
        let k = j * (j - 1) / 2 + i;
        adj[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(adj.into_iter().map(|b| b + 63));
    out
}

/// One line of a graph6 file, decoded or not.
#[derive(Debug)]
pub struct Graph6Record {
    /// Zero-based position among the non-blank, non-header lines.
    pub index: usize,
    /// One-based line number in the file.
    pub line_number: usize,
    pub text: String,
    pub graph: Result<CubicGraph>,
}

/// Reads a newline-delimited graph6 stream. Blank lines are skipped and a
/// `>>graph6<<` prefix on the first line is tolerated. Per-line decode
/// failures are returned in the record, not raised.
pub fn read_graph6<R: BufRead>(reader: R) -> std::io::Result<Vec<Graph6Record>> {
    let mut out = Vec::new();
    for (no, line) in reader.lines().enumerate() {
        let line = line?;
        let mut text = line.trim();
        if no == 0 {
            if let Some(rest) = text.strip_prefix(">>graph6<<") {
                text = rest.trim();
            }
        }
        if text.is_empty() {
            continue;
        }
        out.push(Graph6Record {
            index: out.len(),
            line_number: no + 1,
            text: text.to_string(),
            graph: parse_graph6(text.as_bytes()),
        });
    }
    Ok(out)
}

/// Reads a graph6 file, keeping only the graphs that decode.
pub fn read_graph6_file(path: impl AsRef<std::path::Path>) -> std::io::Result<Vec<CubicGraph>> {
    let f = std::fs::File::open(path)?;
    Ok(read_graph6(std::io::BufReader::new(f))?
        .into_iter()
        .filter_map(|r| r.graph.ok())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let g = parse_graph6(b"C~").unwrap();
        assert_eq!(g, CubicGraph::complete_k4());
        assert_eq!(write_graph6(&g), b"C~");
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6(b"  >>graph6<<C~\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn degree_violation_names_vertex() {
        // '}' = 125 clears the last bit, x(2,3)
        assert!(matches!(
            parse_graph6(b"C}"),
            Err(Error::NotCubic { vertex: 2, degree: 2 })
        ));
    }

    #[test]
    fn malformed_offsets() {
        assert!(matches!(parse_graph6(b"C~~"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6(b"C\x01"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6(b""), Err(Error::Parse { .. })));
        // n = 5 -> 10 bits -> 2 bytes, the last two pad bits must be zero
        assert!(matches!(decode(b"D??"), Ok((5, _))));
        assert!(matches!(decode(b"D?@"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn large_vertex_counts_round_trip() {
        for n in [62usize, 63, 70, 300] {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let enc = encode(n, &edges);
            let (m, mut dec) = decode(&enc).unwrap();
            assert_eq!(m, n);
            let mut want: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            want.sort_unstable();
            dec.sort_unstable();
            assert_eq!(dec, want);
        }
    }
}
