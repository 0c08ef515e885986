//! Graph file I/O: graph6, DIMACS and plain edge lists.
//!
//! Parsing is strict: duplicate edges and self-loops are rejected rather
//! than repaired, and every parse error carries the byte offset of the
//! offending input.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Supported on-disk graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// McKay's graph6. Short-form headers cover n <= 62; the 3-byte
    /// long form is accepted up to n = 258047.
    Graph6,
    /// `p edge n m` header plus `e u v` lines, 1-based indices.
    Dimacs,
    /// One edge `u v` per line, 0-based. A line with a single index
    /// declares an isolated vertex so round-trips stay exact.
    EdgeList,
}

impl GraphFormat {
    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Dimacs => "dimacs",
            GraphFormat::EdgeList => "edgelist",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" => Ok(GraphFormat::Dimacs),
            "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::input(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Parses a graph from raw bytes in the given format.
pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(bytes),
        GraphFormat::Dimacs => parse_dimacs(bytes),
        GraphFormat::EdgeList => parse_edgelist(bytes),
    }
}

/// Writes a graph in the given format. `parse_graph` of the result is the
/// identity for every format.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Graph6 => write_graph6(g),
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::EdgeList => write_edgelist(g),
    }
}

const G6_HEADER: &[u8] = b">>graph6<<";

fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut pos = 0;
    if bytes.starts_with(G6_HEADER) {
        pos = G6_HEADER.len();
    }
    let data = &bytes[pos..];
    // One graph per input; trailing line terminators are tolerated.
    let end = data
        .iter()
        .position(|b| b.is_ascii_whitespace())
        .unwrap_or(data.len());
    if data[end..].iter().any(|b| !b.is_ascii_whitespace()) {
        let extra = end + data[end..].iter().position(|b| !b.is_ascii_whitespace()).unwrap();
        return Err(Error::parse(pos + extra, "trailing data after graph6 record"));
    }
    let record = &data[..end];
    if record.is_empty() {
        return Err(Error::parse(pos, "empty graph6 record"));
    }

    let sextet = |offset: usize, byte: u8| -> Result<usize> {
        if !(63..=126).contains(&byte) {
            Err(Error::parse(
                offset,
                format!("byte {byte:#04x} outside graph6 range 63..=126"),
            ))
        } else {
            Ok((byte - 63) as usize)
        }
    };

    let (n, mut idx) = if record[0] == 126 {
        if record.len() >= 2 && record[1] == 126 {
            return Err(Error::parse(
                pos + 1,
                "8-byte graph6 vertex counts are not supported",
            ));
        }
        if record.len() < 4 {
            return Err(Error::parse(pos, "truncated long-form graph6 header"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(pos + i, record[i])?;
        }
        (n, 4)
    } else {
        (sextet(pos, record[0])?, 1)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let have = record.len() - idx;
    if have != needed {
        return Err(Error::parse(
            pos + record.len().min(idx + needed),
            format!("graph6 record for n={n} needs {needed} data bytes, found {have}"),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    while bit < bit_count {
        let value = sextet(pos + idx, record[idx])?;
        for shift in (0..6).rev() {
            let b = (value >> shift) & 1;
            if bit < bit_count {
                let (u, v) = pairs.next().expect("pair stream matches bit count");
                if b == 1 {
                    edges.push((u, v));
                }
            } else if b == 1 {
                return Err(Error::parse(pos + idx, "nonzero padding bits in graph6 record"));
            }
            bit += 1;
        }
        idx += 1;
    }
    Graph::from_edges(n, edges)
}

fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    assert!(n <= 258_047, "graph6 long form supports at most 258047 vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out.push(b'\n');
    out
}

fn parse_dimacs(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::parse(e.valid_up_to(), "DIMACS input is not valid UTF-8"))?;
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let line = line.trim_end_matches(['\n', '\r']);
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_offset, "duplicate DIMACS problem line"));
                }
                let kind = fields.next();
                if kind != Some("edge") {
                    return Err(Error::parse(
                        line_offset,
                        format!("expected \"p edge n m\", found {line:?}"),
                    ));
                }
                let n = parse_field(fields.next(), line_offset, "vertex count")?;
                let m = parse_field(fields.next(), line_offset, "edge count")?;
                if fields.next().is_some() {
                    return Err(Error::parse(line_offset, "trailing fields on problem line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header
                    .ok_or_else(|| Error::parse(line_offset, "edge before problem line"))?;
                let u: usize = parse_field(fields.next(), line_offset, "edge endpoint")?;
                let v: usize = parse_field(fields.next(), line_offset, "edge endpoint")?;
                if fields.next().is_some() {
                    return Err(Error::parse(line_offset, "trailing fields on edge line"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(
                        line_offset,
                        format!("edge ({u}, {v}) out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line_offset, format!("self-loop at vertex {u}")));
                }
                if edges.contains(&(u.min(v) - 1, u.max(v) - 1)) {
                    return Err(Error::parse(
                        line_offset,
                        format!("duplicate edge ({u}, {v})"),
                    ));
                }
                edges.push((u.min(v) - 1, u.max(v) - 1));
            }
            Some(other) => {
                return Err(Error::parse(
                    line_offset,
                    format!("unrecognized DIMACS line {other:?}"),
                ));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(offset, "missing DIMACS problem line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            offset,
            format!("problem line promised {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::parse(offset, msg),
        other => other,
    })
}

fn parse_field<T: FromStr>(field: Option<&str>, offset: usize, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::parse(offset, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(offset, format!("malformed {what}")))
}

fn write_dimacs(g: &Graph) -> Vec<u8> {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out.into_bytes()
}

fn parse_edgelist(bytes: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::parse(e.valid_up_to(), "edge list is not valid UTF-8"))?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_seen: Option<usize> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [v] => {
                let v: usize = parse_field(Some(v), line_offset, "vertex index")?;
                max_seen = Some(max_seen.map_or(v, |m: usize| m.max(v)));
            }
            [u, v] => {
                let u: usize = parse_field(Some(u), line_offset, "edge endpoint")?;
                let v: usize = parse_field(Some(v), line_offset, "edge endpoint")?;
                if u == v {
                    return Err(Error::parse(line_offset, format!("self-loop at vertex {u}")));
                }
                max_seen = Some(max_seen.map_or(u.max(v), |m: usize| m.max(u).max(v)));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::parse(
                    line_offset,
                    "edge list lines hold one or two indices",
                ));
            }
        }
    }
    let n = max_seen.map_or(0, |m| m + 1);
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::parse(offset, msg),
        other => other,
    })
}

fn write_edgelist(g: &Graph) -> Vec<u8> {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            out.push_str(&format!("{v}\n"));
        }
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_path_example() {
        let g = parse_graph(b"p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn graph6_k2_example() {
        let g = parse_graph(b"A_", GraphFormat::Graph6).unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn graph6_known_strings() {
        // Hand-decoded anchors: K_3 = "Bw", K_4 = "C~", C_4 = "Cl".
        assert_eq!(parse_graph(b"Bw", GraphFormat::Graph6).unwrap(), Graph::complete(3));
        assert_eq!(parse_graph(b"C~", GraphFormat::Graph6).unwrap(), Graph::complete(4));
        assert_eq!(parse_graph(b"Cl", GraphFormat::Graph6).unwrap(), Graph::cycle(4));
        assert_eq!(write_graph(&Graph::complete(4), GraphFormat::Graph6), b"C~\n");
    }

    #[test]
    fn graph6_optional_header() {
        let g = parse_graph(b">>graph6<<A_\n", GraphFormat::Graph6).unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn edgelist_triangle_example() {
        let g = parse_graph(b"0 1\n1 2\n2 0\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, Graph::cycle(3));
    }

    #[test]
    fn edgelist_isolated_vertices_round_trip() {
        let g = Graph::from_edges(5, [(1, 3)]).unwrap();
        let bytes = write_graph(&g, GraphFormat::EdgeList);
        assert_eq!(parse_graph(&bytes, GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_graph(b"p edge 3 1\ne 1 4\n", GraphFormat::Dimacs).unwrap_err();
        match err {
            Error::Parse { offset, .. } => assert_eq!(offset, 11),
            other => panic!("expected parse error, got {other}"),
        }
        assert!(parse_graph(b"p foo 1 0\n", GraphFormat::Dimacs).is_err());
        // K_4 record truncated to one data byte too few is malformed.
        let err = parse_graph(b"D", GraphFormat::Graph6).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn duplicate_edges_rejected() {
        assert!(parse_graph(b"p edge 2 2\ne 1 2\ne 2 1\n", GraphFormat::Dimacs).is_err());
        assert!(parse_graph(b"0 1\n1 0\n", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn graph6_long_form_round_trip() {
        let g = Graph::from_edges(70, (1..70).map(|v| (0, v))).unwrap();
        let bytes = write_graph(&g, GraphFormat::Graph6);
        assert_eq!(bytes[0], 126);
        assert_eq!(parse_graph(&bytes, GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip_preserves_vertex_order() {
        let g = Graph::from_edges(6, [(0, 2), (2, 4), (4, 0), (5, 1)]).unwrap();
        let bytes = write_graph(&g, GraphFormat::Dimacs);
        assert_eq!(parse_graph(&bytes, GraphFormat::Dimacs).unwrap(), g);
    }
}
