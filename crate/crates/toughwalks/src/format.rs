//! Graph text formats: a plain edge list and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with distinct
//! endpoints in `0..n`. Graph6: printable ASCII (bytes 63..=126), a size
//! prefix followed by the upper triangle of the adjacency matrix packed
//! column by column into 6-bit groups. The emitter and parser round-trip
//! bit-exactly; golden values were cross-checked against independent
//! decoders before being frozen into the tests.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("graph6: {0}")]
    BadGraph6(String),
    #[error("graph6: graph too large to decode (n = {0})")]
    TooLarge(u64),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty input; expected header line 'n m'"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| syntax(1, "expected header line 'n m'"))?
        .parse()
        .map_err(|_| syntax(1, "vertex count is not a number"))?;
    let m: usize = parts
        .next()
        .ok_or_else(|| syntax(1, "header is missing the edge count"))?
        .parse()
        .map_err(|_| syntax(1, "edge count is not a number"))?;
    if parts.next().is_some() {
        return Err(syntax(1, "trailing tokens after 'n m'"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut parsed = 0;
    for (idx, raw) in lines {
        let line_no = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if parsed == m {
            return Err(syntax(line_no, format!("more than {m} edge lines")));
        }
        let mut parts = raw.split_whitespace();
        let u: usize = parts
            .next()
            .unwrap()
            .parse()
            .map_err(|_| syntax(line_no, "endpoint is not a number"))?;
        let v: usize = parts
            .next()
            .ok_or_else(|| syntax(line_no, "expected two endpoints"))?
            .parse()
            .map_err(|_| syntax(line_no, "endpoint is not a number"))?;
        if parts.next().is_some() {
            return Err(syntax(line_no, "trailing tokens after edge"));
        }
        edges.push((line_no, u, v));
        parsed += 1;
    }
    if parsed != m {
        return Err(syntax(
            text.lines().count(),
            format!("expected {m} edges, found {parsed}"),
        ));
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut g_edges = Vec::with_capacity(m);
    for &(line, u, v) in &edges {
        // validate eagerly so errors carry line numbers
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if let Some(&vertex) = [u, v].iter().find(|&&w| w >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        g_edges.push((u, v));
    }
    match Graph::from_edges(n, g_edges) {
        Ok(g) => Ok(g),
        Err(GraphError::SelfLoop(_))
        | Err(GraphError::DuplicateEdge(..))
        | Err(GraphError::VertexOutOfRange { .. }) => {
            unreachable!("edges validated line by line")
        }
    }
}

/// Canonical edge-list text: header then sorted edges.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_N: u64 = 258_047; // largest n of the 3-byte size form

/// Decodes a graph6 string (optionally prefixed with `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::BadGraph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadGraph6(format!(
                "byte 0x{b:02x} outside the printable range 63..=126"
            )));
        }
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte size form encodes up to 2^36 vertices; decode the value
            // only to report it
            if bytes.len() < 8 {
                return Err(ParseError::BadGraph6("truncated size prefix".into()));
            }
            let mut n: u64 = 0;
            for &b in &bytes[2..8] {
                n = n << 6 | (b - 63) as u64;
            }
            return Err(ParseError::TooLarge(n));
        }
        if bytes.len() < 4 {
            return Err(ParseError::BadGraph6("truncated size prefix".into()));
        }
        let n =
            ((bytes[1] - 63) as u64) << 12 | ((bytes[2] - 63) as u64) << 6 | (bytes[3] - 63) as u64;
        (n, 4)
    } else {
        ((bytes[0] - 63) as u64, 1)
    };
    if n > MAX_GRAPH6_N {
        return Err(ParseError::TooLarge(n));
    }
    let n = n as usize;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let body = &bytes[pos..];
    if body.len() != bits_needed.div_ceil(6) {
        return Err(ParseError::BadGraph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits_needed.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit_index / 6];
            let bit = (byte - 63) >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == bits_needed {
                break 'outer;
            }
        }
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::BadGraph6(e.to_string()))
}

/// Encodes a graph as graph6 (no header).
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n as u64 > MAX_GRAPH6_N {
        return Err(ParseError::TooLarge(n as u64));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// A stable 64-bit FNV-1a digest of the canonical edge-list text, used to
/// tie witness reports back to their input graph.
pub fn graph_digest(g: &Graph) -> String {
    let text = emit_edge_list(g);
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in text.bytes() {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a64:{hash:016x}")
}
