//! graph6 interchange format (short form, order < 63).
//!
//! The encoding is the usual one: first byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order, packed into 6-bit
//! groups (most significant bit first) each offset by 63.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Long-form or out-of-range order byte.
    UnsupportedOrder,
    /// Wrong length or a byte outside `63..=126`.
    Malformed(String),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::UnsupportedOrder => {
                write!(f, "only short-form graph6 (n < 63) is supported")
            }
            Graph6Error::Malformed(why) => write!(f, "malformed graph6: {why}"),
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Encodes a graph as a short-form graph6 string.
pub fn write_graph6(g: &Graph) -> String {
    debug_assert!(g.n() <= MAX_VERTICES);
    let n = g.n();
    let mut out = vec![n as u8 + 63];
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a short-form graph6 string. Leading `>>graph6<<` headers are
/// accepted and ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    if bytes[0] < 63 {
        return Err(Graph6Error::Malformed(format!(
            "order byte {} below 63",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::Malformed("order 0".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Graph6Error::Malformed(format!(
            "expected {expect} bytes for n={n}, got {}",
            bytes.len()
        )));
    }
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Malformed(format!("byte {b} out of range")));
        }
    }
    let mut pairs = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            idx += 1;
        }
    }
    // trailing pad bits must be zero for a canonical encoding; tolerate them
    // on input, emit them zeroed on output.
    Graph::from_edge_list(n, &pairs)
        .map_err(|e| Graph6Error::Malformed(format!("invalid graph: {e}")))
}

impl From<GraphError> for Graph6Error {
    fn from(e: GraphError) -> Self {
        Graph6Error::Malformed(e.to_string())
    }
}
