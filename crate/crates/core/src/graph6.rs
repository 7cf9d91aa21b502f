//! graph6 codec.
//!
//! Format: a size header `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte,
//! most significant bit first, zero padded, each byte biased by 63.
//!
//! `N(n)` is one byte for `n <= 62`, `126` plus three bytes for `n <= 258047`, and
//! `126 126` plus six bytes above that. Only canonical (shortest) headers are accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the decoder (exclusive).
pub const MAX_GRAPH6_ORDER: usize = 1 << 18;

/// Optional header that may open a graph6 file.
pub const FILE_HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const LONG: u8 = 126;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    MalformedHeader(&'static str),
    NonAscii(u8),
    InvalidByte(u8),
    TooLarge(usize),
    Truncated { expected_len: usize },
    TrailingGarbage,
    NonZeroPadding,
}

/// graph6 decoding error, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty input"),
            Self::MalformedHeader(why) => write!(f, "malformed header: {why}"),
            Self::NonAscii(b) => write!(f, "non-ASCII byte 0x{b:02x}"),
            Self::InvalidByte(b) => write!(f, "byte 0x{b:02x} outside the graph6 range 63..=126"),
            Self::TooLarge(n) => write!(
                f,
                "order {n} exceeds the supported maximum {}",
                MAX_GRAPH6_ORDER - 1
            ),
            Self::Truncated { expected_len } => {
                write!(
                    f,
                    "truncated payload, expected {expected_len} bytes in total"
                )
            }
            Self::TrailingGarbage => write!(f, "trailing bytes after the payload"),
            Self::NonZeroPadding => write!(f, "non-zero padding bits in the last byte"),
        }
    }
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 error at byte {}: {}", self.offset, self.kind)
    }
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let b = bytes[offset];
    if b > 127 {
        return Err(err(offset, Graph6ErrorKind::NonAscii(b)));
    }
    if !(BIAS..=LONG).contains(&b) {
        return Err(err(offset, Graph6ErrorKind::InvalidByte(b)));
    }
    Ok(b - BIAS)
}

fn read_big_endian(bytes: &[u8], start: usize, count: usize) -> Result<usize, Graph6Error> {
    if bytes.len() < start + count {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::MalformedHeader("header cut short"),
        ));
    }
    (start..start + count).try_fold(0usize, |acc, i| {
        Ok((acc << 6) | usize::from(sextet(bytes, i)?))
    })
}

/// Returns `(n, header_len)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let Some(&first) = bytes.first() else {
        return Err(err(0, Graph6ErrorKind::Empty));
    };
    if first == b':' {
        return Err(err(
            0,
            Graph6ErrorKind::MalformedHeader("sparse6 is not supported"),
        ));
    }
    if first == b'&' {
        return Err(err(
            0,
            Graph6ErrorKind::MalformedHeader("digraph6 is not supported"),
        ));
    }
    let s = sextet(bytes, 0)?;
    if first != LONG {
        return Ok((usize::from(s), 1));
    }
    if bytes.get(1) == Some(&LONG) {
        let n = read_big_endian(bytes, 2, 6)?;
        if n <= 258_047 {
            return Err(err(
                0,
                Graph6ErrorKind::MalformedHeader("non-canonical 8-byte size"),
            ));
        }
        return Ok((n, 8));
    }
    let n = read_big_endian(bytes, 1, 3)?;
    if n <= 62 {
        return Err(err(
            0,
            Graph6ErrorKind::MalformedHeader("non-canonical 4-byte size"),
        ));
    }
    Ok((n, 4))
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    }
}

/// Decodes one graph6 line (without line terminator) into a simple graph.
pub fn graph_from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (n, header_len) = decode_order(bytes)?;
    if n == 0 {
        return Err(err(
            0,
            Graph6ErrorKind::MalformedHeader("graph has no vertices"),
        ));
    }
    if n >= MAX_GRAPH6_ORDER {
        return Err(err(0, Graph6ErrorKind::TooLarge(n)));
    }
    let bits = n * (n - 1) / 2;
    let payload_len = bits.div_ceil(6);
    let expected_len = header_len + payload_len;
    // validate every byte before allocating n^2 flags
    for offset in header_len..bytes.len().min(expected_len) {
        sextet(bytes, offset)?;
    }
    if bytes.len() < expected_len {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated { expected_len },
        ));
    }
    if bytes.len() > expected_len {
        return Err(err(expected_len, Graph6ErrorKind::TrailingGarbage));
    }
    let payload = &bytes[header_len..];
    let bit = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let pad = payload_len * 6 - bits;
    if pad > 0 && (payload[payload_len - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(err(expected_len - 1, Graph6ErrorKind::NonZeroPadding));
    }

    let mut g = Graph::empty(n).expect("n >= 1");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.set(u, v, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a simple graph in canonical graph6.
pub fn graph_to_graph6(g: &Graph) -> Result<String> {
    if g.has_loops() {
        return Err(Error::LoopsPresent);
    }
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Strips the line terminator and, on the first line of a file, the optional
/// `>>graph6<<` header. Returns `None` for blank lines.
pub fn clean_line(line: &str, first: bool) -> Option<&str> {
    let mut s = line.trim_end_matches(['\n', '\r']);
    if first {
        s = s.strip_prefix(FILE_HEADER).unwrap_or(s);
    }
    (!s.trim().is_empty()).then_some(s)
}
