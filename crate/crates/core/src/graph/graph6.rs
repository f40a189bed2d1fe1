//! graph6 encoding: size header then the upper triangle in column-major
//! order (`x(0,1), x(0,2), x(1,2), x(0,3), …`), six bits per printable
//! byte offset by 63, big-endian, zero padded.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        offset,
        reason: reason.into(),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
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
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + i, format!("byte {b} outside 63..=126")));
        }
    }
    let sextet = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| usize::from(b - 63))
            .ok_or_else(|| malformed(base + i, "truncated size header"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(malformed(base, "empty input")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | sextet(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | sextet(i)?;
            }
            (n, 4)
        }
        Some(&b) => (usize::from(b - 63), 1),
    };
    if n == 0 {
        return Err(malformed(base, "graph has no vertices"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != expected {
        return Err(malformed(
            base + pos + body.len().min(expected),
            format!("expected {expected} edge bytes, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += expected - 1;
            return Err(malformed(base + pos, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}
