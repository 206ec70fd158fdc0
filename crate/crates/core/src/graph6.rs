//! graph6 encoding for orders up to 62 (single-byte order prefix).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6InvalidChar(b as char));
    }
    let (&first, payload) = bytes.split_first().ok_or(Error::Graph6Truncated { expected: 1, found: 0 })?;
    if first == 126 {
        return Err(Error::Graph6UnsupportedOrder);
    }
    let n = (first - OFFSET) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Error::Graph6Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Error::Graph6Trailing);
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
