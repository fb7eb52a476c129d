// SPDX-License-Identifier: Apache-2.0

//! graph6 encoding of simple undirected graphs.
//!
//! The header encodes `n` in one byte (`n <= 62`), in `~` plus three bytes
//! (`n <= 258047`) or in `~~` plus six bytes. The body packs the upper
//! triangle column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, into
//! big-endian groups of six bits, each offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated size header")]
    TruncatedHeader { offset: usize },
    #[error("byte {offset}: expected {expected} bytes of adjacency data, found {found}")]
    TruncatedBody { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: {extra} unexpected trailing bytes")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("graph order {0} exceeds the graph6 limit")]
    TooLarge(usize),
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    // offsets are reported relative to the trimmed text
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { offset: base + i, byte: b });
        }
    }
    let (n, header_len) = decode_order(body, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            offset: base + body.len(),
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: base + header_len + expected,
            extra: data.len() - expected,
        });
    }

    let mut adjacency = vec![Vec::new(); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
            k += 1;
        }
    }
    for row in &mut adjacency {
        row.sort_unstable();
    }
    Ok(Graph::from_adjacency_unchecked(adjacency))
}

fn decode_order(body: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let six = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if body[0] != 126 {
        return Ok(((body[0] - 63) as usize, 1));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(Graph6Error::TruncatedHeader { offset: base + body.len() });
        }
        return Ok((six(&body[2..8]), 8));
    }
    if body.len() < 4 {
        return Err(Graph6Error::TruncatedHeader { offset: base + body.len() });
    }
    Ok((six(&body[1..4]), 4))
}

/// Encodes a graph as graph6 without the optional `>>graph6<<` header.
pub fn to_graph6(g: &Graph) -> String {
    try_to_graph6(g).expect("graph order within graph6 limits")
}

pub fn try_to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n) / 12);
    let push6 = |out: &mut Vec<u8>, value: usize, groups: u32| {
        for s in (0..groups).rev() {
            out.push(((value >> (6 * s)) & 0x3f) as u8 + 63);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push6(&mut out, n, 3);
    } else if n <= LONG_MAX {
        out.extend([126, 126]);
        push6(&mut out, n, 6);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
