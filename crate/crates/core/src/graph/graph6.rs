//! graph6 text encoding.
//!
//! The vertex count is written as one byte `n + 63` for `n <= 62`, or as
//! `~` followed by three 6-bit bytes for larger graphs. The upper triangle of
//! the adjacency matrix follows column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed six bits per byte, big-endian, padded with zeros.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let skip = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[skip..];
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: offset + skip,
        reason: reason.to_string(),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let (n, body) = match bytes {
        [] => return Err(err(0, "empty input")),
        [b'~', b'~', ..] => return Err(err(1, "vertex counts above 258047 are not supported")),
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        [first, ..] => ((first - 63) as usize, &bytes[1..]),
    };
    let body_offset = bytes.len() - body.len();
    if n > super::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            bound: super::MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        let at = body_offset + body.len().min(need);
        return Err(err(
            at,
            &format!("expected {need} adjacency bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(body_offset + need - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}
