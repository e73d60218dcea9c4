//! graph6 interchange.
//!
//! Byte 0 carries `n + 63`; the upper triangle follows in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit groups
//! offset by 63. Orders 63..=258047 use the `~` + 3-byte header.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::OrderTooLarge { n, max: MEDIUM_MAX });
    }

    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("8-byte size header is not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= SMALL_MAX {
                return Err(Error::Graph6(format!("non-minimal size header for n = {n}")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut adj = vec![VertexSet::new(n); n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Parses a graph6 stream: one graph per line, `#` comments and blank lines skipped.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>graph6<<"))
        .map(decode)
        .collect()
}
