//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn encode_order(n: usize, out: &mut String) {
    if n <= SHORT_MAX {
        out.push((BIAS + n as u8) as char);
    } else {
        assert!(n <= MEDIUM_MAX, "graph6 order {n} not supported");
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((BIAS + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((BIAS + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((BIAS + (acc << (6 - filled))) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (BIAS..=126).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside the printable range")))
    }
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty string".into())),
        [b'~', b'~', ..] => return Err(Error::Graph6("orders above 258047 are not supported".into())),
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)? as usize;
            }
            if n <= SHORT_MAX {
                return Err(Error::Graph6(format!("order {n} must use the one-byte header")));
            }
            (n, &rest[3..])
        }
        [h, rest @ ..] => (sextet(*h)? as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Graph6(format!(
            "order {n} needs {want} data bytes, found {}",
            body.len()
        )));
    }
    let data: Vec<u8> = body.iter().map(|&b| sextet(b)).collect::<Result<_>>()?;
    let pad = want * 6 - bits;
    if let Some(&last) = data.last() {
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Decodes one graph per non-empty line.
pub fn graph6_decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(graph6_decode)
        .collect()
}
