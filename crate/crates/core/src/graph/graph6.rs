//! graph6 encoding (short-header form only, so `n <= 62`; this crate caps at 32).
//!
//! The upper triangle is read column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! packed six bits per byte with the first bit as the most significant one,
//! and every byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if head == b'~' {
        return Err(Error::Graph6("long-form header not supported".into()));
    }
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad header byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Order {
            n,
            max: MAX_VERTICES,
        });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("bad data byte {byte:#04x}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1].wrapping_sub(63);
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}
