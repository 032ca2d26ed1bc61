//! graph6 text encoding.
//!
//! The order byte is `n + 63` for `n <= 62` and `~` followed by three 6-bit
//! groups for larger orders. The upper triangle is then emitted column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), zero padded to a multiple
//! of six bits, each group offset by 63.

use super::graph::Graph;
use crate::error::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
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

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated order field"));
        }
        if bytes[1] == 126 {
            return Err(bad("orders above 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(bad("non-canonical long order field"));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(bad("order 0 graphs are not representable"));
    }
    if n > super::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: super::graph::MAX_ORDER,
        });
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    Graph::from_rows(rows)
}
