//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + BIAS);
        out.push(((n >> 6) & 63) as u8 + BIAS);
        out.push((n & 63) as u8 + BIAS);
    }
}

/// Encodes `g` without a trailing newline.
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.nbr_mask(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
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
    out
}

pub fn encode_string(g: &Graph) -> alloc::string::String {
    // graph6 output is always printable ASCII
    alloc::string::String::from_utf8(encode(g)).unwrap()
}

/// Decodes one graph6 record. A single trailing `\n` (or `\r\n`) is accepted,
/// as is the optional `>>graph6<<` header.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let mut s = bytes;
    if let Some(rest) = s.strip_suffix(b"\n") {
        s = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    s = s.strip_prefix(b">>graph6<<").unwrap_or(s);
    if s.is_empty() {
        return Err(Error::Graph6("empty record"));
    }
    if s.iter().any(|&c| !(BIAS..=126).contains(&c)) {
        return Err(Error::Graph6("byte outside 63..=126"));
    }
    let (n, body) = if s[0] != 126 {
        ((s[0] - BIAS) as usize, &s[1..])
    } else if s.len() >= 2 && s[1] == 126 {
        return Err(Error::Graph6("8-byte size header not supported"));
    } else {
        if s.len() < 4 {
            return Err(Error::Graph6("truncated size header"));
        }
        let n = s[1..4].iter().fold(0usize, |acc, &c| acc << 6 | (c - BIAS) as usize);
        (n, &s[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6("body length does not match order"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                if g.degree(i) == 3 || g.degree(j) == 3 {
                    return Err(Error::NotSubcubic);
                }
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k4_and_singleton() {
        assert_eq!(encode(&named::k4()), b"C~");
        assert_eq!(encode(&Graph::empty(1)), b"@");
        assert_eq!(encode(&Graph::empty(0)), b"?");
    }

    #[test]
    fn petersen_round_trip() {
        let p = named::petersen();
        let bytes = encode(&p);
        assert_eq!(bytes.len(), 1 + 45usize.div_ceil(6));
        assert_eq!(decode(&bytes).unwrap().edges(), p.edges());
    }

    #[test]
    fn long_header_for_large_orders() {
        let g = Graph::from_edges(70, &[(0, 69), (3, 4)]);
        let bytes = encode(&g);
        assert_eq!(&bytes[..4], &[126, 63, 64, 70 - 64 + 63]);
        assert_eq!(decode(&bytes).unwrap().edges(), g.edges());
    }

    #[test]
    fn rejects_malformed_records() {
        assert!(matches!(decode(b""), Err(Error::Graph6(_))));
        assert!(matches!(decode(b"C~~"), Err(Error::Graph6(_))));
        assert!(matches!(decode(b"C"), Err(Error::Graph6(_))));
        // n = 3 has 3 bits; the low 3 padding bits must be zero
        assert!(matches!(decode(b"B@"), Err(Error::Graph6(_))));
        assert!(decode(b"Bw").is_ok());
        assert!(matches!(decode(b"C\x20"), Err(Error::Graph6(_))));
        // K5 has degree 4
        assert_eq!(decode(b"D~{"), Err(Error::NotSubcubic));
    }

    #[test]
    fn accepts_trailing_newline_and_header() {
        assert_eq!(decode(b"C~\n").unwrap().size(), 6);
        assert_eq!(decode(b">>graph6<<C~\r\n").unwrap().size(), 6);
    }
}
