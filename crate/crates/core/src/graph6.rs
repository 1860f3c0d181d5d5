//! graph6 reader and writer.
//!
//! Orders up to 62 use the one-byte size prefix, 63 and 64 the `~`-prefixed
//! three-byte form. The body packs the upper triangle column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) into 6-bit groups offset by 63.

use thiserror::Error;

use crate::bits::bit;
use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("graph6 byte {byte:#04x} at position {pos} is outside the printable range")]
    BadByte { pos: usize, byte: u8 },
    #[error("graph6 order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 body has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { pos, byte });
        }
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte form is only for orders beyond 258047
            if bytes.len() < 8 {
                return Err(Graph6Error::BadHeader);
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            return Err(Graph6Error::TooLarge(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[k / 6] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::from_rows(rows).expect("decoded rows are symmetric"))
}

/// Parses one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_one_byte() {
        let g = Graph::new(1).unwrap();
        assert_eq!(write_graph6(&g), "@");
        assert_eq!(parse_graph6("@").unwrap(), g);
        assert_eq!(write_graph6(&Graph::new(0).unwrap()), "?");
    }

    #[test]
    fn known_strings() {
        // Matches the reference encoder: 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
    }

    #[test]
    fn long_header_orders() {
        for n in [62, 63, 64] {
            let mut g = Graph::new(n).unwrap();
            g.add_edge(0, n - 1);
            g.add_edge(5, 17);
            let s = write_graph6(&g);
            assert_eq!(s.starts_with('~'), n > 62);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn distinct_error_cases() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadHeader));
        assert_eq!(parse_graph6("~??]"), Err(Graph6Error::BadHeader));
        assert_eq!(parse_graph6("~?@@"), Err(Graph6Error::TooLarge(65)));
        assert!(matches!(parse_graph6("D Q"), Err(Graph6Error::BadByte { pos: 1, .. })));
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::Truncated { expected: 2, found: 1 })
        );
        assert_eq!(parse_graph6("D???"), Err(Graph6Error::TrailingBytes(1)));
        // 3 vertices use 3 body bits; the low 3 bits must be zero
        assert_eq!(parse_graph6("BA"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn header_prefix_and_newline_are_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
        let gs = parse_graph6_lines("C~\n\n@\n").unwrap();
        assert_eq!(gs.len(), 2);
    }
}
