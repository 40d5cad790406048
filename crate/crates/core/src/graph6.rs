//! graph6 encoding: a length prefix N(n) followed by the upper triangle of the
//! adjacency matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
//! packed six bits per byte, each byte offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(err(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }

    let (n, data_at) = if body[0] != 126 {
        (usize::from(body[0] - 63), 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(err(start + body.len(), "truncated 8-byte length prefix"));
        }
        let n = body[2..8].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
        (n as usize, 8)
    } else {
        if body.len() < 4 {
            return Err(err(start + body.len(), "truncated 4-byte length prefix"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        if n < 63 {
            return Err(err(start + 1, format!("long length prefix used for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity { requested: n });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &body[data_at..];
    if data.len() != expected {
        let at = start + data_at + data.len().min(expected);
        return Err(err(
            at,
            format!("expected {expected} data bytes for n = {n}, found {}", data.len()),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(start + data_at + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Encodes `g` without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes every non-blank line of `text`; header lines are skipped.
pub fn parse_graph6_many(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && l.trim() != HEADER)
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&g), "@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn star_code_decoded_by_hand() {
        // '?' = 000000, '{' = 60 = 111100: bits 7..10 are x(0,4), x(1,4), x(2,4), x(3,4)
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn c5_code_decoded_by_hand() {
        // 'U' = 010110, 'W' = 011000
        let g = parse_graph6("DUW").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(write_graph6(&g), "DUW");
        assert_eq!(write_graph6(&Graph::cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn header_is_skipped() {
        assert_eq!(parse_graph6(">>graph6<<DUW\n").unwrap(), parse_graph6("DUW").unwrap());
        let many = parse_graph6_many(">>graph6<<\n@\n\nDUW\n").unwrap();
        assert_eq!(many.len(), 2);
    }

    #[test]
    fn long_length_prefix() {
        let g = Graph::cycle(64).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63 + 0, 63 + 1, 63 + 0]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(parse_graph6("D?"), Err(err(2, "expected 2 data bytes for n = 5, found 1")));
        assert!(matches!(parse_graph6("D? {"), Err(Error::Graph6 { offset: 2, .. })));
        // n = 3 has 3 bits; the last 3 bits of the data byte are padding
        assert!(matches!(parse_graph6("BA"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(parse_graph6("Bw").is_ok());
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("~?A?"), Err(Error::Capacity { requested: 128 })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }
}
