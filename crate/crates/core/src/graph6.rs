//! graph6 text encoding (one graph per line).
//!
//! The upper triangle is emitted column by column: (0,1), (0,2), (1,2),
//! (0,3), ... packed six bits per byte with an offset of 63. Short (one
//! byte), medium (`~` + 3 bytes) and long (`~~` + 6 bytes) size prefixes
//! are all understood; padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const MAX_N: usize = (1usize << 36) - 1;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn check_byte(b: u8, offset: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(parse_err(offset, format!("invalid graph6 character 0x{b:02x}")))
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(parse_err(base, "empty graph6 line"));
    }

    let (n, mut pos) = if body[0] != 126 {
        (check_byte(body[0], base)? as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(parse_err(base + body.len(), "truncated 8-byte size field"));
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | check_byte(body[i], base + i)? as usize;
        }
        if n <= 258047 {
            return Err(parse_err(base, "non-canonical long size field"));
        }
        (n, 8)
    } else {
        if body.len() < 4 {
            return Err(parse_err(base + body.len(), "truncated 4-byte size field"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | check_byte(body[i], base + i)? as usize;
        }
        if n <= 62 {
            return Err(parse_err(base, "non-canonical medium size field"));
        }
        (n, 4)
    };
    if n > MAX_N {
        return Err(parse_err(base, "graph too large"));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(parse_err(
            base + body.len(),
            format!("truncated edge data: expected {need} bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(parse_err(base + pos + need, "trailing bytes after edge data"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    let mut chunk = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = check_byte(body[pos], base + pos)?;
                pos += 1;
            }
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if chunk & pad_mask != 0 {
            return Err(parse_err(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            chunk = (chunk << 1) | row.contains(i) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        chunk <<= 6 - k % 6;
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses a multi-line graph6 document. Blank lines are skipped; errors
/// carry the 1-based line number.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<(usize, Graph)>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == HEADER {
            continue;
        }
        match from_graph6(line) {
            Ok(g) => out.push((i + 1, g)),
            Err(e) => return Err((i + 1, e)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let g = from_graph6("D??").unwrap();
        assert_eq!(g, Graph::empty(5));
        let c5 = from_graph6("Dhc").unwrap();
        assert_eq!(c5.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(c5, Graph::cycle(5));
        assert_eq!(from_graph6("@").unwrap(), Graph::complete(1));
        assert_eq!(from_graph6("?").unwrap().n(), 0);

        assert_eq!(to_graph6(&Graph::complete(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(5)), "D??");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
    }

    #[test]
    fn header_and_newline_are_stripped() {
        assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(from_graph6("Dhc\r\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn errors_carry_offsets() {
        match from_graph6("Dh ") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match from_graph6("Dhcc") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        match from_graph6("Dh") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        // "Dhd" sets a padding bit.
        assert!(from_graph6("Dhd").is_err());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("~??").is_err());
    }

    #[test]
    fn medium_size_prefix() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn multi_line_parsing_reports_line_numbers() {
        let doc = ">>graph6<<\nDhc\n\n@\nD?x\n";
        let err = parse_lines(doc).unwrap_err();
        assert_eq!(err.0, 5);
        let ok = parse_lines("Dhc\n@\n").unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok[1].0, 2);
    }
}
