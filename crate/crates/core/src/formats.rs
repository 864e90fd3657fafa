//! graph6 and plain edge-list text formats.
//!
//! graph6: a size prefix (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit chunks), then the upper triangle read column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, most
//! significant bit first, each byte offset by 63.

use crate::error::{CliqueError, Result};
use crate::graph::{EdgeRef, Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> CliqueError {
    CliqueError::MalformedGraph6(msg.into())
}

fn chunk(byte: u8, pos: usize) -> Result<u32> {
    if (63..=126).contains(&byte) {
        Ok(u32::from(byte - 63))
    } else {
        Err(malformed(format!(
            "byte {byte:#04x} at position {pos} is outside '?'..'~'"
        )))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(CliqueError::EmptyInput);
    }

    let (n, body_start) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 36-bit size form; always far above the cap
            return Err(CliqueError::TooManyVertices(decode_wide_size(bytes)?));
        }
        if bytes.len() < 4 {
            return Err(malformed("truncated size field"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | chunk(b, i + 1)? as usize;
        }
        if n < 63 {
            return Err(malformed(format!("size {n} must use the one-byte form")));
        }
        (n, 4)
    } else {
        (chunk(bytes[0], 0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(CliqueError::TooManyVertices(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[body_start..];
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let mut data = body
        .iter()
        .enumerate()
        .map(|(i, &b)| chunk(b, body_start + i));
    let mut word = 0u32;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                word = data.next().expect("length checked")?;
            }
            if word >> (5 - bit % 6) & 1 == 1 {
                g.insert(EdgeRef::new(u, v)?);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) && word & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(malformed("nonzero padding bits"));
    }
    if let Some(rest) = data.next() {
        rest?;
    }
    Ok(g)
}

fn decode_wide_size(bytes: &[u8]) -> Result<usize> {
    if bytes.len() < 8 {
        return Err(malformed("truncated size field"));
    }
    let mut n = 0usize;
    for (i, &b) in bytes[2..8].iter().enumerate() {
        n = n << 6 | chunk(b, i + 2)? as usize;
    }
    Ok(n)
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = word << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: first line `n`, then one `u v` pair per line
/// (0-based). Blank lines are skipped; repeated edges are idempotent.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(CliqueError::EmptyInput)?;
    let n: usize = header.parse().map_err(|_| CliqueError::MalformedEdgeList {
        line: first,
        reason: format!("expected vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n)?;
    for (line, l) in lines {
        let bad = |reason: String| CliqueError::MalformedEdgeList { line, reason };
        let ids: Vec<usize> = l
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| bad(format!("non-integer token {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [a, b] = ids[..] else {
            return Err(bad(format!("expected two vertex ids, found {}", ids.len())));
        };
        for x in [a, b] {
            if x >= n {
                return Err(bad(format!("vertex {x} out of range for n = {n}")));
            }
        }
        if a == b {
            return Err(bad(format!("self-loop at vertex {a}")));
        }
        g.insert(EdgeRef::new(a, b)?);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_examples() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.n(), e2.m()), (2, 0));
        assert_eq!(parse_graph6(""), Err(CliqueError::EmptyInput));
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(to_graph6(&Graph::empty(5).unwrap()), "D??");
    }

    #[test]
    fn graph6_header_and_whitespace() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(matches!(
            parse_graph6("??bad"),
            Err(CliqueError::MalformedGraph6(_))
        ));
        // K3 needs exactly one data byte
        assert!(matches!(
            parse_graph6("Bww"),
            Err(CliqueError::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6("B"),
            Err(CliqueError::MalformedGraph6(_))
        ));
        // padding bits of "Bw" are the low three bits
        assert!(matches!(
            parse_graph6("Bx"),
            Err(CliqueError::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6("B\u{1}"),
            Err(CliqueError::MalformedGraph6(_))
        ));
    }

    #[test]
    fn graph6_large_sizes() {
        for n in [62, 63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = to_graph6(&g);
            assert_eq!(s.starts_with('~'), n >= 63);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
        // ~ ? @ @ encodes n = 65
        assert_eq!(parse_graph6("~?@@"), Err(CliqueError::TooManyVertices(65)));
        assert!(matches!(
            parse_graph6("~~??????"),
            Err(CliqueError::TooManyVertices(_)) | Err(CliqueError::MalformedGraph6(_))
        ));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(
            parse_edge_list("3\n0 1\n1 2\n0 2").unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(parse_edge_list("4\n").unwrap(), Graph::empty(4).unwrap());
        assert!(matches!(
            parse_edge_list("2\n0 0"),
            Err(CliqueError::MalformedEdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("2\n0 2").is_err());
        assert!(parse_edge_list("2\n0 x").is_err());
        assert!(parse_edge_list("x\n").is_err());
        assert_eq!(parse_edge_list(""), Err(CliqueError::EmptyInput));
        let dup = parse_edge_list("3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
