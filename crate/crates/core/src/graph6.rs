//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, six bits per byte offset by 63.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn size_prefix(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        out.extend([(n >> 12) as u8 + BIAS, ((n >> 6) & 63) as u8 + BIAS, (n & 63) as u8 + BIAS]);
    } else {
        out.extend([126, 126]);
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + BIAS);
        }
    }
}

/// Encodes `g` as a graph6 record without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    size_prefix(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::InvalidByte { byte: b, offset });
    }
    Ok((b - BIAS) as usize)
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    let (n, body_start) = if bytes[0] != 126 {
        (sextet(bytes, 0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = (sextet(bytes, 1)? << 12) | (sextet(bytes, 2)? << 6) | sextet(bytes, 3)?;
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        (n, 8)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::MalformedHeader);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let word = sextet(body, k / 6).map_err(|e| match e {
                Graph6Error::InvalidByte { byte, offset } => {
                    Graph6Error::InvalidByte { byte, offset: offset + body_start }
                }
                other => other,
            })?;
            if word >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body, expected - 1)?;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_records() {
        // D?{ : n = 5, bits 000000 111100 -> column 4 fully set
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(write_graph6(&k2), "A_");
    }

    #[test]
    fn known_encodings() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        let p70 = Graph::from_edges(70, &(0..69).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let s = write_graph6(&p70);
        assert!(s.starts_with("~?@EhCGGC@"), "{s}");
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), p70);
    }

    #[test]
    fn header_and_newline() {
        let g = parse_graph6(b">>graph6<<Dhc\n").unwrap();
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn malformed() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6(b"\n"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6(b"D?"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse_graph6(b"D?{?"), Err(Graph6Error::TrailingBytes(1)));
        assert_eq!(parse_graph6(b"D? "), Err(Graph6Error::InvalidByte { byte: b' ', offset: 2 }));
        assert_eq!(parse_graph6(b"~?"), Err(Graph6Error::MalformedHeader));
        // n = 2 has a single data bit; remaining five must be zero
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn one_vertex() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(write_graph6(&g), "@");
    }
}
