//! graph6, bit-compatible with nauty's `showg`/`geng`.
//!
//! Layout: optional `>>graph6<<` header, the size `N(n)`, then the upper
//! triangle read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), …`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use super::Graph;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;
const MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {pos} is outside 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("malformed size prefix")]
    BadLength,
    #[error("truncated edge bits: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the edge data")]
    TrailingGarbage { extra: usize },
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let body = text.strip_suffix('\n').map(|t| t.strip_suffix('\r').unwrap_or(t)).unwrap_or(text);
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(Graph6Error::BadChar { pos, byte: bytes[pos] });
    }
    let (n, used) = decode_order(bytes)?;
    let data = &bytes[used..];
    let pairs = (n as u128) * (n as u128).saturating_sub(1) / 2;
    let expected = usize::try_from(pairs.div_ceil(6)).unwrap_or(usize::MAX);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage { extra: data.len() - expected });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let digits = |s: &[u8]| s.iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - OFFSET));
    let n = if bytes[0] != 126 {
        (u64::from(bytes[0] - OFFSET), 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        let d = bytes.get(1..4).ok_or(Graph6Error::BadLength)?;
        (digits(d), 4)
    } else {
        let d = bytes.get(2..8).ok_or(Graph6Error::BadLength)?;
        (digits(d), 8)
    };
    usize::try_from(n.0).map(|v| (v, n.1)).map_err(|_| Graph6Error::BadLength)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    let push_digits = |out: &mut Vec<u8>, value: u64, count: u32| {
        for d in (0..count).rev() {
            out.push(((value >> (6 * d)) & 63) as u8 + OFFSET);
        }
    };
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        push_digits(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_digits(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pair_count;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(emit_graph6(&Graph::complete(2)), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
        // nauty's documented example: the 5-vertex graph with edges 02 04 13 34
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6("A"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(parse_graph6("A__"), Err(Graph6Error::TrailingGarbage { extra: 1 }));
        assert_eq!(parse_graph6("A "), Err(Graph6Error::BadChar { pos: 1, byte: b' ' }));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadLength));
        assert_eq!(parse_graph6("~~??"), Err(Graph6Error::BadLength));
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::complete(63);
        let text = emit_graph6(&g);
        assert!(text.starts_with("~??~"));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for n in 0..=5 {
            for mask in 0..1u64 << pair_count(n) {
                let g = Graph::from_mask(n, mask).unwrap();
                let text = emit_graph6(&g);
                assert_eq!(parse_graph6(&text).unwrap(), g);
                assert_eq!(emit_graph6(&parse_graph6(&text).unwrap()), text);
            }
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 0usize..=32, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut state = seed;
            for j in 1..n {
                for i in 0..j {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }
}
