use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are ignored; offsets in errors count from the start of
/// `text` as given.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(
                start + i,
                format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
            ));
        }
    }
    if body.is_empty() {
        return Err(parse_err(start, "missing vertex count"));
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - BIAS) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(parse_err(start + body.len(), "truncated 36-bit vertex count"));
        }
        (decode_sextets(&body[2..8]), 8)
    } else {
        if body.len() < 4 {
            return Err(parse_err(start + body.len(), "truncated 18-bit vertex count"));
        }
        (decode_sextets(&body[1..4]), 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() != expected {
        let offset = start + pos + data.len().min(expected);
        return Err(parse_err(
            offset,
            format!("expected {expected} edge bytes for n = {n}, found {}", data.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += expected - 1;
            return Err(parse_err(start + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_sextets(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_octahedron};

    #[test]
    fn hand_encoded_examples() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g, gen_complete(2).unwrap());
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        // K_4 sets all six bits
        assert_eq!(emit_graph6(&gen_complete(4).unwrap()), "C~");
    }

    #[test]
    fn header_and_newline_are_ignored() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            parse_graph6("A_x\u{7f}").unwrap_err(),
            Error::Parse {
                offset: 3,
                message: "byte 0x7f outside the graph6 range 63..=126".into()
            }
        );
        assert!(matches!(parse_graph6("A"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Parse { .. })));
        // n = 2 has one data bit; any other set bit is padding
        assert!(matches!(parse_graph6("A@"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(
            parse_graph6(">>graph6<< "),
            Err(Error::Parse { offset: 10, .. })
        ));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn long_vertex_count_round_trip() {
        let g = gen_octahedron(40).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
