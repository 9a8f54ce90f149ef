//! graph6 encoding and decoding (standard bit layout).

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: &str) -> GraphError {
    GraphError::MalformedGraph6(msg.to_string())
}

/// Encodes a labeled graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else {
        // 63 <= n <= 258047: '~' then 18 bits in three 6-bit groups
        bytes.push(b'~');
        bytes.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        bytes.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        bytes.push((n & 0x3f) as u8 + OFFSET);
    }
    // upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(bytes).expect("printable range")
}

/// Decodes a graph6 string; an optional `>>graph6<<` header is accepted.
pub fn decode(s: &str) -> Result<Graph, GraphError> {
    let s = s.strip_prefix(HEADER).unwrap_or(s).trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(malformed("byte out of printable graph6 range"));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            if bytes.len() < 8 {
                return Err(malformed("truncated order field"));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - OFFSET) as usize;
            }
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(malformed("truncated order field"));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | (b - OFFSET) as usize;
            }
            (n, 4)
        }
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n > 64 {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(malformed("edge data has the wrong length"));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit / 6] - OFFSET;
            let on = byte >> (5 - bit % 6) & 1 == 1;
            if on {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if nbits > 0 {
        let last = bytes[bytes.len() - 1] - OFFSET;
        let pad = expected * 6 - nbits;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    pos += expected;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_codes() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode(&k1), "@");
        assert_eq!(decode("@").unwrap(), k1);
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(decode(&encode(&k0)).unwrap(), k0);
    }

    #[test]
    fn five_vertex_codes_round_trip() {
        // 'D' prefix marks order 5
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('D'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn known_encoding() {
        // DQc is the standard code for this 5-vertex graph
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn k4_round_trips() {
        let k4 = Graph::complete(4);
        assert_eq!(decode(&encode(&k4)).unwrap(), k4);
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = Graph::complete(4);
        let s = format!(">>graph6<<{}\n", encode(&g));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(decode("").is_err());
        assert!(decode("D").is_err()); // truncated edge data
        assert!(decode("C\x1f").is_err()); // byte below offset
        assert!(decode("A\u{7f}").is_err()); // byte above range
        // order 2, one data byte with a nonzero padding bit pattern beyond bit 1
        assert!(decode("Aa").is_err());
    }
}
