//! graph6 encoding: size prefix, then the upper triangle in column order
//! (x(0,1), x(0,2), x(1,2), x(0,3), …) packed six bits per printable byte.

use super::{Graph, GraphError, MAX_ORDER};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(err(format!("invalid character {b:#04x}")));
    }
    let (n, body) = match bytes.first() {
        None => return Err(err("empty string")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err("order too large"));
            }
            if bytes.len() < 4 {
                return Err(err("truncated size field"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            if n < 63 {
                return Err(err("non-canonical size field"));
            }
            (n, &bytes[4..])
        }
        Some(&b) => (usize::from(b - BIAS), &bytes[1..]),
    };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + BIAS);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
