//! graph6 encoding and decoding.
//!
//! One graph per line. The size field N(n) is a single byte `n + 63` for
//! `n <= 62` and `126` followed by three bytes carrying an 18-bit value for
//! larger orders (this crate caps orders at 64). The edge field R(x) packs
//! the upper triangle of the adjacency matrix in the order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte offset
//! by 63, with zero padding to a multiple of six bits.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte offset {offset}: malformed size header (byte {byte:#04x})")]
    MalformedHeader { offset: usize, byte: u8 },
    #[error("byte offset {offset}: byte {byte:#04x} outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("byte offset {offset}: truncated bit field, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte offset {offset}: trailing data after the bit field")]
    TrailingData { offset: usize },
    #[error("byte offset {offset}: nonzero padding bits")]
    PaddingBits { offset: usize },
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge { n: usize },
}

/// Serialize in graph6 form.
pub fn write(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit size form, big-endian 6-bit groups.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc: u8 = 0;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        acc <<= 6 - bits;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse one graph6 line. Errors carry the byte offset of the offender.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    // Tolerate the conventional format header emitted by some tools.
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit size form: necessarily beyond our 64-vertex cap.
            return Err(Graph6Error::TooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                offset: bytes.len(),
                expected: 4 - bytes.len(),
            });
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::ByteOutOfRange {
                    offset: 1 + k,
                    byte: b,
                });
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(Graph6Error::MalformedHeader { offset: 0, byte: b });
        }
        ((b - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }

    let pair_bits = n * n.saturating_sub(1) / 2;
    let data_bytes = pair_bits.div_ceil(6);
    if bytes.len() < pos + data_bytes {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: data_bytes - (bytes.len() - pos),
        });
    }
    if bytes.len() > pos + data_bytes {
        return Err(Graph6Error::TrailingData {
            offset: pos + data_bytes,
        });
    }

    let mut g = Graph::new(n).expect("order already bounded");
    let mut i = 0usize;
    let mut j = 1usize;
    let mut remaining = pair_bits;
    for _ in 0..data_bytes {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: pos,
                byte: b,
            });
        }
        let chunk = b - 63;
        for k in 0..6 {
            let bit = (chunk >> (5 - k)) & 1;
            if remaining == 0 {
                if bit != 0 {
                    return Err(Graph6Error::PaddingBits { offset: pos });
                }
                continue;
            }
            if bit != 0 {
                g.insert_edge(i, j).expect("pairs are distinct and fresh");
            }
            remaining -= 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}
