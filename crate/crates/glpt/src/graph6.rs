//! graph6 codec (and read-only sparse6 support).
//!
//! Layout per the standard format: a header of `chr(63+n)` for `n <= 62` or
//! `'~'` followed by three bytes holding an 18-bit `n` for `63 <= n <= 258047`,
//! then the upper triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed
//! MSB-first into 6-bit groups offset by 63 and zero-padded. sparse6 lines
//! (leading `':'`) are accepted on input and never emitted.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

/// Parses a one-line graph6 (or sparse6) string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\r', '\n']);
    let (body, base) = strip_optional_header(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::codec(base, "empty input"));
    }
    if bytes[0] == b':' {
        return parse_sparse6(bytes, base);
    }
    if bytes[0] == b';' {
        return Err(Error::codec(base, "incremental sparse6 is not supported"));
    }
    let (n, pos) = parse_order(bytes, base)?;
    let n_bits = n * (n - 1) / 2;
    let data_bytes = n_bits.div_ceil(6);
    check_data_len(bytes, pos, data_bytes, base)?;

    let mut reader = BitReader::new(&bytes[pos..], base + pos)?;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if reader.take_bit() == 1 {
                edges.push((i, j));
            }
        }
    }
    if reader.remaining_nonzero() {
        return Err(Error::codec(
            base + pos + data_bytes - 1,
            "trailing padding bits are nonzero",
        ));
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded graph within bounds"))
}

/// Encodes a graph as a one-line graph6 string (round-trips with
/// [`parse_graph6`]).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(b'~');
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut writer = BitWriter::new();
    for j in 1..n {
        for i in 0..j {
            writer.push_bit(g.has_edge(i, j));
        }
    }
    out.extend(writer.finish());
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn strip_optional_header(text: &str) -> (&str, usize) {
    for h in [">>graph6<<", ">>sparse6<<"] {
        if let Some(rest) = text.strip_prefix(h) {
            return (rest, h.len());
        }
    }
    (text, 0)
}

/// Decodes the N(n) header. Returns (n, bytes consumed).
fn parse_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let c = bytes[0];
    if c == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::codec(
                base,
                "graphs beyond 258047 vertices are not supported",
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::codec(base, "truncated multi-byte order header"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::codec(base + 1 + i, format!("byte {b} out of range 63..=126")));
            }
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n < 63 {
            return Err(Error::codec(base, "multi-byte header used for n < 63"));
        }
        if n > MAX_VERTICES {
            return Err(Error::codec(
                base,
                format!("graph order {n} exceeds the {MAX_VERTICES}-vertex cap"),
            ));
        }
        Ok((n, 4))
    } else {
        if !(OFFSET..=126).contains(&c) {
            return Err(Error::codec(base, format!("byte {c} out of range 63..=126")));
        }
        let n = (c - OFFSET) as usize;
        if n == 0 {
            return Err(Error::codec(base, "graph with zero vertices"));
        }
        Ok((n, 1))
    }
}

fn check_data_len(bytes: &[u8], pos: usize, expected: usize, base: usize) -> Result<()> {
    let got = bytes.len() - pos;
    if got < expected {
        return Err(Error::codec(
            base + bytes.len(),
            format!("truncated edge data: need {expected} bytes, found {got}"),
        ));
    }
    if got > expected {
        return Err(Error::codec(
            base + pos + expected,
            format!("unexpected trailing bytes: need {expected} data bytes, found {got}"),
        ));
    }
    Ok(())
}

fn parse_sparse6(bytes: &[u8], base: usize) -> Result<Graph> {
    let (n, pos) = parse_order(&bytes[1..], base + 1).map(|(n, p)| (n, p + 1))?;
    let mut reader = BitReader::new(&bytes[pos..], base + pos)?;
    // Width of the vertex field: bits needed for n-1.
    let k = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    let k = k.max(1);

    let mut edges = Vec::new();
    let mut v = 0usize;
    while reader.bits_left() >= 1 + k {
        let b = reader.take_bit();
        let x = reader.take_bits(k);
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Error::codec(reader.offset(), "self-loop in sparse6 stream"));
        } else {
            edges.push((x, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded graph within bounds"))
}

struct BitReader<'a> {
    data: &'a [u8],
    pos: usize,
    bit: usize,
    base: usize,
}

impl<'a> BitReader<'a> {
    fn new(data: &'a [u8], base: usize) -> Result<Self> {
        for (i, &b) in data.iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(Error::codec(base + i, format!("byte {b} out of range 63..=126")));
            }
        }
        Ok(BitReader {
            data,
            pos: 0,
            bit: 0,
            base,
        })
    }

    fn bits_left(&self) -> usize {
        self.data.len() * 6 - (self.pos * 6 + self.bit)
    }

    fn take_bit(&mut self) -> usize {
        debug_assert!(self.bits_left() >= 1);
        let word = self.data[self.pos] - OFFSET;
        let out = (word >> (5 - self.bit)) & 1;
        self.bit += 1;
        if self.bit == 6 {
            self.bit = 0;
            self.pos += 1;
        }
        out as usize
    }

    fn take_bits(&mut self, count: usize) -> usize {
        let mut out = 0;
        for _ in 0..count {
            out = (out << 1) | self.take_bit();
        }
        out
    }

    fn remaining_nonzero(&mut self) -> bool {
        while self.bits_left() > 0 {
            if self.take_bit() != 0 {
                return true;
            }
        }
        false
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }
}

struct BitWriter {
    out: Vec<u8>,
    current: u8,
    bit: usize,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter {
            out: Vec::new(),
            current: 0,
            bit: 0,
        }
    }

    fn push_bit(&mut self, b: bool) {
        if b {
            self.current |= 1 << (5 - self.bit);
        }
        self.bit += 1;
        if self.bit == 6 {
            self.out.push(OFFSET + self.current);
            self.current = 0;
            self.bit = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.bit > 0 {
            self.out.push(OFFSET + self.current);
        }
        self.out
    }
}
