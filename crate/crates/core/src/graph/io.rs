//! graph6 (short form) and whitespace edge-list formats.

use num_integer::Integer;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable in the one-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

/// Parses one graph6 line. A trailing newline is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::parse(0, "empty input"));
    };
    if head == b'~' {
        return Err(Error::parse(0, "long-form graph6 header (n > 62) is not supported"));
    }
    if !(63..=126).contains(&head) {
        return Err(Error::parse(0, format!("header byte {head:#04x} out of range")));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchunks = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nchunks {
        return Err(Error::parse(
            bytes.len(),
            format!("truncated: expected {nchunks} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > nchunks {
        return Err(Error::parse(1 + nchunks, "trailing bytes after graph data"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1 + i, format!("byte {b:#04x} out of range")));
        }
        let chunk = b - 63;
        for bit in (0..6).rev() {
            let set = (chunk >> bit) & 1 == 1;
            if k < nbits {
                if set {
                    let (u, v) = pair_of(k);
                    g.add_edge(u, v);
                }
            } else if set {
                return Err(Error::parse(1 + i, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// graph6 bit `k` encodes pair `(i, j)` with `i < j`, columns in order.
fn pair_of(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Unsupported(format!(
            "graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + n * n / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut fill = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(((acc << (6 - fill)) + 63) as char);
    }
    Ok(out)
}

/// Parses `n m` followed by `m` pairs `u v` (0-indexed, any whitespace).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    let mut pos = 0;
    for tok in text.split_ascii_whitespace() {
        let off = text[pos..].find(tok).map(|o| o + pos).unwrap_or(pos);
        pos = off + tok.len();
        tokens.push((off, tok));
    }
    let num = |i: usize| -> Result<usize> {
        let (off, tok) = tokens
            .get(i)
            .copied()
            .ok_or_else(|| Error::parse(text.len(), "unexpected end of input"))?;
        tok.parse()
            .map_err(|_| Error::parse(off, format!("expected a nonnegative integer, found {tok:?}")))
    };
    let n = num(0)?;
    let m = num(1)?;
    let mut g = Graph::try_new(n)?;
    for e in 0..m {
        let (u, v) = (num(2 + 2 * e)?, num(3 + 2 * e)?);
        if u >= n || v >= n || u == v {
            return Err(Error::parse(
                tokens[2 + 2 * e].0,
                format!("invalid edge ({u},{v}) for n = {n}"),
            ));
        }
        g.add_edge(u, v);
    }
    if tokens.len() > 2 + 2 * m {
        return Err(Error::parse(tokens[2 + 2 * m].0, "trailing tokens after edge list"));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Converts decimal (`"2.5"`) or fractional (`"5/2"`) weights to integers by
/// scaling with the least common multiple of their denominators.
///
/// Returns the scaled weights and the scale factor.
pub fn scale_rational_weights(items: &[&str]) -> Result<(Vec<u64>, u64)> {
    let mut fracs = Vec::with_capacity(items.len());
    for (i, raw) in items.iter().enumerate() {
        let s = raw.trim();
        let bad = || Error::parse(i, format!("weight {s:?} is not a nonnegative rational"));
        let (num, den) = if let Some((a, b)) = s.split_once('/') {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            (a, b)
        } else if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
                return Err(bad());
            }
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let den = 10u64.pow(frac.len() as u32);
            let f: u64 = frac.parse().map_err(|_| bad())?;
            let num = int.checked_mul(den).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
            (num, den)
        } else {
            (s.parse().map_err(|_| bad())?, 1)
        };
        let g = num.gcd(&den).max(1);
        fracs.push((num / g, den / g));
    }
    let scale = fracs.iter().try_fold(1u64, |acc, &(_, d)| {
        let l = acc.lcm(&d);
        if l / d.max(1) > 0 && l >= acc { Some(l) } else { None }
    });
    let scale = scale.ok_or_else(|| Error::arg("denominator LCM overflows u64"))?;
    let weights = fracs
        .iter()
        .map(|&(n, d)| n.checked_mul(scale / d))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::arg("scaled weight overflows u64"))?;
    Ok((weights, scale))
}
