//! graph6 codec and the plain edge-list text format.
//!
//! graph6 layout for `n <= 62`: one header byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed six bits per byte, big-endian within the group,
//! zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= GRAPH6_MAX_ORDER,
        "graph6 writer supports at most {GRAPH6_MAX_ORDER} vertices"
    );
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in column_pairs(n) {
        group = group << 1 | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push((group + 63) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    let err = |offset: usize, message: String| Error::Graph6 {
        offset: base + offset,
        message,
    };
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("invalid header byte {first}")));
    }
    if first == 126 {
        return Err(err(
            0,
            format!("orders above {GRAPH6_MAX_ORDER} are not supported"),
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(err(
            1 + expected.min(bytes.len() - 1),
            format!(
                "expected {expected} data bytes for n = {n}, found {}",
                bytes.len() - 1
            ),
        ));
    }
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + k, format!("invalid data byte {b}")));
        }
    }
    let bit = |idx: usize| {
        let b = bytes[1 + idx / 6] - 63;
        b >> (5 - idx % 6) & 1 == 1
    };
    let mut g = Graph::empty(n)?;
    for (idx, (i, j)) in column_pairs(n).enumerate() {
        if bit(idx) {
            g.add_edge_unchecked(i, j);
        }
    }
    for idx in bits..expected * 6 {
        if bit(idx) {
            return Err(err(1 + idx / 6, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(line, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 {
                    offset,
                    message: format!("line {}: {message}", line + 1),
                },
                other => other,
            })
        })
        .collect()
}

/// Parses `"n m\nu v\n..."`. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::EdgeList {
                line,
                message: format!("invalid edge ({u}, {v}) for n = {n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: hline,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = || Error::EdgeList {
        line,
        message: format!("expected two non-negative integers, found `{text}`"),
    };
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok([a, b])
}

/// Reads a single graph given either inline graph6 or a file in graph6 or
/// edge-list form. The edge-list form is recognised by a first data line
/// holding two integers.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.split_whitespace().count() == 2 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}
