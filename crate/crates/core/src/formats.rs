//! External graph formats: graph6, plain edge lists and DOT.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes a graph in graph6: order prefix, then the upper triangle in
/// column-major order packed into 6-bit chunks offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let adj = g.adjacency();
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | (adj[i] >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; anything else malformed is rejected, including
/// nonzero padding bits.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(bad) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {:#04x} at offset {bad} outside 63..=126",
            bytes[bad]
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::MalformedGraph6(
                "orders beyond 258047 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::MalformedGraph6("truncated order prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(Error::MalformedGraph6(format!(
                "order {n} must use the short prefix"
            )));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Error::MalformedGraph6(
            "graphs must have at least one vertex".into(),
        ));
    }
    if n > MAX_VERTICES {
        return Err(Error::MalformedGraph6(format!(
            "order {n} exceeds the supported maximum of {MAX_VERTICES}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for order {n}, got {}",
            body.len()
        )));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    let pad = expected * 6 - bits;
    if (bits..bits + pad).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Renders the edge-list format: `n m` followed by one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedEdgeList("missing `n m` header".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref() {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::MalformedEdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::MalformedEdgeList(format!("expected two integers in `{line}`")))?
            .parse::<usize>()
            .map_err(|e| Error::MalformedEdgeList(format!("`{line}`: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::MalformedEdgeList(format!(
            "trailing tokens in `{line}`"
        )));
    }
    Ok((a, b))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of an undirected graph. Vertex labels are emitted when present.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", dot_escape(name));
    for v in 0..g.n() {
        match g.labels() {
            Some(labels) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&labels[v]));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
