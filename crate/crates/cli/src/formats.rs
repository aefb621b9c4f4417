//! Graph file formats: a human-editable edge list and graph6 for interop
//! with standard graph-generation tools.

use clap::ValueEnum;
use std::collections::BTreeSet;
use std::fmt;

use zagreb_core::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// First line `n m`, then `m` lines `u v` with 0-based endpoints.
    Edgelist,
    /// Standard printable encoding of the upper triangle, one graph per line.
    Graph6,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Edgelist => "edgelist",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

/// Parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses the edge-list format: header `n m`, then exactly `m` lines `u v`.
/// Duplicate edges, self-loops, and out-of-range endpoints are rejected with
/// the offending line number. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| err(header_line, "expected 'n m' header"))?
        .parse()
        .map_err(|_| err(header_line, "invalid vertex count"))?;
    let m: usize = tokens
        .next()
        .ok_or_else(|| err(header_line, "expected 'n m' header"))?
        .parse()
        .map_err(|_| err(header_line, "invalid edge count"))?;
    if tokens.next().is_some() {
        return Err(err(header_line, "trailing tokens after 'n m' header"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    for _ in 0..m {
        let expected_at = header_line + edges.len() + 1;
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(expected_at, format!("expected {m} edge lines")))?;
        let mut tokens = line.split_whitespace();
        let u: usize = tokens
            .next()
            .ok_or_else(|| err(line_no, "expected 'u v'"))?
            .parse()
            .map_err(|_| err(line_no, "invalid endpoint"))?;
        let v: usize = tokens
            .next()
            .ok_or_else(|| err(line_no, "expected 'u v'"))?
            .parse()
            .map_err(|_| err(line_no, "invalid endpoint"))?;
        if tokens.next().is_some() {
            return Err(err(line_no, "trailing tokens after edge"));
        }
        if u >= n || v >= n {
            return Err(err(line_no, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line_no, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(err(line_no, "unexpected content after the last edge"));
    }
    Ok(Graph::from_edges(n, &edges).expect("edges validated above"))
}

/// Canonical edge-list form: header, then edges sorted with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_MIN: u8 = 63;
const G6_MAX: u8 = 126;

fn g6_size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + G6_MIN]
    } else if n <= 258_047 {
        vec![
            126,
            ((n >> 12) & 63) as u8 + G6_MIN,
            ((n >> 6) & 63) as u8 + G6_MIN,
            (n & 63) as u8 + G6_MIN,
        ]
    } else {
        let mut bytes = vec![126, 126];
        for shift in [30usize, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + G6_MIN);
        }
        bytes
    }
}

fn g6_parse_size(bytes: &[u8], line: usize) -> Result<(usize, &[u8]), ParseError> {
    let take = |count: usize, offset: usize| -> Result<usize, ParseError> {
        let mut n = 0usize;
        for k in 0..count {
            let b = *bytes
                .get(offset + k)
                .ok_or_else(|| err(line, "truncated size field"))?;
            if !(G6_MIN..=G6_MAX).contains(&b) {
                return Err(err(line, "invalid character in size field"));
            }
            n = (n << 6) | (b - G6_MIN) as usize;
        }
        Ok(n)
    };
    match bytes.first() {
        None => Err(err(line, "empty graph6 line")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                Ok((take(6, 2)?, &bytes[8..]))
            } else {
                Ok((take(3, 1)?, &bytes[4..]))
            }
        }
        Some(&b) if (G6_MIN..G6_MAX).contains(&b) => Ok(((b - G6_MIN) as usize, &bytes[1..])),
        Some(_) => Err(err(line, "invalid graph6 size character")),
    }
}

/// Parses one graph6 line (without the optional `>>graph6<<` header).
pub fn parse_graph6_line(line_text: &str, line: usize) -> Result<Graph, ParseError> {
    let bytes = line_text.trim_end().as_bytes();
    if bytes.first() == Some(&b':') {
        return Err(err(line, "sparse6 input is not supported, expected graph6"));
    }
    if bytes.first() == Some(&b'&') {
        return Err(err(line, "digraph6 input is not supported, expected graph6"));
    }
    let (n, payload) = g6_parse_size(bytes, line)?;
    let pair_bits = (n as u128) * (n as u128).saturating_sub(1) / 2;
    let needed = (pair_bits.div_ceil(6)) as usize;
    if (payload.len() as u128) != needed as u128 {
        return Err(err(
            line,
            format!("payload has {} bytes, expected {needed} for n = {n}", payload.len()),
        ));
    }
    for &b in payload {
        if !(G6_MIN..=G6_MAX).contains(&b) {
            return Err(err(line, "invalid character in graph6 payload"));
        }
    }
    let bit = |idx: usize| -> bool {
        let byte = (payload[idx / 6] - G6_MIN) as usize;
        (byte >> (5 - idx % 6)) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    for pad in idx..needed * 6 {
        if bit(pad) {
            return Err(err(line, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| err(line, e.to_string()))
}

/// One canonical graph6 line (no trailing newline, no header).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = g6_size_bytes(n);
    let pair_bits = n * n.saturating_sub(1) / 2;
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + G6_MIN);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(group + G6_MIN);
    }
    debug_assert_eq!(out.len() - g6_size_bytes(n).len(), pair_bits.div_ceil(6));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads every graph in a file. Edge-list files hold one graph; graph6
/// files hold one per line, optionally preceded by the `>>graph6<<` header.
pub fn parse_file(text: &str, format: GraphFormat) -> Result<Vec<Graph>, ParseError> {
    match format {
        GraphFormat::Edgelist => Ok(vec![parse_edge_list(text)?]),
        GraphFormat::Graph6 => {
            let body = text.strip_prefix(">>graph6<<").unwrap_or(text);
            let mut graphs = Vec::new();
            for (idx, line) in body.lines().enumerate() {
                let line_no = idx + 1;
                if line.trim().is_empty() {
                    continue;
                }
                graphs.push(parse_graph6_line(line, line_no)?);
            }
            if graphs.is_empty() {
                return Err(err(1, "no graphs in file"));
            }
            Ok(graphs)
        }
    }
}

/// Serializes one graph in the chosen format.
pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => write_edge_list(g),
        GraphFormat::Graph6 => {
            let mut line = write_graph6(g);
            line.push('\n');
            line
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        // canonical files survive a parse/write cycle byte-identically
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("3 1\n0 3\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("x 2\n").unwrap_err().line, 1);
    }

    #[test]
    fn graph6_known_encodings() {
        // K_4 is 'C~': size 'C' = 4, payload '~' = 111111
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(parse_graph6_line("C~", 1).unwrap(), k4);

        // the 5-cycle 0-1-2-3-4-0: bits 101001,100100 -> 'h','c'
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6_line("Dhc", 1).unwrap(), c5);

        // the empty graph on one vertex
        let k1 = Graph::empty(1);
        assert_eq!(write_graph6(&k1), "@");
        assert_eq!(parse_graph6_line("@", 1).unwrap(), k1);
    }

    #[test]
    fn graph6_round_trip_medium() {
        for g in [
            Graph::complete_bipartite(3, 6).unwrap(),
            Graph::star(7).unwrap(),
            Graph::path(9).unwrap(),
            Graph::complete(8).unwrap().subdivision(),
        ] {
            let line = write_graph6(&g);
            assert_eq!(parse_graph6_line(&line, 1).unwrap(), g);
        }
    }

    #[test]
    fn graph6_long_size_round_trip() {
        // 70 vertices needs the 4-byte size form
        let g = Graph::cycle(70).unwrap();
        let line = write_graph6(&g);
        assert_eq!(line.as_bytes()[0], 126);
        assert_eq!(parse_graph6_line(&line, 1).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(parse_graph6_line(":Fa@x^", 1).is_err()); // sparse6
        assert!(parse_graph6_line("C", 1).is_err()); // truncated payload
        assert!(parse_graph6_line("C~~", 1).is_err()); // overlong payload
        assert!(parse_graph6_line("B!", 1).is_err()); // bad payload char
        // n = 2 has one pair bit; '@' = 000001 puts a 1 in the padding
        assert!(parse_graph6_line("A@", 1).is_err());
        // while '_' = 100000 is just K_2
        assert_eq!(
            parse_graph6_line("A_", 1).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn graph6_file_with_header() {
        let text = ">>graph6<<C~\nDQc\n";
        let graphs = parse_file(text, GraphFormat::Graph6).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0], Graph::complete(4).unwrap());
    }
}
