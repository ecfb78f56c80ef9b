//! graph6, edge lists and class files.

use std::fmt;

use brittle_core::graph::MAX_VERTICES;
use brittle_core::{Edge, Graph, GraphClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Empty,
    BadByte { line: usize, byte: u8 },
    Truncated { line: usize },
    TrailingData { line: usize },
    TooManyVertices { line: usize, n: usize },
    EdgeList { line: usize, reason: String },
    Class(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Empty => f.write_str("no graph in input"),
            FormatError::BadByte { line, byte } => write!(f, "line {line}: byte {byte:#04x} is not graph6"),
            FormatError::Truncated { line } => write!(f, "line {line}: graph6 string is too short"),
            FormatError::TrailingData { line } => write!(f, "line {line}: graph6 string is too long"),
            FormatError::TooManyVertices { line, n } => {
                write!(f, "line {line}: {n} vertices, at most {MAX_VERTICES} supported")
            }
            FormatError::EdgeList { line, reason } => write!(f, "edge list line {line}: {reason}"),
            FormatError::Class(reason) => write!(f, "class: {reason}"),
        }
    }
}

impl std::error::Error for FormatError {}

const HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 string without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are accepted. `line` is used in errors.
pub fn from_graph6_line(s: &str, line: usize) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Truncated { line });
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::BadByte { line, byte: b });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else if bytes.len() >= 8 {
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        return Err(FormatError::Truncated { line });
    };
    if n > MAX_VERTICES {
        return Err(FormatError::TooManyVertices { line, n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(FormatError::Truncated { line });
    }
    if body.len() > need {
        return Err(FormatError::TrailingData { line });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple and in range"))
}

pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    from_graph6_line(s, 1)
}

/// Every graph in a graph6 stream, one per nonempty line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| from_graph6_line(l, i + 1)).collect()
}

/// `n m` on the first line, then one `u v` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for e in edges {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let err = |line: usize, reason: &str| FormatError::EdgeList { line: line + 1, reason: reason.into() };
    let (i, header) = lines.next().ok_or(FormatError::Empty)?;
    let nums = parse_pair(header).ok_or_else(|| err(i, "expected `n m`"))?;
    let (n, m) = nums;
    if n > MAX_VERTICES {
        return Err(FormatError::TooManyVertices { line: i + 1, n });
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for (i, l) in lines {
        let (u, v) = parse_pair(l).ok_or_else(|| err(i, "expected `u v`"))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(i, &format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges).map_err(|e| err(i, &e.to_string()))
}

fn parse_pair(l: &str) -> Option<(usize, usize)> {
    let mut it = l.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// A class file: one forbidden graph per line in graph6.
pub fn parse_class_file(name: &str, text: &str) -> Result<GraphClass, FormatError> {
    let forbidden = parse_graph6_stream(text)?;
    if forbidden.is_empty() {
        return Err(FormatError::Class("no forbidden graphs".into()));
    }
    GraphClass::new(name, forbidden).map_err(|e| FormatError::Class(e.to_string()))
}

pub fn edge_pair(e: Edge) -> [usize; 2] {
    [e.u(), e.v()]
}
