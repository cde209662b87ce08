//! Text and JSON formats for signed graphs and explicit matroids.
//!
//! Graph text format, one record per line, `#` starts a comment:
//!
//! ```text
//! name handcuff
//! v 2
//! e 0 1 +
//! e 0 0 -
//! e 1 1 -
//! ```
//!
//! Matroid format: `ground <n>`, then either `ranks` followed by `2^n`
//! integers in bitmask order, or `bases` followed by one bitmask per line
//! (decimal, `0b` binary or `0x` hex).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::matroid::{ExplicitMatroid, RankOracle, MAX_GROUND};

/// Largest vertex count accepted by the parsers.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: Option<String>,
    pub graph: SignedGraph,
}

impl GraphDocument {
    pub fn new(graph: SignedGraph) -> Self {
        GraphDocument { name: None, graph }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Text,
    Json,
}

impl GraphFormat {
    /// JSON when the file name ends in `.json`, text otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::Text,
        }
    }
}

pub fn parse_graph_as(text: &str, format: GraphFormat) -> Result<GraphDocument> {
    match format {
        GraphFormat::Text => parse_graph_document(text),
        GraphFormat::Json => parse_graph_json(text),
    }
}

pub fn render_graph_as(doc: &GraphDocument, format: GraphFormat) -> String {
    match format {
        GraphFormat::Text => render_graph(doc),
        GraphFormat::Json => render_graph_json(doc),
    }
}

/// Data lines with their 1-based numbers, comments and blanks removed.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("{what} `{token}` is not a nonnegative integer")))
}

fn parse_sign(token: &str, line: usize) -> Result<Sign> {
    match token {
        "+" | "+1" => Ok(Sign::Positive),
        "-" | "-1" => Ok(Sign::Negative),
        _ => Err(Error::parse(line, format!("bad sign token `{token}`, expected + or -"))),
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    parse_graph_document(text).map(|d| d.graph)
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument> {
    let mut name = None;
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, content) in data_lines(text) {
        last_line = line;
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(Error::parse(line, "duplicate `name` line"));
                }
                name = Some(rest.to_string());
            }
            "v" => {
                if vertices.is_some() {
                    return Err(Error::parse(line, "duplicate `v` line"));
                }
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                let [n] = tokens[..] else {
                    return Err(Error::parse(line, "expected `v <vertex count>`"));
                };
                let n = parse_index(n, line, "vertex count")?;
                if n > MAX_VERTICES {
                    return Err(Error::parse(line, format!("at most {MAX_VERTICES} vertices supported")));
                }
                vertices = Some(n);
            }
            "e" => {
                let n = vertices.ok_or_else(|| Error::parse(line, "edge before `v` line"))?;
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                let [u, v, s] = tokens[..] else {
                    return Err(Error::parse(line, "expected `e <u> <v> <+|->`"));
                };
                let u = parse_index(u, line, "endpoint")?;
                let v = parse_index(v, line, "endpoint")?;
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::parse(line, format!("endpoint {x} out of range (graph has {n} vertices)")));
                    }
                }
                if edges.len() == crate::graph::MAX_EDGES {
                    return Err(Error::parse(line, format!("more than {} edges", crate::graph::MAX_EDGES)));
                }
                edges.push(Edge::new(u, v, parse_sign(s, line)?));
            }
            other => return Err(Error::parse(line, format!("unknown record `{other}`"))),
        }
    }
    let n = vertices.ok_or_else(|| Error::parse(last_line.max(1), "missing `v` line"))?;
    Ok(GraphDocument { name, graph: SignedGraph::new(n, edges)? })
}

pub fn render_graph(doc: &GraphDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("v {}\n", doc.graph.vertex_count()));
    for e in doc.graph.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign.symbol()));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    u: usize,
    v: usize,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: usize,
    edges: Vec<JsonEdge>,
}

/// Parse `{"vertices": n, "edges": [{"u": .., "v": .., "sign": "+"}]}`.
/// JSON errors carry the line reported by the decoder.
pub fn parse_graph_json(text: &str) -> Result<GraphDocument> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    if doc.vertices > MAX_VERTICES {
        return Err(Error::parse(1, format!("at most {MAX_VERTICES} vertices supported")));
    }
    let edges = doc.edges.iter().map(|e| Edge::new(e.u, e.v, e.sign)).collect();
    Ok(GraphDocument { name: doc.name, graph: SignedGraph::new(doc.vertices, edges)? })
}

pub fn render_graph_json(doc: &GraphDocument) -> String {
    let json = JsonGraph {
        name: doc.name.clone(),
        vertices: doc.graph.vertex_count(),
        edges: doc.graph.edges().iter().map(|e| JsonEdge { u: e.u, v: e.v, sign: e.sign }).collect(),
    };
    serde_json::to_string_pretty(&json).expect("graph serializes") + "\n"
}

fn parse_mask(token: &str, line: usize) -> Result<u64> {
    let parsed = if let Some(b) = token.strip_prefix("0b") {
        u64::from_str_radix(b, 2)
    } else if let Some(h) = token.strip_prefix("0x") {
        u64::from_str_radix(h, 16)
    } else {
        token.parse()
    };
    parsed.map_err(|_| Error::parse(line, format!("bad bitmask `{token}`")))
}

/// Parse a matroid file. A rank table is returned as given, without the
/// axiom check; a basis list is validated.
pub fn parse_matroid(text: &str) -> Result<ExplicitMatroid> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty matroid file"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["ground", n] => parse_index(n, line, "ground size")?,
        _ => return Err(Error::parse(line, "expected `ground <n>`")),
    };
    if n > MAX_GROUND {
        return Err(Error::parse(line, format!("ground set larger than {MAX_GROUND}")));
    }
    let (line, mode) = lines.next().ok_or_else(|| Error::parse(line + 1, "expected `ranks` or `bases`"))?;
    match mode {
        "ranks" => {
            let mut ranks = Vec::with_capacity(1 << n);
            let mut last = line;
            for (line, content) in lines {
                last = line;
                for token in content.split_whitespace() {
                    if ranks.len() == 1 << n {
                        return Err(Error::parse(line, format!("more than {} rank values", 1usize << n)));
                    }
                    let r = parse_index(token, line, "rank")?;
                    if r > n {
                        return Err(Error::parse(line, format!("rank {r} exceeds ground size {n}")));
                    }
                    ranks.push(r);
                }
            }
            if ranks.len() != 1 << n {
                return Err(Error::parse(last, format!("expected {} rank values, got {}", 1usize << n, ranks.len())));
            }
            ExplicitMatroid::from_ranks(n, ranks)
        }
        "bases" => {
            let mut bases = Vec::new();
            let mut last = line;
            for (line, content) in lines {
                last = line;
                for token in content.split_whitespace() {
                    let b = parse_mask(token, line)?;
                    if n < 64 && b >> n != 0 {
                        return Err(Error::parse(line, format!("basis {token} outside ground set of size {n}")));
                    }
                    bases.push(b);
                }
            }
            if bases.is_empty() {
                return Err(Error::parse(last, "no bases listed"));
            }
            ExplicitMatroid::from_bases(n, &bases).map_err(|e| Error::parse(last, e.to_string()))
        }
        other => Err(Error::parse(line, format!("expected `ranks` or `bases`, got `{other}`"))),
    }
}

/// Rank-table form, sixteen values per line.
pub fn render_matroid(m: &ExplicitMatroid) -> String {
    let ranks: Vec<String> = m.ranks().map(|r| r.to_string()).collect();
    let mut out = format!("ground {}\nranks\n", m.ground_size());
    for chunk in ranks.chunks(16) {
        out.push_str(&chunk.join(" "));
        out.push('\n');
    }
    out
}
