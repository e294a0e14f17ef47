//! Plain-text file formats: graphs and vertex sets.
//!
//! A graph file starts with a header line `n m`, followed by exactly m edge
//! lines `u v` with 0 ≤ u < v < n. Tokens are whitespace-separated decimal
//! integers; blank lines and lines starting with `#` are ignored everywhere.
//! Parse errors name the offending (1-based) line of the original file.
//!
//! A solution file is simply whitespace-separated vertex ids, in any layout.

use anyhow::{bail, Context, Result};
use splex_core::{Graph, VertexSet};

/// content lines of a file: (1-based line number, trimmed text), with blank
/// and comment lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t))
        }
    })
}

/// splits a line into exactly `want` decimal integers.
fn fields(line_no: usize, line: &str, want: usize) -> Result<Vec<u32>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != want {
        bail!("line {line_no}: expected {want} integers, found {}", toks.len());
    }
    toks.iter()
        .map(|t| {
            t.parse::<u32>()
                .with_context(|| format!("line {line_no}: \"{t}\" is not a non-negative integer"))
        })
        .collect()
}

/// parses a graph file, reporting the first malformed line by number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .context("missing header line \"n m\"")?;
    let head = fields(header_no, header, 2)
        .with_context(|| format!("line {header_no}: expected header \"n m\""))?;
    let (n, m) = (head[0], head[1]);

    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut seen = 0u32;
    for (line_no, line) in lines {
        if seen == m {
            bail!("line {line_no}: more than the {m} edge lines announced in the header");
        }
        let e = fields(line_no, line, 2)?;
        let (u, v) = (e[0], e[1]);
        if u >= v {
            bail!("line {line_no}: edge must be written \"u v\" with u < v, got {u} {v}");
        }
        if v >= n {
            bail!("line {line_no}: vertex {v} out of range for n = {n}");
        }
        if !g.add_edge(u, v) {
            bail!("line {line_no}: duplicate edge {u} {v}");
        }
        seen += 1;
    }
    if seen != m {
        bail!("header announces {m} edges but the file contains {seen}");
    }
    Ok(g)
}

/// writes a graph whose vertices are 0..n−1 in the graph-file format.
pub fn serialize_graph(g: &Graph) -> String {
    let n = g.vertex_count() as u32;
    debug_assert!(
        g.vertices().all(|v| v < n),
        "graph files require contiguous ids 0..n-1"
    );
    let mut out = format!("{} {}\n", n, g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// parses a vertex-set file: any whitespace-separated ids.
pub fn parse_solution(text: &str) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for (line_no, line) in content_lines(text) {
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .with_context(|| format!("line {line_no}: \"{tok}\" is not a vertex id"))?;
            out.insert(v);
        }
    }
    Ok(out)
}

/// ascending space-separated ids, no trailing newline.
pub fn id_list(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(u32::to_string).collect();
    ids.join(" ")
}

/// writes a vertex set as one line of ascending space-separated ids.
pub fn serialize_solution(set: &VertexSet) -> String {
    format!("{}\n", id_list(set))
}
