//! The `gpc-graph-v1` JSON format and DOT export.
//!
//! ```text
//! {"format":"gpc-graph-v1","vertices":["0","1"],"edges":[["0","1"]]}
//! ```
//!
//! Vertices keep graph order. Each edge lists the lexicographically smaller
//! label first, the edge list is sorted, and a loop is `["v","v"]`. Output is
//! compact with a trailing newline, so equal graphs serialize to equal bytes.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;

pub const FORMAT: &str = "gpc-graph-v1";

#[derive(Serialize, Deserialize)]
struct GraphFile {
    format: String,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

fn sorted_edges(g: &Graph) -> Vec<[String; 2]> {
    let mut edges: Vec<[String; 2]> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.name(u).to_string(), g.name(v).to_string());
            if a <= b {
                [a, b]
            } else {
                [b, a]
            }
        })
        .collect();
    edges.sort();
    edges
}

pub fn to_json(g: &Graph) -> String {
    let file = GraphFile {
        format: FORMAT.to_string(),
        vertices: g.names().to_vec(),
        edges: sorted_edges(g),
    };
    let mut text = serde_json::to_string(&file).expect("graph serializes");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)?;
    if file.format != FORMAT {
        return Err(Error::Format(format!(
            "expected format `{FORMAT}`, found `{}`",
            file.format
        )));
    }
    let labels: Vec<VertexLabel> = file.vertices.iter().map(|s| VertexLabel::parse(s)).collect();
    for (text, label) in file.vertices.iter().zip(&labels) {
        if label.render() != *text {
            return Err(Error::Format(format!("label `{text}` is not in canonical form")));
        }
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(file.edges.len());
    for [a, b] in &file.edges {
        let key = if a <= b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            return Err(Error::DuplicateEdge(a.clone(), b.clone()));
        }
        edges.push((VertexLabel::parse(a), VertexLabel::parse(b)));
    }
    Graph::new(labels, &edges)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, to_json(g))
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT with vertices in graph order and edges in file order.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for name in g.names() {
        let _ = writeln!(out, "  {};", quoted(name));
    }
    for [a, b] in sorted_edges(g) {
        let _ = writeln!(out, "  {} -- {};", quoted(&a), quoted(&b));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, helical};
    use crate::powers::{negative_unit_power, power, subdivide};

    #[test]
    fn exact_bytes() {
        let text = to_json(&cycle(3));
        assert_eq!(
            text,
            "{\"format\":\"gpc-graph-v1\",\"vertices\":[\"0\",\"1\",\"2\"],\
             \"edges\":[[\"0\",\"1\"],[\"0\",\"2\"],[\"1\",\"2\"]]}\n"
        );
    }

    #[test]
    fn round_trips() {
        let graphs = [
            cycle(10),
            helical(4, 1, 2).unwrap(),
            subdivide(&cycle(5), 3).unwrap(),
            power(&complete(3), 2).unwrap(),
            negative_unit_power(&cycle(5), 1).unwrap(),
        ];
        for g in graphs {
            let text = to_json(&g);
            let back = from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn loops_are_written_once() {
        let g = power(&complete(2), 2).unwrap();
        assert_eq!(
            to_json(&g),
            "{\"format\":\"gpc-graph-v1\",\"vertices\":[\"0\",\"1\"],\
             \"edges\":[[\"0\",\"0\"],[\"1\",\"1\"]]}\n"
        );
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            r#"{"format":"other","vertices":[],"edges":[]}"#,
            r#"{"format":"gpc-graph-v1","vertices":["a"],"edges":[["a","b"]]}"#,
            r#"{"format":"gpc-graph-v1","vertices":["a","a"],"edges":[]}"#,
            r#"{"format":"gpc-graph-v1","vertices":["a","b"],"edges":[["a","b"],["b","a"]]}"#,
            r#"{"format":"gpc-graph-v1","vertices":[]}"#,
        ];
        for text in bad {
            assert!(from_json(text).is_err(), "{text}");
        }
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&cycle(3));
        assert_eq!(
            dot,
            "graph G {\n  \"0\";\n  \"1\";\n  \"2\";\n  \"0\" -- \"1\";\n  \"0\" -- \"2\";\n  \"1\" -- \"2\";\n}\n"
        );
    }
}
