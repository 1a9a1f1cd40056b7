use std::fs;

use clap::Args;
use mbd_core::{from_graph6, generate, Graph};

use crate::Failure;

/// Exactly one way of naming the input graph.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// graph6 string
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge list "n m" followed by m pairs; a literal \n separates lines
    #[arg(long)]
    pub edges: Option<String>,
    /// File holding a graph6 line or an edge list
    #[arg(long)]
    pub file: Option<String>,
    /// Generator, e.g. path:4, Hm:3, fig1_H
    #[arg(long)]
    pub gen: Option<String>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, Failure> {
        if let Some(s) = &self.g6 {
            Ok(from_graph6(s)?)
        } else if let Some(s) = &self.edges {
            Ok(Graph::from_edge_list(&s.replace("\\n", "\n"))?)
        } else if let Some(path) = &self.file {
            from_file(path)
        } else {
            Ok(generate(self.gen.as_deref().unwrap_or_default())?)
        }
    }
}

fn from_file(path: &str) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}")))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    // an edge list starts with two integers
    if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        Ok(Graph::from_edge_list(&text)?)
    } else {
        Ok(from_graph6(first)?)
    }
}

/// A graph given as one string: `gen:<spec>`, `g6:<graph6>`, `file:<path>`,
/// `edges:<list>`, or a bare graph6 string.
pub fn parse_graph_arg(s: &str) -> Result<Graph, Failure> {
    if s.starts_with("gen:") {
        Ok(generate(s)?)
    } else if let Some(rest) = s.strip_prefix("g6:") {
        Ok(from_graph6(rest)?)
    } else if let Some(rest) = s.strip_prefix("file:") {
        from_file(rest)
    } else if let Some(rest) = s.strip_prefix("edges:") {
        Ok(Graph::from_edge_list(&rest.replace("\\n", "\n"))?)
    } else {
        Ok(from_graph6(s)?)
    }
}

/// Vertex given by label or index.
pub fn parse_vertex(g: &Graph, s: &str) -> Result<usize, Failure> {
    let s = s.trim();
    g.find_vertex(s)
        .ok_or_else(|| Failure::parse(format!("no vertex {s:?} in a graph of order {}", g.order())))
}
