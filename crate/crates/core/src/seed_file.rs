//! Seed file format: one element per line, `v <index>` for vertices and
//! `e <u> <v>` for edges. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{EdgeSet, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl Seed {
    pub fn len(&self) -> usize {
        match self {
            Seed::Vertices(v) => v.len(),
            Seed::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertex set on `g`. An empty seed of either kind converts.
    pub fn to_vertex_set(&self, g: &Graph) -> Result<VertexSet> {
        match self {
            Seed::Vertices(v) => VertexSet::from_indices(g.vertex_count(), v.iter().copied()),
            Seed::Edges(e) if e.is_empty() => Ok(VertexSet::empty(g.vertex_count())),
            Seed::Edges(_) => Err(Error::precondition("vertex process needs a vertex seed")),
        }
    }

    pub fn to_edge_set(&self, g: &Graph) -> Result<EdgeSet> {
        match self {
            Seed::Edges(e) => EdgeSet::from_pairs(g, e.iter().copied()),
            Seed::Vertices(v) if v.is_empty() => Ok(EdgeSet::empty(g.edge_count())),
            Seed::Vertices(_) => Err(Error::precondition("edge process needs an edge seed")),
        }
    }
}

pub fn parse_seed(text: &str) -> Result<Seed> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad integer `{s}`: {e}")))
        };
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["v", i] => vertices.push(num(i)?),
            ["e", u, v] => edges.push((num(u)?, num(v)?)),
            _ => return Err(err(format!("unrecognized line `{line}`"))),
        }
        if !vertices.is_empty() && !edges.is_empty() {
            return Err(err("seed mixes vertices and edges".into()));
        }
    }
    Ok(if edges.is_empty() {
        Seed::Vertices(vertices)
    } else {
        Seed::Edges(edges)
    })
}

pub fn write_vertex_seed(seed: &VertexSet) -> String {
    let mut out = String::new();
    for v in seed.iter() {
        let _ = writeln!(out, "v {v}");
    }
    out
}

/// Edges are written as `e u v` with `u < v`, in edge-id order.
pub fn write_edge_seed(g: &Graph, seed: &EdgeSet) -> String {
    let mut out = String::new();
    for (u, v) in seed.pairs(g) {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
