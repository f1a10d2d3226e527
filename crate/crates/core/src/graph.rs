//! Finite simple undirected graphs and the families used throughout the crate:
//! complete graphs, Cartesian products, Hamming graphs `K_n^d` and line graphs.
//!
//! Vertices are `0..vertex_count`. Edges are stored as normalized `(min, max)`
//! pairs in lexicographic order; the position of an edge in that order is its
//! edge id, which is what [`EdgeSet`](crate::EdgeSet) and edge colorings index by.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest vertex count a Hamming graph may have unless a cap is given explicitly.
pub const DEFAULT_VERTEX_CAP: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_ids: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range endpoints
    /// and repeated edges.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph::from_sorted(vertex_count, normalized))
    }

    /// `edges` must be normalized, sorted and duplicate free.
    fn from_sorted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        let mut edge_ids = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
            edge_ids.insert((u, v), id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            incident,
            edges,
            edge_ids,
        }
    }

    fn from_unsorted(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Graph {
        edges.sort_unstable();
        Graph::from_sorted(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Ids of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// All edges as `(u, v)` with `u < v`, in edge-id order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_ids.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Writes the `p`/`e` text format with edges in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    /// Parses the `p`/`e` text format. Blank lines and lines starting with `#`
    /// are skipped.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", n, m] => {
                    if header.is_some() {
                        return Err(parse_err("repeated header".into()));
                    }
                    let n = parse_usize(n).map_err(&parse_err)?;
                    let m = parse_usize(m).map_err(&parse_err)?;
                    header = Some((n, m));
                }
                ["e", u, v] => {
                    if header.is_none() {
                        return Err(parse_err("edge before header".into()));
                    }
                    let u = parse_usize(u).map_err(&parse_err)?;
                    let v = parse_usize(v).map_err(&parse_err)?;
                    edges.push((u, v));
                }
                _ => return Err(parse_err(format!("unrecognized line `{line}`"))),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `p` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }
}

fn parse_usize(s: &str) -> std::result::Result<usize, String> {
    s.parse::<usize>()
        .map_err(|e| format!("bad integer `{s}`: {e}"))
}

/// `K_n` on vertices `0..n`.
pub fn make_complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_sorted(n, edges)
}

/// `G □ H`. Vertex `(a, b)` gets index `a * |V(H)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let gn = g.vertex_count();
    let hn = h.vertex_count();
    let mut edges = Vec::with_capacity(gn * h.edge_count() + hn * g.edge_count());
    for a in 0..gn {
        for &(b1, b2) in h.edges() {
            edges.push((a * hn + b1, a * hn + b2));
        }
    }
    for &(a1, a2) in g.edges() {
        for b in 0..hn {
            edges.push((a1 * hn + b, a2 * hn + b));
        }
    }
    Graph::from_unsorted(gn * hn, edges)
}

/// Codec between flat indices and points of `[n]^d`. The first coordinate is
/// the most significant digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HammingSpace {
    n: usize,
    d: usize,
}

impl HammingSpace {
    pub fn new(n: usize, d: usize) -> Result<HammingSpace> {
        if n == 0 || d == 0 {
            return Err(Error::precondition(format!(
                "Hamming space needs n >= 1 and d >= 1, got n={n}, d={d}"
            )));
        }
        Ok(HammingSpace { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `n^d`, or `None` on overflow.
    pub fn vertex_count(&self) -> Option<usize> {
        self.n.checked_pow(u32::try_from(self.d).ok()?)
    }

    pub fn encode(&self, point: &[usize]) -> usize {
        debug_assert_eq!(point.len(), self.d);
        point.iter().fold(0, |acc, &x| {
            debug_assert!(x < self.n);
            acc * self.n + x
        })
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut point = vec![0; self.d];
        for slot in point.iter_mut().rev() {
            *slot = index % self.n;
            index /= self.n;
        }
        point
    }

    pub fn contains(&self, point: &[usize]) -> bool {
        point.len() == self.d && point.iter().all(|&x| x < self.n)
    }

    /// `K_n^d` with the default vertex cap.
    pub fn graph(&self) -> Result<Graph> {
        self.graph_with_cap(DEFAULT_VERTEX_CAP)
    }

    pub fn graph_with_cap(&self, cap: usize) -> Result<Graph> {
        let count = self.vertex_count().filter(|&c| c <= cap).ok_or_else(|| {
            Error::ResourceLimit {
                what: "Hamming graph vertices",
                requested: (self.n as u128).saturating_pow(self.d as u32),
                limit: cap as u128,
            }
        })?;
        let mut edges = Vec::with_capacity(count * self.d * (self.n - 1) / 2);
        let mut stride = 1;
        let mut strides = vec![0; self.d];
        for k in (0..self.d).rev() {
            strides[k] = stride;
            stride *= self.n;
        }
        for i in 0..count {
            let point = self.decode(i);
            for (k, &x) in point.iter().enumerate() {
                for a in x + 1..self.n {
                    edges.push((i, i + (a - x) * strides[k]));
                }
            }
        }
        Ok(Graph::from_unsorted(count, edges))
    }
}

/// `K_n^d` with the default vertex cap.
pub fn make_hamming(space: HammingSpace) -> Result<Graph> {
    space.graph()
}

/// Bijection between the edges of a base graph and the vertices of its line
/// graph: line-graph vertex `i` is base edge id `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndexMap {
    edges: Vec<(usize, usize)>,
    ids: HashMap<(usize, usize), usize>,
}

impl EdgeIndexMap {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_of(&self, line_vertex: usize) -> (usize, usize) {
        self.edges[line_vertex]
    }

    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.ids.get(&(u.min(v), u.max(v))).copied()
    }
}

/// `L(G)` together with the edge/vertex correspondence.
pub fn make_line_graph(g: &Graph) -> (Graph, EdgeIndexMap) {
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident_edges(v);
        for (i, &e1) in inc.iter().enumerate() {
            for &e2 in &inc[i + 1..] {
                edges.push((e1, e2));
            }
        }
    }
    let line = Graph::from_unsorted(g.edge_count(), edges);
    let map = EdgeIndexMap {
        edges: g.edges.clone(),
        ids: g.edge_ids.clone(),
    };
    (line, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake(g: &Graph) -> bool {
        (0..g.vertex_count()).map(|v| g.degree(v)).sum::<usize>() == 2 * g.edge_count()
    }

    #[test]
    fn complete_graphs() {
        let k1 = make_complete(1);
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));

        let k3 = make_complete(3);
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let k4 = make_complete(4);
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert!(handshake(&k4));
    }

    #[test]
    fn products() {
        let q2 = cartesian_product(&make_complete(2), &make_complete(2));
        assert_eq!((q2.vertex_count(), q2.edge_count()), (4, 4));
        assert!((0..4).all(|v| q2.degree(v) == 2));

        let k3k3 = cartesian_product(&make_complete(3), &make_complete(3));
        assert_eq!((k3k3.vertex_count(), k3k3.edge_count()), (9, 18));
        assert!((0..9).all(|v| k3k3.degree(v) == 4));

        let k4 = make_complete(4);
        let same = cartesian_product(&k4, &make_complete(1));
        assert_eq!(same, k4);
    }

    #[test]
    fn product_edge_count_formula() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let h = make_complete(3);
        let p = cartesian_product(&g, &h);
        assert_eq!(p.vertex_count(), 15);
        assert_eq!(p.edge_count(), 5 * h.edge_count() + 3 * g.edge_count());
        assert!(handshake(&p));
    }

    #[test]
    fn hamming_small_cases() {
        let cube = make_hamming(HammingSpace::new(2, 3).unwrap()).unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));

        let h32 = make_hamming(HammingSpace::new(3, 2).unwrap()).unwrap();
        assert_eq!(h32, cartesian_product(&make_complete(3), &make_complete(3)));

        let k6 = make_hamming(HammingSpace::new(6, 1).unwrap()).unwrap();
        assert_eq!(k6, make_complete(6));
    }

    #[test]
    fn hamming_matches_iterated_product() {
        for n in 1..=5 {
            let kn = make_complete(n);
            let mut iterated = kn.clone();
            for d in 1..=3 {
                if d > 1 {
                    iterated = cartesian_product(&iterated, &kn);
                }
                let space = HammingSpace::new(n, d).unwrap();
                let h = make_hamming(space).unwrap();
                assert_eq!(h.edges(), iterated.edges(), "n={n} d={d}");
                let want = d * (n - 1);
                assert!((0..h.vertex_count()).all(|v| h.degree(v) == want));
                assert!(handshake(&h));
            }
        }
    }

    #[test]
    fn hamming_adjacency_is_one_coordinate_difference() {
        let space = HammingSpace::new(3, 3).unwrap();
        let g = space.graph().unwrap();
        for i in 0..27 {
            for j in 0..27 {
                let (a, b) = (space.decode(i), space.decode(j));
                let diff = a.iter().zip(&b).filter(|(x, y)| x != y).count();
                assert_eq!(g.has_edge(i, j), diff == 1);
            }
        }
    }

    #[test]
    fn hamming_codec_round_trip() {
        let space = HammingSpace::new(4, 3).unwrap();
        for i in 0..64 {
            let p = space.decode(i);
            assert!(space.contains(&p));
            assert_eq!(space.encode(&p), i);
        }
        assert_eq!(space.decode(1), vec![0, 0, 1]);
        assert_eq!(space.decode(16), vec![1, 0, 0]);
    }

    #[test]
    fn hamming_vertex_cap() {
        let space = HammingSpace::new(10, 4).unwrap();
        assert!(matches!(
            space.graph_with_cap(9_999),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(HammingSpace::new(0, 2).is_err());
        assert!(HammingSpace::new(2, 0).is_err());
    }

    #[test]
    fn line_graphs() {
        let (l3, _) = make_line_graph(&make_complete(3));
        assert_eq!((l3.vertex_count(), l3.edge_count()), (3, 3));

        for n in 2..=7 {
            let (l, _) = make_line_graph(&make_complete(n));
            assert!((0..l.vertex_count()).all(|v| l.degree(v) == 2 * n - 4));
            assert!(handshake(&l));
        }
        let (l4, _) = make_line_graph(&make_complete(4));
        assert_eq!((l4.vertex_count(), l4.edge_count()), (6, 12));

        let path = Graph::from_edges(2, [(0, 1)]).unwrap();
        let (lp, _) = make_line_graph(&path);
        assert_eq!((lp.vertex_count(), lp.edge_count()), (1, 0));
    }

    #[test]
    fn line_graph_adjacency_means_shared_endpoint() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap();
        let (l, map) = make_line_graph(&g);
        let mut contributed = 0;
        for v in 0..5 {
            let k = g.degree(v);
            contributed += k * k.saturating_sub(1) / 2;
        }
        assert_eq!(l.edge_count(), contributed);
        for a in 0..l.vertex_count() {
            for b in 0..l.vertex_count() {
                if a == b {
                    continue;
                }
                let (x, y) = map.edge_of(a);
                let (z, w) = map.edge_of(b);
                let shared = [x, y].iter().filter(|p| **p == z || **p == w).count();
                assert_eq!(l.has_edge(a, b), shared == 1);
            }
        }
        assert_eq!(map.vertex_of(2, 1), g.edge_id(1, 2));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn text_format() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n");
        assert_eq!(Graph::from_text(&text).unwrap(), g);

        assert!(Graph::from_text("e 0 1\n").is_err());
        assert!(Graph::from_text("p 3 2\ne 0 1\n").is_err());
        assert!(Graph::from_text("p 3 1\ne 0 x\n").is_err());
        let with_comments = "# a path\np 3 2\n\ne 1 0\ne 1 2\n";
        assert_eq!(Graph::from_text(with_comments).unwrap().edges(), &[(0, 1), (1, 2)]);
    }
}
