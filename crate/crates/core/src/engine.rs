//! Percolation processes and their synchronous activation traces.
//!
//! Three processes are provided:
//!
//! * [`percolate_vertices`]: `r`-neighbor bootstrap percolation. An inactive
//!   vertex activates once at least `r` of its neighbors are active.
//! * [`percolate_edges_star`]: the `S_{r+1}`-bootstrap (weak saturation)
//!   process. An inactive edge `uv` activates once `u` or `v` carries at least
//!   `r` active edges.
//! * [`percolate_edges_linegraph`]: the edge form of `r`-neighbor percolation
//!   on `L(G)`. An inactive edge `uv` activates once the active edges at `u`
//!   plus the active edges at `v` number at least `r`.
//!
//! Every run is processed in synchronous rounds: round `i` holds exactly the
//! elements whose activation condition holds against the state after round
//! `i - 1`. Within a round the work is driven by per-element counters, so only
//! elements whose counters changed are re-examined.

use serde::Serialize;

use crate::graph::Graph;
use crate::sets::{EdgeSet, Edges, ElementSet, VertexSet, Vertices};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivationTrace<K> {
    seed: ElementSet<K>,
    rounds: Vec<Vec<usize>>,
    final_set: ElementSet<K>,
    counter_updates: usize,
}

impl<K> ActivationTrace<K> {
    pub fn seed(&self) -> &ElementSet<K> {
        &self.seed
    }

    /// Newly activated elements per round, each round ascending. The trace
    /// stops before the first round that would add nothing.
    pub fn rounds(&self) -> &[Vec<usize>] {
        &self.rounds
    }

    pub fn final_set(&self) -> &ElementSet<K> {
        &self.final_set
    }

    pub fn percolated(&self) -> bool {
        self.final_set.is_full()
    }

    /// Number of counter increments and incidence scans the run performed.
    pub fn counter_updates(&self) -> usize {
        self.counter_updates
    }

    fn report_with<T, F: Fn(usize) -> T>(&self, f: F) -> TraceReport<T> {
        TraceReport {
            seed: self.seed.iter().map(&f).collect(),
            rounds: self
                .rounds
                .iter()
                .map(|round| round.iter().map(|&i| f(i)).collect())
                .collect(),
            final_set: self.final_set.iter().map(&f).collect(),
            percolated: self.percolated(),
        }
    }
}

impl ActivationTrace<Vertices> {
    pub fn report(&self) -> TraceReport<usize> {
        self.report_with(|v| v)
    }
}

impl ActivationTrace<Edges> {
    /// Edges are reported as `[u, v]` endpoint pairs of `g`.
    pub fn report(&self, g: &Graph) -> TraceReport<[usize; 2]> {
        self.report_with(|id| {
            let (u, v) = g.edge(id);
            [u, v]
        })
    }
}

/// Serializable form of a trace, the JSON emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport<T> {
    pub seed: Vec<T>,
    pub rounds: Vec<Vec<T>>,
    #[serde(rename = "final")]
    pub final_set: Vec<T>,
    pub percolated: bool,
}

/// `r`-neighbor bootstrap percolation of `seed` on `g`.
///
/// With `r = 0` every inactive vertex activates in round one.
pub fn percolate_vertices(g: &Graph, r: usize, seed: &VertexSet) -> ActivationTrace<Vertices> {
    let n = g.vertex_count();
    assert_eq!(seed.universe(), n, "seed universe must match the graph");
    let mut active = seed.clone();
    let mut count = vec![0usize; n];
    let mut updates = 0;

    for v in seed.iter() {
        for &w in g.neighbors(v) {
            count[w] += 1;
            updates += 1;
        }
    }
    let mut round: Vec<usize> = (0..n).filter(|&v| !active.contains(v) && count[v] >= r).collect();
    let mut rounds = Vec::new();

    while !round.is_empty() {
        for &v in &round {
            active.insert(v);
        }
        let mut next = Vec::new();
        for &v in &round {
            for &w in g.neighbors(v) {
                count[w] += 1;
                updates += 1;
                // Reaching the threshold happens on exactly one increment.
                if count[w] == r && !active.contains(w) {
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        rounds.push(std::mem::replace(&mut round, next));
    }

    ActivationTrace {
        seed: seed.clone(),
        rounds,
        final_set: active,
        counter_updates: updates,
    }
}

pub fn is_percolating_vertices(g: &Graph, r: usize, seed: &VertexSet) -> bool {
    percolate_vertices(g, r, seed).percolated()
}

/// `S_{r+1}`-bootstrap percolation of an edge seed: edge `uv` activates when
/// `u` or `v` is incident to at least `r` active edges.
pub fn percolate_edges_star(g: &Graph, r: usize, seed: &EdgeSet) -> ActivationTrace<Edges> {
    let m = g.edge_count();
    assert_eq!(seed.universe(), m, "seed universe must match the graph");
    let mut active = seed.clone();
    let mut at_vertex = vec![0usize; g.vertex_count()];
    let mut updates = 0;

    for id in seed.iter() {
        let (u, v) = g.edge(id);
        at_vertex[u] += 1;
        at_vertex[v] += 1;
        updates += 2;
    }
    let mut round: Vec<usize> = (0..m)
        .filter(|&id| {
            let (u, v) = g.edge(id);
            !active.contains(id) && (at_vertex[u] >= r || at_vertex[v] >= r)
        })
        .collect();
    let mut rounds = Vec::new();

    while !round.is_empty() {
        for &id in &round {
            active.insert(id);
        }
        let mut next = Vec::new();
        for &id in &round {
            let (u, v) = g.edge(id);
            for x in [u, v] {
                at_vertex[x] += 1;
                updates += 1;
                if at_vertex[x] == r {
                    for &f in g.incident_edges(x) {
                        updates += 1;
                        if !active.contains(f) {
                            next.push(f);
                        }
                    }
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        rounds.push(std::mem::replace(&mut round, next));
    }

    ActivationTrace {
        seed: seed.clone(),
        rounds,
        final_set: active,
        counter_updates: updates,
    }
}

pub fn is_percolating_edges_star(g: &Graph, r: usize, seed: &EdgeSet) -> bool {
    percolate_edges_star(g, r, seed).percolated()
}

/// Edge process equivalent to `r`-neighbor percolation on `L(g)`: edge `uv`
/// activates when the active edges at `u` and at `v`, excluding `uv` itself,
/// number at least `r` together.
pub fn percolate_edges_linegraph(g: &Graph, r: usize, seed: &EdgeSet) -> ActivationTrace<Edges> {
    let m = g.edge_count();
    assert_eq!(seed.universe(), m, "seed universe must match the graph");
    let mut active = seed.clone();
    let mut at_vertex = vec![0usize; g.vertex_count()];
    let mut updates = 0;

    for id in seed.iter() {
        let (u, v) = g.edge(id);
        at_vertex[u] += 1;
        at_vertex[v] += 1;
        updates += 2;
    }
    // A candidate edge is inactive, so it is never counted at its own endpoints.
    let ready = |id: usize, at_vertex: &[usize]| {
        let (u, v) = g.edge(id);
        at_vertex[u] + at_vertex[v] >= r
    };
    let mut round: Vec<usize> = (0..m)
        .filter(|&id| !active.contains(id) && ready(id, &at_vertex))
        .collect();
    let mut rounds = Vec::new();

    while !round.is_empty() {
        for &id in &round {
            active.insert(id);
        }
        let mut touched = Vec::with_capacity(2 * round.len());
        for &id in &round {
            let (u, v) = g.edge(id);
            at_vertex[u] += 1;
            at_vertex[v] += 1;
            updates += 2;
            touched.push(u);
            touched.push(v);
        }
        touched.sort_unstable();
        touched.dedup();
        let mut next = Vec::new();
        for x in touched {
            for &f in g.incident_edges(x) {
                updates += 1;
                if !active.contains(f) && ready(f, &at_vertex) {
                    next.push(f);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        rounds.push(std::mem::replace(&mut round, next));
    }

    ActivationTrace {
        seed: seed.clone(),
        rounds,
        final_set: active,
        counter_updates: updates,
    }
}

pub fn is_percolating_edges_linegraph(g: &Graph, r: usize, seed: &EdgeSet) -> bool {
    percolate_edges_linegraph(g, r, seed).percolated()
}

/// Which of the three processes to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Process {
    Vertex,
    Star,
    Line,
}

impl std::str::FromStr for Process {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Process> {
        match s {
            "vertex" => Ok(Process::Vertex),
            "star" => Ok(Process::Star),
            "line" => Ok(Process::Line),
            other => Err(crate::Error::precondition(format!(
                "unknown process `{other}` (expected vertex, star or line)"
            ))),
        }
    }
}
