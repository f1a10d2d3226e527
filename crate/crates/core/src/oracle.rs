//! Exhaustive minimum percolating sets on tiny instances.
//!
//! Search ascends the seed size and, within a size, walks combinations of the
//! non-mandatory elements in lexicographic order. Elements that no process
//! step can ever activate are forced into every seed.

use rayon::prelude::*;

use crate::engine::{is_percolating_edges_linegraph, is_percolating_edges_star, is_percolating_vertices, Process};
use crate::error::{Error, Result};
use crate::formulas::binomial;
use crate::graph::Graph;
use crate::sets::{EdgeSet, ElementSet, VertexSet};

pub const DEFAULT_ENGINE_BUDGET: u64 = 10_000_000;
/// Vertex graphs up to this size are searched without conditions.
pub const DEFAULT_VERTEX_CAP: usize = 16;
/// Larger vertex graphs are accepted when at most `DEFAULT_VERTEX_CAP`
/// vertices remain free after pruning.
pub const DEFAULT_PRUNED_VERTEX_CAP: usize = 25;
pub const DEFAULT_EDGE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub vertex_cap: usize,
    pub pruned_vertex_cap: usize,
    pub edge_cap: usize,
    /// Maximum number of engine invocations.
    pub budget: u64,
    /// Partition each size level by first free element and search the parts
    /// on the current rayon pool.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            vertex_cap: DEFAULT_VERTEX_CAP,
            pruned_vertex_cap: DEFAULT_PRUNED_VERTEX_CAP,
            edge_cap: DEFAULT_EDGE_CAP,
            budget: DEFAULT_ENGINE_BUDGET,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<K> {
    pub minimum: usize,
    /// Lexicographically first percolating set of minimum size.
    pub witness: ElementSet<K>,
    pub engine_calls: u64,
}

pub type VertexSearch = SearchResult<crate::sets::Vertices>;
pub type EdgeSearch = SearchResult<crate::sets::Edges>;

pub fn min_percolating_vertices(g: &Graph, r: usize) -> Result<VertexSearch> {
    min_percolating_vertices_with(g, r, &OracleConfig::default())
}

pub fn min_percolating_vertices_with(g: &Graph, r: usize, cfg: &OracleConfig) -> Result<VertexSearch> {
    let n = g.vertex_count();
    let mandatory: Vec<bool> = (0..n).map(|v| g.degree(v) < r).collect();
    let free = mandatory.iter().filter(|&&m| !m).count();
    let within = n <= cfg.vertex_cap || (n <= cfg.pruned_vertex_cap && free <= cfg.vertex_cap);
    if !within {
        return Err(Error::ResourceLimit {
            what: "oracle vertices",
            requested: n as u128,
            limit: if n <= cfg.pruned_vertex_cap { cfg.vertex_cap } else { cfg.pruned_vertex_cap } as u128,
        });
    }
    search(n, &mandatory, cfg, |seed: &VertexSet| is_percolating_vertices(g, r, seed))
}

pub fn min_percolating_edges_star(g: &Graph, r: usize) -> Result<EdgeSearch> {
    min_percolating_edges_star_with(g, r, &OracleConfig::default())
}

/// An edge whose endpoints both have degree at most `r` never sees `r` other
/// active edges at either end.
pub fn min_percolating_edges_star_with(g: &Graph, r: usize, cfg: &OracleConfig) -> Result<EdgeSearch> {
    check_edge_cap(g, cfg)?;
    let mandatory: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) < r + 1 && g.degree(v) < r + 1)
        .collect();
    search(g.edge_count(), &mandatory, cfg, |seed: &EdgeSet| is_percolating_edges_star(g, r, seed))
}

pub fn min_percolating_edges_line(g: &Graph, r: usize) -> Result<EdgeSearch> {
    min_percolating_edges_line_with(g, r, &OracleConfig::default())
}

/// An edge with fewer than `r` adjacent edges in total can never activate.
pub fn min_percolating_edges_line_with(g: &Graph, r: usize, cfg: &OracleConfig) -> Result<EdgeSearch> {
    check_edge_cap(g, cfg)?;
    let mandatory: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v) - 2 < r)
        .collect();
    search(g.edge_count(), &mandatory, cfg, |seed: &EdgeSet| is_percolating_edges_linegraph(g, r, seed))
}

fn check_edge_cap(g: &Graph, cfg: &OracleConfig) -> Result<()> {
    if g.edge_count() > cfg.edge_cap {
        return Err(Error::ResourceLimit {
            what: "oracle edges",
            requested: g.edge_count() as u128,
            limit: cfg.edge_cap as u128,
        });
    }
    Ok(())
}

/// Dispatch on the process kind. Vertex searches return vertex indices; edge
/// searches return edge ids of `g`.
pub fn min_percolating(g: &Graph, r: usize, process: Process, cfg: &OracleConfig) -> Result<(usize, Vec<usize>, u64)> {
    Ok(match process {
        Process::Vertex => {
            let s = min_percolating_vertices_with(g, r, cfg)?;
            (s.minimum, s.witness.to_vec(), s.engine_calls)
        }
        Process::Star => {
            let s = min_percolating_edges_star_with(g, r, cfg)?;
            (s.minimum, s.witness.to_vec(), s.engine_calls)
        }
        Process::Line => {
            let s = min_percolating_edges_line_with(g, r, cfg)?;
            (s.minimum, s.witness.to_vec(), s.engine_calls)
        }
    })
}

fn search<K, F>(universe: usize, mandatory: &[bool], cfg: &OracleConfig, percolates: F) -> Result<SearchResult<K>>
where
    K: Send + Sync,
    F: Fn(&ElementSet<K>) -> bool + Sync,
{
    let forced: Vec<usize> = (0..universe).filter(|&i| mandatory[i]).collect();
    let free: Vec<usize> = (0..universe).filter(|&i| !mandatory[i]).collect();
    let mut calls = 0u64;

    for picks in 0..=free.len() {
        let level = binomial(free.len() as u64, picks as u64);
        if calls as u128 + level > cfg.budget as u128 {
            // Budget is checked per level so the outcome never depends on scheduling.
            return Err(Error::ResourceLimit {
                what: "oracle engine calls",
                requested: calls as u128 + level,
                limit: cfg.budget as u128,
            });
        }
        let test = |combo: &[usize]| -> bool {
            let set = ElementSet::from_indices(universe, forced.iter().copied().chain(combo.iter().map(|&i| free[i])))
                .expect("indices lie in the universe");
            percolates(&set)
        };
        let hit = if picks == 0 {
            calls += 1;
            test(&[]).then(Vec::new)
        } else if cfg.parallel {
            let parts: Vec<(Option<Vec<usize>>, u64)> = (0..=free.len() - picks)
                .into_par_iter()
                .map(|first| first_hit_with_prefix(free.len(), picks, first, &test))
                .collect();
            calls += parts.iter().map(|p| p.1).sum::<u64>();
            parts.into_iter().find_map(|p| p.0)
        } else {
            let mut found = None;
            for first in 0..=free.len() - picks {
                let (hit, used) = first_hit_with_prefix(free.len(), picks, first, &test);
                calls += used;
                if hit.is_some() {
                    found = hit;
                    break;
                }
            }
            found
        };
        if let Some(combo) = hit {
            let witness = ElementSet::from_indices(universe, forced.iter().copied().chain(combo.iter().map(|&i| free[i])))?;
            return Ok(SearchResult {
                minimum: witness.len(),
                witness,
                engine_calls: calls,
            });
        }
    }
    // The full universe always percolates, so the loop returns before here.
    Err(Error::Verification("no percolating set found".into()))
}

/// Lexicographically first `k`-combination of `0..n` starting with `first`
/// that passes `test`, and the number of tests run.
fn first_hit_with_prefix(n: usize, k: usize, first: usize, test: &impl Fn(&[usize]) -> bool) -> (Option<Vec<usize>>, u64) {
    let mut combo: Vec<usize> = (first..first + k).collect();
    let mut calls = 0;
    loop {
        calls += 1;
        if test(&combo) {
            return (Some(combo), calls);
        }
        // Advance the tail, keeping combo[0] fixed.
        let mut i = k;
        loop {
            if i == 1 {
                return (None, calls);
            }
            i -= 1;
            if combo[i] < n - k + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, HammingSpace};

    #[test]
    fn complete_graph_vertices() {
        let r = min_percolating_vertices(&make_complete(4), 3).unwrap();
        assert_eq!(r.minimum, 3);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2]);
        assert_eq!(min_percolating_vertices(&make_complete(4), 0).unwrap().minimum, 0);
    }

    #[test]
    fn hamming_3_2() {
        let space = HammingSpace::new(3, 2).unwrap();
        let r = min_percolating_vertices(&space.graph().unwrap(), 2).unwrap();
        assert_eq!(r.minimum, 2);
        assert!(is_percolating_vertices(&space.graph().unwrap(), 2, &r.witness));
    }

    #[test]
    fn star_examples() {
        assert_eq!(min_percolating_edges_star(&make_complete(4), 2).unwrap().minimum, 3);
        assert_eq!(min_percolating_edges_star(&make_complete(3), 2).unwrap().minimum, 3);
        for n in 2..=5 {
            assert_eq!(min_percolating_edges_star(&make_complete(n), 1).unwrap().minimum, 1);
        }
    }

    #[test]
    fn line_examples() {
        assert_eq!(min_percolating_edges_line(&make_complete(4), 2).unwrap().minimum, 2);
        assert_eq!(min_percolating_edges_line(&make_complete(4), 1).unwrap().minimum, 1);
        assert_eq!(min_percolating_edges_line(&make_complete(3), 4).unwrap().minimum, 3);
    }

    #[test]
    fn parallel_matches_sequential_witness() {
        let g = HammingSpace::new(3, 2).unwrap().graph().unwrap();
        let par = OracleConfig { parallel: true, ..OracleConfig::default() };
        for r in 1..=3 {
            let a = min_percolating_vertices(&g, r).unwrap();
            let b = min_percolating_vertices_with(&g, r, &par).unwrap();
            assert_eq!(a.minimum, b.minimum);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn caps_and_budget() {
        let big = HammingSpace::new(5, 2).unwrap().graph().unwrap();
        assert!(matches!(min_percolating_vertices(&big, 2), Err(Error::ResourceLimit { .. })));
        assert!(matches!(min_percolating_edges_star(&make_complete(7), 2), Err(Error::ResourceLimit { .. })));
        let tight = OracleConfig { budget: 3, ..OracleConfig::default() };
        assert!(matches!(
            min_percolating_vertices_with(&make_complete(6), 3, &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn prefix_enumeration_is_lexicographic() {
        let seen = std::cell::RefCell::new(Vec::new());
        let (hit, calls) = first_hit_with_prefix(5, 3, 1, &|c: &[usize]| {
            seen.borrow_mut().push(c.to_vec());
            false
        });
        assert!(hit.is_none());
        assert_eq!(calls, 3);
        assert_eq!(seen.borrow()[0], vec![1, 2, 3]);
        assert_eq!(seen.borrow()[2], vec![1, 3, 4]);
    }
}
