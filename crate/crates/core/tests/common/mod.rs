//! Reference implementations written straight from the process definitions.
//! Quadratic and allocation-heavy on purpose; only for cross-checking.

#![allow(dead_code)]

use hamming_bootstrap::Graph;
use proptest::prelude::*;

/// Synchronous rounds of a threshold process on elements `0..universe`,
/// where `support(i, active)` counts the active elements that element `i`
/// listens to. Returns the newly activated elements of each round.
fn naive_rounds(
    universe: usize,
    seed: &[usize],
    mut ready: impl FnMut(usize, &[bool]) -> bool,
) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut active = vec![false; universe];
    for &i in seed {
        active[i] = true;
    }
    let mut rounds = Vec::new();
    loop {
        let fresh: Vec<usize> = (0..universe).filter(|&i| !active[i] && ready(i, &active)).collect();
        if fresh.is_empty() {
            return (rounds, active);
        }
        for &i in &fresh {
            active[i] = true;
        }
        rounds.push(fresh);
    }
}

pub fn naive_vertex(g: &Graph, r: usize, seed: &[usize]) -> (Vec<Vec<usize>>, Vec<bool>) {
    naive_rounds(g.vertex_count(), seed, |v, active| {
        g.neighbors(v).iter().filter(|&&w| active[w]).count() >= r
    })
}

fn active_edges_at(g: &Graph, x: usize, skip: usize, active: &[bool]) -> usize {
    (0..g.edge_count())
        .filter(|&f| f != skip && active[f])
        .filter(|&f| {
            let (a, b) = g.edge(f);
            a == x || b == x
        })
        .count()
}

pub fn naive_star(g: &Graph, r: usize, seed: &[usize]) -> (Vec<Vec<usize>>, Vec<bool>) {
    naive_rounds(g.edge_count(), seed, |e, active| {
        let (u, v) = g.edge(e);
        active_edges_at(g, u, e, active) >= r || active_edges_at(g, v, e, active) >= r
    })
}

pub fn naive_line(g: &Graph, r: usize, seed: &[usize]) -> (Vec<Vec<usize>>, Vec<bool>) {
    naive_rounds(g.edge_count(), seed, |e, active| {
        let (u, v) = g.edge(e);
        active_edges_at(g, u, e, active) + active_edges_at(g, v, e, active) >= r
    })
}

/// Smallest `k` such that some `k`-subset of `0..universe` passes `percolates`,
/// by plain enumeration over bitmasks.
pub fn naive_minimum(universe: usize, mut percolates: impl FnMut(&[usize]) -> bool) -> usize {
    assert!(universe <= 20);
    let mut best = universe;
    for mask in 0u32..(1 << universe) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let members: Vec<usize> = (0..universe).filter(|&i| mask >> i & 1 == 1).collect();
        if percolates(&members) {
            best = size;
        }
    }
    best
}

/// All `k`-subsets of `0..n`, as bitmask-derived index lists.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Simple graphs on `1..=max_n` vertices.
pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with a random vertex subset and a random edge subset.
pub fn graph_with_subsets(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        let m = g.edge_count();
        (
            Just(g),
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), m),
        )
            .prop_map(|(g, vs, es)| {
                let pick = |bits: Vec<bool>| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
                (g, pick(vs), pick(es))
            })
    })
}
