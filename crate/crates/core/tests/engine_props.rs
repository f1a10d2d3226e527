mod common;

use common::{graph_with_subsets, naive_line, naive_star, naive_vertex};
use hamming_bootstrap::{
    make_complete, make_line_graph, percolate_edges_linegraph, percolate_edges_star, percolate_vertices, EdgeSet,
    ElementSet, HammingSpace, VertexSet,
};
use proptest::prelude::*;

fn bits_to_vec(bits: &[bool]) -> Vec<usize> {
    bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vertex_rounds_match_definition((g, vs, _) in graph_with_subsets(9), r in 0usize..6) {
        let seed = VertexSet::from_indices(g.vertex_count(), vs.iter().copied()).unwrap();
        let trace = percolate_vertices(&g, r, &seed);
        let (rounds, fin) = naive_vertex(&g, r, &vs);
        prop_assert_eq!(trace.rounds(), rounds.as_slice());
        prop_assert_eq!(trace.final_set().to_vec(), bits_to_vec(&fin));
    }

    #[test]
    fn star_rounds_match_definition((g, _, es) in graph_with_subsets(7), r in 0usize..6) {
        let seed = EdgeSet::from_indices(g.edge_count(), es.iter().copied()).unwrap();
        let trace = percolate_edges_star(&g, r, &seed);
        let (rounds, fin) = naive_star(&g, r, &es);
        prop_assert_eq!(trace.rounds(), rounds.as_slice());
        prop_assert_eq!(trace.final_set().to_vec(), bits_to_vec(&fin));
    }

    #[test]
    fn line_rounds_match_definition((g, _, es) in graph_with_subsets(7), r in 0usize..7) {
        let seed = EdgeSet::from_indices(g.edge_count(), es.iter().copied()).unwrap();
        let trace = percolate_edges_linegraph(&g, r, &seed);
        let (rounds, fin) = naive_line(&g, r, &es);
        prop_assert_eq!(trace.rounds(), rounds.as_slice());
        prop_assert_eq!(trace.final_set().to_vec(), bits_to_vec(&fin));
    }

    #[test]
    fn line_process_is_vertex_process_on_line_graph((g, _, es) in graph_with_subsets(8), r in 0usize..=6) {
        let (line, map) = make_line_graph(&g);
        prop_assert_eq!(map.len(), g.edge_count());
        let seed = EdgeSet::from_indices(g.edge_count(), es.iter().copied()).unwrap();
        let image = VertexSet::from_indices(line.vertex_count(), es.iter().copied()).unwrap();
        let a = percolate_edges_linegraph(&g, r, &seed);
        let b = percolate_vertices(&line, r, &image);
        prop_assert_eq!(a.rounds(), b.rounds());
        prop_assert_eq!(a.final_set().to_vec(), b.final_set().to_vec());
    }

    #[test]
    fn closure_is_idempotent((g, vs, es) in graph_with_subsets(8), r in 0usize..5) {
        let v = percolate_vertices(&g, r, &VertexSet::from_indices(g.vertex_count(), vs).unwrap());
        let again = percolate_vertices(&g, r, v.final_set());
        prop_assert!(again.rounds().is_empty());
        prop_assert_eq!(again.final_set(), v.final_set());

        let seed = EdgeSet::from_indices(g.edge_count(), es).unwrap();
        let s = percolate_edges_star(&g, r, &seed);
        prop_assert!(percolate_edges_star(&g, r, s.final_set()).rounds().is_empty());
        let l = percolate_edges_linegraph(&g, r, &seed);
        prop_assert!(percolate_edges_linegraph(&g, r, l.final_set()).rounds().is_empty());
    }

    #[test]
    fn monotone_in_seed_and_threshold(
        (g, vs, es) in graph_with_subsets(8),
        extra_v in prop::collection::vec(0usize..8, 0..4),
        r in 0usize..5,
    ) {
        let n = g.vertex_count();
        let small = VertexSet::from_indices(n, vs.iter().copied()).unwrap();
        let mut big = small.clone();
        big.union_with(&VertexSet::from_indices(n, extra_v.into_iter().filter(|&v| v < n)).unwrap());
        let f_small = percolate_vertices(&g, r, &small);
        prop_assert!(f_small.final_set().is_subset(percolate_vertices(&g, r, &big).final_set()));
        prop_assert!(percolate_vertices(&g, r + 1, &small).final_set().is_subset(f_small.final_set()));

        let seed = EdgeSet::from_indices(g.edge_count(), es).unwrap();
        let star = percolate_edges_star(&g, r, &seed);
        prop_assert!(percolate_edges_star(&g, r + 1, &seed).final_set().is_subset(star.final_set()));
        let line = percolate_edges_linegraph(&g, r, &seed);
        prop_assert!(percolate_edges_linegraph(&g, r + 1, &seed).final_set().is_subset(line.final_set()));
    }

    /// Each activated vertex, seed included, scans its neighbors exactly once.
    #[test]
    fn counter_updates_are_linear((g, vs, _) in graph_with_subsets(10), r in 0usize..5) {
        let trace = percolate_vertices(&g, r, &VertexSet::from_indices(g.vertex_count(), vs).unwrap());
        let scanned: usize = trace.final_set().iter().map(|v| g.degree(v)).sum();
        prop_assert_eq!(trace.counter_updates(), scanned);
        prop_assert!(trace.counter_updates() <= g.vertex_count() + 2 * g.edge_count());
    }
}

#[test]
fn r_zero_activates_everything_in_one_round() {
    let g = HammingSpace::new(3, 2).unwrap().graph().unwrap();
    let trace = percolate_vertices(&g, 0, &VertexSet::empty(9));
    assert_eq!(trace.rounds().len(), 1);
    assert!(trace.percolated());
    let k4 = make_complete(4);
    let star = percolate_edges_star(&k4, 0, &ElementSet::empty(6));
    assert_eq!(star.rounds(), &[vec![0, 1, 2, 3, 4, 5]]);
    assert!(percolate_edges_linegraph(&k4, 0, &ElementSet::empty(6)).percolated());
}

#[test]
fn trace_reports_serialize_endpoints() {
    let k3 = make_complete(3);
    let seed = EdgeSet::from_pairs(&k3, [(0, 1), (1, 2)]).unwrap();
    let report = percolate_edges_star(&k3, 1, &seed).report(&k3);
    assert_eq!(report.seed, vec![[0, 1], [1, 2]]);
    assert_eq!(report.rounds, vec![vec![[0, 2]]]);
    assert!(report.percolated);
}
