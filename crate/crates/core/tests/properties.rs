//! Property tests for the library invariants, over randomly generated and
//! exhaustively enumerated small graphs.

mod common;

use std::collections::HashSet;

use competition_core::{
    best_lower_bound, chordal_exact, competition_graph, heuristic_upper_bound, io,
    opsut_edge_bound, opsut_vertex_bound, sano_bound, theta_e, theta_e_restricted, theta_v,
    triangle_free_exact, verify_certificate, Acyclicity, BoundKind, Digraph, Graph, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let arcs = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&a, _)| a);
            Digraph::new(n, arcs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let text = io::render_edge_list(&g);
        prop_assert_eq!(io::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_graph(12)) {
        let text = io::render_graph_json(&g);
        prop_assert_eq!(io::parse_graph_json(&text).unwrap(), g);
    }

    #[test]
    fn digraph_json_round_trip(d in arb_digraph(8)) {
        let text = io::render_digraph_json(&d);
        prop_assert_eq!(io::parse_digraph_json(&text).unwrap(), d);
    }

    #[test]
    fn acyclicity_witnesses_check_out(d in arb_digraph(8)) {
        match d.acyclicity() {
            Acyclicity::Acyclic(ord) => prop_assert!(ord.respects(&d)),
            Acyclicity::Cyclic(cycle) => {
                prop_assert!(!cycle.is_empty());
                for (i, &u) in cycle.iter().enumerate() {
                    let v = cycle[(i + 1) % cycle.len()];
                    prop_assert!(d.out_neighbors(u).contains(v));
                }
            }
        }
    }

    #[test]
    fn incident_edges_lie_in_closed_neighborhood_subgraph(
        g in arb_graph(10),
        raw_subset in proptest::collection::vec(proptest::bool::ANY, 10),
    ) {
        let u: VertexSet = (0..g.vertex_count()).filter(|&v| raw_subset[v]).collect();
        let incident = g.incident_edges(u).unwrap();
        let closed = g.closed_neighborhood(u).unwrap();
        let (sub, map) = g.induced_subgraph(closed).unwrap();
        let back: HashSet<(usize, usize)> = sub
            .edges()
            .iter()
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        for e in incident {
            prop_assert!(back.contains(&e));
        }
    }

    #[test]
    fn maximal_cliques_are_maximal_and_cover(g in arb_graph(10)) {
        let cliques = competition_core::maximal_cliques(&g);
        let mut seen = HashSet::new();
        for c in &cliques {
            prop_assert!(g.is_clique_set(c.members()));
            prop_assert!(seen.insert(c.members()), "duplicate {c:?}");
            for v in g.vertex_set().difference(c.members()).iter() {
                prop_assert!(!g.is_clique_set(c.members().with(v)));
            }
        }
        for &(u, v) in g.edges() {
            prop_assert!(cliques.iter().any(|c| c.members().contains(u) && c.members().contains(v)));
        }
    }

    #[test]
    fn restricted_cover_is_monotone(g in arb_graph(9), cut in 0usize..100) {
        let edges = g.edges().to_vec();
        let take = if edges.is_empty() { 0 } else { cut % (edges.len() + 1) };
        let smaller = theta_e_restricted(&edges[..take], &g).unwrap().size;
        let larger = theta_e_restricted(&edges, &g).unwrap().size;
        prop_assert!(smaller <= larger);
    }

    #[test]
    fn triangle_free_cover_equals_edge_count(g in arb_graph(10)) {
        prop_assume!(g.is_triangle_free());
        prop_assert_eq!(theta_e(&g).unwrap().size, g.edge_count());
    }

    #[test]
    fn competition_edges_only_grow_with_arcs(d in arb_digraph(8), extra in (0usize..8, 0usize..8)) {
        let (u, v) = extra;
        prop_assume!(u != v && u < d.vertex_count() && v < d.vertex_count());
        let mut arcs = d.arcs().to_vec();
        arcs.push((u, v));
        let bigger = Digraph::new(d.vertex_count(), arcs).unwrap();
        let before: HashSet<(usize, usize)> =
            competition_graph(&d).edges().iter().copied().collect();
        let after: HashSet<(usize, usize)> =
            competition_graph(&bigger).edges().iter().copied().collect();
        prop_assert!(before.is_subset(&after));
    }

    #[test]
    fn greedy_certificates_always_verify(g in arb_graph(10)) {
        let cert = heuristic_upper_bound(&g);
        prop_assert!(verify_certificate(&cert).valid);
        let d = competition_core::certificate_to_digraph(&cert).unwrap();
        prop_assert!(d.is_acyclic());
    }

    #[test]
    fn cover_witnesses_have_reported_size_and_validate(g in arb_graph(9)) {
        let e = theta_e(&g).unwrap();
        prop_assert_eq!(e.cover.cliques.len(), e.size);
        prop_assert!(e.cover.is_valid_for(&g));
        let v = theta_v(&g);
        prop_assert_eq!(v.cover.cliques.len(), v.size);
        prop_assert!(v.cover.is_valid_for(&g));
    }
}

/// Independent census of the icosahedron's cliques: exactly 20 triangles
/// among the 220 vertex triples, no 4-clique among the 495 quadruples, and
/// the maximal-clique enumeration returns exactly those triangles.
#[test]
fn icosahedron_maximal_cliques_are_its_twenty_triangles() {
    let g = competition_core::generate(&competition_core::Family::Icosahedron).unwrap();
    let mut triangles = HashSet::new();
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles.insert(vec![a, b, c]);
                }
            }
        }
    }
    assert_eq!(triangles.len(), 20);
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                for d in c + 1..12 {
                    let quad = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)];
                    assert!(
                        !quad.iter().all(|&(x, y)| g.has_edge(x, y)),
                        "4-clique {a} {b} {c} {d}"
                    );
                }
            }
        }
    }
    let enumerated: HashSet<Vec<usize>> = competition_core::maximal_cliques(&g)
        .iter()
        .map(|c| c.to_vec())
        .collect();
    assert_eq!(enumerated, triangles);
}

/// In a triangle-free graph without isolated vertices, the maximal cliques
/// are exactly the edges.
#[test]
fn triangle_free_maximal_cliques_are_edges() {
    for n in 2..=6 {
        for g in common::graphs_up_to_iso(n) {
            if !g.is_triangle_free() || !g.isolated_vertices().is_empty() {
                continue;
            }
            let cliques: Vec<Vec<usize>> = competition_core::maximal_cliques(&g)
                .iter()
                .map(|c| c.to_vec())
                .collect();
            let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
            assert_eq!(cliques, edges, "graph {g:?}");
        }
    }
}

/// The m=1 subset bound coincides with the neighborhood bound: cliques that
/// cover the edges at a vertex are exactly the cliques through it, which
/// correspond to cliques of the open neighborhood.
#[test]
fn subset_bound_at_one_equals_vertex_bound() {
    for n in 1..=6 {
        for g in common::graphs_up_to_iso(n) {
            let sano = sano_bound(&g, 1).unwrap();
            let (_, opsut) = opsut_vertex_bound(&g).unwrap();
            assert_eq!(sano.value, opsut as i64, "graph {g:?}");
        }
    }
}

/// The subset bound family dominates both classical bounds on connected
/// graphs: m = 1 gives the neighborhood bound and m = n - 1 recovers the
/// edge cover bound.
#[test]
fn subset_bounds_dominate_classical_bounds() {
    for n in 2..=6 {
        for g in common::connected_graphs_up_to_iso(n) {
            let best_subset = (1..=n)
                .map(|m| sano_bound(&g, m).unwrap().value)
                .max()
                .unwrap();
            let edge = opsut_edge_bound(&g).unwrap();
            let vertex = opsut_vertex_bound(&g).unwrap().1 as i64;
            assert!(
                best_subset >= edge.max(vertex),
                "graph {g:?}: subset max {best_subset} < max({edge}, {vertex})"
            );
        }
    }
}

/// Subset bound at full size is literally the cover number minus n plus one.
#[test]
fn subset_bound_at_full_size_matches_formula() {
    for n in 1..=6 {
        for g in common::graphs_up_to_iso(n) {
            let bound = sano_bound(&g, n).unwrap();
            let full = theta_e_restricted(g.edges(), &g).unwrap().size as i64;
            assert_eq!(bound.value, full - n as i64 + 1, "graph {g:?}");
        }
    }
}

/// Closed forms equal the exhaustive competition number, and every lower
/// bound stays below it, on all graphs with 2..=5 vertices. (Single-vertex
/// graphs are excluded: the raw edge-cover formula is vacuous there.)
#[test]
fn bounds_are_sound_against_the_exhaustive_oracle() {
    for n in 2..=5 {
        for g in common::graphs_up_to_iso(n) {
            let k = common::naive_competition_number(&g) as i64;
            if let Some(exact) = chordal_exact(&g) {
                assert_eq!(exact as i64, k, "chordal form on {g:?}");
            }
            if let Some(exact) = triangle_free_exact(&g) {
                assert_eq!(exact as i64, k, "triangle-free form on {g:?}");
            }
            if g.edge_count() > 0 {
                assert!(opsut_edge_bound(&g).unwrap() <= k, "edge bound on {g:?}");
            }
            assert!(
                (opsut_vertex_bound(&g).unwrap().1 as i64) <= k,
                "vertex bound on {g:?}"
            );
            for m in 1..=n {
                assert!(
                    sano_bound(&g, m).unwrap().value <= k,
                    "subset bound on {g:?}"
                );
            }
        }
    }
}

/// Aggregate reports keep lower entries below exact entries and clamp the
/// best figure at zero.
#[test]
fn bound_reports_are_internally_consistent() {
    for n in 1..=6 {
        for g in common::graphs_up_to_iso(n) {
            let report = best_lower_bound(&g, 3, "g").unwrap();
            assert!(report.best_lower >= 0);
            let exacts: Vec<i64> = report
                .entries
                .iter()
                .filter(|e| e.kind == BoundKind::Exact)
                .map(|e| e.value)
                .collect();
            for entry in &report.entries {
                if entry.kind == BoundKind::Lower && entry.note.is_none() {
                    for &exact in &exacts {
                        assert!(
                            entry.value <= exact,
                            "{} = {} above exact {} on {g:?}",
                            entry.name,
                            entry.value,
                            exact
                        );
                    }
                }
            }
        }
    }
}
