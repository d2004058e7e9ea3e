//! Shared test oracles: independent brute-force implementations used to
//! cross-check the solvers, plus small-graph enumeration helpers.
//!
//! Everything here deliberately avoids the crate's solver machinery. Cliques
//! are found by scanning all vertex subsets, covers by scanning all
//! subfamilies, and competition numbers by exhaustive search over acyclic
//! digraphs.

#![allow(dead_code)]

use std::collections::HashSet;

use competition_core::Graph;
use rand::Rng;

/// All clique bitmasks of `g` (including the empty set and singletons).
pub fn brute_clique_masks(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 16, "oracle scale");
    (0u32..1 << n).filter(|&m| mask_is_clique(g, m)).collect()
}

fn mask_is_clique(g: &Graph, mask: u32) -> bool {
    let members: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| mask & (1 << v) != 0)
        .collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Maximal clique bitmasks of `g`, by definition: cliques no vertex extends.
pub fn brute_maximal_clique_masks(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    brute_clique_masks(g)
        .into_iter()
        .filter(|&m| {
            m != 0 && (0..n).all(|v| m & (1 << v) != 0 || !mask_is_clique(g, m | (1 << v)))
        })
        .collect()
}

/// Exhaustive minimum edge clique cover size: scan every subfamily of the
/// maximal cliques (any clique enlarges to a maximal one without uncovering).
pub fn exhaustive_theta_e(g: &Graph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let cliques = brute_maximal_clique_masks(g);
    let edge_masks: Vec<u64> = cliques
        .iter()
        .map(|&c| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| c & (1 << u) != 0 && c & (1 << v) != 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let all = (1u64 << edges.len()) - 1;
    exhaustive_min_cover(&edge_masks, all)
}

/// Exhaustive minimum vertex clique cover size.
pub fn exhaustive_theta_v(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let cliques = brute_maximal_clique_masks(g);
    let masks: Vec<u64> = cliques.iter().map(|&c| c as u64).collect();
    exhaustive_min_cover(&masks, (1u64 << n) - 1)
}

fn exhaustive_min_cover(masks: &[u64], all: u64) -> usize {
    let t = masks.len();
    assert!(t <= 25, "oracle scale");
    let mut best = usize::MAX;
    for pick in 0u32..1 << t {
        let mut union = 0u64;
        for (i, &m) in masks.iter().enumerate() {
            if pick & (1 << i) != 0 {
                union |= m;
            }
        }
        if union == all {
            best = best.min(pick.count_ones() as usize);
        }
    }
    assert_ne!(best, usize::MAX, "maximal cliques always cover");
    best
}

/// Exhaustive competition number: the least `k` such that some acyclic
/// digraph on the `n + k` labeled vertices has competition graph exactly
/// `g` plus `k` isolated vertices.
///
/// Every acyclic digraph is an ordering plus, per position, an
/// in-neighborhood drawn from the earlier vertices, so the search walks
/// exactly those choices. An in-neighborhood that is not a clique of
/// `G ∪ I_k` immediately creates a competition pair outside the target edge
/// set, and arcs added later can never remove it, so such branches are dead
/// on arrival and the candidate in-neighborhoods are the cliques (plus
/// singletons of added vertices, which create nothing). Search states that
/// agree on the placed vertex set and the covered edge set have identical
/// futures and are merged.
pub fn naive_competition_number(g: &Graph) -> usize {
    for k in 0..=g.edge_count() + 1 {
        if naive_feasible(g, k) {
            return k;
        }
    }
    panic!("competition number exceeds |E| + 1");
}

fn naive_feasible(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    let total = n + k;
    assert!(total <= 16, "oracle scale");
    let edges = g.edges();
    let all_edges: u32 = if edges.is_empty() {
        0
    } else {
        (1u32 << edges.len()) - 1
    };
    // Candidate in-neighborhoods with the edge pairs they cover.
    let mut inhoods: Vec<(u32, u32)> = brute_clique_masks(g)
        .into_iter()
        .map(|c| {
            let pairs = edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| c & (1 << u) != 0 && c & (1 << v) != 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i));
            (c, pairs)
        })
        .collect();
    for added in n..total {
        inhoods.push((1 << added, 0));
    }
    let full: u32 = (1u32 << total) - 1;
    let mut dead = HashSet::new();
    explore(full, all_edges, &inhoods, 0, 0, &mut dead)
}

fn explore(
    full: u32,
    all_edges: u32,
    inhoods: &[(u32, u32)],
    placed: u32,
    covered: u32,
    dead: &mut HashSet<(u32, u32)>,
) -> bool {
    if placed == full {
        return covered == all_edges;
    }
    if dead.contains(&(placed, covered)) {
        return false;
    }
    for w in 0..32 {
        let bit = 1u32 << w;
        if bit > full {
            break;
        }
        if placed & bit != 0 {
            continue;
        }
        for &(members, pairs) in inhoods {
            if members & !placed != 0 {
                continue;
            }
            if explore(
                full,
                all_edges,
                inhoods,
                placed | bit,
                covered | pairs,
                dead,
            ) {
                return true;
            }
        }
    }
    dead.insert((placed, covered));
    false
}

/// All graphs on `n` labeled vertices, one representative per isomorphism
/// class (the minimum edge bitmask over all vertex relabelings).
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "oracle scale");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let pair_index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    // Edge-bit remap table per permutation.
    let mut tables = Vec::new();
    permute(&mut (0..n).collect::<Vec<_>>(), 0, &mut |perm| {
        tables.push(
            pairs
                .iter()
                .map(|&(u, v)| pair_index(perm[u], perm[v]))
                .collect::<Vec<_>>(),
        );
    });
    let nbits = pairs.len();
    let mut out = Vec::new();
    for mask in 0u32..1 << nbits {
        let canon = tables
            .iter()
            .map(|table| {
                let mut remapped = 0u32;
                for (i, &j) in table.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        remapped |= 1 << j;
                    }
                }
                remapped
            })
            .min()
            .unwrap();
        if canon == mask {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p));
    Graph::new(n, edges).unwrap()
}
