//! Isomorphism testing for small graphs by backtracking search.
//!
//! Intended for test-scale instances (a few dozen vertices); degree and
//! adjacency-consistency pruning is plenty at that size.

use crate::graph::Graph;

/// Finds a vertex bijection `a -> b` preserving adjacency exactly, if any.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

fn assign(a: &Graph, b: &Graph, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let n = a.vertex_count();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if assign(a, b, v + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}
