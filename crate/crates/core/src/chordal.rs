//! Chordal graph recognition via maximum cardinality search.

use crate::graph::{Graph, VertexSet};

/// Maximum cardinality search visit order: repeatedly pick the unvisited
/// vertex with the most visited neighbors (ties by smallest label).
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (g.neighbors(v).intersection(visited).len(), usize::MAX - v))
            .expect("unvisited vertex exists");
        visited.insert(v);
        order.push(v);
    }
    order
}

/// A perfect elimination ordering of `g`, or `None` if `g` is not chordal.
///
/// In the returned ordering, the later neighbors of every vertex form a
/// clique. The reverse of an MCS visit order has this property exactly when
/// the graph is chordal, so one verification pass decides both questions.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    let mut later = VertexSet::EMPTY;
    for &v in order.iter().rev() {
        if !g.is_clique_set(g.neighbors(v).intersection(later)) {
            return None;
        }
        later.insert(v);
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}
