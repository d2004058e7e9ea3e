//! Clique enumeration over vertex bitsets.
//!
//! All outputs are deterministic: candidate vertices are always scanned in
//! ascending label order and result lists are sorted lexicographically by
//! their sorted member lists, so downstream solvers get stable inputs.

use std::fmt;

use crate::graph::{Graph, GraphError, VertexSet};

/// A set of pairwise-adjacent vertices of some host graph.
///
/// Cliques are plain value objects: they carry no reference to the host, and
/// validity is re-checked where it matters via [`is_clique`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Clique(VertexSet);

impl Clique {
    pub const EMPTY: Clique = Clique(VertexSet::EMPTY);

    pub fn new(members: VertexSet) -> Clique {
        Clique(members)
    }

    pub fn members(self) -> VertexSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.0.to_vec()
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clique{:?}", self.0)
    }
}

/// Compares cliques lexicographically by sorted member list.
pub fn lex_cmp(a: Clique, b: Clique) -> std::cmp::Ordering {
    a.0.iter().cmp(b.0.iter())
}

/// True iff `s` induces a complete subgraph of `g` (the empty set and
/// singletons qualify).
pub fn is_clique(g: &Graph, s: VertexSet) -> Result<bool, GraphError> {
    if let Some(v) = s.difference(g.vertex_set()).min() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(g.is_clique_set(s))
}

/// All inclusion-maximal cliques of `g`, sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    maximal_cliques_within(g, g.vertex_set())
}

/// Inclusion-maximal cliques of `g` whose members lie inside `allowed`
/// (maximality is relative to `allowed`, i.e. these are the maximal cliques
/// of the induced subgraph, in original labels).
pub fn maximal_cliques_within(g: &Graph, allowed: VertexSet) -> Vec<Clique> {
    debug_assert!(allowed.is_subset_of(g.vertex_set()));
    let mut out = Vec::new();
    expand(
        g,
        allowed,
        VertexSet::EMPTY,
        allowed,
        VertexSet::EMPTY,
        &mut out,
    );
    out.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    out
}

/// Pivoted recursive expansion: grow `r` with candidates from `p`, using the
/// pivot rule to skip branches that cannot yield new maximal cliques.
fn expand(
    g: &Graph,
    allowed: VertexSet,
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<Clique>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(Clique(r));
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), usize::MAX - u))
        .expect("p or x is nonempty");
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v).intersection(allowed);
        expand(
            g,
            allowed,
            r.with(v),
            p.intersection(nv),
            x.intersection(nv),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Every clique of `g` (including the empty clique and singletons) contained
/// in `allowed`, in lexicographic order by member list.
pub fn cliques_within(g: &Graph, allowed: VertexSet) -> Result<Vec<Clique>, GraphError> {
    if let Some(v) = allowed.difference(g.vertex_set()).min() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    let mut out = vec![Clique::EMPTY];
    let mut stack = Vec::new();
    grow(g, VertexSet::EMPTY, allowed, &mut stack, &mut out);
    Ok(out)
}

fn grow(
    g: &Graph,
    current: VertexSet,
    candidates: VertexSet,
    stack: &mut Vec<usize>,
    out: &mut Vec<Clique>,
) {
    for v in candidates.iter() {
        let next = current.with(v);
        out.push(Clique(next));
        stack.push(v);
        // Only extend with larger labels adjacent to everything so far; this
        // emits each clique exactly once, in lexicographic order.
        let tail: VertexSet = candidates
            .intersection(g.neighbors(v))
            .iter()
            .filter(|&w| w > v)
            .collect();
        grow(g, next, tail, stack, out);
        stack.pop();
    }
}
