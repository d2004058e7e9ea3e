//! Core graph and digraph types over dense integer vertex labels.
//!
//! Vertices are labels `0..n`. Undirected graphs are simple (no loops, no
//! multi-edges); digraphs are loopless with no duplicate arcs. Both are
//! immutable after construction, so they can be shared freely between
//! threads. Adjacency is kept as 64-bit vertex bitsets, which caps supported
//! graphs at [`MAX_VERTICES`] vertices.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported vertex count (adjacency rows are single machine words).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("ordering {order:?} is not a permutation of 0..{n}")]
    NotAPermutation { order: Vec<usize>, n: usize },
}

/// A set of vertex labels, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        let mut s = self;
        s.insert(v);
        s
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Isolated vertices are representable: `n` may exceed the largest label
/// appearing in an edge. Edges are normalized to `(min, max)` pairs and kept
/// sorted, so equal graphs compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating and normalizing pairs.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut edge_list = Vec::new();
        for u in 0..n {
            for v in adj[u].iter() {
                if u < v {
                    edge_list.push((u, v));
                }
            }
        }
        edge_list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: edge_list,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    fn check_subset(&self, set: VertexSet) -> Result<(), GraphError> {
        match set.difference(self.vertex_set()).min() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Closed neighborhood `N[U]`: `U` together with every vertex adjacent to it.
    pub fn closed_neighborhood(&self, u: VertexSet) -> Result<VertexSet, GraphError> {
        self.check_subset(u)?;
        let mut out = u;
        for v in u.iter() {
            out = out.union(self.adj[v]);
        }
        Ok(out)
    }

    /// Edges `E[U]` with at least one endpoint in `U`, sorted.
    pub fn incident_edges(&self, u: VertexSet) -> Result<Vec<(usize, usize)>, GraphError> {
        self.check_subset(u)?;
        Ok(self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| u.contains(a) || u.contains(b))
            .collect())
    }

    /// Subgraph induced by `w`, relabeled to `0..|w|`.
    ///
    /// The returned map sends new labels to the original ones, in ascending
    /// original order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(w)?;
        let map: Vec<usize> = w.to_vec();
        let mut inverse = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| w.contains(a) && w.contains(b))
            .map(|&(a, b)| (inverse[a], inverse[b]));
        let g = Graph::new(map.len(), edges)?;
        Ok((g, map))
    }

    /// True iff every pair in `s` is an edge. The empty set and singletons count.
    pub fn is_clique_set(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(self.vertex_set()));
        s.iter().all(|v| s.without(v).is_subset_of(self.adj[v]))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].difference(seen).iter() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen == self.vertex_set()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.adj[u].intersection(self.adj[v]).is_empty())
    }

    /// Disjoint union with `k` fresh isolated vertices appended.
    pub fn with_isolated(&self, k: usize) -> Result<Graph, GraphError> {
        Graph::new(self.n + k, self.edges.iter().copied())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::new(repr.n, repr.edges).map_err(D::Error::custom)
    }
}

/// A directed graph on vertices `0..n`, loopless, without duplicate arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Digraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inn = vec![VertexSet::EMPTY; n];
        for (u, v) in arcs {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            out[u].insert(v);
            inn[v].insert(u);
        }
        let mut arc_list = Vec::new();
        for u in 0..n {
            for v in out[u].iter() {
                arc_list.push((u, v));
            }
        }
        arc_list.sort_unstable();
        Ok(Digraph {
            n,
            out,
            inn,
            arcs: arc_list,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.inn[v]
    }

    /// Acyclicity check with a witness either way: a topological ordering for
    /// acyclic inputs, or a directed cycle otherwise.
    pub fn acyclicity(&self) -> Acyclicity {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.inn[v].len()).collect();
        let mut order = Vec::with_capacity(self.n);
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        // Min-heap behaviour via sorted stack keeps the witness deterministic.
        ready.sort_unstable_by(|a, b| b.cmp(a));
        while let Some(v) = ready.pop() {
            order.push(v);
            let mut changed = false;
            for w in self.out[v].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                    changed = true;
                }
            }
            if changed {
                ready.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        if order.len() == self.n {
            let ordering =
                VertexOrdering::new(self.n, order).expect("kahn output is a permutation");
            debug_assert!(ordering.respects(self));
            return Acyclicity::Acyclic(ordering);
        }
        // Every leftover vertex keeps an in-neighbor among the leftovers, so
        // walking in-arcs must revisit a vertex and close a cycle.
        let leftover: VertexSet = (0..self.n).filter(|&v| indeg[v] > 0).collect();
        let mut walk = vec![leftover.min().expect("leftover set is nonempty")];
        let cycle = loop {
            let cur = *walk.last().unwrap();
            let prev = self.inn[cur]
                .intersection(leftover)
                .min()
                .expect("leftover vertices retain an in-arc");
            if let Some(j) = walk.iter().position(|&x| x == prev) {
                let mut cyc = vec![prev];
                cyc.extend(walk[j + 1..].iter().rev());
                break cyc;
            }
            walk.push(prev);
        };
        debug_assert!(self.is_cycle(&cycle));
        Acyclicity::Cyclic(cycle)
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.acyclicity(), Acyclicity::Acyclic(_))
    }

    fn is_cycle(&self, cycle: &[usize]) -> bool {
        !cycle.is_empty()
            && cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .all(|(&a, &b)| self.out[a].contains(b))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DigraphRepr {
            n: self.n,
            arcs: self.arcs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Digraph, D::Error> {
        let repr = DigraphRepr::deserialize(deserializer)?;
        Digraph::new(repr.n, repr.arcs).map_err(D::Error::custom)
    }
}

/// Outcome of an acyclicity test, with a checkable witness in both cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic(VertexOrdering),
    Cyclic(Vec<usize>),
}

/// A permutation of the vertex labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(n: usize, order: Vec<usize>) -> Result<VertexOrdering, GraphError> {
        let mut position = vec![usize::MAX; n];
        let mut ok = order.len() == n;
        if ok {
            for (i, &v) in order.iter().enumerate() {
                if v >= n || position[v] != usize::MAX {
                    ok = false;
                    break;
                }
                position[v] = i;
            }
        }
        if !ok {
            return Err(GraphError::NotAPermutation { order, n });
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// True iff every arc of `d` goes from an earlier to a later position.
    pub fn respects(&self, d: &Digraph) -> bool {
        d.arcs()
            .iter()
            .all(|&(u, v)| self.position[u] < self.position[v])
    }
}
