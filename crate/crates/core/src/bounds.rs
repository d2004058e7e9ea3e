//! Closed-form competition numbers and lower bounds.
//!
//! Three closed forms (chordal graphs, connected triangle-free graphs, and
//! balanced complete tripartite graphs) plus three lower bounds: the edge
//! clique cover bound, the vertex neighborhood bound, and the m-subset bound
//! that generalizes both via restricted edge clique covers.

use serde::Serialize;
use thiserror::Error;

use crate::chordal::is_chordal;
use crate::cover::{theta_e, theta_e_restricted, theta_v, CoverError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bound is undefined on the empty graph")]
    EmptyGraph,
    #[error("subset size {m} out of range 1..={n}")]
    SubsetSizeOutOfRange { m: usize, n: usize },
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// Exact competition number of a chordal graph without isolated vertices,
/// which is always 1; `None` when the hypothesis fails.
pub fn chordal_exact(g: &Graph) -> Option<usize> {
    (g.vertex_count() > 0 && g.isolated_vertices().is_empty() && is_chordal(g)).then_some(1)
}

/// Exact competition number `|E| - |V| + 2` of a connected triangle-free
/// graph on more than one vertex; `None` when the hypothesis fails.
pub fn triangle_free_exact(g: &Graph) -> Option<usize> {
    (g.vertex_count() > 1 && g.is_connected() && g.is_triangle_free())
        .then(|| g.edge_count() + 2 - g.vertex_count())
}

/// Exact competition number `n^2 - 3n + 4` of the balanced complete
/// tripartite graph with part size `n >= 2`.
pub fn tripartite_exact(part: usize) -> Option<usize> {
    (part >= 2).then(|| part * part + 4 - 3 * part)
}

/// Edge clique cover lower bound `theta_E(G) - |V(G)| + 2`.
///
/// The raw formula is reported even when non-positive. It presumes at least
/// one edge; on edgeless graphs the value is vacuous and aggregate reports
/// exclude it.
pub fn opsut_edge_bound(g: &Graph) -> Result<i64, CoverError> {
    let cover = theta_e(g)?;
    Ok(cover.size as i64 - g.vertex_count() as i64 + 2)
}

/// Neighborhood lower bound `min_v theta_V(N(v))` over open neighborhoods.
pub fn opsut_vertex_bound(g: &Graph) -> Result<(usize, usize), BoundsError> {
    if g.vertex_count() == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    let mut best: Option<(usize, usize)> = None;
    for v in g.vertices() {
        let (nbhd, _) = g
            .induced_subgraph(g.neighbors(v))
            .expect("neighborhoods are in range");
        let size = theta_v(&nbhd).size;
        if best.is_none_or(|(_, b)| size < b) {
            best = Some((v, size));
        }
    }
    let (argmin, value) = best.expect("graph is nonempty");
    Ok((argmin, value))
}

/// Result of the m-subset lower bound: the bound value, the minimizing
/// subset, and the restricted cover number attained there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetBound {
    pub value: i64,
    pub argmin: VertexSet,
    pub cover_size: usize,
}

/// The m-subset lower bound: minimize the restricted edge clique cover
/// number `theta_E(E[U]; N[U])` over all m-subsets `U`, then subtract
/// `m - 1`. Ties are broken towards the lexicographically least subset.
pub fn sano_bound(g: &Graph, m: usize) -> Result<SubsetBound, BoundsError> {
    let n = g.vertex_count();
    if m < 1 || m > n {
        return Err(BoundsError::SubsetSizeOutOfRange { m, n });
    }
    let mut best: Option<(usize, VertexSet)> = None;
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        let u: VertexSet = subset.iter().copied().collect();
        let closed = g.closed_neighborhood(u).expect("subset is in range");
        let (host, map) = g.induced_subgraph(closed).expect("subset is in range");
        let mut relabel = vec![usize::MAX; n];
        for (new, &old) in map.iter().enumerate() {
            relabel[old] = new;
        }
        let target: Vec<(usize, usize)> = g
            .incident_edges(u)
            .expect("subset is in range")
            .into_iter()
            .map(|(a, b)| (relabel[a], relabel[b]))
            .collect();
        let size = theta_e_restricted(&target, &host)?.size;
        if best.is_none_or(|(b, _)| size < b) {
            best = Some((size, u));
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    let (cover_size, argmin) = best.expect("m >= 1 and m <= n yields at least one subset");
    Ok(SubsetBound {
        value: cover_size as i64 - m as i64 + 1,
        argmin,
        cover_size,
    })
}

/// Advances `subset` to the next m-combination of `0..n` in lexicographic
/// order; returns false after the last one.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let m = subset.len();
    let mut i = m;
    while i > 0 {
        i -= 1;
        if subset[i] < n - m + i {
            subset[i] += 1;
            for j in i + 1..m {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Exact,
}

/// One evaluated bound or closed form.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: i64,
    pub kind: BoundKind,
    pub witness: Option<serde_json::Value>,
    pub note: Option<String>,
}

/// Every applicable bound for one graph, with the best lower bound clamped
/// at zero.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub entries: Vec<BoundEntry>,
    pub best_lower: i64,
}

/// Evaluates all closed forms and lower bounds, with the subset bound taken
/// for every `m` from 1 to `m_max` (clamped to `|V|`).
pub fn best_lower_bound(
    g: &Graph,
    m_max: usize,
    graph_id: &str,
) -> Result<BoundReport, BoundsError> {
    let n = g.vertex_count();
    let mut entries = Vec::new();
    let mut best = 0i64;

    if let Some(k) = chordal_exact(g) {
        entries.push(BoundEntry {
            name: "chordal_exact".to_string(),
            value: k as i64,
            kind: BoundKind::Exact,
            witness: None,
            note: Some("chordal without isolated vertices".to_string()),
        });
    }
    if let Some(k) = triangle_free_exact(g) {
        entries.push(BoundEntry {
            name: "triangle_free_exact".to_string(),
            value: k as i64,
            kind: BoundKind::Exact,
            witness: None,
            note: Some("connected triangle-free".to_string()),
        });
    }
    if n > 0 {
        let theta = theta_e(g)?;
        let value = theta.size as i64 - n as i64 + 2;
        let vacuous = g.edge_count() == 0;
        if !vacuous {
            best = best.max(value);
        }
        entries.push(BoundEntry {
            name: "opsut_edge".to_string(),
            value,
            kind: BoundKind::Lower,
            witness: Some(serde_json::json!({ "theta_e": theta.size })),
            note: vacuous.then(|| "vacuous on edgeless graphs; excluded from best".to_string()),
        });

        let (argmin, value) = opsut_vertex_bound(g)?;
        best = best.max(value as i64);
        entries.push(BoundEntry {
            name: "opsut_vertex".to_string(),
            value: value as i64,
            kind: BoundKind::Lower,
            witness: Some(serde_json::json!({ "vertex": argmin, "theta_v": value })),
            note: None,
        });

        for m in 1..=m_max.min(n) {
            let bound = sano_bound(g, m)?;
            best = best.max(bound.value);
            entries.push(BoundEntry {
                name: format!("sano_m{m}"),
                value: bound.value,
                kind: BoundKind::Lower,
                witness: Some(serde_json::json!({
                    "subset": bound.argmin.to_vec(),
                    "cover_size": bound.cover_size,
                })),
                note: None,
            });
        }
    }

    Ok(BoundReport {
        graph: graph_id.to_string(),
        entries,
        best_lower: best,
    })
}
