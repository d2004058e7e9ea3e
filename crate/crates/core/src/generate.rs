//! Generators for standard graph families, including the five regular
//! polyhedra treated as graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family, possibly parameterized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Tetrahedron,
    Hexahedron,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Cycle(usize),
    Path(usize),
}

impl Family {
    /// Parses a family name plus numeric parameters, as used by the CLI.
    ///
    /// `tripartite n` is shorthand for `multipartite n n n`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, FamilyError> {
        let arity = |want: usize| -> Result<(), FamilyError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(FamilyError::InvalidParameter {
                    family: name.to_string(),
                    reason: format!("expected {want} parameter(s), got {}", params.len()),
                })
            }
        };
        match name {
            "tetrahedron" => arity(0).map(|_| Family::Tetrahedron),
            "hexahedron" | "cube" => arity(0).map(|_| Family::Hexahedron),
            "octahedron" => arity(0).map(|_| Family::Octahedron),
            "dodecahedron" => arity(0).map(|_| Family::Dodecahedron),
            "icosahedron" => arity(0).map(|_| Family::Icosahedron),
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "multipartite" | "complete-multipartite" => {
                if params.is_empty() {
                    Err(FamilyError::InvalidParameter {
                        family: name.to_string(),
                        reason: "needs at least one part size".to_string(),
                    })
                } else {
                    Ok(Family::CompleteMultipartite(params.to_vec()))
                }
            }
            "tripartite" => arity(1)
                .map(|_| Family::CompleteMultipartite(vec![params[0], params[0], params[0]])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "path" => arity(1).map(|_| Family::Path(params[0])),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

/// Builds the requested family member.
pub fn generate(family: &Family) -> Result<Graph, FamilyError> {
    let invalid = |family: &str, reason: &str| FamilyError::InvalidParameter {
        family: family.to_string(),
        reason: reason.to_string(),
    };
    match family {
        Family::Tetrahedron => Ok(complete(4)?),
        Family::Hexahedron => Ok(generalized_petersen(4, 1)?),
        Family::Octahedron => Ok(octahedron()?),
        Family::Dodecahedron => Ok(generalized_petersen(10, 2)?),
        Family::Icosahedron => Ok(icosahedron()?),
        Family::Complete(n) => {
            if *n == 0 {
                Err(invalid("complete", "needs at least 1 vertex"))
            } else {
                Ok(complete(*n)?)
            }
        }
        Family::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                Err(invalid("multipartite", "part sizes must be positive"))
            } else {
                Ok(complete_multipartite(parts)?)
            }
        }
        Family::Cycle(n) => {
            if *n < 3 {
                Err(invalid("cycle", "needs at least 3 vertices"))
            } else {
                Ok(Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))?)
            }
        }
        Family::Path(n) => {
            if *n == 0 {
                Err(invalid("path", "needs at least 1 vertex"))
            } else {
                Ok(Graph::new(*n, (1..*n).map(|i| (i - 1, i)))?)
            }
        }
    }
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    Graph::new(
        n,
        (0..n).flat_map(|u| {
            let part_of = &part_of;
            (u + 1..n).filter_map(move |v| (part_of[u] != part_of[v]).then_some((u, v)))
        }),
    )
}

/// Octahedron as the complement of a perfect matching: vertex `i` is adjacent
/// to everything except its antipode `i + 3`.
fn octahedron() -> Result<Graph, GraphError> {
    Graph::new(
        6,
        (0..6).flat_map(|u| (u + 1..6).filter_map(move |v| (v != u + 3).then_some((u, v)))),
    )
}

/// Icosahedron as a pentagonal antiprism capped by two apexes: apex 0 over the
/// upper 5-cycle 1..=5, apex 11 under the lower 5-cycle 6..=10, with antiprism
/// edges joining the two cycles.
fn icosahedron() -> Result<Graph, GraphError> {
    let upper = |i: usize| 1 + i % 5;
    let lower = |i: usize| 6 + i % 5;
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((0, upper(i)));
        edges.push((11, lower(i)));
        edges.push((upper(i), upper(i + 1)));
        edges.push((lower(i), lower(i + 1)));
        edges.push((upper(i), lower(i)));
        edges.push((upper(i), lower(i + 1)));
    }
    Graph::new(12, edges)
}

/// Generalized Petersen graph GP(n, k): outer cycle 0..n, spokes to the inner
/// vertices n..2n, inner edges with skip `k`.
fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::new(2 * n, edges)
}
