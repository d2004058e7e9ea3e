//! Exact minimum clique covers.
//!
//! One branch-and-bound set-cover engine drives three queries: the edge
//! clique cover number, the restricted edge clique cover number of a
//! prescribed edge set, and the vertex clique cover number. Candidate sets
//! are always the maximal cliques of the host graph; enlarging a clique to a
//! maximal one never uncovers anything, so this loses no optimal solutions.
//!
//! Among optimal covers, the reported witness is the lexicographically least
//! one under the canonical clique ordering, which keeps golden outputs
//! stable across solver changes.

use thiserror::Error;

use crate::clique::{maximal_cliques, Clique};
use crate::graph::{Graph, GraphError, VertexSet};

/// Element masks are `u128`, so a single cover query may target at most this
/// many edges (vertex targets fit trivially).
pub const MAX_TARGET_ELEMENTS: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("edge ({0}, {1}) is not an edge of the host graph")]
    EdgeNotInGraph(usize, usize),
    #[error("cover target has {count} elements, at most {MAX_TARGET_ELEMENTS} are supported")]
    TooManyTargetElements { count: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// What a cover is required to cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverTarget {
    /// Every listed edge must have both endpoints inside some clique.
    Edges(Vec<(usize, usize)>),
    /// Every listed vertex must belong to some clique.
    Vertices(VertexSet),
}

/// A family of cliques together with the target it covers.
#[derive(Debug, Clone)]
pub struct CliqueCover {
    pub cliques: Vec<Clique>,
    pub target: CoverTarget,
}

impl CliqueCover {
    /// Re-checks the cover invariants against a host graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if !self
            .cliques
            .iter()
            .all(|c| c.members().is_subset_of(g.vertex_set()) && g.is_clique_set(c.members()))
        {
            return false;
        }
        match &self.target {
            CoverTarget::Edges(edges) => edges.iter().all(|&(u, v)| {
                self.cliques
                    .iter()
                    .any(|c| c.members().contains(u) && c.members().contains(v))
            }),
            CoverTarget::Vertices(vs) => vs
                .iter()
                .all(|v| self.cliques.iter().any(|c| c.members().contains(v))),
        }
    }

    /// Witness encoding: a list of sorted vertex lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.cliques
                .iter()
                .map(|c| serde_json::json!(c.to_vec()))
                .collect(),
        )
    }
}

/// An exact cover number together with a witness of that size.
#[derive(Debug, Clone)]
pub struct CoverSolution {
    pub size: usize,
    pub cover: CliqueCover,
}

/// Minimum edge clique cover number of `g`, with witness.
pub fn theta_e(g: &Graph) -> Result<CoverSolution, CoverError> {
    theta_e_restricted(g.edges(), g)
}

/// Minimum number of cliques of `g` covering every edge in `f`, with witness.
pub fn theta_e_restricted(f: &[(usize, usize)], g: &Graph) -> Result<CoverSolution, CoverError> {
    let mut target: Vec<(usize, usize)> = f
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    target.sort_unstable();
    target.dedup();
    for &(u, v) in &target {
        if u == v || !g.has_edge(u, v) {
            return Err(CoverError::EdgeNotInGraph(u, v));
        }
    }
    if target.len() > MAX_TARGET_ELEMENTS {
        return Err(CoverError::TooManyTargetElements {
            count: target.len(),
        });
    }
    if target.is_empty() {
        return Ok(CoverSolution {
            size: 0,
            cover: CliqueCover {
                cliques: Vec::new(),
                target: CoverTarget::Edges(target),
            },
        });
    }

    let candidates = maximal_cliques(g);
    let masks: Vec<u128> = candidates
        .iter()
        .map(|c| {
            let m = c.members();
            target
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| m.contains(u) && m.contains(v))
                .fold(0u128, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let chosen = solve(&candidates, &masks, target.len());
    Ok(CoverSolution {
        size: chosen.len(),
        cover: CliqueCover {
            cliques: chosen,
            target: CoverTarget::Edges(target),
        },
    })
}

/// Minimum vertex clique cover number of `g`, with witness.
pub fn theta_v(g: &Graph) -> CoverSolution {
    let n = g.vertex_count();
    if n == 0 {
        return CoverSolution {
            size: 0,
            cover: CliqueCover {
                cliques: Vec::new(),
                target: CoverTarget::Vertices(VertexSet::EMPTY),
            },
        };
    }
    let candidates = maximal_cliques(g);
    let masks: Vec<u128> = candidates
        .iter()
        .map(|c| c.members().iter().fold(0u128, |acc, v| acc | (1 << v)))
        .collect();
    let chosen = solve(&candidates, &masks, n);
    CoverSolution {
        size: chosen.len(),
        cover: CliqueCover {
            cliques: chosen,
            target: CoverTarget::Vertices(g.vertex_set()),
        },
    }
}

/// Exact minimum set cover, returning the lexicographically least optimal
/// selection of candidates.
fn solve(candidates: &[Clique], masks: &[u128], num_elements: usize) -> Vec<Clique> {
    let solver = Solver::new(masks, num_elements);
    let greedy = solver.greedy_size();
    let (optimum, _) = solver
        .min_cover_from(0, 0, greedy)
        .expect("greedy size is always achievable");
    let mut selected = Vec::with_capacity(optimum);
    let mut covered = 0u128;
    let mut next = 0usize;
    for remaining in (1..=optimum).rev() {
        let mut picked = None;
        for i in next..masks.len() {
            if masks[i] & !covered == 0 {
                continue;
            }
            let with = covered | masks[i];
            let feasible = if remaining == 1 {
                with == solver.all
            } else {
                solver.min_cover_from(with, i + 1, remaining - 1).is_some()
            };
            if feasible {
                picked = Some(i);
                break;
            }
        }
        let i = picked.expect("an optimal cover extends every feasible prefix");
        selected.push(candidates[i]);
        covered |= masks[i];
        next = i + 1;
    }
    selected
}

struct Solver<'a> {
    masks: &'a [u128],
    all: u128,
    /// For each element, which candidates cover it (ascending index).
    covered_by: Vec<Vec<usize>>,
    /// For each element, the elements reachable together with it through a
    /// single candidate; used by the pairwise-conflict lower bound.
    co_coverage: Vec<u128>,
}

impl<'a> Solver<'a> {
    fn new(masks: &'a [u128], num_elements: usize) -> Solver<'a> {
        let all = if num_elements == MAX_TARGET_ELEMENTS {
            u128::MAX
        } else {
            (1u128 << num_elements) - 1
        };
        let mut covered_by = vec![Vec::new(); num_elements];
        let mut co_coverage = vec![0u128; num_elements];
        for (i, &m) in masks.iter().enumerate() {
            let mut bits = m;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                covered_by[e].push(i);
                co_coverage[e] |= m;
            }
        }
        Solver {
            masks,
            all,
            covered_by,
            co_coverage,
        }
    }

    /// Greedy cover size, used as the initial incumbent.
    fn greedy_size(&self) -> usize {
        let mut covered = 0u128;
        let mut count = 0;
        while covered != self.all {
            let best = self
                .masks
                .iter()
                .map(|&m| (m & !covered).count_ones())
                .enumerate()
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .expect("no candidates cover the remaining elements");
            assert!(best.1 > 0, "uncoverable element in cover instance");
            covered |= self.masks[best.0];
            count += 1;
        }
        count
    }

    /// Greedy set of pairwise non-co-coverable elements; each needs its own
    /// clique, so the count lower-bounds any cover of `uncovered`.
    fn lower_bound(&self, uncovered: u128) -> usize {
        let mut blocked = 0u128;
        let mut count = 0;
        let mut rest = uncovered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if blocked & (1 << e) == 0 {
                count += 1;
                blocked |= self.co_coverage[e];
            }
        }
        count
    }

    /// Smallest cover of the remaining elements using candidates with index
    /// `>= min_idx`, if one of size `<= limit` exists.
    fn min_cover_from(
        &self,
        covered: u128,
        min_idx: usize,
        limit: usize,
    ) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<Vec<usize>> = None;
        let mut best_size = limit + 1;
        let mut chosen = Vec::new();
        self.branch(covered, min_idx, &mut chosen, &mut best, &mut best_size);
        best.map(|w| (best_size, w))
    }

    fn branch(
        &self,
        covered: u128,
        min_idx: usize,
        chosen: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
        best_size: &mut usize,
    ) {
        if covered == self.all {
            if chosen.len() < *best_size {
                *best_size = chosen.len();
                *best = Some(chosen.clone());
            }
            return;
        }
        let uncovered = self.all & !covered;
        if chosen.len() + self.lower_bound(uncovered) >= *best_size {
            return;
        }
        // Branch on the uncovered element with the fewest usable candidates.
        let mut element = usize::MAX;
        let mut fewest = usize::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let count = self.covered_by[e].iter().filter(|&&i| i >= min_idx).count();
            if count < fewest {
                fewest = count;
                element = e;
            }
        }
        if fewest == 0 {
            return;
        }
        let mut branches: Vec<usize> = self.covered_by[element]
            .iter()
            .copied()
            .filter(|&i| i >= min_idx)
            .collect();
        branches.sort_by(|&a, &b| {
            let ga = (self.masks[a] & uncovered).count_ones();
            let gb = (self.masks[b] & uncovered).count_ones();
            gb.cmp(&ga).then(a.cmp(&b))
        });
        for i in branches {
            chosen.push(i);
            self.branch(covered | self.masks[i], min_idx, chosen, best, best_size);
            chosen.pop();
        }
    }
}
