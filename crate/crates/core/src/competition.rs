//! The competition graph operator, construction certificates, and exact
//! computation of competition numbers.
//!
//! A construction certificate is a checkable proof that `k(G) <= k`: an
//! ordering of the `n + k` vertices (the `k` added vertices last) plus, for
//! each position, a clique of `G` drawn from strictly earlier positions. The
//! induced digraph — an arc from every clique member to the position's
//! vertex — is acyclic by construction, and the certificate is valid when
//! its competition graph is exactly `G` plus `k` isolated vertices.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{best_lower_bound, opsut_vertex_bound};
use crate::chordal::perfect_elimination_order;
use crate::clique::{maximal_cliques, maximal_cliques_within, Clique};
use crate::cover::theta_e_restricted;
use crate::graph::{Digraph, Graph, VertexSet};

/// Competition graph `C(D)`: distinct vertices are adjacent iff they share an
/// out-neighbor in `D`.
pub fn competition_graph(d: &Digraph) -> Graph {
    let n = d.vertex_count();
    let mut edges = Vec::new();
    for prey in 0..n {
        let predators = d.in_neighbors(prey);
        for u in predators.iter() {
            for v in predators.iter() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(n, edges).expect("competitor pairs are valid edges")
}

/// A claimed construction realizing `graph` plus `k` isolated vertices as a
/// competition graph. Added vertices carry labels `n..n+k` and must occupy
/// the final `k` positions of `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    pub k: usize,
    pub order: Vec<usize>,
    pub assignment: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("order has {found} entries, expected n + k = {expected}")]
    WrongOrderLength { expected: usize, found: usize },
    #[error("order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("added vertex {vertex} appears at position {position}, before all base vertices")]
    AddedVertexBeforeBase { position: usize, vertex: usize },
    #[error("assignment has {found} entries, expected n + k = {expected}")]
    WrongAssignmentLength { expected: usize, found: usize },
    #[error("position {position}: clique member {member} is out of range")]
    MemberOutOfRange { position: usize, member: usize },
    #[error("position {position}: added vertex {member} may not appear in a clique")]
    AddedVertexInClique { position: usize, member: usize },
    #[error("position {position}: clique member {member} is not placed earlier")]
    PrefixViolation { position: usize, member: usize },
    #[error("position {position}: assigned set is not a clique ({u}, {v} non-adjacent)")]
    NotAClique { position: usize, u: usize, v: usize },
}

impl Certificate {
    fn total_vertices(&self) -> usize {
        self.graph.vertex_count() + self.k
    }

    /// All structural violations, in position order. Coverage is not checked
    /// here; see [`verify_certificate`].
    pub fn structural_issues(&self) -> Vec<CertificateError> {
        let n = self.graph.vertex_count();
        let total = self.total_vertices();
        let mut issues = Vec::new();

        if self.order.len() != total {
            issues.push(CertificateError::WrongOrderLength {
                expected: total,
                found: self.order.len(),
            });
        }
        if self.assignment.len() != total {
            issues.push(CertificateError::WrongAssignmentLength {
                expected: total,
                found: self.assignment.len(),
            });
        }

        let mut position = vec![usize::MAX; total];
        let mut is_permutation = self.order.len() == total;
        for (i, &v) in self.order.iter().enumerate() {
            if v >= total || (v < position.len() && position[v] != usize::MAX) {
                is_permutation = false;
                break;
            }
            position[v] = i;
        }
        if !is_permutation {
            issues.push(CertificateError::NotAPermutation(total));
            return issues;
        }
        for added in n..total {
            if position[added] < n {
                issues.push(CertificateError::AddedVertexBeforeBase {
                    position: position[added],
                    vertex: added,
                });
            }
        }

        for (i, members) in self.assignment.iter().enumerate().take(self.order.len()) {
            let mut set = VertexSet::EMPTY;
            let mut usable = true;
            for &member in members {
                if member >= total {
                    issues.push(CertificateError::MemberOutOfRange {
                        position: i,
                        member,
                    });
                    usable = false;
                    continue;
                }
                if member >= n {
                    issues.push(CertificateError::AddedVertexInClique {
                        position: i,
                        member,
                    });
                    usable = false;
                    continue;
                }
                if position[member] >= i {
                    issues.push(CertificateError::PrefixViolation {
                        position: i,
                        member,
                    });
                }
                set.insert(member);
            }
            if usable {
                for u in set.iter() {
                    for v in set.iter() {
                        if u < v && !self.graph.has_edge(u, v) {
                            issues.push(CertificateError::NotAClique { position: i, u, v });
                        }
                    }
                }
            }
        }
        issues
    }

    /// In-neighborhood arcs implied by the assignment, ignoring validity.
    /// A member equal to its own prey is a prefix violation already reported
    /// elsewhere; the self-arc is dropped so diagnostics can still be
    /// computed.
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.order
            .iter()
            .enumerate()
            .flat_map(|(i, &prey)| {
                self.assignment
                    .get(i)
                    .into_iter()
                    .flatten()
                    .filter(move |&&u| u != prey)
                    .map(move |&u| (u, prey))
            })
            .collect()
    }
}

/// Builds the digraph encoded by a structurally sound certificate: an arc
/// from every member of the clique at position `i` to the vertex placed
/// there. The prefix condition makes the result acyclic.
pub fn certificate_to_digraph(cert: &Certificate) -> Result<Digraph, CertificateError> {
    if let Some(issue) = cert.structural_issues().into_iter().next() {
        return Err(issue);
    }
    let d = Digraph::new(cert.total_vertices(), cert.arcs())
        .expect("structurally sound certificates yield loopless arcs");
    debug_assert!(d.is_acyclic());
    Ok(d)
}

/// Outcome of certificate verification, with diagnostics on failure.
#[derive(Debug, Clone, Default)]
pub struct Verification {
    pub valid: bool,
    pub structural_issues: Vec<CertificateError>,
    /// Target edges no clique covers.
    pub missing_edges: Vec<(usize, usize)>,
    /// Competition edges that are not edges of the target graph.
    pub surplus_edges: Vec<(usize, usize)>,
}

impl Verification {
    pub fn describe(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .structural_issues
            .iter()
            .map(|i| i.to_string())
            .collect();
        out.extend(
            self.missing_edges
                .iter()
                .map(|&(u, v)| format!("missing edge ({u}, {v})")),
        );
        out.extend(
            self.surplus_edges
                .iter()
                .map(|&(u, v)| format!("surplus edge ({u}, {v})")),
        );
        out
    }
}

/// Checks that the certificate's digraph has competition graph exactly
/// `graph` plus `k` isolated vertices. Failures come back as diagnostics,
/// never errors.
pub fn verify_certificate(cert: &Certificate) -> Verification {
    let structural_issues = cert.structural_issues();
    // Edge diffs are still reported when the arcs are well-defined, so a
    // broken clique shows up both as a structural issue and as its surplus
    // competition edges.
    let arcs_definable = !structural_issues.iter().any(|i| {
        matches!(
            i,
            CertificateError::WrongOrderLength { .. }
                | CertificateError::NotAPermutation(_)
                | CertificateError::MemberOutOfRange { .. }
        )
    });
    let (missing_edges, surplus_edges) = if arcs_definable {
        let total = cert.total_vertices();
        let d = Digraph::new(total, cert.arcs()).expect("members and preys are in range");
        let cd = competition_graph(&d);
        let target: HashSet<(usize, usize)> = cert.graph.edges().iter().copied().collect();
        let got: HashSet<(usize, usize)> = cd.edges().iter().copied().collect();
        let mut missing: Vec<_> = target.difference(&got).copied().collect();
        let mut surplus: Vec<_> = got.difference(&target).copied().collect();
        missing.sort_unstable();
        surplus.sort_unstable();
        (missing, surplus)
    } else {
        (Vec::new(), Vec::new())
    };
    Verification {
        valid: structural_issues.is_empty() && missing_edges.is_empty() && surplus_edges.is_empty(),
        structural_issues,
        missing_edges,
        surplus_edges,
    }
}

/// Resource limits for the exact search.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Graphs larger than this are not searched exactly.
    pub max_vertices: usize,
    pub max_millis: u64,
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_vertices: 10,
            max_millis: 10_000,
            max_nodes: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

/// Result of an exact computation: either the competition number with a
/// verified witness, or the bound sandwich established before the budget ran
/// out.
#[derive(Debug, Clone)]
pub enum ExactResult {
    Exact {
        k: usize,
        certificate: Certificate,
    },
    Inconclusive {
        lower: usize,
        upper: usize,
        certificate: Certificate,
    },
}

#[derive(Debug, Clone)]
pub struct ExactOutcome {
    pub result: ExactResult,
    pub stats: SearchStats,
}

/// Exact competition number by iterating `k` upward from the best lower
/// bound and searching orderings plus prefix-clique assignments.
///
/// Exceeding any budget limit yields an inconclusive result carrying the
/// bounds established so far, never a wrong exact claim.
pub fn exact_competition_number(g: &Graph, budget: &Budget) -> ExactOutcome {
    let start = Instant::now();
    let heuristic = heuristic_upper_bound(g);
    let lower = initial_lower_bound(g);
    debug_assert!(lower <= heuristic.k);

    let elapsed = |start: Instant| start.elapsed().as_millis() as u64;
    if lower == heuristic.k {
        // The sandwich is closed without searching: the certificate proves
        // the upper bound and the lower bound matches it.
        return ExactOutcome {
            result: ExactResult::Exact {
                k: lower,
                certificate: heuristic,
            },
            stats: SearchStats {
                nodes: 0,
                elapsed_ms: elapsed(start),
            },
        };
    }
    if g.vertex_count() > budget.max_vertices || g.edge_count() > 128 {
        return ExactOutcome {
            result: ExactResult::Inconclusive {
                lower,
                upper: heuristic.k,
                certificate: heuristic,
            },
            stats: SearchStats {
                nodes: 0,
                elapsed_ms: elapsed(start),
            },
        };
    }

    let mut searcher = Searcher::new(g, budget, start);
    for k in lower..=heuristic.k {
        if k == heuristic.k {
            // Every smaller k was exhausted, so the greedy witness is optimal.
            break;
        }
        match searcher.feasible(k) {
            Feasibility::Found(certificate) => {
                debug_assert!(verify_certificate(&certificate).valid);
                return ExactOutcome {
                    result: ExactResult::Exact { k, certificate },
                    stats: searcher.stats(),
                };
            }
            Feasibility::Infeasible => continue,
            Feasibility::BudgetExceeded => {
                return ExactOutcome {
                    result: ExactResult::Inconclusive {
                        lower: k,
                        upper: heuristic.k,
                        certificate: heuristic,
                    },
                    stats: searcher.stats(),
                };
            }
        }
    }
    let stats = searcher.stats();
    ExactOutcome {
        result: ExactResult::Exact {
            k: heuristic.k,
            certificate: heuristic,
        },
        stats,
    }
}

/// Sound starting point for the upward search. The aggregate bound report
/// already excludes the edge-cover bound on edgeless graphs, where it is
/// vacuous. Bound evaluation is exact search in its own right, so graphs
/// beyond a safe size keep the trivial floor.
fn initial_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() == 0 || n > 20 {
        return 0;
    }
    if g.edge_count() > 128 {
        // Too many edges for the cover solver, but small and dense means the
        // neighborhood bound is still cheap.
        return opsut_vertex_bound(g).map_or(0, |(_, value)| value);
    }
    let report = best_lower_bound(g, 3.min(n), "").expect("edge targets fit in the cover solver");
    report.best_lower.max(0) as usize
}

enum Feasibility {
    Found(Certificate),
    Infeasible,
    BudgetExceeded,
}

enum Dfs {
    Found,
    Infeasible,
    Abort,
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    edge_index: HashMap<(usize, usize), usize>,
    all_edges: u128,
    /// Elements co-coverable with each edge through a single maximal clique.
    co_coverage: Vec<u128>,
    max_clique_pairs: usize,
    /// Vertex branching preference: descending degree, then label.
    preference: Vec<usize>,
    /// Maximal cliques of each explored prefix, with their edge masks.
    prefix_cliques: HashMap<u64, Vec<(VertexSet, u128)>>,
    /// Minimum cliques needed to cover a residual edge set.
    cover_sizes: HashMap<u128, usize>,
    failed: HashSet<(u64, u128)>,
    trail: Vec<(usize, VertexSet)>,
    found: Option<Certificate>,
    budget: Budget,
    start: Instant,
    nodes: u64,
    aborted: bool,
}

const MEMO_CAP: usize = 4_000_000;

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, budget: &Budget, start: Instant) -> Searcher<'a> {
        let edge_index: HashMap<(usize, usize), usize> =
            g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let cliques = maximal_cliques(g);
        let mut co_coverage = vec![0u128; g.edge_count()];
        let mut omega = 1usize.min(g.vertex_count());
        for c in &cliques {
            omega = omega.max(c.len());
            let mask = clique_edge_mask(c.members(), g, &edge_index);
            let mut bits = mask;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                co_coverage[e] |= mask;
            }
        }
        let mut preference: Vec<usize> = g.vertices().collect();
        preference.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        Searcher {
            g,
            n: g.vertex_count(),
            k: 0,
            edge_index,
            all_edges: mask_of_first(g.edge_count()),
            co_coverage,
            max_clique_pairs: omega * omega.saturating_sub(1) / 2,
            preference,
            prefix_cliques: HashMap::new(),
            cover_sizes: HashMap::new(),
            failed: HashSet::new(),
            trail: Vec::new(),
            found: None,
            budget: *budget,
            start,
            nodes: 0,
            aborted: false,
        }
    }

    fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }

    fn feasible(&mut self, k: usize) -> Feasibility {
        self.k = k;
        self.failed.clear();
        self.trail.clear();
        self.found = None;
        match self.dfs(VertexSet::EMPTY, 0) {
            Dfs::Found => Feasibility::Found(self.found.take().expect("witness recorded")),
            Dfs::Infeasible => Feasibility::Infeasible,
            Dfs::Abort => Feasibility::BudgetExceeded,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(256)
                && self.start.elapsed().as_millis() as u64 > self.budget.max_millis)
        {
            self.aborted = true;
        }
        self.aborted
    }

    /// Greedy pairwise-conflict lower bound on the cliques needed for the
    /// uncovered edges; mirrors the cover solver's bound.
    fn conflict_bound(&self, uncovered: u128) -> usize {
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

    /// Exact minimum number of cliques of `g` covering `uncovered`.
    fn residual_cover_size(&mut self, uncovered: u128) -> usize {
        if let Some(&size) = self.cover_sizes.get(&uncovered) {
            return size;
        }
        let edges = self.edges_of_mask(uncovered);
        let size = theta_e_restricted(&edges, self.g)
            .expect("residual edges lie in the graph")
            .size;
        self.cover_sizes.insert(uncovered, size);
        size
    }

    fn edges_of_mask(&self, mask: u128) -> Vec<(usize, usize)> {
        self.g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect()
    }

    fn dfs(&mut self, placed: VertexSet, covered: u128) -> Dfs {
        self.nodes += 1;
        if self.out_of_budget() {
            return Dfs::Abort;
        }

        let uncovered = self.all_edges & !covered;
        if placed.len() == self.n {
            let needed = if uncovered == 0 {
                0
            } else {
                self.residual_cover_size(uncovered)
            };
            if needed <= self.k {
                self.record_witness(uncovered);
                return Dfs::Found;
            }
            self.remember_failure(placed, covered);
            return Dfs::Infeasible;
        }

        let slots = (self.n - placed.len()) + self.k;
        let deficit = uncovered.count_ones() as usize;
        if deficit > slots * self.max_clique_pairs || self.conflict_bound(uncovered) > slots {
            self.remember_failure(placed, covered);
            return Dfs::Infeasible;
        }
        let key = (placed_key(placed), covered);
        if self.failed.contains(&key) {
            return Dfs::Infeasible;
        }

        // Candidate cliques for the next position: the empty clique, or a
        // maximal clique of the placed prefix covering something new
        // (enlarging any assigned clique to maximal within its prefix keeps
        // a certificate valid, so this loses no solutions).
        let prefix = self.prefix_cliques_for(placed);
        let mut options: Vec<(VertexSet, u128)> = prefix
            .into_iter()
            .filter(|&(_, mask)| mask & uncovered != 0)
            .collect();
        options.sort_by_key(|&(_, mask)| std::cmp::Reverse((mask & uncovered).count_ones()));
        options.push((VertexSet::EMPTY, 0));

        let unplaced: Vec<usize> = self
            .preference
            .iter()
            .copied()
            .filter(|&v| !placed.contains(v))
            .collect();
        for (members, mask) in options {
            for &v in &unplaced {
                self.trail.push((v, members));
                match self.dfs(placed.with(v), covered | mask) {
                    Dfs::Found => return Dfs::Found,
                    Dfs::Abort => return Dfs::Abort,
                    Dfs::Infeasible => {
                        self.trail.pop();
                    }
                }
            }
        }
        self.remember_failure(placed, covered);
        Dfs::Infeasible
    }

    fn remember_failure(&mut self, placed: VertexSet, covered: u128) {
        if self.failed.len() < MEMO_CAP {
            self.failed.insert((placed_key(placed), covered));
        }
    }

    fn prefix_cliques_for(&mut self, placed: VertexSet) -> Vec<(VertexSet, u128)> {
        let key = placed_key(placed);
        if let Some(cached) = self.prefix_cliques.get(&key) {
            return cached.clone();
        }
        let cliques: Vec<(VertexSet, u128)> = maximal_cliques_within(self.g, placed)
            .into_iter()
            .map(|c| {
                (
                    c.members(),
                    clique_edge_mask(c.members(), self.g, &self.edge_index),
                )
            })
            .collect();
        self.prefix_cliques.insert(key, cliques.clone());
        cliques
    }

    /// Assembles the certificate from the trail plus a minimum cover of the
    /// residual edges assigned to the added vertices.
    fn record_witness(&mut self, uncovered: u128) {
        let mut order: Vec<usize> = self.trail.iter().map(|&(v, _)| v).collect();
        let mut assignment: Vec<Vec<usize>> = self.trail.iter().map(|&(_, c)| c.to_vec()).collect();
        order.extend(self.n..self.n + self.k);
        let residual = if uncovered == 0 {
            Vec::new()
        } else {
            let edges = self.edges_of_mask(uncovered);
            theta_e_restricted(&edges, self.g)
                .expect("residual edges lie in the graph")
                .cover
                .cliques
        };
        debug_assert!(residual.len() <= self.k);
        for i in 0..self.k {
            assignment.push(residual.get(i).map_or_else(Vec::new, |c| c.to_vec()));
        }
        self.found = Some(Certificate {
            graph: self.g.clone(),
            k: self.k,
            order,
            assignment,
        });
    }
}

fn placed_key(placed: VertexSet) -> u64 {
    placed.iter().fold(0u64, |acc, v| acc | (1 << v))
}

fn mask_of_first(count: usize) -> u128 {
    if count == 128 {
        u128::MAX
    } else {
        (1u128 << count) - 1
    }
}

fn clique_edge_mask(
    members: VertexSet,
    g: &Graph,
    edge_index: &HashMap<(usize, usize), usize>,
) -> u128 {
    let mut mask = 0u128;
    for u in members.iter() {
        for v in members.iter() {
            if u < v {
                if let Some(&i) = edge_index.get(&(u, v)) {
                    mask |= 1 << i;
                } else {
                    debug_assert!(g.has_edge(u, v), "clique pair must be an edge");
                }
            }
        }
    }
    mask
}

/// A valid certificate built greedily; its `k` is an upper bound on the
/// competition number, with no quality guarantee beyond validity.
///
/// Chordal graphs take the elimination-ordering route, which always lands at
/// `k <= 1`: walking the reverse elimination order, each position is fed the
/// closed later-neighborhood clique of the vertex placed just before it.
pub fn heuristic_upper_bound(g: &Graph) -> Certificate {
    let certificate = match perfect_elimination_order(g) {
        Some(peo) => chordal_certificate(g, &peo),
        None => greedy_certificate(g),
    };
    debug_assert!(verify_certificate(&certificate).valid);
    certificate
}

fn chordal_certificate(g: &Graph, peo: &[usize]) -> Certificate {
    let n = g.vertex_count();
    // cliques[a]: the vertex at elimination position a together with its
    // later neighbors, skipped when it covers nothing.
    let mut later = VertexSet::EMPTY;
    let mut cliques: Vec<Option<VertexSet>> = vec![None; n];
    for a in (0..n).rev() {
        let v = peo[a];
        let later_neighbors = g.neighbors(v).intersection(later);
        if !later_neighbors.is_empty() {
            cliques[a] = Some(later_neighbors.with(v));
        }
        later.insert(v);
    }
    let k = usize::from(cliques.first().is_some_and(Option::is_some));
    let mut order: Vec<usize> = peo.iter().rev().copied().collect();
    order.extend(n..n + k);
    let mut assignment = vec![Vec::new(); n + k];
    for (a, clique) in cliques.iter().enumerate() {
        if let Some(c) = clique {
            // The clique of elimination position a sits entirely at positions
            // <= n-1-a, so the next position n-a may host it; position n is
            // the single added vertex.
            assignment[n - a] = c.to_vec();
        }
    }
    Certificate {
        graph: g.clone(),
        k,
        order,
        assignment,
    }
}

fn greedy_certificate(g: &Graph) -> Certificate {
    let n = g.vertex_count();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    let gain = |c: &Clique, covered: &HashSet<(usize, usize)>| {
        let m = c.members();
        m.iter()
            .flat_map(|u| m.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .filter(|e| !covered.contains(e))
            .count()
    };
    let cover_with = |c: &Clique, covered: &mut HashSet<(usize, usize)>| {
        let m = c.members();
        for u in m.iter() {
            for v in m.iter() {
                if u < v {
                    covered.insert((u, v));
                }
            }
        }
    };

    let mut assignment: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    for &v in &order {
        let best = maximal_cliques_within(g, placed)
            .into_iter()
            .map(|c| (gain(&c, &covered), c))
            .max_by_key(|&(gain, _)| gain)
            .filter(|&(gain, _)| gain > 0);
        match best {
            Some((_, clique)) => {
                cover_with(&clique, &mut covered);
                assignment.push(clique.to_vec());
            }
            None => assignment.push(Vec::new()),
        }
        placed.insert(v);
    }

    // Leftover edges go to fresh prey vertices, one maximal clique each.
    let all = maximal_cliques(g);
    let mut k = 0;
    while covered.len() < g.edge_count() {
        let (_, best) = all
            .iter()
            .map(|c| (gain(c, &covered), c))
            .max_by_key(|&(gain, _)| gain)
            .expect("uncovered edges lie in some maximal clique");
        cover_with(best, &mut covered);
        assignment.push(best.to_vec());
        k += 1;
    }
    order.extend(n..n + k);
    Certificate {
        graph: g.clone(),
        k,
        order,
        assignment,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn two_predators_one_prey() {
        let d = Digraph::new(3, [(0, 2), (1, 2)]).unwrap();
        let c = competition_graph(&d);
        assert_eq!(c.edges(), &[(0, 1)]);
    }

    #[test]
    fn no_arcs_no_edges() {
        let d = Digraph::new(4, []).unwrap();
        assert_eq!(competition_graph(&d).edge_count(), 0);
    }

    #[test]
    fn competition_graph_is_monotone_under_arc_addition() {
        let base = vec![(0, 3), (1, 3), (2, 4)];
        let d1 = Digraph::new(5, base.clone()).unwrap();
        let mut more = base;
        more.push((1, 4));
        let d2 = Digraph::new(5, more).unwrap();
        let e1: HashSet<_> = competition_graph(&d1).edges().iter().copied().collect();
        let e2: HashSet<_> = competition_graph(&d2).edges().iter().copied().collect();
        assert!(e1.is_subset(&e2));
    }

    #[test]
    fn triangle_single_prey_certificate() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        let cert = Certificate {
            graph: k3,
            k: 1,
            order: vec![0, 1, 2, 3],
            assignment: vec![vec![], vec![], vec![], vec![0, 1, 2]],
        };
        let verification = verify_certificate(&cert);
        assert!(verification.valid, "{:?}", verification.describe());
        let d = certificate_to_digraph(&cert).unwrap();
        assert!(d.is_acyclic());
        assert_eq!(d.arc_count(), 3);
    }

    #[test]
    fn empty_assignment_on_k1() {
        let cert = Certificate {
            graph: Graph::edgeless(1),
            k: 0,
            order: vec![0],
            assignment: vec![vec![]],
        };
        assert!(verify_certificate(&cert).valid);
        assert_eq!(certificate_to_digraph(&cert).unwrap().arc_count(), 0);
    }

    #[test]
    fn prefix_violation_is_reported() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        let cert = Certificate {
            graph: k3,
            k: 1,
            order: vec![0, 1, 2, 3],
            assignment: vec![vec![], vec![2], vec![], vec![0, 1, 2]],
        };
        let verification = verify_certificate(&cert);
        assert!(!verification.valid);
        assert!(verification.structural_issues.iter().any(|i| matches!(
            i,
            CertificateError::PrefixViolation {
                position: 1,
                member: 2
            }
        )));
        assert!(certificate_to_digraph(&cert).is_err());
    }

    #[test]
    fn uncovered_edge_is_reported_missing() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        let cert = Certificate {
            graph: k3,
            k: 1,
            order: vec![0, 1, 2, 3],
            assignment: vec![vec![], vec![], vec![], vec![0, 1]],
        };
        let verification = verify_certificate(&cert);
        assert!(!verification.valid);
        assert_eq!(verification.missing_edges, vec![(0, 2), (1, 2)]);
        assert!(verification.surplus_edges.is_empty());
    }

    #[test]
    fn non_clique_assignment_shows_surplus() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let cert = Certificate {
            graph: p3,
            k: 1,
            order: vec![0, 1, 2, 3],
            assignment: vec![vec![], vec![], vec![], vec![0, 1, 2]],
        };
        let verification = verify_certificate(&cert);
        assert!(!verification.valid);
        assert!(verification
            .structural_issues
            .iter()
            .any(|i| matches!(i, CertificateError::NotAClique { .. })));
        assert_eq!(verification.surplus_edges, vec![(0, 2)]);
    }

    #[test]
    fn exact_values_for_small_families() {
        let budget = Budget::default();
        let cases = [
            (Family::Complete(4), 1),
            (Family::Cycle(4), 2),
            (Family::Path(3), 1),
            (Family::Octahedron, 2),
        ];
        for (family, expected) in cases {
            let g = generate(&family).unwrap();
            match exact_competition_number(&g, &budget).result {
                ExactResult::Exact { k, certificate } => {
                    assert_eq!(k, expected, "{family:?}");
                    assert!(verify_certificate(&certificate).valid, "{family:?}");
                }
                ExactResult::Inconclusive { .. } => panic!("{family:?} within budget"),
            }
        }
    }

    #[test]
    fn edgeless_graphs_need_no_added_vertices() {
        let g = Graph::edgeless(3);
        match exact_competition_number(&g, &Budget::default()).result {
            ExactResult::Exact { k, certificate } => {
                assert_eq!(k, 0);
                assert!(verify_certificate(&certificate).valid);
            }
            ExactResult::Inconclusive { .. } => panic!("edgeless graphs are immediate"),
        }
    }

    #[test]
    fn closed_sandwich_resolves_without_search() {
        // Twelve vertices exceed the search budget, but the m=3 bound meets
        // the greedy certificate, so the value is still exact.
        let icosa = generate(&Family::Icosahedron).unwrap();
        let outcome = exact_competition_number(&icosa, &Budget::default());
        match outcome.result {
            ExactResult::Exact { k, certificate } => {
                assert_eq!(k, 4);
                assert!(verify_certificate(&certificate).valid);
                assert_eq!(outcome.stats.nodes, 0);
            }
            ExactResult::Inconclusive { lower, upper, .. } => {
                panic!("bounds [{lower}, {upper}] should have closed")
            }
        }
    }

    #[test]
    fn dense_chordal_graph_closes_via_neighborhood_bound() {
        // 190 edges exceed the cover solver's target capacity, yet the
        // neighborhood bound meets the elimination-ordering certificate.
        let k20 = generate(&Family::Complete(20)).unwrap();
        match exact_competition_number(&k20, &Budget::default()).result {
            ExactResult::Exact { k, certificate } => {
                assert_eq!(k, 1);
                assert!(verify_certificate(&certificate).valid);
            }
            ExactResult::Inconclusive { lower, upper, .. } => {
                panic!("bounds [{lower}, {upper}] should have closed")
            }
        }
    }

    #[test]
    fn exhausted_budget_comes_back_inconclusive() {
        // On K_{3,3} the greedy certificate overshoots the lower bound, so a
        // zero node budget forces the inconclusive path.
        let k33 = generate(&Family::CompleteMultipartite(vec![3, 3])).unwrap();
        let budget = Budget {
            max_nodes: 0,
            ..Budget::default()
        };
        match exact_competition_number(&k33, &budget).result {
            ExactResult::Exact { k, .. } => panic!("search was budgeted out, got k = {k}"),
            ExactResult::Inconclusive {
                lower,
                upper,
                certificate,
            } => {
                assert_eq!(lower, 5);
                assert!(upper >= 5);
                assert!(verify_certificate(&certificate).valid);
            }
        }
    }

    #[test]
    fn heuristic_certificates_are_valid() {
        for family in [
            Family::Complete(5),
            Family::Cycle(6),
            Family::Hexahedron,
            Family::Icosahedron,
            Family::Path(4),
        ] {
            let g = generate(&family).unwrap();
            let cert = heuristic_upper_bound(&g);
            assert!(verify_certificate(&cert).valid, "{family:?}");
            let d = certificate_to_digraph(&cert).unwrap();
            assert!(d.is_acyclic(), "{family:?}");
        }
    }

    #[test]
    fn heuristic_on_chordal_graphs_needs_at_most_one() {
        for family in [Family::Complete(6), Family::Path(5)] {
            let g = generate(&family).unwrap();
            assert!(heuristic_upper_bound(&g).k <= 1, "{family:?}");
        }
        // Two disjoint triangles: chordal, and a single added prey suffices.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(heuristic_upper_bound(&g).k, 1);
        assert_eq!(heuristic_upper_bound(&Graph::edgeless(4)).k, 0);
    }
}
