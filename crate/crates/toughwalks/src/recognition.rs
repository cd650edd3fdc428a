//! Induced-matching (ℓK2) detection, 2K2-freeness and triangle search.
//!
//! Witnesses are always the lexicographically smallest under
//! (sorted edge, sorted pair) order, so downstream golden tests are
//! deterministic. The ℓ = 2 pair scan is the hot path; with the
//! `parallel` feature it fans out over the first edge while keeping
//! the same minimal witness.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("l must be at least 1")]
    InvalidL,
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
}

/// An induced matching: ℓ pairwise nonadjacent edges with no other edges
/// among their 2ℓ endpoints.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InducedMatchingWitness {
    pub edges: Vec<(usize, usize)>,
}

impl InducedMatchingWitness {
    /// Re-validates distinctness and induced-ness against a host graph.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut endpoints = Vec::new();
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return false;
            }
            endpoints.push(u);
            endpoints.push(v);
        }
        let mut sorted = endpoints.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 2 * self.edges.len() {
            return false;
        }
        // the listed pairs must be the only edges among the endpoints
        for i in 0..endpoints.len() {
            for j in i + 1..endpoints.len() {
                let same_pair = i / 2 == j / 2;
                if !same_pair && g.has_edge(endpoints[i], endpoints[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Three pairwise-adjacent vertices, stored ascending.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Triangle(pub usize, pub usize, pub usize);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triangle(t[0], t[1], t[2])
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let Triangle(a, b, c) = *self;
        a < b && b < c && c < g.n() && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }
}

const DEFAULT_LK2_BUDGET: u64 = 50_000_000;

/// Smallest induced ℓK2, or `None` when the graph is ℓK2-free.
///
/// ℓ = 1 and 2 are exact polynomial scans; larger ℓ extends matchings
/// recursively and is guarded by a node budget.
pub fn find_induced_lk2(
    g: &Graph,
    l: usize,
) -> Result<Option<InducedMatchingWitness>, RecognitionError> {
    find_induced_lk2_with_budget(g, l, DEFAULT_LK2_BUDGET)
}

pub fn find_induced_lk2_with_budget(
    g: &Graph,
    l: usize,
    budget: u64,
) -> Result<Option<InducedMatchingWitness>, RecognitionError> {
    match l {
        0 => Err(RecognitionError::InvalidL),
        1 => Ok(g
            .edges()
            .first()
            .map(|&e| InducedMatchingWitness { edges: vec![e] })),
        2 => Ok(find_induced_2k2(g)),
        _ => {
            let mut nodes = 0u64;
            let mut chosen = Vec::with_capacity(l);
            extend_matching(g, l, 0, &mut chosen, &mut nodes, budget)
        }
    }
}

fn extend_matching(
    g: &Graph,
    l: usize,
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<InducedMatchingWitness>, RecognitionError> {
    if chosen.len() == l {
        return Ok(Some(InducedMatchingWitness {
            edges: chosen.clone(),
        }));
    }
    for idx in from..g.m() {
        *nodes += 1;
        if *nodes > budget {
            return Err(RecognitionError::BudgetExceeded { limit: budget });
        }
        let (u, v) = g.edges()[idx];
        if chosen
            .iter()
            .all(|&(a, b)| disjoint_nonadjacent(g, (a, b), (u, v)))
        {
            chosen.push((u, v));
            if let Some(w) = extend_matching(g, l, idx + 1, chosen, nodes, budget)? {
                return Ok(Some(w));
            }
            chosen.pop();
        }
    }
    Ok(None)
}

#[inline]
fn disjoint_nonadjacent(g: &Graph, (a, b): (usize, usize), (u, v): (usize, usize)) -> bool {
    a != u
        && a != v
        && b != u
        && b != v
        && !g.has_edge(a, u)
        && !g.has_edge(a, v)
        && !g.has_edge(b, u)
        && !g.has_edge(b, v)
}

/// Smallest induced 2K2 under (edge, edge) lexicographic order.
pub fn find_induced_2k2(g: &Graph) -> Option<InducedMatchingWitness> {
    #[cfg(feature = "parallel")]
    {
        find_induced_2k2_impl_par(g)
    }
    #[cfg(not(feature = "parallel"))]
    {
        find_induced_2k2_serial(g)
    }
}

/// Sequential reference scan; `find_induced_2k2` falls back to this when
/// the `parallel` feature is disabled.
pub fn find_induced_2k2_serial(g: &Graph) -> Option<InducedMatchingWitness> {
    let edges = g.edges();
    for i in 0..edges.len() {
        if let Some(j) = best_partner(g, i) {
            return Some(InducedMatchingWitness {
                edges: vec![edges[i], edges[j]],
            });
        }
    }
    None
}

#[cfg(feature = "parallel")]
fn find_induced_2k2_impl_par(g: &Graph) -> Option<InducedMatchingWitness> {
    let edges = g.edges();
    (0..edges.len())
        .into_par_iter()
        .filter_map(|i| best_partner(g, i).map(|j| (i, j)))
        .min()
        .map(|(i, j)| InducedMatchingWitness {
            edges: vec![edges[i], edges[j]],
        })
}

#[inline]
fn best_partner(g: &Graph, i: usize) -> Option<usize> {
    let edges = g.edges();
    let first = edges[i];
    (i + 1..edges.len()).find(|&j| disjoint_nonadjacent(g, first, edges[j]))
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_induced_2k2(g).is_none()
}

/// Smallest triangle by neighborhood intersection along each edge, or
/// `None` in triangle-free graphs.
pub fn find_triangle(g: &Graph) -> Option<Triangle> {
    for &(u, v) in g.edges() {
        if let Some(w) = g.neighbors_bits(u).first_common(g.neighbors_bits(v)) {
            return Some(Triangle::new(u, v, w));
        }
    }
    None
}
