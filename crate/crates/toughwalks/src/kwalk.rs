//! From an edge-dominating witness to a k-walk.
//!
//! The construction matches every vertex outside the witness to a witness
//! vertex under a uniform capacity of k−1, then takes the witness edges
//! (doubled for an edge witness) plus the matching edges doubled. When the
//! matching is infeasible, the Hall violator converts into an exact
//! toughness certificate refuting the 1/(k−1)-toughness hypothesis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitSet;
use crate::flow::FlowNetwork;
use crate::graph::{components_avoiding, is_connected, DominatingWitness, Graph};
use crate::oracles::check_edge_dominating;
use crate::ratio::Ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KwalkError {
    #[error("outside vertices {0} and {1} are adjacent; the outside set must be independent")]
    OutsideNotIndependent(usize, usize),
    #[error("vertex {0} appears in both the target and outside sets")]
    OverlappingSets(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("witness does not validate against the host graph")]
    InvalidWitness,
    #[error("k = {0} is too small; k-walk construction needs k >= 2")]
    KTooSmall(usize),
    #[error("graph must have at least 2 vertices")]
    GraphTooSmall,
    #[error("graph is not connected")]
    NotConnected,
    #[error("outside vertex {0} has no neighbor in the witness")]
    NoNeighborInWitness(usize),
}

/// A cutset together with the component count it leaves behind; proves the
/// exact toughness upper bound `|S| / c(G−S)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ToughnessCertificate {
    pub cutset: Vec<usize>,
    pub components: usize,
    pub bound: Ratio,
}

impl ToughnessCertificate {
    /// Builds the certificate for a cutset by recounting components.
    /// Panics if removing the cutset leaves fewer than two components;
    /// callers only construct certificates from genuine Hall violators.
    pub fn from_cutset(g: &Graph, mut cutset: Vec<usize>) -> Self {
        cutset.sort_unstable();
        cutset.dedup();
        let removed = BitSet::from_iter_len(g.n(), cutset.iter().copied());
        let components = components_avoiding(g, &removed).len();
        assert!(components >= 2, "cutset must disconnect the graph");
        ToughnessCertificate {
            bound: Ratio::new(cutset.len() as i64, components as i64),
            cutset,
            components,
        }
    }

    /// Recounts components from scratch and re-checks the exact bound.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.cutset.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if self.cutset.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        let removed = BitSet::from_iter_len(g.n(), self.cutset.iter().copied());
        let components = components_avoiding(g, &removed).len();
        components == self.components
            && components >= 2
            && self.bound == Ratio::new(self.cutset.len() as i64, components as i64)
    }
}

/// A saturating assignment of outside vertices to witness vertices, with
/// every witness vertex used at most `capacity` times.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CapacitatedMatching {
    /// `(outside, target)` pairs, sorted by outside vertex. Each pair is an
    /// edge of the host graph.
    pub pairs: Vec<(usize, usize)>,
    pub capacity: usize,
}

/// A subset of the outside vertices whose capacity-weighted neighborhood in
/// the targets is too small: `capacity * |N(D0) ∩ targets| < |D0|`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HallViolator {
    pub subset: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatchingOutcome {
    Saturated(CapacitatedMatching),
    Violator(HallViolator),
}

/// Maximum bipartite matching of `outside` into `targets` with per-target
/// capacity, implemented as max flow. On infeasibility the Hall violator is
/// read off the min cut: the outside vertices on the source side.
///
/// Edges from outside vertices to non-target vertices are simply unusable;
/// they do not raise an error (an outside vertex with no target neighbor
/// lands in the violator).
pub fn capacitated_matching(
    g: &Graph,
    targets: &[usize],
    outside: &[usize],
    capacity: usize,
) -> Result<MatchingOutcome, KwalkError> {
    assert!(capacity >= 1, "capacity must be positive");
    let n = g.n();
    for &v in targets.iter().chain(outside) {
        if v >= n {
            return Err(KwalkError::VertexOutOfRange { vertex: v, n });
        }
    }
    let target_set = BitSet::from_iter_len(n, targets.iter().copied());
    let outside_set = BitSet::from_iter_len(n, outside.iter().copied());
    if let Some(v) = outside.iter().find(|&&v| target_set.contains(v)) {
        return Err(KwalkError::OverlappingSets(*v));
    }
    for &u in outside {
        if let Some(v) = g.neighbors_bits(u).first_common(&outside_set) {
            return Err(KwalkError::OutsideNotIndependent(u.min(v), u.max(v)));
        }
    }

    let mut targets: Vec<usize> = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    let mut outside: Vec<usize> = outside.to_vec();
    outside.sort_unstable();
    outside.dedup();

    let mut target_index = vec![usize::MAX; n];
    for (j, &t) in targets.iter().enumerate() {
        target_index[t] = j;
    }
    // node layout: 0 source, 1 sink, then outside, then targets
    let source = 0;
    let sink = 1;
    let o_base = 2;
    let t_base = 2 + outside.len();
    let mut net = FlowNetwork::new(t_base + targets.len());
    for i in 0..outside.len() {
        net.add_arc(source, o_base + i, 1);
    }
    let mut pair_arcs: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &u) in outside.iter().enumerate() {
        for w in g.neighbors(u) {
            if target_set.contains(w) {
                let arc = net.add_arc(o_base + i, t_base + target_index[w], 1);
                pair_arcs.push((arc, u, w));
            }
        }
    }
    for j in 0..targets.len() {
        net.add_arc(t_base + j, sink, capacity as i64);
    }

    let flow = net.max_flow(source, sink);
    if flow == outside.len() as i64 {
        let mut pairs: Vec<(usize, usize)> = pair_arcs
            .iter()
            .filter(|&&(arc, _, _)| net.flow_on(arc) == 1)
            .map(|&(_, u, w)| (u, w))
            .collect();
        pairs.sort_unstable();
        return Ok(MatchingOutcome::Saturated(CapacitatedMatching {
            pairs,
            capacity,
        }));
    }
    let side = net.residual_reachable(source);
    let subset: Vec<usize> = outside
        .iter()
        .enumerate()
        .filter(|&(i, _)| side[o_base + i])
        .map(|(_, &u)| u)
        .collect();
    debug_assert!({
        let mut nbhd = BitSet::new(n);
        for &u in &subset {
            for v in g.neighbors(u) {
                if target_set.contains(v) {
                    nbhd.insert(v);
                }
            }
        }
        capacity * nbhd.count() < subset.len()
    });
    Ok(MatchingOutcome::Violator(HallViolator { subset }))
}

/// A spanning closed walk visiting each vertex at most k times, stored as
/// its even-degree edge multiset together with an Euler-circuit traversal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(from = "KWalkWire", into = "KWalkWire")]
pub struct KWalk {
    k: usize,
    edge_multiset: BTreeMap<(usize, usize), usize>,
    traversal: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct KWalkWire {
    k: usize,
    edges: Vec<(usize, usize, usize)>,
    traversal: Vec<usize>,
}

impl From<KWalk> for KWalkWire {
    fn from(w: KWalk) -> Self {
        KWalkWire {
            k: w.k,
            edges: w
                .edge_multiset
                .iter()
                .map(|(&(u, v), &m)| (u, v, m))
                .collect(),
            traversal: w.traversal,
        }
    }
}

impl From<KWalkWire> for KWalk {
    fn from(w: KWalkWire) -> Self {
        KWalk::from_parts(
            w.k,
            w.edges.into_iter().map(|(u, v, m)| ((u, v), m)),
            w.traversal,
        )
    }
}

impl KWalk {
    /// Assembles a walk without validation; `oracles::check_k_walk` is the
    /// judge of whether the parts form a real k-walk.
    pub fn from_parts(
        k: usize,
        edges: impl IntoIterator<Item = ((usize, usize), usize)>,
        traversal: Vec<usize>,
    ) -> Self {
        KWalk {
            k,
            edge_multiset: edges.into_iter().collect(),
            traversal,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_multiset(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.edge_multiset
    }

    pub fn traversal(&self) -> &[usize] {
        &self.traversal
    }

    pub fn total_multiplicity(&self) -> usize {
        self.edge_multiset.values().sum()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KWalkOutcome {
    Walk(KWalk),
    Certificate(ToughnessCertificate),
}

/// Builds a k-walk from an edge-dominating witness, or converts the Hall
/// violator of the capacity-(k−1) matching into a toughness certificate
/// with bound strictly below 1/(k−1).
pub fn build_k_walk(
    g: &Graph,
    w: &DominatingWitness,
    k: usize,
) -> Result<KWalkOutcome, KwalkError> {
    if k < 2 {
        return Err(KwalkError::KTooSmall(k));
    }
    if g.n() < 2 {
        return Err(KwalkError::GraphTooSmall);
    }
    if !is_connected(g) {
        return Err(KwalkError::NotConnected);
    }
    if !check_edge_dominating(g, w) {
        return Err(KwalkError::InvalidWitness);
    }
    let targets = sorted_vertex_ids(w);
    let outside = complement(g.n(), &targets);
    match capacitated_matching(g, &targets, &outside, k - 1)? {
        MatchingOutcome::Saturated(m) => Ok(KWalkOutcome::Walk(assemble_walk(g, w, k, &m))),
        MatchingOutcome::Violator(d0) => {
            let cert = violator_certificate(g, &d0, &targets, None);
            debug_assert!(cert.bound < Ratio::new(1, k as i64 - 1));
            debug_assert!(cert.is_valid(g));
            Ok(KWalkOutcome::Certificate(cert))
        }
    }
}

/// Converts a Hall violator into a toughness certificate: the cutset is the
/// violator's neighborhood within the targets, plus an optional extra vertex
/// (used by the odd prism template, whose matching excludes one cycle
/// vertex that violator vertices may still lean on).
pub(crate) fn violator_certificate(
    g: &Graph,
    d0: &HallViolator,
    targets: &[usize],
    extra: Option<usize>,
) -> ToughnessCertificate {
    let n = g.n();
    let target_set = BitSet::from_iter_len(n, targets.iter().copied());
    let mut cutset = BitSet::new(n);
    let mut touches_extra = false;
    for &u in &d0.subset {
        for v in g.neighbors(u) {
            if target_set.contains(v) {
                cutset.insert(v);
            }
            if Some(v) == extra {
                touches_extra = true;
            }
        }
    }
    if touches_extra {
        cutset.insert(extra.unwrap());
    }
    ToughnessCertificate::from_cutset(g, cutset.to_vec())
}

fn sorted_vertex_ids(w: &DominatingWitness) -> Vec<usize> {
    let mut ids = w.vertex_ids();
    ids.sort_unstable();
    ids.dedup();
    ids
}

fn complement(n: usize, sorted: &[usize]) -> Vec<usize> {
    let set = BitSet::from_iter_len(n, sorted.iter().copied());
    (0..n).filter(|&v| !set.contains(v)).collect()
}

fn assemble_walk(g: &Graph, w: &DominatingWitness, k: usize, m: &CapacitatedMatching) -> KWalk {
    let mut multiset: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    match w {
        DominatingWitness::Cycle { vertices } => {
            for i in 0..vertices.len() {
                let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
                *multiset.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        DominatingWitness::Edge { edge: (a, b) } => {
            multiset.insert((*a.min(b), *a.max(b)), 2);
        }
        DominatingWitness::Vertex { .. } => {}
    }
    for &(u, t) in &m.pairs {
        multiset.insert((u.min(t), u.max(t)), 2);
    }
    let traversal = euler_circuit(g.n(), &multiset);
    let walk = KWalk {
        k,
        edge_multiset: multiset,
        traversal,
    };
    debug_assert!(crate::oracles::check_k_walk(g, &walk));
    walk
}

/// Hierholzer's algorithm from vertex 0, taking the smallest available
/// neighbor first so the traversal is canonical.
fn euler_circuit(n: usize, multiset: &BTreeMap<(usize, usize), usize>) -> Vec<usize> {
    let mut remaining: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for (&(u, v), &m) in multiset {
        remaining[u].insert(v, m);
        remaining[v].insert(u, m);
    }
    let mut stack = vec![0usize];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        if let Some((&w, _)) = remaining[v].iter().next() {
            let m = remaining[v].get_mut(&w).unwrap();
            *m -= 1;
            if *m == 0 {
                remaining[v].remove(&w);
            }
            let back = remaining[w].get_mut(&v).unwrap();
            *back -= 1;
            if *back == 0 {
                remaining[w].remove(&v);
            }
            stack.push(w);
        } else {
            circuit.push(stack.pop().unwrap());
        }
    }
    circuit.reverse();
    circuit
}

/// The smallest k ≥ 2 for which `build_k_walk` succeeds, found by raising
/// the matching capacity until it saturates.
pub fn minimal_construction_k(g: &Graph, w: &DominatingWitness) -> Result<usize, KwalkError> {
    if g.n() < 2 {
        return Err(KwalkError::GraphTooSmall);
    }
    if !is_connected(g) {
        return Err(KwalkError::NotConnected);
    }
    if !w.is_structurally_valid(g) {
        return Err(KwalkError::InvalidWitness);
    }
    let targets = sorted_vertex_ids(w);
    let target_set = BitSet::from_iter_len(g.n(), targets.iter().copied());
    let outside = complement(g.n(), &targets);
    if let Some(&u) = outside
        .iter()
        .find(|&&u| g.neighbors_bits(u).first_common(&target_set).is_none())
    {
        return Err(KwalkError::NoNeighborInWitness(u));
    }
    if !check_edge_dominating(g, w) {
        return Err(KwalkError::InvalidWitness);
    }
    for capacity in 1..=outside.len().max(1) {
        if let MatchingOutcome::Saturated(_) =
            capacitated_matching(g, &targets, &outside, capacity)?
        {
            return Ok(capacity + 1);
        }
    }
    unreachable!(
        "capacity |outside| always saturates once every outside vertex has a target neighbor"
    )
}
