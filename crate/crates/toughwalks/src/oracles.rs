//! Brute-force verifiers and exact small-instance solvers.
//!
//! Everything in this module is ground truth for the constructive modules:
//! the checkers re-validate witnesses from scratch, and the exponential
//! searches are exact. They take explicit budgets and fail loudly instead
//! of silently grinding; they are test infrastructure, not product paths.

use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bits::BitSet;
use crate::graph::{
    components_avoiding, connected_components, is_connected, Cycle, DominatingWitness, Graph,
};
use crate::kwalk::{KWalk, ToughnessCertificate};
use crate::prism::PrismCycle;
use crate::ratio::Ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("budget of {limit} nodes exhausted after exploring {explored}")]
    BudgetExceeded { limit: u64, explored: u64 },
    #[error("instance too large for brute force (n = {n}, cap {cap}); use force to override")]
    TooLarge { n: usize, cap: usize },
}

/// Node budget for the exponential searches. `force` lifts the size caps.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub nodes: u64,
    pub force: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: 10_000_000,
            force: false,
        }
    }
}

impl Budget {
    pub fn nodes(nodes: u64) -> Self {
        Budget {
            nodes,
            force: false,
        }
    }

    pub fn forced(mut self) -> Self {
        self.force = true;
        self
    }
}

/// True iff every edge of `g` has an endpoint in the witness vertex set.
/// Structurally invalid witnesses are rejected outright.
pub fn check_edge_dominating(g: &Graph, w: &DominatingWitness) -> bool {
    if !w.is_structurally_valid(g) {
        return false;
    }
    let set = w.vertex_set(g.n());
    g.edges()
        .iter()
        .all(|&(u, v)| set.contains(u) || set.contains(v))
}

/// Validates every k-walk invariant: edges exist in the host graph,
/// multiplicities and degrees are in range, degrees are even, the multiset
/// is connected and spanning, and the traversal is an Euler circuit of the
/// multiset visiting no vertex more than k times.
pub fn check_k_walk(g: &Graph, w: &KWalk) -> bool {
    let n = g.n();
    let k = w.k();
    if k < 1 || n == 0 {
        return false;
    }
    let mut degree = vec![0usize; n];
    let mut total = 0usize;
    for (&(u, v), &mult) in w.edge_multiset() {
        if u >= v || v >= n || !g.has_edge(u, v) || mult == 0 || mult > 2 * k {
            return false;
        }
        degree[u] += mult;
        degree[v] += mult;
        total += mult;
    }
    if n == 1 {
        return w.edge_multiset().is_empty() && w.traversal() == [0];
    }
    if degree.iter().any(|&d| d < 2 || d % 2 != 0 || d > 2 * k) {
        return false;
    }
    // connectivity of the support graph over all vertices
    let support = Graph::from_edges(n, w.edge_multiset().keys().copied()).unwrap();
    if connected_components(&support).len() != 1 {
        return false;
    }
    // the traversal must consume the multiset exactly
    let t = w.traversal();
    if t.len() != total + 1 || t.first() != t.last() {
        return false;
    }
    let mut remaining = w.edge_multiset().clone();
    for step in t.windows(2) {
        let key = (step[0].min(step[1]), step[0].max(step[1]));
        match remaining.get_mut(&key) {
            Some(m) if *m > 0 => *m -= 1,
            _ => return false,
        }
    }
    if remaining.values().any(|&m| m != 0) {
        return false;
    }
    let mut visits = vec![0usize; n];
    for &v in &t[..t.len() - 1] {
        if v >= n {
            return false;
        }
        visits[v] += 1;
    }
    visits.iter().all(|&c| 1 <= c && c <= k)
}

/// Validates a claimed Hamiltonian cycle of the prism over `g`.
pub fn check_prism_cycle(g: &Graph, pc: &PrismCycle) -> bool {
    let n = g.n();
    if n == 0 || pc.pairs().len() != 2 * n {
        return false;
    }
    let p = crate::graph::prism(g);
    let mut seen = BitSet::new(2 * n);
    for &(v, layer) in pc.pairs() {
        if v >= n || layer > 1 {
            return false;
        }
        let id = p.encode(v, layer);
        if seen.contains(id) {
            return false;
        }
        seen.insert(id);
    }
    let len = pc.pairs().len();
    if len < 3 {
        return false;
    }
    (0..len).all(|i| {
        let (a, al) = pc.pairs()[i];
        let (b, bl) = pc.pairs()[(i + 1) % len];
        p.graph().has_edge(p.encode(a, al), p.encode(b, bl))
    })
}

/// Exact toughness by exhaustive cutset scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Toughness {
    /// Complete graphs cannot be separated; by convention their toughness
    /// is infinite.
    Infinite,
    Finite(ToughnessCertificate),
}

impl Toughness {
    pub fn value(&self) -> Option<Ratio> {
        match self {
            Toughness::Infinite => None,
            Toughness::Finite(c) => Some(c.bound),
        }
    }

    pub fn at_least(&self, r: Ratio) -> bool {
        self.value().is_none_or(|v| v >= r)
    }

    pub fn greater_than(&self, r: Ratio) -> bool {
        self.value().is_none_or(|v| v > r)
    }
}

const TOUGHNESS_CAP: usize = 20;

/// Minimum of `|S| / c(G - S)` over all cutsets with at least two leftover
/// components, as an exact rational; `Infinite` when no such cutset exists.
/// The reported certificate is the minimizing cutset (smallest mask on ties).
pub fn brute_force_toughness(g: &Graph, budget: &Budget) -> Result<Toughness, OracleError> {
    toughness_guard(g, budget)?;
    #[cfg(feature = "parallel")]
    {
        Ok(finish_toughness(g, toughness_best_par(g)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(finish_toughness(g, toughness_best_serial_impl(g)))
    }
}

/// Sequential reference scan; `brute_force_toughness` falls back to this
/// when the `parallel` feature is disabled.
pub fn brute_force_toughness_serial(g: &Graph, budget: &Budget) -> Result<Toughness, OracleError> {
    toughness_guard(g, budget)?;
    Ok(finish_toughness(g, toughness_best_serial_impl(g)))
}

fn toughness_guard(g: &Graph, budget: &Budget) -> Result<(), OracleError> {
    if g.n() > TOUGHNESS_CAP && !budget.force {
        return Err(OracleError::TooLarge {
            n: g.n(),
            cap: TOUGHNESS_CAP,
        });
    }
    Ok(())
}

fn finish_toughness(g: &Graph, best: Option<(Ratio, u64, usize)>) -> Toughness {
    match best {
        None => Toughness::Infinite,
        Some((bound, mask, components)) => {
            let cutset: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            Toughness::Finite(ToughnessCertificate {
                cutset,
                components,
                bound,
            })
        }
    }
}

fn adjacency_words(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc | 1 << w))
        .collect()
}

fn masked_component_count(adj: &[u64], n: usize, removed: u64) -> usize {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut unseen = full & !removed;
    let mut comps = 0;
    while unseen != 0 {
        comps += 1;
        let mut frontier = 1u64 << unseen.trailing_zeros();
        let mut comp = 0u64;
        while frontier != 0 {
            comp |= frontier;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & unseen & !comp;
        }
        unseen &= !comp;
    }
    comps
}

fn evaluate_cutset(adj: &[u64], n: usize, mask: u64) -> Option<(Ratio, u64, usize)> {
    let comps = masked_component_count(adj, n, mask);
    (comps >= 2).then(|| {
        (
            Ratio::new(mask.count_ones() as i64, comps as i64),
            mask,
            comps,
        )
    })
}

fn toughness_best_serial_impl(g: &Graph) -> Option<(Ratio, u64, usize)> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let adj = adjacency_words(g);
    (0u64..1 << n)
        .filter_map(|mask| evaluate_cutset(&adj, n, mask))
        .min()
}

#[cfg(feature = "parallel")]
fn toughness_best_par(g: &Graph) -> Option<(Ratio, u64, usize)> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let adj = adjacency_words(g);
    (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| evaluate_cutset(&adj, n, mask))
        .min()
}

/// Exact Hamiltonian cycle search by budgeted backtracking with
/// connectivity and degree pruning. Returns the first cycle in
/// lexicographic path order from vertex 0.
pub fn brute_force_hamiltonian(g: &Graph, budget: &Budget) -> Result<Option<Cycle>, OracleError> {
    let n = g.n();
    if n < 3 || !is_connected(g) || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let mut state = HamState {
        g,
        visited: BitSet::from_iter_len(n, [0]),
        path: vec![0],
        nodes: 0,
        limit: budget.nodes,
    };
    if ham_extend(&mut state)? {
        let path = state.path;
        return Ok(Some(
            Cycle::new(g, path).expect("backtracker output is a cycle"),
        ));
    }
    Ok(None)
}

struct HamState<'a> {
    g: &'a Graph,
    visited: BitSet,
    path: Vec<usize>,
    nodes: u64,
    limit: u64,
}

fn ham_extend(s: &mut HamState) -> Result<bool, OracleError> {
    s.nodes += 1;
    if s.nodes > s.limit {
        return Err(OracleError::BudgetExceeded {
            limit: s.limit,
            explored: s.nodes,
        });
    }
    let n = s.g.n();
    let current = *s.path.last().unwrap();
    if s.path.len() == n {
        return Ok(s.g.has_edge(current, s.path[0]));
    }
    if !ham_feasible(s, current) {
        return Ok(false);
    }
    let nbrs: Vec<usize> = s.g.neighbors(current).collect();
    for w in nbrs {
        if s.visited.contains(w) {
            continue;
        }
        s.visited.insert(w);
        s.path.push(w);
        if ham_extend(s)? {
            return Ok(true);
        }
        s.path.pop();
        s.visited.remove(w);
    }
    Ok(false)
}

/// Feasibility prune: the unvisited region plus the current endpoint must
/// be connected, and every unvisited vertex needs two usable cycle slots.
fn ham_feasible(s: &HamState, current: usize) -> bool {
    let n = s.g.n();
    let start = s.path[0];
    let mut unvisited = BitSet::new(n);
    for v in 0..n {
        if !s.visited.contains(v) {
            unvisited.insert(v);
        }
    }
    // degree feasibility
    for v in unvisited.iter() {
        let mut usable = 0;
        for w in s.g.neighbors(v) {
            if !s.visited.contains(w) || w == current || w == start {
                usable += 1;
                if usable == 2 {
                    break;
                }
            }
        }
        if usable < 2 {
            return false;
        }
    }
    // connectivity of unvisited ∪ {current}
    let mut frontier = BitSet::from_iter_len(n, [current]);
    let mut seen = BitSet::new(n);
    while let Some(v) = frontier.first() {
        frontier.remove(v);
        seen.insert(v);
        let mut next = s.g.neighbors_bits(v).clone();
        next.difference_with(&seen);
        for w in next.iter() {
            if unvisited.contains(w) {
                frontier.insert(w);
            }
        }
    }
    unvisited.iter().all(|v| seen.contains(v))
}

const DOMCYCLE_CAP: usize = 14;

/// Exact shortest edge-dominating cycle, or `None` when no cycle dominates
/// (in particular for forests). Cycles are enumerated in canonical form by
/// increasing length, so the result is deterministic.
pub fn brute_force_dominating_cycle(
    g: &Graph,
    budget: &Budget,
) -> Result<Option<Cycle>, OracleError> {
    let n = g.n();
    if n > DOMCYCLE_CAP && !budget.force {
        return Err(OracleError::TooLarge {
            n,
            cap: DOMCYCLE_CAP,
        });
    }
    if n < 3 {
        return Ok(None);
    }
    let mut nodes = 0u64;
    for target in 3..=n {
        for v0 in 0..n {
            let mut path = vec![v0];
            let mut visited = BitSet::from_iter_len(n, [v0]);
            if let Some(cycle) =
                dom_cycle_dfs(g, target, &mut path, &mut visited, &mut nodes, budget.nodes)?
            {
                return Ok(Some(cycle));
            }
        }
    }
    Ok(None)
}

fn dom_cycle_dfs(
    g: &Graph,
    target: usize,
    path: &mut Vec<usize>,
    visited: &mut BitSet,
    nodes: &mut u64,
    limit: u64,
) -> Result<Option<Cycle>, OracleError> {
    *nodes += 1;
    if *nodes > limit {
        return Err(OracleError::BudgetExceeded {
            limit,
            explored: *nodes,
        });
    }
    let v0 = path[0];
    let current = *path.last().unwrap();
    if path.len() == target {
        // close canonically: kill reflections by orienting second < last
        if g.has_edge(current, v0) && path[1] < path[target - 1] && dominates(g, visited) {
            return Ok(Some(
                Cycle::new(g, path.clone()).expect("enumerated cycle is valid"),
            ));
        }
        return Ok(None);
    }
    let nbrs: Vec<usize> = g.neighbors(current).collect();
    for w in nbrs {
        // v0 stays the smallest vertex on the cycle
        if w <= v0 || visited.contains(w) {
            continue;
        }
        visited.insert(w);
        path.push(w);
        if let Some(c) = dom_cycle_dfs(g, target, path, visited, nodes, limit)? {
            return Ok(Some(c));
        }
        path.pop();
        visited.remove(w);
    }
    Ok(None)
}

fn dominates(g: &Graph, on_cycle: &BitSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| on_cycle.contains(u) || on_cycle.contains(v))
}

/// Brute-force vertex connectivity test: `g` is k-connected iff it has more
/// than k vertices and no deletion of fewer than k vertices disconnects it.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.n();
    if n <= k {
        return false;
    }
    let mut removed = Vec::new();
    subsets_up_to(n, k - 1, &mut removed, &mut |subset: &[usize]| {
        let mask = BitSet::from_iter_len(n, subset.iter().copied());
        components_avoiding(g, &mask).len() == 1
    })
}

fn subsets_up_to(
    n: usize,
    max_size: usize,
    chosen: &mut Vec<usize>,
    check: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if !check(chosen) {
        return false;
    }
    if chosen.len() == max_size {
        return true;
    }
    let from = chosen.last().map_or(0, |&v| v + 1);
    for v in from..n {
        chosen.push(v);
        if !subsets_up_to(n, max_size, chosen, check) {
            return false;
        }
        chosen.pop();
    }
    true
}

/// Degree-sum condition for edge-dominating cycles: `g` must be
/// (l-1)-connected and every induced lK2 subgraph needs total degree at
/// least `(l-1)(n-l+1)/2`.
///
/// The displayed bound in the source statement has unbalanced delimiters;
/// it is read here as `(l-1)(|V(G)|-l+1)/2`, compared exactly via
/// `2 * sum >= (l-1)(n-l+1)`.
pub fn veldman_condition(g: &Graph, l: usize, budget: &Budget) -> Result<bool, OracleError> {
    assert!(l >= 2);
    if l > 3 && !budget.force {
        return Err(OracleError::TooLarge { n: l, cap: 3 });
    }
    if !is_k_connected(g, l - 1) {
        return Ok(false);
    }
    let n = g.n() as i64;
    let threshold = (l as i64 - 1) * (n - l as i64 + 1);
    let mut chosen = Vec::with_capacity(l);
    let mut nodes = 0u64;
    let ok = all_induced_lk2(
        g,
        l,
        0,
        &mut chosen,
        &mut nodes,
        budget.nodes,
        &mut |edges| {
            let sum: i64 = edges
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .map(|v| g.degree(v) as i64)
                .sum();
            2 * sum >= threshold
        },
    )?;
    Ok(ok)
}

fn all_induced_lk2(
    g: &Graph,
    l: usize,
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    nodes: &mut u64,
    limit: u64,
    check: &mut impl FnMut(&[(usize, usize)]) -> bool,
) -> Result<bool, OracleError> {
    if chosen.len() == l {
        return Ok(check(chosen));
    }
    for idx in from..g.m() {
        *nodes += 1;
        if *nodes > limit {
            return Err(OracleError::BudgetExceeded {
                limit,
                explored: *nodes,
            });
        }
        let e = g.edges()[idx];
        let compatible = chosen.iter().all(|&(a, b)| {
            let (u, v) = e;
            a != u
                && a != v
                && b != u
                && b != v
                && !g.has_edge(a, u)
                && !g.has_edge(a, v)
                && !g.has_edge(b, u)
                && !g.has_edge(b, v)
        });
        if compatible {
            chosen.push(e);
            if !all_induced_lk2(g, l, idx + 1, chosen, nodes, limit, check)? {
                return Ok(false);
            }
            chosen.pop();
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_net;
    use crate::graph::prism;

    #[test]
    fn edge_domination_examples() {
        let net = fixture_net();
        let triangle = DominatingWitness::Cycle {
            vertices: vec![1, 2, 4],
        };
        assert!(check_edge_dominating(&net, &triangle));
        // a pendant vertex leaves the opposite pendant edge untouched
        let pendant = DominatingWitness::Vertex { vertex: 0 };
        assert!(!check_edge_dominating(&net, &pendant));
        let all = DominatingWitness::Cycle {
            vertices: vec![0, 1, 4, 5],
        };
        // structurally invalid (0 and 5 are not adjacent): rejected
        assert!(!check_edge_dominating(&net, &all));
    }

    #[test]
    fn toughness_examples() {
        let b = Budget::default();
        assert_eq!(
            brute_force_toughness(&Graph::complete(4), &b).unwrap(),
            Toughness::Infinite
        );
        let net = fixture_net();
        let t = brute_force_toughness(&net, &b).unwrap();
        match &t {
            Toughness::Finite(c) => {
                assert_eq!(c.bound, Ratio::new(1, 2));
                assert_eq!(c.cutset, vec![1]);
                assert_eq!(c.components, 2);
                assert!(c.is_valid(&net));
            }
            Toughness::Infinite => panic!("net is not complete"),
        }
        let c6 = brute_force_toughness(&Graph::cycle(6), &b).unwrap();
        assert_eq!(c6.value(), Some(Ratio::from(1)));
        // disconnected graphs have toughness 0 via the empty cutset
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t0 = brute_force_toughness(&split, &b).unwrap();
        assert_eq!(t0.value(), Some(Ratio::from(0)));
    }

    #[test]
    fn toughness_guard() {
        let g = Graph::empty(21);
        assert!(matches!(
            brute_force_toughness(&g, &Budget::default()),
            Err(OracleError::TooLarge { n: 21, cap: 20 })
        ));
        assert!(brute_force_toughness(&g, &Budget::default().forced()).is_ok());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn toughness_parallel_matches_serial() {
        let b = Budget::default();
        let mut rng = crate::rng::SplitMix64::new(0x70f);
        for _ in 0..40 {
            let n = 2 + rng.below(9) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.chance(1, 2) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(
                brute_force_toughness(&g, &b).unwrap(),
                brute_force_toughness_serial(&g, &b).unwrap()
            );
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let b = Budget::default();
        let c5 = Graph::cycle(5);
        let cycle = brute_force_hamiltonian(&c5, &b).unwrap().unwrap();
        assert_eq!(cycle.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(brute_force_hamiltonian(&fixture_net(), &b).unwrap(), None);
        let pn = prism(&fixture_net());
        assert_eq!(brute_force_hamiltonian(pn.graph(), &b).unwrap(), None);
    }

    #[test]
    fn hamiltonian_budget() {
        let g = Graph::complete(12);
        let tiny = Budget::nodes(3);
        assert!(matches!(
            brute_force_hamiltonian(&g, &tiny),
            Err(OracleError::BudgetExceeded { limit: 3, .. })
        ));
    }

    #[test]
    fn dominating_cycle_examples() {
        let b = Budget::default();
        let net_cycle = brute_force_dominating_cycle(&fixture_net(), &b)
            .unwrap()
            .unwrap();
        assert_eq!(net_cycle.vertices(), &[1, 2, 4]);
        let c6 = brute_force_dominating_cycle(&Graph::cycle(6), &b)
            .unwrap()
            .unwrap();
        assert_eq!(c6.len(), 6);
        assert_eq!(
            brute_force_dominating_cycle(&Graph::path(4), &b).unwrap(),
            None
        );
    }

    #[test]
    fn dominating_cycle_agrees_with_checker() {
        let b = Budget::default();
        for g in [fixture_net(), Graph::cycle(7), Graph::complete(5)] {
            let c = brute_force_dominating_cycle(&g, &b).unwrap().unwrap();
            assert!(check_edge_dominating(&g, &DominatingWitness::cycle(&c)));
        }
    }

    #[test]
    fn k_walk_checker_rejects_disconnected_multisets() {
        use crate::kwalk::KWalk;
        let p4 = Graph::path(4);
        // two doubled end edges span all vertices but fall apart in the middle
        let w = KWalk::from_parts(2, [((0, 1), 2), ((2, 3), 2)], vec![0, 1, 0, 2, 3, 2]);
        assert!(!check_k_walk(&p4, &w));
        // the genuine article still passes
        let c4 = Graph::cycle(4);
        let ok = KWalk::from_parts(
            2,
            (0..4).map(|i| ((i.min((i + 1) % 4), i.max((i + 1) % 4)), 1)),
            vec![0, 1, 2, 3, 0],
        );
        assert!(check_k_walk(&c4, &ok));
        // odd degree, degree overflow, traversal mismatch
        let odd = KWalk::from_parts(
            2,
            [((0, 1), 1), ((1, 2), 2), ((2, 3), 1), ((0, 3), 2)],
            vec![0, 1, 2, 1, 2, 3, 0, 3, 0],
        );
        assert!(!check_k_walk(&c4, &odd));
    }

    #[test]
    fn prism_cycle_checker_examples() {
        use crate::prism::PrismCycle;
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let four = PrismCycle::new(vec![(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(check_prism_cycle(&k2, &four));
        // skipping a layer-1 vertex is not spanning
        let short = PrismCycle::new(vec![(0, 0), (1, 0), (1, 1)]);
        assert!(!check_prism_cycle(&k2, &short));
        // repeating one is not a cycle either
        let dup = PrismCycle::new(vec![(0, 0), (1, 0), (1, 1), (1, 1)]);
        assert!(!check_prism_cycle(&k2, &dup));
    }

    #[test]
    fn veldman_budget_is_enforced() {
        let g = Graph::complete(8);
        assert!(matches!(
            veldman_condition(&g, 4, &Budget::default()),
            Err(OracleError::TooLarge { .. })
        ));
        let big = Graph::from_edges(8, (0..7).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(
            veldman_condition(&big, 2, &Budget::nodes(1)),
            Err(OracleError::BudgetExceeded { limit: 1, .. })
        ));
    }

    #[test]
    fn connectivity_brute_force() {
        assert!(is_k_connected(&Graph::complete(5), 4));
        assert!(!is_k_connected(&Graph::complete(5), 5));
        assert!(is_k_connected(&Graph::cycle(6), 2));
        assert!(!is_k_connected(&Graph::path(4), 2));
        assert!(!is_k_connected(
            &Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            1
        ));
        assert!(!is_k_connected(&Graph::empty(1), 1));
    }

    #[test]
    fn veldman_examples() {
        let b = Budget::default();
        // any 2K2-free graph: the degree clause is vacuous, so the value is
        // exactly 1-connectivity
        assert!(veldman_condition(&fixture_net(), 2, &b).unwrap());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!veldman_condition(&two_k2, 2, &b).unwrap());
        // C6: every induced 2K2 has degree sum 8 >= (1)(6-1)/2
        assert!(veldman_condition(&Graph::cycle(6), 2, &b).unwrap());
    }

    #[test]
    fn veldman_degree_clause_can_fail() {
        // two triangles joined by a long path: 1-connected, but the induced
        // 2K2 of the two far triangle edges has degree sum 8 < (n-1)/2 * 2
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let path: Vec<usize> = (6..18).collect();
        edges.push((2, 6));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((17, 3));
        let g = Graph::from_edges(18, edges).unwrap();
        assert!(!veldman_condition(&g, 2, &Budget::default()).unwrap());
    }
}
