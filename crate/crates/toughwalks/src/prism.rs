//! Hamiltonian cycles in the prism over 2K2-free graphs.
//!
//! Two explicit templates turn an edge-dominating cycle into a Hamiltonian
//! cycle of the prism: an even cycle zigzags through both layers using every
//! rung, an odd cycle additionally consumes the two chords of a triangle at
//! a fixed position. Vertices off the dominating cycle are matched to cycle
//! vertices with capacity one and spliced in as three-edge detours replacing
//! the matched rungs. Matching failures convert into exact toughness
//! certificates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domcycle::{find_edge_dominating_cycle_with_triangle, DomCycleError};
use crate::graph::{is_connected, Cycle, CycleError, DominatingWitness, Graph};
use crate::kwalk::{
    capacitated_matching, violator_certificate, MatchingOutcome, ToughnessCertificate,
};
use crate::oracles::{brute_force_hamiltonian, check_edge_dominating, Budget, OracleError};
use crate::recognition::{find_induced_2k2, find_triangle, InducedMatchingWitness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrismError {
    #[error("even-cycle template needs an even cycle, got length {0}")]
    OddCycle(usize),
    #[error("odd-cycle template needs an odd cycle, got length {0}")]
    EvenCycle(usize),
    #[error("cycle is not edge-dominating")]
    NotDominating,
    #[error("vertices {0}, {1}, {2} do not induce a triangle")]
    TriangleMissing(usize, usize, usize),
    #[error("triangle index q = {q} out of range 1..={p}")]
    IndexOutOfRange { q: usize, p: usize },
    #[error("cycle does not validate against the host graph: {0}")]
    InvalidCycle(CycleError),
    #[error("graph contains an induced 2K2")]
    Not2K2Free(InducedMatchingWitness),
    #[error("graph is not connected")]
    NotConnected,
    #[error("prism construction needs at least 2 vertices")]
    GraphTooSmall,
}

/// A Hamiltonian cycle of the prism, as a cyclic sequence of
/// `(vertex, layer)` pairs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrismCycle {
    pairs: Vec<(usize, u8)>,
}

impl PrismCycle {
    pub fn new(pairs: Vec<(usize, u8)>) -> Self {
        PrismCycle { pairs }
    }

    pub fn pairs(&self) -> &[(usize, u8)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of rungs (layer crossings at the same vertex) on the cycle.
    pub fn rung_count(&self) -> usize {
        (0..self.pairs.len())
            .filter(|&i| {
                let (a, al) = self.pairs[i];
                let (b, bl) = self.pairs[(i + 1) % self.pairs.len()];
                a == b && al != bl
            })
            .count()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrismOutcome {
    Cycle(PrismCycle),
    Certificate(ToughnessCertificate),
}

/// Even template: for a dominating cycle `v_1 .. v_2p`, the
/// prism cycle `v_1 v'_1 v'_2 v_2 v_3 v'_3 v'_4 v_4 ...` uses every rung;
/// matched outside vertices replace their partner's rung with a detour.
pub fn prism_ham_even(g: &Graph, c: &Cycle) -> Result<PrismOutcome, PrismError> {
    let verts = validated(g, c)?;
    if verts.len() % 2 != 0 {
        return Err(PrismError::OddCycle(verts.len()));
    }
    ensure_dominating(g, c)?;
    let outside = complement(g, verts);
    match capacitated_matching(g, verts, &outside, 1)
        .expect("cycle domination leaves an independent outside")
    {
        MatchingOutcome::Violator(d0) => {
            let cert = violator_certificate(g, &d0, verts, None);
            debug_assert!(cert.is_valid(g));
            Ok(PrismOutcome::Certificate(cert))
        }
        MatchingOutcome::Saturated(m) => {
            let mut seq: Vec<(usize, u8)> = Vec::with_capacity(2 * g.n());
            for pair in verts.chunks(2) {
                let (a, b) = (pair[0], pair[1]);
                seq.extend([(a, 0), (a, 1), (b, 1), (b, 0)]);
            }
            splice_detours(&mut seq, &m.pairs);
            let pc = PrismCycle::new(seq);
            debug_assert!(crate::oracles::check_prism_cycle(g, &pc));
            Ok(PrismOutcome::Cycle(pc))
        }
    }
}

/// Odd template: for `v_1 .. v_{2p+1}` with `v_1, v_2q, v_{2q+1}` inducing a
/// triangle, zigzag to `v_2q`, cross to layer one, ride the two triangle
/// chords through `v'_1`, and zigzag back. Every rung except `v_1`'s is
/// used, so the matching goes into the cycle minus `v_1`.
pub fn prism_ham_odd(g: &Graph, c: &Cycle, q: usize) -> Result<PrismOutcome, PrismError> {
    let verts = validated(g, c)?;
    let k = verts.len();
    if k % 2 == 0 {
        return Err(PrismError::EvenCycle(k));
    }
    let p = (k - 1) / 2;
    if q < 1 || q > p {
        return Err(PrismError::IndexOutOfRange { q, p });
    }
    let (v1, v2q, v2q1) = (verts[0], verts[2 * q - 1], verts[2 * q]);
    if !(g.has_edge(v1, v2q) && g.has_edge(v1, v2q1) && g.has_edge(v2q, v2q1)) {
        return Err(PrismError::TriangleMissing(v1, v2q, v2q1));
    }
    ensure_dominating(g, c)?;
    let outside = complement(g, verts);
    let targets = &verts[1..];
    match capacitated_matching(g, targets, &outside, 1)
        .expect("cycle domination leaves an independent outside")
    {
        MatchingOutcome::Violator(d0) => {
            // violator vertices may lean on v_1, which the matching may not
            // use; the certificate cutset must then include it
            let cert = violator_certificate(g, &d0, targets, Some(v1));
            debug_assert!(cert.is_valid(g));
            debug_assert!(cert.bound <= crate::ratio::Ratio::from(1));
            Ok(PrismOutcome::Certificate(cert))
        }
        MatchingOutcome::Saturated(m) => {
            let at = |i: usize| verts[i - 1]; // 1-indexed like the template
            let mut seq: Vec<(usize, u8)> = vec![(v1, 0)];
            for i in 1..=q {
                seq.extend([(at(2 * i), 0), (at(2 * i), 1)]);
                if i < q {
                    seq.extend([(at(2 * i + 1), 1), (at(2 * i + 1), 0)]);
                }
            }
            seq.extend([(v1, 1), (v2q1, 1), (v2q1, 0)]);
            for j in q + 1..=p {
                seq.extend([
                    (at(2 * j), 0),
                    (at(2 * j), 1),
                    (at(2 * j + 1), 1),
                    (at(2 * j + 1), 0),
                ]);
            }
            splice_detours(&mut seq, &m.pairs);
            let pc = PrismCycle::new(seq);
            debug_assert!(crate::oracles::check_prism_cycle(g, &pc));
            Ok(PrismOutcome::Cycle(pc))
        }
    }
}

fn validated<'a>(g: &Graph, c: &'a Cycle) -> Result<&'a [usize], PrismError> {
    Cycle::new(g, c.vertices().to_vec()).map_err(PrismError::InvalidCycle)?;
    Ok(c.vertices())
}

fn ensure_dominating(g: &Graph, c: &Cycle) -> Result<(), PrismError> {
    if check_edge_dominating(g, &DominatingWitness::cycle(c)) {
        Ok(())
    } else {
        Err(PrismError::NotDominating)
    }
}

fn complement(g: &Graph, verts: &[usize]) -> Vec<usize> {
    let set = crate::bits::BitSet::from_iter_len(g.n(), verts.iter().copied());
    (0..g.n()).filter(|&v| !set.contains(v)).collect()
}

/// Replaces the rung of each matched cycle vertex by the three-edge detour
/// through its matched outside vertex. With capacity one, each rung is
/// replaced at most once.
fn splice_detours(seq: &mut Vec<(usize, u8)>, pairs: &[(usize, usize)]) {
    for &(u, target) in pairs {
        let pos = (0..seq.len() - 1)
            .find(|&i| {
                let (a, al) = seq[i];
                let (b, bl) = seq[i + 1];
                a == target && b == target && al != bl
            })
            .expect("matched target's rung must be on the template");
        let (_, first_layer) = seq[pos];
        let (_, second_layer) = seq[pos + 1];
        seq.splice(pos + 1..pos + 1, [(u, first_layer), (u, second_layer)]);
    }
}

/// Why the driver could not produce a prism cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrismHamOutcome {
    Cycle(PrismCycle),
    /// Exact evidence that the graph is not even 1-tough (even template) or
    /// not more than 1-tough (odd template).
    Certificate(ToughnessCertificate),
    /// The triangle-free fallback ran out of search room; `complete` means
    /// the base graph was exhaustively shown non-Hamiltonian, which leaves
    /// prism-Hamiltonicity undecided by this construction.
    SearchExhausted {
        explored: u64,
        complete: bool,
    },
}

pub fn prism_hamiltonian(g: &Graph) -> Result<PrismHamOutcome, PrismError> {
    prism_hamiltonian_with_budget(g, &Budget::nodes(1_000_000))
}

/// Driver: handle the single-edge base case, otherwise grow a dominating
/// cycle through a triangle and apply the matching template of the right
/// parity; triangle-free graphs fall back to exact Hamiltonian search on
/// the base graph.
pub fn prism_hamiltonian_with_budget(
    g: &Graph,
    fallback_budget: &Budget,
) -> Result<PrismHamOutcome, PrismError> {
    if g.n() < 2 {
        return Err(PrismError::GraphTooSmall);
    }
    if !is_connected(g) {
        return Err(PrismError::NotConnected);
    }
    if let Some(w) = find_induced_2k2(g) {
        return Err(PrismError::Not2K2Free(w));
    }
    if g.n() == 2 {
        return Ok(PrismHamOutcome::Cycle(PrismCycle::new(vec![
            (0, 0),
            (1, 0),
            (1, 1),
            (0, 1),
        ])));
    }

    let Some(t) = find_triangle(g) else {
        return triangle_free_fallback(g, fallback_budget);
    };
    let (cycle, _trace) = find_edge_dominating_cycle_with_triangle(g, t).map_err(|e| match e {
        DomCycleError::Not2K2Free(w) => PrismError::Not2K2Free(w),
        DomCycleError::NotConnected => PrismError::NotConnected,
        DomCycleError::NotATriangle(_) => unreachable!("triangle came from find_triangle"),
    })?;

    if cycle.len() % 2 == 0 {
        return prism_ham_even(g, &cycle).map(|o| match o {
            PrismOutcome::Cycle(pc) => PrismHamOutcome::Cycle(pc),
            PrismOutcome::Certificate(c) => PrismHamOutcome::Certificate(c),
        });
    }

    // odd cycle: the consecutive triple sits at the two last positions and
    // position zero, which is exactly q = p after rotation; trying every
    // in-cycle labeling of the triple covers matchings that exclude a
    // different triangle vertex
    let mut first_certificate = None;
    for (oriented, q) in odd_labelings(g, cycle.vertices()) {
        let c = Cycle::new(g, oriented).expect("rotations of a cycle stay valid");
        match prism_ham_odd(g, &c, q).expect("labelings are pre-validated") {
            PrismOutcome::Cycle(pc) => return Ok(PrismHamOutcome::Cycle(pc)),
            PrismOutcome::Certificate(cert) => {
                first_certificate.get_or_insert(cert);
            }
        }
    }
    Ok(PrismHamOutcome::Certificate(
        first_certificate.expect("at least the canonical labeling is valid"),
    ))
}

/// All rotations/reflections of an odd dominating cycle that put a valid
/// triangle at the template position: at most two per triple vertex.
fn odd_labelings(g: &Graph, verts: &[usize]) -> Vec<(Vec<usize>, usize)> {
    let k = verts.len();
    let p = (k - 1) / 2;
    let triple = [verts[0], verts[k - 2], verts[k - 1]];
    let mut out = Vec::new();
    for reversed in [false, true] {
        let base: Vec<usize> = if reversed {
            verts.iter().rev().copied().collect()
        } else {
            verts.to_vec()
        };
        for &anchor in &triple {
            let pos = base.iter().position(|&v| v == anchor).unwrap();
            let mut rotated = base.clone();
            rotated.rotate_left(pos);
            let v1 = rotated[0];
            if let Some(q) = (1..=p)
                .find(|&q| g.has_edge(v1, rotated[2 * q - 1]) && g.has_edge(v1, rotated[2 * q]))
            {
                out.push((rotated, q));
            }
        }
    }
    out
}

fn triangle_free_fallback(g: &Graph, budget: &Budget) -> Result<PrismHamOutcome, PrismError> {
    match brute_force_hamiltonian(g, budget) {
        Ok(Some(ham)) => {
            if ham.len() % 2 == 0 {
                match prism_ham_even(g, &ham).expect("a Hamiltonian cycle dominates and is even") {
                    PrismOutcome::Cycle(pc) => Ok(PrismHamOutcome::Cycle(pc)),
                    PrismOutcome::Certificate(_) => {
                        unreachable!("a spanning cycle leaves nothing to match")
                    }
                }
            } else {
                // odd spanning cycle: ride layer zero forward, cross one
                // rung, ride layer one backward, cross back
                let mut seq: Vec<(usize, u8)> = ham.vertices().iter().map(|&v| (v, 0)).collect();
                seq.extend(ham.vertices().iter().rev().map(|&v| (v, 1)));
                let pc = PrismCycle::new(seq);
                debug_assert!(crate::oracles::check_prism_cycle(g, &pc));
                Ok(PrismHamOutcome::Cycle(pc))
            }
        }
        Ok(None) => Ok(PrismHamOutcome::SearchExhausted {
            explored: 0,
            complete: true,
        }),
        Err(OracleError::BudgetExceeded { explored, .. }) => Ok(PrismHamOutcome::SearchExhausted {
            explored,
            complete: false,
        }),
        Err(OracleError::TooLarge { .. }) => {
            unreachable!("hamiltonian search has no size cap")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_net;
    use crate::oracles::check_prism_cycle;
    use crate::ratio::Ratio;

    fn cycle_of(g: &Graph, verts: &[usize]) -> Cycle {
        Cycle::new(g, verts.to_vec()).unwrap()
    }

    #[test]
    fn even_template_on_c4_matches_the_golden() {
        let g = Graph::cycle(4);
        let c = cycle_of(&g, &[0, 1, 2, 3]);
        match prism_ham_even(&g, &c).unwrap() {
            PrismOutcome::Cycle(pc) => {
                assert_eq!(
                    pc.pairs(),
                    &[
                        (0, 0),
                        (0, 1),
                        (1, 1),
                        (1, 0),
                        (2, 0),
                        (2, 1),
                        (3, 1),
                        (3, 0)
                    ]
                );
                assert!(check_prism_cycle(&g, &pc));
                assert_eq!(pc.rung_count(), 4);
            }
            _ => panic!("C4 is its own dominating cycle"),
        }
    }

    #[test]
    fn even_template_splices_a_pendant_detour() {
        // C4 plus a pendant hanging off vertex 0
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap();
        let c = cycle_of(&g, &[0, 1, 2, 3]);
        match prism_ham_even(&g, &c).unwrap() {
            PrismOutcome::Cycle(pc) => {
                assert_eq!(pc.len(), 10);
                assert!(check_prism_cycle(&g, &pc));
                // one rung traded for a detour
                assert_eq!(pc.rung_count(), 3 + 1); // pendant's own rung + 3 surviving
                let detour: Vec<(usize, u8)> = vec![(0, 0), (4, 0), (4, 1), (0, 1)];
                let found = (0..pc.len())
                    .any(|i| (0..4).all(|j| pc.pairs()[(i + j) % pc.len()] == detour[j]));
                assert!(found, "detour must replace the matched rung: {:?}", pc);
            }
            _ => panic!("one pendant matches into C4"),
        }
    }

    #[test]
    fn even_template_two_pendants_on_one_vertex_fail() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5)]).unwrap();
        let c = cycle_of(&g, &[0, 1, 2, 3]);
        match prism_ham_even(&g, &c).unwrap() {
            PrismOutcome::Certificate(cert) => {
                assert_eq!(cert.cutset, vec![0]);
                assert_eq!(cert.components, 3);
                assert_eq!(cert.bound, Ratio::new(1, 3));
                assert!(cert.is_valid(&g));
            }
            _ => panic!("two pendants cannot both match vertex 0 at capacity 1"),
        }
    }

    #[test]
    fn even_template_rejects_odd_cycles() {
        let g = Graph::complete(3);
        let c = cycle_of(&g, &[0, 1, 2]);
        assert_eq!(prism_ham_even(&g, &c).unwrap_err(), PrismError::OddCycle(3));
    }

    #[test]
    fn even_template_rejects_non_dominating_cycles() {
        // C4 with a far triangle: the C4 does not dominate it
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (5, 6),
                (6, 7),
                (5, 7),
                (4, 5),
                (0, 4),
            ],
        )
        .unwrap();
        let c = cycle_of(&g, &[0, 1, 2, 3]);
        assert_eq!(
            prism_ham_even(&g, &c).unwrap_err(),
            PrismError::NotDominating
        );
    }

    #[test]
    fn odd_template_on_k3() {
        let g = Graph::complete(3);
        let c = cycle_of(&g, &[0, 1, 2]);
        match prism_ham_odd(&g, &c, 1).unwrap() {
            PrismOutcome::Cycle(pc) => {
                assert_eq!(
                    pc.pairs(),
                    &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 1), (2, 0)]
                );
                assert!(check_prism_cycle(&g, &pc));
            }
            _ => panic!("K3 needs no matching"),
        }
    }

    #[test]
    fn odd_template_on_chorded_c5() {
        // C5 plus the chord {0, 3}: triangle (v1, v4, v5) = (0, 3, 4), q = 2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3)]).unwrap();
        let c = cycle_of(&g, &[0, 1, 2, 3, 4]);
        match prism_ham_odd(&g, &c, 2).unwrap() {
            PrismOutcome::Cycle(pc) => {
                assert_eq!(
                    pc.pairs(),
                    &[
                        (0, 0),
                        (1, 0),
                        (1, 1),
                        (2, 1),
                        (2, 0),
                        (3, 0),
                        (3, 1),
                        (0, 1),
                        (4, 1),
                        (4, 0)
                    ]
                );
                assert!(check_prism_cycle(&g, &pc));
            }
            _ => panic!("spanning cycle needs no matching"),
        }
    }

    #[test]
    fn odd_template_guards() {
        let g = Graph::cycle(5);
        let c = cycle_of(&g, &[0, 1, 2, 3, 4]);
        assert_eq!(
            prism_ham_odd(&g, &c, 3).unwrap_err(),
            PrismError::IndexOutOfRange { q: 3, p: 2 }
        );
        assert_eq!(
            prism_ham_odd(&g, &c, 1).unwrap_err(),
            PrismError::TriangleMissing(0, 1, 2)
        );
        let k4 = Graph::complete(4);
        let c4 = cycle_of(&k4, &[0, 1, 2, 3]);
        assert_eq!(
            prism_ham_odd(&k4, &c4, 1).unwrap_err(),
            PrismError::EvenCycle(4)
        );
    }

    #[test]
    fn net_triangle_labelings_all_fail_with_a_certificate() {
        let net = fixture_net();
        let c = cycle_of(&net, &[1, 2, 4]);
        match prism_ham_odd(&net, &c, 1).unwrap() {
            PrismOutcome::Certificate(cert) => {
                assert!(cert.is_valid(&net));
                assert!(cert.bound <= Ratio::from(1));
            }
            _ => panic!("three pendants cannot match into two targets"),
        }
    }

    #[test]
    fn driver_on_k2() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        match prism_hamiltonian(&k2).unwrap() {
            PrismHamOutcome::Cycle(pc) => {
                assert_eq!(pc.pairs(), &[(0, 0), (1, 0), (1, 1), (0, 1)]);
                assert!(check_prism_cycle(&k2, &pc));
            }
            other => panic!("K2 is prism-Hamiltonian, got {other:?}"),
        }
    }

    #[test]
    fn driver_on_c5_uses_hamiltonian_doubling() {
        let c5 = Graph::cycle(5);
        match prism_hamiltonian(&c5).unwrap() {
            PrismHamOutcome::Cycle(pc) => {
                assert_eq!(pc.len(), 10);
                assert!(check_prism_cycle(&c5, &pc));
            }
            other => panic!("C5 doubles into its prism, got {other:?}"),
        }
    }

    #[test]
    fn driver_on_net_returns_certificate() {
        let net = fixture_net();
        match prism_hamiltonian(&net).unwrap() {
            PrismHamOutcome::Certificate(cert) => {
                assert!(cert.is_valid(&net));
                assert!(cert.bound <= Ratio::from(1));
                assert_eq!(cert.bound, Ratio::new(1, 2));
            }
            other => panic!("the net has no Hamiltonian prism, got {other:?}"),
        }
    }

    #[test]
    fn driver_rejects_non_2k2_free_input() {
        let c6 = Graph::cycle(6);
        match prism_hamiltonian(&c6) {
            Err(PrismError::Not2K2Free(w)) => assert!(w.is_valid(&c6)),
            other => panic!("C6 contains an induced 2K2, got {other:?}"),
        }
    }

    #[test]
    fn driver_on_non_tough_triangle_free_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        match prism_hamiltonian(&star).unwrap() {
            PrismHamOutcome::SearchExhausted { complete, .. } => assert!(complete),
            other => panic!("K1,3 has no Hamiltonian base cycle, got {other:?}"),
        }
    }

    #[test]
    fn driver_handles_complete_graphs_of_both_parities() {
        for n in [3usize, 4, 5, 6, 7] {
            let g = Graph::complete(n);
            match prism_hamiltonian(&g).unwrap() {
                PrismHamOutcome::Cycle(pc) => {
                    assert_eq!(pc.len(), 2 * n);
                    assert!(check_prism_cycle(&g, &pc), "K{n}");
                }
                other => panic!("K{n} is prism-Hamiltonian, got {other:?}"),
            }
        }
    }
}
