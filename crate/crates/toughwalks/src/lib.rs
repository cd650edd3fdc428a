//! Edge-dominating cycles, k-walks and Hamiltonian prisms in 2K2-free
//! graphs, with brute-force oracles verifying every witness and failure
//! certificate.
//!
//! The constructive pipeline:
//!
//! 1. [`domcycle::find_edge_dominating_cycle`] grows a cycle until every
//!    edge of the graph touches it (with degenerate vertex/edge witnesses
//!    on trees), in polynomially many steps on 2K2-free inputs.
//! 2. [`kwalk::build_k_walk`] matches the leftover vertices into the
//!    witness under capacity k−1 and doubles the matching edges, yielding a
//!    spanning closed walk visiting no vertex more than k times — or an
//!    exact toughness certificate below 1/(k−1) when the matching fails.
//! 3. [`prism::prism_hamiltonian`] builds a Hamiltonian cycle in the prism
//!    (the Cartesian product with a single edge) from a dominating cycle
//!    through a triangle, or certifies that the graph is at most 1-tough.
//!
//! Everything an algorithm returns can be re-checked from scratch by the
//! independent verifiers in [`oracles`].
//!
//! The `parallel` feature (on by default) runs the heavy scans — exhaustive
//! toughness and the induced-2K2 pair scan — on a rayon pool; disabling it
//! falls back to the sequential reference implementations with identical
//! results.

#![forbid(unsafe_code)]

pub mod bits;
pub mod domcycle;
mod flow;
pub mod format;
pub mod generators;
pub mod graph;
pub mod kwalk;
pub mod oracles;
pub mod prism;
pub mod ratio;
pub mod recognition;
pub mod rng;

pub use domcycle::{
    find_edge_dominating_cycle, find_edge_dominating_cycle_with_triangle, CaseTag, DomCycleError,
    GrowthTrace,
};
pub use graph::{
    connected_components, find_any_cycle, is_connected, prism, Cycle, DominatingWitness, Graph,
    GraphError, PrismGraph,
};
pub use kwalk::{
    build_k_walk, capacitated_matching, minimal_construction_k, CapacitatedMatching, HallViolator,
    KWalk, KWalkOutcome, KwalkError, MatchingOutcome, ToughnessCertificate,
};
pub use oracles::{
    brute_force_dominating_cycle, brute_force_hamiltonian, brute_force_toughness,
    check_edge_dominating, check_k_walk, check_prism_cycle, is_k_connected, veldman_condition,
    Budget, OracleError, Toughness,
};
pub use prism::{
    prism_ham_even, prism_ham_odd, prism_hamiltonian, prism_hamiltonian_with_budget, PrismCycle,
    PrismError, PrismHamOutcome, PrismOutcome,
};
pub use ratio::Ratio;
pub use recognition::{
    find_induced_2k2, find_induced_lk2, find_triangle, is_2k2_free, InducedMatchingWitness,
    RecognitionError, Triangle,
};
