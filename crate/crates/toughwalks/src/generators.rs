//! Deterministic fixtures and seeded random families of 2K2-free (and
//! 3K2-free) graphs for tests and benchmarks.
//!
//! Everything here is a pure function of its parameters and a 64-bit seed;
//! see [`crate::rng`] for the pinned generator.

use crate::graph::{is_connected, Graph};
use crate::ratio::Ratio;
use crate::recognition::is_2k2_free;
use crate::rng::SplitMix64;

/// The 6-vertex net: a triangle with one pendant on each corner.
///
/// Ids are fixed: triangle {1, 2, 4}, pendants 0–1, 3–2, 5–4. This is the
/// canonical separating example between having a 2-walk and having a
/// Hamiltonian prism.
pub fn fixture_net() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (1, 4), (2, 3), (2, 4), (4, 5)]).unwrap()
}

/// Random split graph: a clique plus an independent set, with each
/// cross pair wired independently with probability `density`.
///
/// Split graphs are 2K2-free by construction.
pub fn gen_split_graph(n: usize, density: Ratio, seed: u64) -> Graph {
    assert!(n >= 1);
    assert!(
        density >= Ratio::from(0) && density <= Ratio::from(1),
        "density must lie in [0, 1]"
    );
    let mut rng = SplitMix64::new(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut ids);
    let clique_size = 1 + rng.below(n as u64) as usize;
    let clique = &ids[..clique_size];
    let independent = &ids[clique_size..];

    let mut edges = Vec::new();
    for i in 0..clique.len() {
        for j in i + 1..clique.len() {
            edges.push((clique[i], clique[j]));
        }
    }
    let (num, den) = (density.numer() as u64, density.denom() as u64);
    for &u in independent {
        for &v in clique {
            if rng.chance(num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Complete multipartite graph over the given part sizes; 2K2-free since
/// any two disjoint edges are joined by a cross-part edge.
pub fn gen_complete_multipartite(part_sizes: &[usize]) -> Graph {
    assert!(!part_sizes.is_empty(), "at least one part required");
    assert!(part_sizes.iter().all(|&s| s > 0));
    let n: usize = part_sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
}

/// Adds up to `extra_edges` random edges to a 2K2-free base, keeping only
/// additions that preserve 2K2-freeness. Each candidate is re-verified:
/// an edge addition can create an induced 2K2 elsewhere.
pub fn gen_2k2_free_perturbed(base: &Graph, extra_edges: usize, seed: u64) -> Graph {
    assert!(is_2k2_free(base), "base graph must be 2K2-free");
    let n = base.n();
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !base.has_edge(u, v))
        .collect();
    let mut rng = SplitMix64::new(seed);
    rng.shuffle(&mut non_edges);

    let mut g = base.clone();
    let mut added = 0;
    for (u, v) in non_edges {
        if added == extra_edges {
            break;
        }
        let candidate = g.with_edge(u, v).unwrap();
        if is_2k2_free(&candidate) {
            g = candidate;
            added += 1;
        }
    }
    g
}

/// A deterministic mixed corpus of connected 2K2-free graphs with sizes
/// cycling through `n_lo..=n_hi`. Used by the acceptance suite and benches.
pub fn corpus_2k2_free(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    assert!(n_lo >= 1 && n_lo <= n_hi);
    let span = n_hi - n_lo + 1;
    let mut out = Vec::with_capacity(count);
    let mut rng = SplitMix64::new(seed);
    for i in 0..count {
        let n = n_lo + i % span;
        let g = loop {
            let attempt_seed = rng.next_u64();
            let candidate = match i % 3 {
                0 => gen_split_graph(n, Ratio::new(1 + (i as i64 % 3), 4), attempt_seed),
                1 => {
                    let mut sizes = random_composition(n, &mut SplitMix64::new(attempt_seed));
                    if sizes.len() == 1 && n >= 2 {
                        let s = sizes[0];
                        sizes = vec![s - s / 2, s / 2];
                    }
                    gen_complete_multipartite(&sizes)
                }
                _ => {
                    let base = gen_split_graph(n, Ratio::new(1, 3), attempt_seed);
                    gen_2k2_free_perturbed(&base, n / 2, attempt_seed ^ 0x5eed)
                }
            };
            if is_connected(&candidate) {
                break candidate;
            }
        };
        debug_assert!(is_2k2_free(&g));
        out.push(g);
    }
    out
}

fn random_composition(n: usize, rng: &mut SplitMix64) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let take = 1 + rng.below(left.min(4) as u64) as usize;
        sizes.push(take);
        left -= take;
    }
    sizes
}

/// Seeded 3K2-free graphs: two disjoint 2K2-free blocks joined by one or
/// two universal vertices. A universal vertex cannot lie in any induced
/// matching, so induced 3K2s would have to fit inside the two blocks,
/// where one block would have to hold an induced 2K2.
pub fn gen_3k2_free_joined(block_a: usize, block_b: usize, universals: usize, seed: u64) -> Graph {
    assert!(block_a >= 1 && block_b >= 1 && universals >= 1);
    let mut rng = SplitMix64::new(seed);
    let a = gen_split_graph(block_a, Ratio::new(1, 2), rng.next_u64());
    let b = gen_split_graph(block_b, Ratio::new(1, 2), rng.next_u64());
    let n = block_a + block_b + universals;
    let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + block_a, v + block_a)));
    for w in block_a + block_b..n {
        for v in 0..w {
            edges.push((v, w));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
