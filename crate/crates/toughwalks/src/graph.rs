//! Immutable simple-graph representation, basic utilities and the prism product.
//!
//! Vertices are canonical ids `0..n`. Adjacency is stored as one bitset row
//! per vertex, so neighborhood queries and intersections cost O(n/64) words;
//! the dominating-cycle growth loop leans on this heavily.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may come in any order and
    /// orientation; self-loops and duplicates are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![BitSet::new(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: list,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_edges(n, []).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// The cycle graph `C_n` with edges `i ~ i+1 (mod n)`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors_bits(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// The subgraph induced on `keep` (which must be strictly increasing),
    /// with vertices relabeled to `0..keep.len()` in that order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges.collect::<Vec<_>>()).unwrap()
    }

    /// Adds one edge, returning a new graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_edges(self.n, edges)
    }
}

/// Partition of the vertices into connected components.
///
/// Each component is sorted ascending; components are ordered by smallest
/// member. The empty graph yields an empty partition.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_avoiding(g, &BitSet::new(g.n()))
}

/// Connected components of `g` with the vertices of `removed` deleted.
pub fn components_avoiding(g: &Graph, removed: &BitSet) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.clone();
    let mut parts = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut frontier = BitSet::from_iter_len(n, [start]);
        let mut comp = BitSet::new(n);
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            if comp.contains(v) {
                continue;
            }
            comp.insert(v);
            let mut next = g.neighbors_bits(v).clone();
            next.difference_with(&comp);
            next.difference_with(&seen);
            frontier.union_with(&next);
        }
        seen.union_with(&comp);
        parts.push(comp.to_vec());
    }
    parts
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() == 1
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats")]
    RepeatedVertex(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// A simple cycle in a host graph, stored as the vertex sequence
/// `v_1, ..., v_k` with `v_k ~ v_1` implied.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates length, distinctness and cyclic adjacency against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut seen = BitSet::new(g.n());
        for &v in &vertices {
            if seen.contains(v) {
                return Err(CycleError::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        for i in 0..vertices.len() {
            let (u, v) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            if !g.has_edge(u, v) {
                return Err(CycleError::NotAdjacent(u, v));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self, n: usize) -> BitSet {
        BitSet::from_iter_len(n, self.vertices.iter().copied())
    }
}

/// An edge-dominating witness: a cycle, or the degenerate edge/vertex cases.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum DominatingWitness {
    Cycle { vertices: Vec<usize> },
    Edge { edge: (usize, usize) },
    Vertex { vertex: usize },
}

impl DominatingWitness {
    pub fn cycle(c: &Cycle) -> Self {
        DominatingWitness::Cycle {
            vertices: c.vertices().to_vec(),
        }
    }

    pub fn vertex_ids(&self) -> Vec<usize> {
        match self {
            DominatingWitness::Cycle { vertices } => vertices.clone(),
            DominatingWitness::Edge { edge: (u, v) } => vec![*u, *v],
            DominatingWitness::Vertex { vertex } => vec![*vertex],
        }
    }

    pub fn vertex_set(&self, n: usize) -> BitSet {
        BitSet::from_iter_len(n, self.vertex_ids())
    }

    /// Structural validity against a host graph (cycle adjacency, edge
    /// membership, vertex range). Domination is a separate check.
    pub fn is_structurally_valid(&self, g: &Graph) -> bool {
        match self {
            DominatingWitness::Cycle { vertices } => Cycle::new(g, vertices.clone()).is_ok(),
            DominatingWitness::Edge { edge: (u, v) } => {
                *u < g.n() && *v < g.n() && g.has_edge(*u, *v)
            }
            DominatingWitness::Vertex { vertex } => *vertex < g.n(),
        }
    }
}

/// The prism over a base graph: two layers of the base joined by rungs.
///
/// Vertex `(v, layer)` is encoded as `v + layer * n`; this encoding is part
/// of the public contract so CLI output stays stable.
#[derive(Clone, Debug)]
pub struct PrismGraph {
    base: Graph,
    product: Graph,
}

impl PrismGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        &self.product
    }

    pub fn encode(&self, v: usize, layer: u8) -> usize {
        v + layer as usize * self.base.n()
    }

    pub fn decode(&self, id: usize) -> (usize, u8) {
        let n = self.base.n();
        if id < n {
            (id, 0)
        } else {
            (id - n, 1)
        }
    }
}

/// The Cartesian product of `g` with a single edge.
pub fn prism(g: &Graph) -> PrismGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m() + n);
    for &(u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u + n, v + n));
    }
    for v in 0..n {
        edges.push((v, v + n));
    }
    PrismGraph {
        base: g.clone(),
        product: Graph::from_edges(2 * n, edges).unwrap(),
    }
}

/// Some cycle of `g` found by a depth-first back edge, or `None` when `g`
/// is a forest. Neighbors are explored in ascending order, so the result
/// is deterministic.
pub fn find_any_cycle(g: &Graph) -> Option<Cycle> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = BitSet::new(n);
    for root in 0..n {
        if visited.contains(root) {
            continue;
        }
        // iterative DFS; per-vertex worklists pop in ascending order
        let mut stack = vec![root];
        visited.insert(root);
        parent[root] = root;
        let mut root_ns: Vec<usize> = g.neighbors(root).collect();
        root_ns.reverse();
        let mut iters: Vec<Vec<usize>> = vec![root_ns];
        while let Some(&v) = stack.last() {
            if let Some(w) = iters.last_mut().unwrap().pop() {
                if !visited.contains(w) {
                    visited.insert(w);
                    parent[w] = v;
                    stack.push(w);
                    let mut ns: Vec<usize> = g.neighbors(w).collect();
                    ns.reverse(); // pop() then visits in ascending order
                    iters.push(ns);
                } else if w != parent[v] && stack.contains(&w) {
                    // back edge to an ancestor: walk the tree path w..v
                    let mut path = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(Cycle::new(g, path).expect("DFS back edge forms a cycle"));
                }
            } else {
                stack.pop();
                iters.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixture_net;

    #[test]
    fn from_edges_validation() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, n: 2 }
        );
        let g = Graph::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn components_examples() {
        assert!(connected_components(&Graph::empty(0)).is_empty());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&two_k2), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(connected_components(&fixture_net()).len(), 1);
        let mixed = Graph::from_edges(5, [(3, 4), (0, 2)]).unwrap();
        assert_eq!(
            connected_components(&mixed),
            vec![vec![0, 2], vec![1], vec![3, 4]]
        );
    }

    #[test]
    fn components_partition_properties() {
        let g = fixture_net();
        let parts = connected_components(&g);
        let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn prism_examples() {
        let single = prism(&Graph::empty(1));
        assert_eq!(single.graph().n(), 2);
        assert_eq!(single.graph().m(), 1);

        let k3 = prism(&Graph::complete(3));
        assert_eq!(k3.graph().n(), 6);
        assert_eq!(k3.graph().m(), 9);

        let net = prism(&fixture_net());
        assert_eq!(net.graph().n(), 12);
        assert_eq!(net.graph().m(), 18);
    }

    #[test]
    fn prism_degree_law() {
        let g = fixture_net();
        let p = prism(&g);
        for v in 0..g.n() {
            for layer in 0..2u8 {
                assert_eq!(p.graph().degree(p.encode(v, layer)), g.degree(v) + 1);
            }
        }
        assert_eq!(p.decode(p.encode(3, 1)), (3, 1));
    }

    #[test]
    fn cycle_validation() {
        let k3 = Graph::complete(3);
        assert!(Cycle::new(&k3, vec![0, 1, 2]).is_ok());
        assert_eq!(
            Cycle::new(&k3, vec![0, 1]).unwrap_err(),
            CycleError::TooShort(2)
        );
        assert_eq!(
            Cycle::new(&k3, vec![0, 1, 0]).unwrap_err(),
            CycleError::RepeatedVertex(0)
        );
        let p4 = Graph::path(4);
        assert_eq!(
            Cycle::new(&p4, vec![0, 1, 2]).unwrap_err(),
            CycleError::NotAdjacent(2, 0)
        );
    }

    #[test]
    fn find_any_cycle_examples() {
        assert!(find_any_cycle(&Graph::path(4)).is_none());
        let k3 = Graph::complete(3);
        assert_eq!(find_any_cycle(&k3).unwrap().vertices(), &[0, 1, 2]);
        let c5 = Graph::cycle(5);
        let c = find_any_cycle(&c5).unwrap();
        assert_eq!(c.len(), 5);
        // net back edge: tree path 1-2-4 closed by edge {4,1}
        assert_eq!(
            find_any_cycle(&fixture_net()).unwrap().vertices(),
            &[1, 2, 4]
        );
    }

    #[test]
    fn forest_characterization() {
        // none iff m <= n - number of components
        for g in [
            Graph::path(6),
            Graph::cycle(4),
            Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap(),
            Graph::empty(3),
        ] {
            let comps = connected_components(&g).len();
            let is_forest = g.m() <= g.n() - comps;
            assert_eq!(find_any_cycle(&g).is_none(), is_forest);
        }
    }

    #[test]
    fn induced_subgraph() {
        let g = fixture_net();
        let sub = g.induced(&[1, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.m(), 3);
        let sub2 = g.induced(&[0, 1, 3]);
        assert_eq!(sub2.edges(), &[(0, 1)]);
    }
}
