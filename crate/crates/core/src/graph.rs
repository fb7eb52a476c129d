// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs with cached degrees, the named families used
//! throughout the crate, and the structural edits (union, deletions).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A family or operation parameter outside its admissible range.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{family} requires {requirement}, got {got}")]
pub struct RangeError {
    pub family: &'static str,
    pub requirement: &'static str,
    pub got: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Range(#[from] RangeError),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("permutation of length {got} does not match {n} vertices or is not a bijection")]
    BadPermutation { n: usize, got: usize },
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and duplicate-free; `degrees[i]` always
/// equals `adjacency[i].len()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self::from_sets(sets))
    }

    fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        let adjacency: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let degrees = adjacency.iter().map(Vec::len).collect();
        let g = Graph { adjacency, degrees };
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Self {
        let degrees = adjacency.iter().map(Vec::len).collect();
        let g = Graph { adjacency, degrees };
        debug_assert!(g.check_invariants());
        g
    }

    /// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(invalid("path", "n >= 1", n));
        }
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(invalid("cycle", "n >= 3", n));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star `S_n = K_{1,n-1}`: `n` vertices in total, vertex 0 is the center.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(invalid("star", "n >= 2", n));
        }
        Self::from_edges(n, (1..n).map(|i| (0, i)))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(invalid("complete", "n >= 1", n));
        }
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if m < 1 {
            return Err(invalid("complete_bipartite", "m >= 1", m));
        }
        if n < 1 {
            return Err(invalid("complete_bipartite", "n >= 1", n));
        }
        Self::from_edges(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
    }

    /// The Petersen graph as the Kneser graph K(5,2): vertices are the
    /// 2-subsets of {0..4}, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut edges = Vec::with_capacity(15);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(10, edges).expect("Kneser construction is simple")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `Some(k)` when every vertex has degree `k`. The empty graph is 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.degrees.first().copied().unwrap_or(0);
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.order();
        let mut a = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn component_count(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Connected in the usual sense; graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.order();
        let mut hit = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut hit[p], true)) {
            return Err(GraphError::BadPermutation { n, got: perm.len() });
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, nb) in self.adjacency.iter().enumerate() {
            let mut row: Vec<usize> = nb.iter().map(|&v| perm[v]).collect();
            row.sort_unstable();
            adjacency[perm[u]] = row;
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Returns the graph without edge `uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Returns the graph without vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        let n = self.order();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, nb)| {
                nb.iter()
                    .filter(|&&w| w != v)
                    .map(|&w| if w > v { w - 1 } else { w })
                    .collect()
            })
            .collect();
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Checks symmetry, loop-freeness, sortedness and the degree cache.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.degrees.len() == n
            && self.adjacency.iter().enumerate().all(|(u, nb)| {
                self.degrees[u] == nb.len()
                    && nb.windows(2).all(|w| w[0] < w[1])
                    && nb.iter().all(|&v| v < n && v != u && self.adjacency[v].binary_search(&u).is_ok())
            })
    }
}

/// Disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let mut adjacency = Vec::with_capacity(gs.iter().map(Graph::order).sum());
    let mut offset = 0;
    for g in gs {
        adjacency.extend(g.adjacency.iter().map(|nb| nb.iter().map(|&v| v + offset).collect()));
        offset += g.order();
    }
    Graph::from_adjacency_unchecked(adjacency)
}

fn invalid(family: &'static str, requirement: &'static str, got: usize) -> GraphError {
    RangeError { family, requirement, got }.into()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
