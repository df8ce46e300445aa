//! Bit-labelled hypercube `Q_n` and folded hypercube `FQ_n`.
//!
//! A vertex is the integer `u_n 2^{n-1} + ... + u_1`, i.e. its binary string
//! read as a number. Two vertices are adjacent when their labels differ in a
//! single bit; the folded variant also joins every vertex to its bitwise
//! complement `v ^ (2^n - 1)`. Adjacency is computed from the label on every
//! query, nothing is materialized for the whole graph.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Vertex label in `[0, 2^n)`.
pub type Vertex = u32;

/// Smallest supported dimension.
pub const MIN_DIMENSION: u32 = 2;
/// Largest supported dimension. `2^20` vertices still fit a traversal in memory.
pub const MAX_DIMENSION: u32 = 20;

/// Immutable `Q_n` / `FQ_n` model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeTopology {
    n: u32,
    folded: bool,
}

impl CubeTopology {
    pub fn new(n: u32, folded: bool) -> Result<Self> {
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&n) {
            return Err(invalid(format!(
                "dimension {n} outside [{MIN_DIMENSION}, {MAX_DIMENSION}]"
            )));
        }
        Ok(Self { n, folded })
    }

    pub fn hypercube(n: u32) -> Result<Self> {
        Self::new(n, false)
    }

    pub fn folded_hypercube(n: u32) -> Result<Self> {
        Self::new(n, true)
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.n
    }

    /// `n 2^{n-1}`, plus `2^{n-1}` matching edges when folded.
    pub fn edge_count(&self) -> usize {
        let half = 1usize << (self.n - 1);
        self.n as usize * half + if self.folded { half } else { 0 }
    }

    /// Every vertex has this degree: `n`, or `n + 1` when folded.
    pub fn degree(&self) -> u32 {
        self.n + u32::from(self.folded)
    }

    /// The all-ones label `2^n - 1`.
    pub fn mask(&self) -> Vertex {
        ((1u64 << self.n) - 1) as Vertex
    }

    pub fn complement(&self, v: Vertex) -> Vertex {
        v ^ self.mask()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v as usize) < self.vertex_count()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(invalid(format!(
                "vertex {v} not in a cube with {} vertices",
                self.vertex_count()
            )))
        }
    }

    /// Neighbors by ascending flip dimension, complement neighbor last.
    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(v)?;
        Ok(self.neighbors_unchecked(v).collect())
    }

    /// Same order as [`neighbors`](Self::neighbors); `v` must be in range.
    pub fn neighbors_unchecked(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let complement = self.folded.then(|| self.complement(v));
        (0..self.n).map(move |bit| v ^ (1 << bit)).chain(complement)
    }

    /// Classifies the pair `(u, v)`, `None` when they are not adjacent.
    pub fn edge_kind(&self, u: Vertex, v: Vertex) -> Option<EdgeKind> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        let diff = u ^ v;
        if diff.count_ones() == 1 {
            Some(EdgeKind::Flip(diff.trailing_zeros() + 1))
        } else if self.folded && diff == self.mask() {
            Some(EdgeKind::Complement)
        } else {
            None
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_kind(u, v).is_some()
    }

    /// Canonical edge between `u` and `v`, if they are adjacent.
    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<Edge> {
        self.edge_kind(u, v).map(|_| Edge::new(u, v))
    }

    /// All edges in canonical form, ordered by lower endpoint then neighbor order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.vertex_count() as Vertex).flat_map(move |u| {
            self.neighbors_unchecked(u)
                .filter(move |&v| u < v)
                .map(move |v| Edge { u, v })
        })
    }

    /// Builds a vertex set, rejecting labels outside the cube.
    pub fn vertex_set<I: IntoIterator<Item = Vertex>>(&self, members: I) -> Result<VertexSet> {
        let set = VertexSet::from_iter(members);
        self.validate_set(&set)?;
        Ok(set)
    }

    fn validate_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| !self.contains(v)) {
            Some(v) => self.check(v),
            None => Ok(()),
        }
    }

    fn membership(&self, set: &VertexSet) -> Vec<bool> {
        let mut inside = vec![false; self.vertex_count()];
        for v in set.iter() {
            inside[v as usize] = true;
        }
        inside
    }

    /// Edges with both endpoints in `set`.
    pub fn induced_edges(&self, set: &VertexSet) -> Result<Vec<Edge>> {
        self.validate_set(set)?;
        let inside = self.membership(set);
        Ok(set
            .iter()
            .flat_map(|u| {
                self.neighbors_unchecked(u)
                    .filter(move |&v| u < v)
                    .map(move |v| (u, v))
            })
            .filter(|&(_, v)| inside[v as usize])
            .map(|(u, v)| Edge { u, v })
            .collect())
    }

    /// `2 |E(G[X])|`, the degree sum of the subgraph induced by `set`.
    pub fn induced_degree_sum(&self, set: &VertexSet) -> Result<u64> {
        self.validate_set(set)?;
        let inside = self.membership(set);
        Ok(set
            .iter()
            .map(|u| {
                self.neighbors_unchecked(u)
                    .filter(|&v| inside[v as usize])
                    .count() as u64
            })
            .sum())
    }

    /// `E_X`: edges with exactly one endpoint in `set`.
    pub fn boundary(&self, set: &VertexSet) -> Result<EdgeCut> {
        self.validate_set(set)?;
        if set.is_empty() || set.len() == self.vertex_count() {
            return Err(invalid(
                "boundary needs a nonempty proper subset of the vertices",
            ));
        }
        let inside = self.membership(set);
        let edges = set
            .iter()
            .flat_map(|u| self.neighbors_unchecked(u).map(move |v| (u, v)))
            .filter(|&(_, v)| !inside[v as usize])
            .map(|(u, v)| Edge::new(u, v))
            .collect();
        Ok(EdgeCut { edges })
    }

    /// Validates that every edge of `cut` belongs to this topology.
    pub fn cut<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Result<EdgeCut> {
        let cut = EdgeCut::from_iter(edges);
        if let Some(e) = cut.iter().find(|e| !self.has_edge(e.u, e.v)) {
            return Err(invalid(format!("{e} is not an edge of this cube")));
        }
        Ok(cut)
    }

    /// Component index per vertex after deleting `cut`. Components are
    /// numbered in order of their smallest vertex.
    pub fn component_labels(&self, cut: &EdgeCut) -> Vec<u32> {
        let removed: HashSet<Edge> = cut.iter().copied().collect();
        let mut label = vec![u32::MAX; self.vertex_count()];
        let mut next = 0u32;
        let mut stack = Vec::new();
        for root in 0..self.vertex_count() as Vertex {
            if label[root as usize] != u32::MAX {
                continue;
            }
            label[root as usize] = next;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for v in self.neighbors_unchecked(u) {
                    if label[v as usize] == u32::MAX && !removed.contains(&Edge::new(u, v)) {
                        label[v as usize] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Component profile of the graph with `cut` deleted.
    pub fn components_after_removal(&self, cut: &EdgeCut) -> ComponentProfile {
        ComponentProfile::from_labels(&self.component_labels(cut))
    }
}

impl fmt::Display for CubeTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.folded { "FQ" } else { "Q" };
        write!(f, "{prefix}_{}", self.n)
    }
}

/// What an edge flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    /// Bit position `1..=n`, matching `u_i` in the binary string.
    Flip(u32),
    /// Folded matching edge `(u, complement(u))`.
    Complement,
}

/// Undirected edge in canonical `(min, max)` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    /// Derived from the endpoints; `None` if the pair is not an edge of `topo`.
    pub fn kind(&self, topo: &CubeTopology) -> Option<EdgeKind> {
        topo.edge_kind(self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A set of distinct vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.members.insert(v)
    }

    /// Ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }
}

/// A duplicate-free set of canonical edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    edges: BTreeSet<Edge>,
}

impl EdgeCut {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    /// Sorted by `(u, v)`.
    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn union(&self, other: &EdgeCut) -> EdgeCut {
        self.edges.union(&other.edges).copied().collect()
    }

    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.iter().map(Edge::endpoints).collect()
    }
}

impl FromIterator<Edge> for EdgeCut {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Self {
            edges: iter.into_iter().collect(),
        }
    }
}

/// Sizes of the connected components left after a cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentProfile {
    pub count: usize,
    /// Descending.
    pub sizes: Vec<usize>,
    pub isolated_count: usize,
}

impl ComponentProfile {
    /// Builds the profile from a per-vertex component labelling.
    pub fn from_labels(labels: &[u32]) -> Self {
        let count = labels.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut sizes = vec![0usize; count];
        for &c in labels {
            sizes[c as usize] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let isolated_count = sizes.iter().filter(|&&s| s == 1).count();
        Self {
            count,
            sizes,
            isolated_count,
        }
    }
}
