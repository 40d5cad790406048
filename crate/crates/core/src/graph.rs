//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple graph. `adj[u]` has bit `v` set iff `uv` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity { requested: n })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for (u, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1u64 << u);
        }
        Ok(g)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Graph::empty(a)?.join(&Graph::empty(b)?)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, rejecting asymmetric rows,
    /// loops and bits beyond `n`.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let all = VertexSet::full(n).0;
        for u in 0..n {
            if adj[u] & !all != 0 {
                return Err(Error::InvalidArgument(format!("row {u} has bits beyond {n}")));
            }
            if adj[u] >> u & 1 == 1 {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            for v in VertexSet(adj[u]) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidArgument(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Unchecked constructor for rows already known to be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u])
    }

    #[inline]
    pub fn closed_neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u] | 1u64 << u)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << 1 << u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// `N(S)`: vertices outside `S` with a neighbour in `S`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for u in s {
            out |= self.neighbors(u);
        }
        out - s
    }

    /// Vertices outside `S` adjacent to every vertex of `S`.
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut out = self.vertices() - s;
        for u in s {
            out &= self.neighbors(u);
        }
        out
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|u| (s.without(u)).is_subset(self.neighbors(u)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|u| !self.neighbors(u).intersects(s))
    }

    pub fn is_complete_graph(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = self.adj.iter().enumerate().map(|(u, r)| !r & all & !(1u64 << u)).collect();
        Graph { n: self.n, adj }
    }

    /// `G[S]`, with the vertices of `S` renumbered in ascending order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let verts = s.to_vec();
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |row, (j, _)| row | 1u64 << j)
            })
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Induced subgraph on an ordered vertex list (the i-th listed vertex becomes vertex i).
    pub fn induced_ordered(&self, verts: &[usize]) -> Result<Graph> {
        for &v in verts {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |row, (j, _)| row | 1u64 << j)
            })
            .collect();
        Ok(Graph { n: verts.len(), adj })
    }

    /// `G - u`.
    pub fn remove_vertex(&self, u: usize) -> Result<Graph> {
        self.induced(self.vertices().without(u))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Ok(Graph { n, adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(n).0 & !left;
        let adj = self
            .adj
            .iter()
            .map(|r| r | right)
            .chain(other.adj.iter().map(|r| r << self.n | left))
            .collect();
        Ok(Graph { n, adj })
    }

    /// `kG`: `k` disjoint copies.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        check_capacity(self.n * k)?;
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// The `q`-expansion: vertex `u` becomes a clique of `q(u)` vertices, blocks
    /// laid out contiguously in ascending order of `u`.
    pub fn expansion(&self, q: &crate::weights::VertexWeights) -> Result<Graph> {
        Ok(self.expansion_with_blocks(q)?.0)
    }

    /// Like [`Graph::expansion`], also returning for every original vertex the
    /// block of expansion vertices replacing it.
    pub fn expansion_with_blocks(
        &self,
        q: &crate::weights::VertexWeights,
    ) -> Result<(Graph, Vec<VertexSet>)> {
        q.check_len(self.n)?;
        let total = q.total() as usize;
        check_capacity(total)?;
        let mut blocks = Vec::with_capacity(self.n);
        let mut next = 0usize;
        for u in 0..self.n {
            let k = q[u] as usize;
            blocks.push(VertexSet(VertexSet::full(next + k).0 & !VertexSet::full(next).0));
            next += k;
        }
        let mut adj = vec![0u64; total];
        for u in 0..self.n {
            let mut row = blocks[u];
            for v in self.neighbors(u) {
                row |= blocks[v];
            }
            for x in blocks[u] {
                adj[x] = row.without(x).0;
            }
        }
        Ok((Graph { n: total, adj }, blocks))
    }

    /// Vertices at distance exactly `i` from `S` (breadth-first layering).
    /// Unreachable vertices belong to no shell.
    pub fn neighborhood_shell(&self, s: VertexSet, i: usize) -> Result<VertexSet> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::InvalidArgument("shell source set must be nonempty".into()));
        }
        let mut seen = s;
        let mut layer = s;
        for _ in 0..i {
            layer = self.neighbors_of_set(layer) - seen;
            if layer.is_empty() {
                return Ok(VertexSet::EMPTY);
            }
            seen |= layer;
        }
        Ok(layer)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.neighbors(u);
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of the complement restricted to `within`.
    pub fn co_components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut seen = VertexSet::singleton(start);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for u in frontier {
                    next |= rest - self.closed_neighbors(u);
                }
                frontier = next - seen;
                seen |= frontier;
            }
            rest = rest - seen;
            out.push(seen);
        }
        out
    }

    /// `E[A, B]` is complete.
    pub fn is_complete_between(&self, cut: &EdgeCut) -> bool {
        cut.a.iter().all(|u| cut.b.is_subset(self.neighbors(u)))
    }

    /// `E[A, B]` is empty.
    pub fn is_anticomplete_between(&self, cut: &EdgeCut) -> bool {
        cut.a.iter().all(|u| !self.neighbors(u).intersects(cut.b))
    }
}

/// Two disjoint vertex sets, the sides of `E[A, B]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    a: VertexSet,
    b: VertexSet,
}

impl EdgeCut {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self> {
        if a.intersects(b) {
            return Err(Error::InvalidArgument(format!("cut sides {a} and {b} overlap")));
        }
        Ok(EdgeCut { a, b })
    }

    pub fn a(&self) -> VertexSet {
        self.a
    }

    pub fn b(&self) -> VertexSet {
        self.b
    }
}

/// Breadth-first distances from `s`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, s: VertexSet) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue: VecDeque<usize> = s.iter().collect();
    for v in s {
        dist[v] = Some(0);
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}
