use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A module of a graph: a nonempty vertex set whose outside vertices each see
/// all of it or none of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleSet {
    pub vertices: VertexSet,
    /// Proper and of size at least two.
    pub homogeneous: bool,
}

impl ModuleSet {
    pub fn new(g: &Graph, vertices: VertexSet) -> Result<Self> {
        if !vertices.is_subset(g.vertices()) {
            let v = (vertices - g.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !is_module(g, vertices) {
            return Err(Error::InvalidArgument(format!("{vertices} is not a module")));
        }
        Ok(Self::new_unchecked(g, vertices))
    }

    fn new_unchecked(g: &Graph, vertices: VertexSet) -> Self {
        let homogeneous = vertices.len() > 1 && vertices.len() < g.n();
        ModuleSet { vertices, homogeneous }
    }
}

/// Vertices outside `m` adjacent to some but not all of `m`.
fn splitters(g: &Graph, m: VertexSet) -> VertexSet {
    (g.vertices() - m)
        .iter()
        .filter(|&v| {
            let seen = g.neighbors(v) & m;
            !seen.is_empty() && seen != m
        })
        .collect()
}

pub fn is_module(g: &Graph, m: VertexSet) -> bool {
    !m.is_empty() && m.is_subset(g.vertices()) && splitters(g, m).is_empty()
}

/// Proper module of size at least two.
pub fn is_homogeneous_set(g: &Graph, m: VertexSet) -> bool {
    m.len() > 1 && m.len() < g.n() && is_module(g, m)
}

/// The smallest module containing `seed`: splitters must belong to every
/// module containing `seed`, so adding them until none remain is exact.
pub fn module_closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut m = seed;
    loop {
        let s = splitters(g, m);
        if s.is_empty() {
            return m;
        }
        m |= s;
    }
}

/// No homogeneous set exists. Every homogeneous set contains a pair whose
/// closure it then contains, so checking pair closures suffices.
pub fn is_prime(g: &Graph) -> bool {
    let all = g.vertices();
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| module_closure(g, VertexSet::from_vertices([u, v])) == all))
}

/// Inclusion-maximal homogeneous sets of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "sets", rename_all = "snake_case")]
pub enum HomogeneousSets {
    /// Pairwise disjoint; the usual case.
    Disjoint(Vec<ModuleSet>),
    /// The complement has at least three components and the sets overlap
    /// pairwise (each is everything but one co-component).
    Overlapping(Vec<ModuleSet>),
}

impl HomogeneousSets {
    pub fn sets(&self) -> &[ModuleSet] {
        match self {
            HomogeneousSets::Disjoint(s) | HomogeneousSets::Overlapping(s) => s,
        }
    }

    pub fn is_disjoint(&self) -> bool {
        matches!(self, HomogeneousSets::Disjoint(_))
    }
}

/// The inclusion-maximal proper homogeneous sets of a connected graph.
///
/// If the complement is disconnected with co-components `C_1..C_k`, every
/// module is a union of co-components or lies inside one of them, so the
/// maximal ones are the sets `V - C_i`. Otherwise the maximal proper modules
/// partition `V`, and the one containing `v` is the union of the proper pair
/// closures through `v`.
pub fn maximal_homogeneous_sets(g: &Graph) -> Result<HomogeneousSets> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertices();
    let co = g.co_components_within(all);
    if co.len() > 1 {
        let sets: Vec<ModuleSet> = co
            .iter()
            .map(|&c| all - c)
            .filter(|m| m.len() > 1)
            .map(|m| ModuleSet::new_unchecked(g, m))
            .collect();
        return Ok(if co.len() > 2 && !sets.is_empty() {
            HomogeneousSets::Overlapping(sets)
        } else {
            HomogeneousSets::Disjoint(sets)
        });
    }

    let mut assigned = VertexSet::EMPTY;
    let mut sets = Vec::new();
    for v in all {
        if assigned.contains(v) {
            continue;
        }
        let mut m = VertexSet::singleton(v);
        for u in all.without(v) {
            let c = module_closure(g, VertexSet::from_vertices([u, v]));
            if c != all {
                m |= c;
            }
        }
        assigned |= m;
        if m.len() > 1 {
            sets.push(ModuleSet::new_unchecked(g, m));
        }
    }
    Ok(HomogeneousSets::Disjoint(sets))
}
