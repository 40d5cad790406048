use serde::{Deserialize, Serialize};

use super::modules::is_module;
use crate::error::{Error, Result};
use crate::graph::{EdgeCut, Graph, VertexSet};

/// Largest graph the exhaustive separator search accepts.
pub const SEPARATOR_SEARCH_MAX_VERTICES: usize = 20;

/// A set `X` that is a union of pairwise completely joined modules and whose
/// removal disconnects the graph, together with the split it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSeparatorOfModules {
    pub separator: VertexSet,
    /// The co-components of `G[X]`, each a module of `G`.
    pub modules: Vec<VertexSet>,
    /// `V(G1)`: `X` plus the component of `G - X` holding its lowest vertex.
    pub side1: VertexSet,
    /// `V(G2)`: `X` plus every other component.
    pub side2: VertexSet,
}

impl CliqueSeparatorOfModules {
    /// Builds the split for `x` if `x` is a clique-separator of modules.
    ///
    /// Any partition of `X` into pairwise complete parts coarsens the
    /// co-components of `G[X]`, and a co-component of a module part is itself
    /// a module, so it suffices to test the co-components.
    pub fn from_separator(g: &Graph, x: VertexSet) -> Option<Self> {
        let all = g.vertices();
        if x.is_empty() || !x.is_subset(all) {
            return None;
        }
        let rest = all - x;
        let first = rest.first()?;
        let c1 = g.component_of(first, rest);
        if c1 == rest {
            return None;
        }
        let modules = g.co_components_within(x);
        if !modules.iter().all(|&m| is_module(g, m)) {
            return None;
        }
        Some(CliqueSeparatorOfModules { separator: x, modules, side1: x | c1, side2: all - c1 })
    }

    /// Checks every defining property against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |what: &str| Err(Error::Invariant(format!("separator {}: {what}", self.separator)));
        let x = self.separator;
        let union = self.modules.iter().fold(VertexSet::EMPTY, |a, &m| a | m);
        if x.is_empty() || union != x || self.modules.iter().map(|m| m.len()).sum::<usize>() != x.len() {
            return fail("modules do not partition X");
        }
        if !self.modules.iter().all(|&m| is_module(g, m)) {
            return fail("a part is not a module");
        }
        for (i, &a) in self.modules.iter().enumerate() {
            for &b in &self.modules[i + 1..] {
                if !g.is_complete_between(&EdgeCut::new(a, b)?) {
                    return fail("two parts are not completely joined");
                }
            }
        }
        if self.side1 | self.side2 != g.vertices() || self.side1 & self.side2 != x {
            return fail("sides do not cover V with intersection X");
        }
        let (a, b) = (self.side1 - x, self.side2 - x);
        if a.is_empty() || b.is_empty() {
            return fail("a strict side is empty");
        }
        if !g.is_anticomplete_between(&EdgeCut::new(a, b)?) {
            return fail("edges cross between the strict sides");
        }
        Ok(())
    }
}

/// All `k`-subsets of `{0..n}` as bitmasks, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = 1u64 << n;
    let mut x = if k == 0 || k > n { limit } else { (1u64 << k) - 1 };
    std::iter::from_fn(move || {
        if x >= limit {
            return None;
        }
        let out = x;
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        Some(VertexSet(out))
    })
}

/// A clique-separator of modules of a connected graph, if one exists.
///
/// Plain clique separators are tried first, smallest first; then every
/// other candidate `X` by increasing size. Exhaustive, so limited to
/// [`SEPARATOR_SEARCH_MAX_VERTICES`] vertices.
pub fn find_clique_separator_of_modules(g: &Graph) -> Result<Option<CliqueSeparatorOfModules>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n > SEPARATOR_SEARCH_MAX_VERTICES {
        return Err(Error::Budget(format!(
            "separator search is exhaustive and limited to {SEPARATOR_SEARCH_MAX_VERTICES} vertices"
        )));
    }
    if n < 3 {
        return Ok(None);
    }
    for k in 1..=n - 2 {
        for x in subsets_of_size(n, k) {
            if g.is_clique(x) {
                if let Some(sep) = CliqueSeparatorOfModules::from_separator(g, x) {
                    return Ok(Some(sep));
                }
            }
        }
    }
    for k in 2..=n - 2 {
        for x in subsets_of_size(n, k) {
            if !g.is_clique(x) {
                if let Some(sep) = CliqueSeparatorOfModules::from_separator(g, x) {
                    return Ok(Some(sep));
                }
            }
        }
    }
    Ok(None)
}
