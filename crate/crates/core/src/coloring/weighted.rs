//! Vertex-weighted colouring: `χ_q` by direct search over colour classes and
//! by colouring the `q`-expansion, plus the derived criticality and
//! weight-minimality tests.

use std::collections::HashMap;

use super::certificate::ColoringCertificate;
use super::clique::max_weight_clique_in;
use super::exact::{
    chromatic_number, chromatic_number_cover, maximal_independent_sets_containing,
    DEFAULT_NODE_BUDGET,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weights::VertexWeights;

/// Expansions up to this many vertices are also checked by the subset-counting
/// engine; larger ones use the cover search alone.
pub const EXPANSION_CROSSCHECK_MAX: usize = 16;

pub const MAX_TOTAL_WEIGHT: u32 = 24;

struct DirectSearch<'a> {
    g: &'a Graph,
    /// α of `G[S]` per support set `S`.
    alpha: HashMap<u64, u32>,
    failed: HashMap<Vec<u8>, u32>,
    classes: Vec<VertexSet>,
    nodes: u64,
    budget: u64,
}

fn support_of(r: &[u8]) -> VertexSet {
    r.iter().enumerate().filter(|(_, &w)| w > 0).map(|(u, _)| u).collect()
}

impl DirectSearch<'_> {
    fn alpha_of(&mut self, s: VertexSet) -> u32 {
        if let Some(&a) = self.alpha.get(&s.0) {
            return a;
        }
        let co = self.g.complement();
        let ones = vec![1u32; self.g.n()];
        let a = max_weight_clique_in(&co, &ones, s).0;
        self.alpha.insert(s.0, a);
        a
    }

    fn lower_bound(&mut self, r: &[u8], s: VertexSet) -> u32 {
        let w: Vec<u32> = r.iter().map(|&x| u32::from(x)).collect();
        let omega = max_weight_clique_in(self.g, &w, s).0;
        let total: u32 = w.iter().sum();
        let alpha = self.alpha_of(s).max(1);
        omega.max(total.div_ceil(alpha))
    }

    fn colourable(&mut self, r: &mut Vec<u8>, k: u32) -> Result<bool> {
        let s = support_of(r);
        if s.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        if self.failed.get(r.as_slice()).is_some_and(|&f| f >= k) {
            return Ok(false);
        }
        if self.lower_bound(r, s) > k {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!("direct q-colouring exceeded {} nodes", self.budget)));
        }
        // branch on the heaviest remaining vertex
        let v = s.iter().max_by_key(|&u| (r[u], std::cmp::Reverse(u))).unwrap();
        let mut options = maximal_independent_sets_containing(self.g, s, v);
        options.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for class in options {
            for u in class {
                r[u] -= 1;
            }
            self.classes.push(class);
            let ok = self.colourable(r, k - 1)?;
            for u in class {
                r[u] += 1;
            }
            if ok {
                return Ok(true);
            }
            self.classes.pop();
        }
        let e = self.failed.entry(r.clone()).or_insert(0);
        *e = (*e).max(k);
        Ok(false)
    }
}

fn check_weights(g: &Graph, q: &VertexWeights) -> Result<()> {
    if q.len() != g.n() {
        return Err(Error::WeightLength { expected: g.n(), got: q.len() });
    }
    Ok(())
}

/// `χ_q` by searching directly for `k` colour classes (independent sets)
/// covering each vertex `u` at least `q(u)` times.
pub fn chi_weighted_direct(g: &Graph, q: &VertexWeights) -> Result<(u32, ColoringCertificate)> {
    check_weights(g, q)?;
    if q.max() > u32::from(u8::MAX) {
        return Err(Error::Budget(format!("vertex weight {} too large", q.max())));
    }
    let mut r: Vec<u8> = q.as_slice().iter().map(|&w| w as u8).collect();
    let mut search = DirectSearch {
        g,
        alpha: HashMap::new(),
        failed: HashMap::new(),
        classes: Vec::new(),
        nodes: 0,
        budget: DEFAULT_NODE_BUDGET,
    };
    let s = support_of(&r);
    let mut k = search.lower_bound(&r, s);
    loop {
        search.classes.clear();
        if search.colourable(&mut r, k)? {
            break;
        }
        k += 1;
    }
    // every class was taken inside the current support, so each vertex u lies
    // in exactly q(u) of the classes
    let mut colours = vec![Vec::new(); g.n()];
    for (c, class) in search.classes.iter().enumerate() {
        for u in *class {
            colours[u].push(c as u32 + 1);
        }
    }
    Ok((k, ColoringCertificate::new(k, colours)))
}

/// `χ_q` as the chromatic number of the `q`-expansion.
pub fn chi_weighted_expansion(g: &Graph, q: &VertexWeights) -> Result<(u32, ColoringCertificate)> {
    check_weights(g, q)?;
    let (h, blocks) = g.expansion_with_blocks(q)?;
    let (k, cert) = if h.n() <= EXPANSION_CROSSCHECK_MAX {
        chromatic_number(&h)?
    } else {
        chromatic_number_cover(&h, DEFAULT_NODE_BUDGET)?
    };
    let colours = blocks
        .iter()
        .map(|b| b.iter().map(|x| cert.colours[x][0]).collect())
        .collect();
    Ok((k, ColoringCertificate::new(k, colours)))
}

/// `χ_q(G)` computed by both routes, which must agree. The certificate comes
/// from the direct route. Total weight is limited to [`MAX_TOTAL_WEIGHT`].
pub fn chromatic_number_weighted(
    g: &Graph,
    q: &VertexWeights,
) -> Result<(u32, ColoringCertificate)> {
    check_weights(g, q)?;
    if q.total() > MAX_TOTAL_WEIGHT {
        return Err(Error::Budget(format!(
            "total weight {} exceeds {MAX_TOTAL_WEIGHT}",
            q.total()
        )));
    }
    let (direct, cert) = chi_weighted_direct(g, q)?;
    let (via_expansion, _) = chi_weighted_expansion(g, q)?;
    if direct != via_expansion {
        return Err(Error::Disagreement(format!(
            "direct q-colouring gives {direct}, expansion gives {via_expansion}"
        )));
    }
    Ok((direct, cert))
}

/// `χ_q` by the direct route only; the fast path used inside loops.
pub fn chi_weighted(g: &Graph, q: &VertexWeights) -> Result<u32> {
    Ok(chi_weighted_direct(g, q)?.0)
}

/// True iff every single-unit decrement of `q` lowers `χ_q`.
pub fn is_weight_minimal(g: &Graph, q: &VertexWeights) -> Result<bool> {
    check_weights(g, q)?;
    let chi = chi_weighted(g, q)?;
    for u in q.support() {
        if chi_weighted(g, &q.with(u, q[u] - 1))? == chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy reduction to a minimal weight function with the same `χ_q`:
/// vertices in ascending order, each decremented while `χ_q` is preserved.
pub fn minimalize(g: &Graph, q: &VertexWeights) -> Result<VertexWeights> {
    check_weights(g, q)?;
    let chi = chi_weighted(g, q)?;
    let mut cur = q.clone();
    for u in 0..g.n() {
        while cur[u] > 0 {
            let next = cur.with(u, cur[u] - 1);
            if chi_weighted(g, &next)? != chi {
                break;
            }
            cur = next;
        }
    }
    Ok(cur)
}

/// `χ(G)` and `χ(G - u)` for every vertex `u`.
pub fn deletion_profile(g: &Graph) -> Result<(u32, Vec<u32>)> {
    let chi = chromatic_number(g)?.0;
    let drops = (0..g.n())
        .map(|u| Ok(chromatic_number(&g.remove_vertex(u)?)?.0))
        .collect::<Result<Vec<_>>>()?;
    Ok((chi, drops))
}

/// Critical: deleting any single vertex lowers χ. Requires `n >= 1`.
pub fn is_critical(g: &Graph) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("criticality needs at least one vertex".into()));
    }
    let chi = chromatic_number(g)?.0;
    for u in 0..g.n() {
        if chromatic_number(&g.remove_vertex(u)?)?.0 == chi {
            return Ok(false);
        }
    }
    Ok(true)
}
