//! Two independent exact chromatic-number engines.
//!
//! * cover search: iterative deepening over covers of the vertex set by
//!   maximal independent sets, with failure memoisation and true-twin pruning;
//! * subset counting: the number of ordered k-tuples of independent sets
//!   covering V is `Σ_S (-1)^{|V \ S|} i(S)^k`, where `i(S)` counts independent
//!   subsets of `S`. Evaluated modulo the prime 2^61 - 1, so a nonzero residue
//!   proves a cover exists and a zero residue is exact whenever no cover exists.

use std::collections::HashMap;

use super::certificate::ColoringCertificate;
use super::clique::{clique_number, greedy_clique};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
pub const SUBSET_DP_MAX_VERTICES: usize = 24;

/// Maximal independent sets of `G[within]` containing `v`, restricted to
/// vertices of `allowed` (which must contain `v`). Pivoted Bron–Kerbosch on
/// the complement.
pub(crate) fn maximal_independent_sets_containing(
    g: &Graph,
    allowed: VertexSet,
    v: usize,
) -> Vec<VertexSet> {
    fn bk(g: &Graph, cur: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(cur);
            }
            return;
        }
        let pivot = (p | x).iter().min_by_key(|&u| (p & g.closed_neighbors(u)).len()).unwrap();
        let mut p = p;
        let mut x = x;
        for w in p & g.closed_neighbors(pivot) {
            let nw = g.closed_neighbors(w);
            bk(g, cur.with(w), p - nw, x - nw, out);
            p = p.without(w);
            x = x.with(w);
        }
    }
    let mut out = Vec::new();
    let nv = g.closed_neighbors(v);
    bk(g, VertexSet::singleton(v), allowed - nv, VertexSet::EMPTY, &mut out);
    out
}

/// Lowest-numbered member of every true-twin class of `G[r]`.
pub(crate) fn twin_representatives(g: &Graph, r: VertexSet) -> VertexSet {
    let mut reps = VertexSet::EMPTY;
    for u in r {
        let nu = g.closed_neighbors(u) & r;
        if !(reps & nu).iter().any(|w| g.closed_neighbors(w) & r == nu) {
            reps = reps.with(u);
        }
    }
    reps
}

/// Greedy DSATUR colouring; colour classes in order of creation.
pub(crate) fn dsatur(g: &Graph) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncoloured = g.vertices();
    while !uncoloured.is_empty() {
        let v = uncoloured
            .iter()
            .max_by_key(|&u| {
                let sat = classes.iter().filter(|c| c.intersects(g.neighbors(u))).count();
                (sat, (g.neighbors(u) & uncoloured).len(), std::cmp::Reverse(u))
            })
            .unwrap();
        match classes.iter_mut().find(|c| !c.intersects(g.neighbors(v))) {
            Some(c) => *c = c.with(v),
            None => classes.push(VertexSet::singleton(v)),
        }
        uncoloured = uncoloured.without(v);
    }
    classes
}

struct CoverSearch<'a> {
    g: &'a Graph,
    /// Largest k for which the set is known not to be k-colourable.
    failed: HashMap<u64, u32>,
    nodes: u64,
    budget: u64,
    classes: Vec<VertexSet>,
}

impl CoverSearch<'_> {
    fn colourable(&mut self, r: VertexSet, k: u32) -> Result<bool> {
        if r.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        if self.failed.get(&r.0).is_some_and(|&f| f >= k) {
            return Ok(false);
        }
        if k == 1 {
            if self.g.is_independent(r) {
                self.classes.push(r);
                return Ok(true);
            }
            return Ok(false);
        }
        if greedy_clique(self.g, r) as u32 > k {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "cover search exceeded {} nodes on {} vertices",
                self.budget,
                self.g.n()
            )));
        }
        let v = r.first().unwrap();
        let reps = twin_representatives(self.g, r);
        let mut options = maximal_independent_sets_containing(self.g, reps, v);
        options.sort_by_key(|s| std::cmp::Reverse(s.len()));
        for class in options {
            self.classes.push(class);
            if self.colourable(r - class, k - 1)? {
                return Ok(true);
            }
            self.classes.pop();
        }
        let e = self.failed.entry(r.0).or_insert(0);
        *e = (*e).max(k);
        Ok(false)
    }
}

fn certificate_from_classes(n: usize, classes: &[VertexSet]) -> ColoringCertificate {
    let mut colours = vec![Vec::new(); n];
    for (c, class) in classes.iter().enumerate() {
        for u in *class {
            colours[u].push(c as u32 + 1);
        }
    }
    ColoringCertificate::new(classes.len() as u32, colours)
}

/// Exact χ by the cover search, with a proper colouring as certificate.
pub fn chromatic_number_cover(g: &Graph, budget: u64) -> Result<(u32, ColoringCertificate)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, ColoringCertificate::new(0, Vec::new())));
    }
    let greedy = dsatur(g);
    let lower = clique_number(g);
    if greedy.len() as u32 == lower {
        return Ok((lower, certificate_from_classes(n, &greedy)));
    }
    let mut search = CoverSearch { g, failed: HashMap::new(), nodes: 0, budget, classes: Vec::new() };
    for k in lower..greedy.len() as u32 {
        search.classes.clear();
        if search.colourable(g.vertices(), k)? {
            let classes = std::mem::take(&mut search.classes);
            return Ok((k, certificate_from_classes(n, &classes)));
        }
    }
    Ok((greedy.len() as u32, certificate_from_classes(n, &greedy)))
}

const P61: u64 = (1u64 << 61) - 1;

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    let z = a as u128 * b as u128;
    let s = (z as u64 & P61) + (z >> 61) as u64;
    let s = (s & P61) + (s >> 61);
    if s >= P61 {
        s - P61
    } else {
        s
    }
}

fn powmod(mut a: u64, mut e: u32) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Exact χ by inclusion–exclusion over vertex subsets. Limited to
/// [`SUBSET_DP_MAX_VERTICES`] vertices by the `2^n` table.
pub fn chromatic_number_subset_dp(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > SUBSET_DP_MAX_VERTICES {
        return Err(Error::Budget(format!(
            "subset counting needs n <= {SUBSET_DP_MAX_VERTICES}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let size = 1usize << n;
    let mut indep = vec![0u32; size];
    indep[0] = 1;
    for s in 1..size {
        let v = usize::BITS - 1 - s.leading_zeros();
        let without_v = s & !(1usize << v);
        let without_nv = s & !(g.closed_neighbors(v as usize).0 as usize);
        indep[s] = indep[without_v] + indep[without_nv];
    }

    let lower = greedy_clique(g, g.vertices()) as u32;
    let upper = dsatur(g).len() as u32;
    let span = (upper - lower + 1) as usize;
    let mut acc = vec![0u64; span];
    for (s, &count) in indep.iter().enumerate() {
        let x = u64::from(count);
        let negative = (n as u32 - s.count_ones()) % 2 == 1;
        let mut pw = powmod(x, lower);
        for a in acc.iter_mut() {
            *a = if negative { (*a + P61 - pw) % P61 } else { (*a + pw) % P61 };
            pw = mulmod(pw, x);
        }
    }
    match acc.iter().position(|&a| a != 0) {
        Some(i) => Ok(lower + i as u32),
        None => Err(Error::Disagreement(format!(
            "subset counting found no {upper}-colouring although a greedy one exists"
        ))),
    }
}

/// Exact χ with certificate; both engines must agree.
pub fn chromatic_number(g: &Graph) -> Result<(u32, ColoringCertificate)> {
    if g.n() > SUBSET_DP_MAX_VERTICES {
        return Err(Error::Budget(format!(
            "exact colouring supports n <= {SUBSET_DP_MAX_VERTICES}, got {}",
            g.n()
        )));
    }
    let (k, cert) = chromatic_number_cover(g, DEFAULT_NODE_BUDGET)?;
    let k_dp = chromatic_number_subset_dp(g)?;
    if k != k_dp {
        return Err(Error::Disagreement(format!(
            "cover search gives {k}, subset counting gives {k_dp}"
        )));
    }
    Ok((k, cert))
}

/// χ alone.
pub fn chi(g: &Graph) -> Result<u32> {
    Ok(chromatic_number(g)?.0)
}
