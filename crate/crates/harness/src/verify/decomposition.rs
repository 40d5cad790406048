use std::collections::BTreeMap;

use chiforge_core::coloring::{chi_weighted, clique_number_weighted, is_critical};
use chiforge_core::decompose::{
    decompose_qp4, find_clique_separator_of_modules, is_module, module_trichotomy, CliqueSeparatorOfModules,
};
use chiforge_core::patterns::{build_qf, contains_induced, GraphClass, Pattern};
use chiforge_core::{write_graph6, Graph, VertexSet, VertexWeights};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::CatalogSource;
use crate::error::Result;
use crate::report::{Extremal, Failure, Tally, VerificationReport};

/// Orders up to which the weight grid is exhaustive over `{0,1,2}^n`.
pub const EXHAUSTIVE_GRID_MAX_VERTICES: usize = 6;
/// Random weight vectors per graph beyond that order.
pub const RANDOM_GRID_SIZE: usize = 64;
/// Largest entry of a random weight vector.
pub const RANDOM_GRID_MAX_WEIGHT: u32 = 4;

/// Deterministic per-graph seed: FNV-1a of the graph6 string mixed with `seed`.
fn graph_seed(seed: u64, g: &Graph) -> u64 {
    write_graph6(g).bytes().fold(0xcbf2_9ce4_8422_2325 ^ seed, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// All of `{0,1,2}^n` for small `n`, otherwise [`RANDOM_GRID_SIZE`] seeded
/// vectors with entries at most [`RANDOM_GRID_MAX_WEIGHT`].
pub fn weight_grid(g: &Graph, seed: u64) -> Vec<VertexWeights> {
    let n = g.n();
    if n <= EXHAUSTIVE_GRID_MAX_VERTICES {
        (0..3u32.pow(n as u32))
            .map(|code| VertexWeights::from((0..n).map(|i| code / 3u32.pow(i as u32) % 3).collect::<Vec<_>>()))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(seed, g));
        (0..RANDOM_GRID_SIZE)
            .map(|_| VertexWeights::from((0..n).map(|_| rng.gen_range(0..=RANDOM_GRID_MAX_WEIGHT)).collect::<Vec<_>>()))
            .collect()
    }
}

/// Largest χ_q seen per ω_q, for the transfer check.
type Maxima = BTreeMap<u32, (u32, Failure)>;

#[derive(Default)]
struct Acc {
    tally: Tally,
    table: Extremal,
    /// Over quotient weight functions of the decompositions.
    quotients: BTreeMap<u32, u32>,
    whole: Maxima,
}

impl Acc {
    fn merge(mut self, other: Acc) -> Acc {
        self.tally = self.tally.merge(other.tally);
        self.table = self.table.merge(other.table);
        for (w, c) in other.quotients {
            let e = self.quotients.entry(w).or_insert(0);
            *e = (*e).max(c);
        }
        for (w, (c, f)) in other.whole {
            match self.whole.get(&w) {
                Some((c0, f0)) if (*c0, std::cmp::Reverse(f0)) >= (c, std::cmp::Reverse(&f)) => {}
                _ => {
                    self.whole.insert(w, (c, f));
                }
            }
        }
        self
    }
}

fn check_trichotomy(g: &Graph, t: &mut Tally) {
    let forbidden = [Graph::empty(1).expect("K1"), Graph::empty(2).expect("2K1"), Pattern::P4.graph().clone()];
    for f in &forbidden {
        let qf = build_qf(f).expect("nonempty F");
        if contains_induced(g, &qf) {
            continue;
        }
        for m in (1u64..1 << g.n()).map(VertexSet).filter(|&m| is_module(g, m)) {
            t.check();
            if let Err(err) = module_trichotomy(g, f, m) {
                t.fail(Failure::new(g, format!("module {m}, F on {} vertices: {err}", f.n())));
            }
        }
    }
}

fn check_separator(g: &Graph, q: &VertexWeights, sep: &CliqueSeparatorOfModules, t: &mut Tally) -> chiforge_core::Result<()> {
    t.check();
    let (a, b) = (q.restricted_to(sep.side1), q.restricted_to(sep.side2));
    let chi = chi_weighted(g, q)?;
    let (c1, c2) = (chi_weighted(g, &a)?, chi_weighted(g, &b)?);
    let omega = clique_number_weighted(g, q);
    let (w1, w2) = (clique_number_weighted(g, &a), clique_number_weighted(g, &b));
    if chi != c1.max(c2) || omega != w1.max(w2) {
        t.fail(Failure::weighted(g, q, format!(
            "separator {}: χ_q = {chi} vs sides {c1}, {c2}; ω_q = {omega} vs sides {w1}, {w2}",
            sep.separator
        )));
    }
    Ok(())
}

fn check_weighting(g: &Graph, q: &VertexWeights, sep: Option<&CliqueSeparatorOfModules>, critical: bool, acc: &mut Acc) -> chiforge_core::Result<()> {
    if let Some(sep) = sep {
        check_separator(g, q, sep, &mut acc.tally)?;
    }
    acc.tally.check();
    let d = decompose_qp4(g, q)?;
    if let Err(err) = d.validate(g, q) {
        acc.tally.fail(Failure::weighted(g, q, err.to_string()));
        return Ok(());
    }
    if critical && q.as_slice().iter().all(|&w| w == 1) {
        let covered = d.parts.iter().fold(VertexSet::EMPTY, |s, p| s | p.vertices);
        if covered != g.vertices() {
            acc.tally.fail(Failure::weighted(g, q, format!("critical graph: parts cover only {covered}")));
        }
    }
    for p in &d.parts {
        let w = clique_number_weighted(g, &p.weights);
        let c = chi_weighted(g, &p.weights)?;
        let e = acc.quotients.entry(w).or_insert(0);
        *e = (*e).max(c);
    }
    let (chi, omega) = (chi_weighted(g, q)?, clique_number_weighted(g, q));
    acc.table.observe(omega, chi, g);
    let cand = Failure::weighted(g, q, String::new());
    match acc.whole.get(&omega) {
        Some((c0, f0)) if (*c0, std::cmp::Reverse(f0)) >= (chi, std::cmp::Reverse(&cand)) => {}
        _ => {
            acc.whole.insert(omega, (chi, cand));
        }
    }
    Ok(())
}

/// The smallest monotone superadditive function above `f` on `0..=max`.
pub fn superadditive_closure(f: &BTreeMap<u32, u32>, max: u32) -> Vec<u32> {
    let mut out = vec![0u32; max as usize + 1];
    let mut running = 0;
    for w in 0..=max as usize {
        running = running.max(f.get(&(w as u32)).copied().unwrap_or(0));
        let split = (1..w).map(|a| out[a] + out[w - a]).max().unwrap_or(0);
        out[w] = running.max(split);
        running = out[w];
    }
    out
}

/// Over every Q{P4}-free graph of the source and its weight grid:
/// weighted invariants split across a clique-separator of modules, the
/// module trichotomy, the decomposition invariants, the cover of critical
/// graphs by the parts, and the bound transfer with `f` the superadditive
/// closure of the χ maxima over the prime quotients.
pub fn verify_decomposition(source: &CatalogSource, seed: u64) -> Result<VerificationReport> {
    let src = source.clone().with_class(GraphClass::QP4);
    let acc = src.fold(
        Acc::default,
        |mut acc, g| {
            let sep = if g.is_connected() {
                check_trichotomy(g, &mut acc.tally);
                match find_clique_separator_of_modules(g) {
                    Ok(s) => s,
                    Err(err) => {
                        acc.tally.fail(Failure::new(g, err.to_string()));
                        return acc;
                    }
                }
            } else {
                None
            };
            let critical = g.n() > 0 && is_critical(g).unwrap_or(false);
            for q in weight_grid(g, seed) {
                if let Err(err) = check_weighting(g, &q, sep.as_ref(), critical, &mut acc) {
                    acc.tally.fail(Failure::weighted(g, &q, err.to_string()));
                }
            }
            acc
        },
        Acc::merge,
    )?;

    let Acc { mut tally, table, quotients, whole } = acc;
    let max_omega = whole.keys().chain(quotients.keys()).copied().max().unwrap_or(0);
    let f = superadditive_closure(&quotients, max_omega);
    for (&omega, (chi, witness)) in &whole {
        tally.check();
        if *chi > f[omega as usize] {
            let mut fail = witness.clone();
            fail.detail = format!("χ_q = {chi} exceeds f(ω_q) = {} at ω_q = {omega}", f[omega as usize]);
            tally.fail(fail);
        }
    }
    let notes = vec![
        format!(
            "weights: all of {{0,1,2}}^n for n <= {EXHAUSTIVE_GRID_MAX_VERTICES}, else {RANDOM_GRID_SIZE} vectors with entries <= {RANDOM_GRID_MAX_WEIGHT}"
        ),
        format!("f from prime quotients, by ω: {:?}", f),
    ];
    Ok(VerificationReport::new("decomposition", src.to_string(), tally, table.rows())
        .with_notes(notes)
        .with_seed(seed))
}
