use std::collections::BTreeMap;

use chiforge_core::coloring::{
    chi_weighted_c5_closed_form, chi_weighted_direct, chi_weighted_expansion, chromatic_number,
    chromatic_number_weighted, clique_number, clique_number_weighted, five_quarter_bound, reed_check,
    tight_c5_weights,
};
use chiforge_core::patterns::{are_isomorphic, GraphClass, Pattern};
use chiforge_core::{Graph, VertexWeights};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::merge_pair;
use crate::catalog::{pool, CatalogSource};
use crate::error::Result;
use crate::report::{Extremal, Failure, Tally, VerificationReport};

/// The C5 expansion with the tight weights for `omega`, checked to be
/// (P5, C4)-free with clique number `omega` and χ = ⌈(5ω-1)/4⌉.
fn check_tight_c5(omega: u32, tally: &mut Tally) -> Result<String> {
    let w = VertexWeights::from(tight_c5_weights(omega).to_vec());
    let h = Pattern::C5.graph().expansion(&w)?;
    tally.check();
    let bound = five_quarter_bound(omega);
    let (chi, om) = (chromatic_number(&h)?.0, clique_number(&h));
    if !GraphClass::P5C4.contains(&h) || om != omega || chi != bound {
        tally.fail(Failure::new(&h, format!("tight C5 weights {w:?}: ω = {om}, χ = {chi}, expected {omega} and {bound}")));
    }
    Ok(format!("C5 expanded by {:?}: ω = {om}, χ = {chi}, bound {bound}", w.as_slice()))
}

/// χ ≤ ⌈(5ω-1)/4⌉ on every (P5, C4)-free graph of the source, the per-ω
/// maxima, and the tight C5 expansions for ω = 1..=6.
pub fn verify_p5c4_bound(source: &CatalogSource) -> Result<VerificationReport> {
    let src = source.clone().with_class(GraphClass::P5C4);
    let (mut tally, ext) = src.fold(
        || (Tally::default(), Extremal::default()),
        |(mut t, mut e), g| {
            t.check();
            match chromatic_number(g) {
                Ok((chi, _)) => {
                    let omega = clique_number(g);
                    e.observe(omega, chi, g);
                    let bound = five_quarter_bound(omega);
                    if chi > bound {
                        t.fail(Failure::new(g, format!("χ = {chi} exceeds {bound} at ω = {omega}")));
                    }
                }
                Err(err) => t.fail(Failure::new(g, err.to_string())),
            }
            (t, e)
        },
        merge_pair,
    )?;
    let mut notes = Vec::new();
    for omega in ext.omegas() {
        let (max, bound) = (ext.max_chi(omega).unwrap_or(0), five_quarter_bound(omega));
        let state = if max == bound { "attained" } else { "not attained in this catalog" };
        notes.push(format!("ω = {omega}: catalog maximum χ = {max}, bound {bound} ({state})"));
    }
    for omega in 1..=6 {
        notes.push(check_tight_c5(omega, &mut tally)?);
    }
    Ok(VerificationReport::new("p5c4-bound", src.to_string(), tally, ext.rows()).with_notes(notes))
}

fn c5_weight_vectors(max_total: u32) -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    let mut q = [0u32; 5];
    fn rec(i: usize, left: u32, q: &mut [u32; 5], out: &mut Vec<[u32; 5]>) {
        if i == 5 {
            out.push(*q);
            return;
        }
        for w in 0..=left {
            q[i] = w;
            rec(i + 1, left - w, q, out);
        }
    }
    rec(0, max_total, &mut q, &mut out);
    out
}

/// The closed form `max(ω_q, ⌈q(C5)/2⌉)` against the exact solver (both
/// routes) for every weighting of C5 with total at most `max_total`, and the
/// tight weights for ω = 1..=6.
pub fn verify_c5_closed_form(max_total: u32) -> Result<VerificationReport> {
    let c5 = Pattern::C5.graph();
    let vectors = c5_weight_vectors(max_total);
    let (mut tally, ext) = pool().install(|| {
        vectors
            .par_iter()
            .fold(
                || (Tally::default(), Extremal::default()),
                |(mut t, mut e), q| {
                    t.check();
                    let w = VertexWeights::from(q.to_vec());
                    let closed = chi_weighted_c5_closed_form(*q);
                    match chromatic_number_weighted(c5, &w) {
                        Ok((chi, _)) => {
                            let omega = clique_number_weighted(c5, &w);
                            if chi != closed.chi || omega != closed.omega {
                                t.fail(Failure::weighted(c5, &w, format!(
                                    "closed form gives χ = {}, ω = {}; solver gives {chi}, {omega}",
                                    closed.chi, closed.omega
                                )));
                            }
                            if let Ok(h) = c5.expansion(&w) {
                                e.observe(omega, chi, &h);
                            }
                        }
                        Err(err) => t.fail(Failure::weighted(c5, &w, err.to_string())),
                    }
                    (t, e)
                },
            )
            .reduce(|| (Tally::default(), Extremal::default()), merge_pair)
    });
    let mut notes = vec![format!("{} weight vectors with total at most {max_total}", vectors.len())];
    for omega in 1..=6 {
        let q = tight_c5_weights(omega);
        let closed = chi_weighted_c5_closed_form(q);
        tally.check();
        if !closed.is_tight() || closed.omega != omega {
            tally.fail(Failure::weighted(c5, &VertexWeights::from(q.to_vec()), "tight weights miss the bound"));
        }
        notes.push(check_tight_c5(omega, &mut tally)?);
    }
    Ok(VerificationReport::new("c5-closed-form", format!("C5 weights, total <= {max_total}"), tally, ext.rows())
        .with_notes(notes))
}

/// Named tight instances: complete graphs and C5.
fn tight_name(g: &Graph) -> Option<String> {
    if g.is_complete_graph() {
        Some(format!("K{}", g.n()))
    } else if are_isomorphic(g, Pattern::C5.graph()) {
        Some("C5".into())
    } else {
        None
    }
}

/// χ ≤ ⌈(Δ + ω + 1)/2⌉ on every (P5, banner)-free graph of the source, with
/// the tight instances among complete graphs and C5 listed.
pub fn verify_reed_bound(source: &CatalogSource) -> Result<VerificationReport> {
    let src = source.clone().with_class(GraphClass::P5Banner);
    type Acc = (Tally, Extremal, BTreeMap<String, u64>, u64);
    let (tally, ext, named, other): Acc = src.fold(
        || (Tally::default(), Extremal::default(), BTreeMap::new(), 0),
        |(mut t, mut e, mut named, mut other), g| {
            t.check();
            match reed_check(g) {
                Ok(r) => {
                    e.observe(r.omega, r.chi, g);
                    if !r.holds() {
                        t.fail(Failure::new(g, format!(
                            "χ = {} exceeds ⌈(Δ + ω + 1)/2⌉ = {} (Δ = {}, ω = {})",
                            r.chi, r.bound, r.max_degree, r.omega
                        )));
                    } else if r.is_tight() {
                        match tight_name(g) {
                            Some(name) => *named.entry(name).or_insert(0) += 1,
                            None => other += 1,
                        }
                    }
                }
                Err(err) => t.fail(Failure::new(g, err.to_string())),
            }
            (t, e, named, other)
        },
        |(t1, e1, mut n1, o1), (t2, e2, n2, o2)| {
            for (k, v) in n2 {
                *n1.entry(k).or_insert(0) += v;
            }
            (t1.merge(t2), e1.merge(e2), n1, o1 + o2)
        },
    )?;
    let mut notes: Vec<String> = named
        .iter()
        .map(|(name, count)| format!("tight: {name} ({count} instance(s) in the source)"))
        .collect();
    notes.push(format!("tight instances that are neither complete nor C5: {other}"));
    Ok(VerificationReport::new("reed-bound", src.to_string(), tally, ext.rows()).with_notes(notes))
}

/// Random weighted graphs: χ_q by the direct search and χ of the expansion
/// must agree, as must ω_q and ω of the expansion.
pub fn verify_dual_oracle(seed: u64, pairs: usize, max_total: u32) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(Graph, VertexWeights)> = (0..pairs)
        .map(|_| {
            let n = rng.gen_range(1..=8usize);
            let g = crate::catalog::labeled_graph(n, rng.gen::<u64>() & ((1u64 << (n * (n - 1) / 2)) - 1));
            let total = rng.gen_range(0..=max_total);
            let mut q = vec![0u32; n];
            for _ in 0..total {
                q[rng.gen_range(0..n)] += 1;
            }
            (g, VertexWeights::from(q))
        })
        .collect();
    let (tally, ext) = pool().install(|| {
        instances
            .par_iter()
            .fold(
                || (Tally::default(), Extremal::default()),
                |(mut t, mut e), (g, q)| {
                    t.check();
                    let outcome = (|| -> chiforge_core::Result<()> {
                        let direct = chi_weighted_direct(g, q)?.0;
                        let expanded = chi_weighted_expansion(g, q)?.0;
                        let h = g.expansion(q)?;
                        let (om_q, om_h) = (clique_number_weighted(g, q), clique_number(&h));
                        if direct != expanded || om_q != om_h {
                            t.fail(Failure::weighted(g, q, format!(
                                "direct χ_q = {direct}, expansion χ = {expanded}; ω_q = {om_q}, expansion ω = {om_h}"
                            )));
                        }
                        e.observe(om_q, direct, g);
                        Ok(())
                    })();
                    if let Err(err) = outcome {
                        t.fail(Failure::weighted(g, q, err.to_string()));
                    }
                    (t, e)
                },
            )
            .reduce(|| (Tally::default(), Extremal::default()), merge_pair)
    });
    let source = format!("{pairs} random weighted graphs, n <= 8, total weight <= {max_total}");
    let note = format!("instances drawn from ChaCha8 seeded with {seed}");
    Ok(VerificationReport::new("dual-oracle", source, tally, ext.rows()).with_notes(vec![note]).with_seed(seed))
}
