use chiforge_core::coloring::{chromatic_number, clique_number};
use chiforge_core::patterns::GraphClass;
use chiforge_core::{parse_graph6, write_graph6, Error, Graph, VertexSet};

use super::merge_pair;
use crate::catalog::CatalogSource;
use crate::error::Result;
use crate::report::{Extremal, Failure, Tally, VerificationReport};

/// Classes for which joining extremal members is checked.
pub const JOIN_CLASSES: [GraphClass; 3] = [GraphClass::ThreeK1, GraphClass::TwoK2, GraphClass::C5ThreeK1];

/// Some split of the vertices into two nonempty sides has every edge
/// between the sides present.
pub fn has_spanning_complete_bipartite(f: &Graph) -> bool {
    let n = f.n();
    if n < 2 {
        return false;
    }
    // vertex 0 stays on side A, so each split is tried once
    (0u64..1 << (n - 1)).any(|bits| {
        let a = VertexSet(bits << 1 | 1);
        let b = f.vertices() - a;
        !b.is_empty() && a.iter().all(|u| b.is_subset(f.neighbors(u)))
    })
}

/// Joins the catalog-extremal members with clique numbers `omega1` and
/// `omega2` and checks the join stays in the class with χ and ω adding up.
pub fn verify_superadditivity(
    class: GraphClass,
    omega1: u32,
    omega2: u32,
    source: &CatalogSource,
) -> Result<VerificationReport> {
    if !JOIN_CLASSES.contains(&class) {
        return Err(Error::InvalidArgument(format!("join check is defined for 3K1, 2K2 and C5-3K1, not {class}")).into());
    }
    let src = source.clone().with_class(class);
    let (mut tally, ext) = src.fold(
        || (Tally::default(), Extremal::default()),
        |(mut t, mut e), g| {
            t.check();
            match chromatic_number(g) {
                Ok((chi, _)) => e.observe(clique_number(g), chi, g),
                Err(err) => t.fail(Failure::new(g, err.to_string())),
            }
            (t, e)
        },
        merge_pair,
    )?;

    let mut notes = Vec::new();
    for p in class.forbidden_patterns() {
        tally.check();
        if has_spanning_complete_bipartite(p.graph()) {
            tally.fail(Failure::new(p.graph(), format!("{p} has a spanning complete bipartite subgraph")));
        } else {
            notes.push(format!("{p} has no spanning complete bipartite subgraph"));
        }
    }

    let pick = |omega: u32| -> Result<Option<(Graph, u32)>> {
        match (ext.witness(omega), ext.max_chi(omega)) {
            (Some(w), Some(chi)) => Ok(Some((parse_graph6(w)?, chi))),
            _ => Ok(None),
        }
    };
    match (pick(omega1)?, pick(omega2)?) {
        (Some((g1, chi1)), Some((g2, chi2))) => {
            tally.check();
            let join = g1.join(&g2)?;
            let (chi, omega) = (chromatic_number(&join)?.0, clique_number(&join));
            notes.push(format!(
                "join of {} (ω = {omega1}, χ = {chi1}) and {} (ω = {omega2}, χ = {chi2}): {} vertices, ω = {omega}, χ = {chi}",
                write_graph6(&g1),
                write_graph6(&g2),
                join.n()
            ));
            if !class.contains(&join) {
                tally.fail(Failure::new(&join, format!("join leaves the {class}-free class")));
            }
            if chi != chi1 + chi2 || omega != omega1 + omega2 {
                tally.fail(Failure::new(&join, format!(
                    "join has χ = {chi}, ω = {omega}; expected {} and {}",
                    chi1 + chi2,
                    omega1 + omega2
                )));
            }
        }
        _ => {
            tally.check();
            tally.fail(Failure {
                graph6: String::new(),
                weights: None,
                detail: format!("source has no {class}-free member with clique number {omega1} or {omega2}"),
            });
        }
    }
    let id = format!("superadditivity-{}-{omega1}-{omega2}", class.name());
    Ok(VerificationReport::new(&id, src.to_string(), tally, ext.rows()).with_notes(notes))
}
