use std::collections::BTreeMap;

use chiforge_core::coloring::{chromatic_number, clique_number};
use chiforge_core::patterns::GraphClass;
use chiforge_core::Graph;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogSource;
use crate::error::Result;
use crate::recognize::{recognize_clique_expansion, ExpansionBase};
use crate::report::{Extremal, Failure, Tally, VerificationReport};

/// Classes whose colour-critical members have a known shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalClass {
    /// Critical members are 3K1-free.
    P5Banner,
    /// Critical members are 2K2-free.
    P5CoBanner,
    /// Critical members are (C5, 3K1)-free.
    OddHoleBanner,
    /// Critical members are complete or clique expansions of C5 or W5.
    P5C4,
}

impl CriticalClass {
    pub const ALL: [CriticalClass; 4] =
        [CriticalClass::P5Banner, CriticalClass::P5CoBanner, CriticalClass::OddHoleBanner, CriticalClass::P5C4];

    pub fn class(self) -> GraphClass {
        match self {
            CriticalClass::P5Banner => GraphClass::P5Banner,
            CriticalClass::P5CoBanner => GraphClass::P5CoBanner,
            CriticalClass::OddHoleBanner => GraphClass::OddHoleBanner,
            CriticalClass::P5C4 => GraphClass::P5C4,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            CriticalClass::P5Banner => "critical-p5-banner",
            CriticalClass::P5CoBanner => "critical-p5-cobanner",
            CriticalClass::OddHoleBanner => "critical-oddhole-banner",
            CriticalClass::P5C4 => "critical-p5c4",
        }
    }

    /// The shape of a critical member, or `None` if it has none of the
    /// predicted ones.
    fn shape(self, g: &Graph) -> Option<&'static str> {
        let free_of = |c: GraphClass, label| c.contains(g).then_some(label);
        match self {
            CriticalClass::P5Banner => free_of(GraphClass::ThreeK1, "3K1-free"),
            CriticalClass::P5CoBanner => free_of(GraphClass::TwoK2, "2K2-free"),
            CriticalClass::OddHoleBanner => free_of(GraphClass::C5ThreeK1, "(C5, 3K1)-free"),
            CriticalClass::P5C4 => {
                if g.is_complete_graph() {
                    Some("complete")
                } else {
                    match recognize_clique_expansion(g)? {
                        (ExpansionBase::C5, _) => Some("clique expansion of C5"),
                        (ExpansionBase::W5, _) => Some("clique expansion of W5"),
                    }
                }
            }
        }
    }
}

/// `Some(χ)` if deleting any vertex lowers χ. Critical graphs are connected
/// with minimum degree at least χ - 1, which rules out most graphs cheaply.
fn critical_chi(g: &Graph) -> chiforge_core::Result<Option<u32>> {
    if !g.is_connected() {
        return Ok(None);
    }
    let chi = chromatic_number(g)?.0;
    if g.vertices().iter().any(|u| (g.degree(u) as u32) + 1 < chi) {
        return Ok(None);
    }
    for u in g.vertices() {
        if chromatic_number(&g.remove_vertex(u)?)?.0 == chi {
            return Ok(None);
        }
    }
    Ok(Some(chi))
}

/// Every critical member of the class in the source has the predicted shape.
pub fn verify_critical_structure(class: CriticalClass, source: &CatalogSource) -> Result<VerificationReport> {
    let src = source.clone().with_class(class.class());
    type Acc = (Tally, Extremal, BTreeMap<&'static str, u64>, u64);
    let (tally, ext, shapes, members): Acc = src.fold(
        || (Tally::default(), Extremal::default(), BTreeMap::new(), 0),
        |(mut t, mut e, mut shapes, members), g| {
            match critical_chi(g) {
                Ok(Some(chi)) => {
                    t.check();
                    e.observe(clique_number(g), chi, g);
                    match class.shape(g) {
                        Some(s) => *shapes.entry(s).or_insert(0) += 1,
                        None => t.fail(Failure::new(g, format!("critical {} graph with χ = {chi} has none of the predicted shapes", class.class()))),
                    }
                }
                Ok(None) => {}
                Err(err) => t.fail(Failure::new(g, err.to_string())),
            }
            (t, e, shapes, members + 1)
        },
        |(t1, e1, mut s1, m1), (t2, e2, s2, m2)| {
            for (k, v) in s2 {
                *s1.entry(k).or_insert(0) += v;
            }
            (t1.merge(t2), e1.merge(e2), s1, m1 + m2)
        },
    )?;
    let mut notes = vec![format!("{members} class members scanned, {} critical", tally.checked)];
    notes.extend(shapes.iter().map(|(s, c)| format!("{s}: {c}")));
    Ok(VerificationReport::new(class.id(), src.to_string(), tally, ext.rows()).with_notes(notes))
}
