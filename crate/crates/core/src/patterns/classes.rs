use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{contains_induced, has_odd_hole, q_p4, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hereditary classes defined by forbidden induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphClass {
    /// (P5, banner)-free.
    P5Banner,
    /// (P5, co-banner)-free.
    P5CoBanner,
    /// (C5, C7, ..., banner)-free.
    OddHoleBanner,
    /// (P5, C4)-free.
    P5C4,
    ThreeK1,
    TwoK2,
    /// (C5, 3K1)-free.
    C5ThreeK1,
    /// Q{P4}-free.
    QP4,
}

impl GraphClass {
    pub const ALL: [GraphClass; 8] = [
        GraphClass::P5Banner,
        GraphClass::P5CoBanner,
        GraphClass::OddHoleBanner,
        GraphClass::P5C4,
        GraphClass::ThreeK1,
        GraphClass::TwoK2,
        GraphClass::C5ThreeK1,
        GraphClass::QP4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::P5Banner => "P5-banner",
            GraphClass::P5CoBanner => "P5-cobanner",
            GraphClass::OddHoleBanner => "oddhole-banner",
            GraphClass::P5C4 => "P5-C4",
            GraphClass::ThreeK1 => "3K1",
            GraphClass::TwoK2 => "2K2",
            GraphClass::C5ThreeK1 => "C5-3K1",
            GraphClass::QP4 => "QP4",
        }
    }

    /// Forbidden patterns, not counting the odd-hole family.
    pub fn forbidden_patterns(self) -> &'static [Pattern] {
        match self {
            GraphClass::P5Banner => &[Pattern::Banner, Pattern::P5],
            GraphClass::P5CoBanner => &[Pattern::CoBanner, Pattern::P5],
            GraphClass::OddHoleBanner => &[Pattern::Banner],
            GraphClass::P5C4 => &[Pattern::C4, Pattern::P5],
            GraphClass::ThreeK1 => &[Pattern::ThreeK1],
            GraphClass::TwoK2 => &[Pattern::TwoK2],
            GraphClass::C5ThreeK1 => &[Pattern::ThreeK1, Pattern::C5],
            GraphClass::QP4 => &[],
        }
    }

    pub fn forbids_odd_holes(self) -> bool {
        self == GraphClass::OddHoleBanner
    }

    pub fn contains(self, g: &Graph) -> bool {
        if self == GraphClass::QP4 {
            return !contains_induced(g, q_p4());
        }
        self.forbidden_patterns().iter().all(|p| !contains_induced(g, p.graph()))
            && !(self.forbids_odd_holes() && has_odd_hole(g))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn normalize(s: &str) -> String {
    let s = s.trim().to_ascii_lowercase();
    let s = s.strip_suffix("-free").unwrap_or(&s);
    s.chars().filter(|c| c.is_ascii_alphanumeric()).collect()
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        let key = key.replace("oddholes", "oddhole");
        GraphClass::ALL
            .iter()
            .copied()
            .find(|c| normalize(c.name()) == key)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Membership test by class name.
pub fn is_class_member(g: &Graph, class: &str) -> Result<bool> {
    Ok(class.parse::<GraphClass>()?.contains(g))
}
