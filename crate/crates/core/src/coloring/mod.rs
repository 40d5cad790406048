//! Exact invariants: weighted clique and independence numbers, chromatic
//! numbers (plain and weighted) with certificates, criticality,
//! weight-minimality, the weighted-C5 closed form and the Reed bound.

mod certificate;
mod clique;
mod exact;
mod weighted;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

pub use certificate::ColoringCertificate;
pub use clique::{
    clique_number, clique_number_weighted, independence_number, independence_number_weighted,
    max_weight_clique,
};
pub use exact::{
    chi, chromatic_number, chromatic_number_cover, chromatic_number_subset_dp,
    DEFAULT_NODE_BUDGET, SUBSET_DP_MAX_VERTICES,
};
pub use weighted::{
    chi_weighted, chi_weighted_direct, chi_weighted_expansion, chromatic_number_weighted,
    deletion_profile, is_critical, is_weight_minimal, minimalize, EXPANSION_CROSSCHECK_MAX,
    MAX_TOTAL_WEIGHT,
};

/// `⌈(5ω - 1) / 4⌉`, the optimal χ-bound for (P5, C4)-free graphs; 0 at ω = 0.
pub fn five_quarter_bound(omega: u32) -> u32 {
    if omega == 0 {
        0
    } else {
        (5 * omega - 1).div_ceil(4)
    }
}

/// Closed-form `χ_q` of a 5-cycle `c0 c1 c2 c3 c4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5ClosedForm {
    pub chi: u32,
    pub omega: u32,
    /// `⌈(5ω_q - 1) / 4⌉`; never below `chi`.
    pub bound: u32,
}

impl C5ClosedForm {
    pub fn is_tight(&self) -> bool {
        self.chi == self.bound
    }
}

/// `χ_q(C5) = max(ω_q, ⌈q(C5) / 2⌉)` for weights listed around the cycle.
pub fn chi_weighted_c5_closed_form(q: [u32; 5]) -> C5ClosedForm {
    let omega = (0..5).map(|i| q[i] + q[(i + 1) % 5]).max().unwrap();
    let total: u32 = q.iter().sum();
    let chi = omega.max(total.div_ceil(2));
    let bound = five_quarter_bound(omega);
    assert!(chi <= bound, "closed form {chi} exceeds ⌈(5ω-1)/4⌉ = {bound} for {q:?}");
    C5ClosedForm { chi, omega, bound }
}

/// Weights `(⌈ω/2⌉, ⌊ω/2⌋, ⌈ω/2⌉, ⌊ω/2⌋, ⌊ω/2⌋)` around C5, attaining
/// `⌈(5ω - 1) / 4⌉` with clique number `ω`.
pub fn tight_c5_weights(omega: u32) -> [u32; 5] {
    let hi = omega.div_ceil(2);
    let lo = omega / 2;
    [hi, lo, hi, lo, lo]
}

/// Both sides of `χ <= ⌈(Δ + ω + 1) / 2⌉`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReedCheck {
    pub chi: u32,
    pub omega: u32,
    pub max_degree: u32,
    pub bound: u32,
}

impl ReedCheck {
    pub fn holds(&self) -> bool {
        self.chi <= self.bound
    }

    pub fn is_tight(&self) -> bool {
        self.chi == self.bound
    }
}

pub fn reed_check(g: &Graph) -> Result<ReedCheck> {
    let chi = chromatic_number(g)?.0;
    let omega = clique_number(g);
    let max_degree = g.max_degree() as u32;
    Ok(ReedCheck { chi, omega, max_degree, bound: (max_degree + omega + 1).div_ceil(2) })
}

pub fn reed_bound_holds(g: &Graph) -> Result<bool> {
    Ok(reed_check(g)?.holds())
}
