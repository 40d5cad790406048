//! Sweeps over graph sources. Each returns a report; failures are recorded
//! in it rather than returned as errors.

mod bounds;
mod critical;
mod decomposition;
mod dichotomy;
mod reductions;
mod superadd;

pub use bounds::{verify_c5_closed_form, verify_dual_oracle, verify_p5c4_bound, verify_reed_bound};
pub use critical::{verify_critical_structure, CriticalClass};
pub use decomposition::{
    superadditive_closure, verify_decomposition, weight_grid, EXHAUSTIVE_GRID_MAX_VERTICES, RANDOM_GRID_MAX_WEIGHT,
    RANDOM_GRID_SIZE,
};
pub use dichotomy::verify_prime_dichotomy;
pub use reductions::{verify_reduction, ReductionPair};
pub use superadd::{has_spanning_complete_bipartite, verify_superadditivity, JOIN_CLASSES};

use crate::report::{Extremal, Tally};

pub(crate) fn merge_pair((t1, e1): (Tally, Extremal), (t2, e2): (Tally, Extremal)) -> (Tally, Extremal) {
    (t1.merge(t2), e1.merge(e2))
}
