//! Sweeps over catalogs of small graphs that check colouring bounds,
//! critical-graph structure and the decomposition machinery of
//! `chiforge-core`, producing JSON and CSV reports.

mod catalog;
mod error;
mod recognize;
mod report;
pub mod verify;

pub use catalog::{enumerate_labeled, labeled_graph, CatalogSource, SourceKind, LABELED_MAX_VERTICES};
pub use error::{HarnessError, Result};
pub use recognize::{recognize_clique_expansion, true_twin_classes, ExpansionBase};
pub use report::{Extremal, Failure, TableRow, Tally, VerificationReport, MAX_RECORDED_FAILURES};
