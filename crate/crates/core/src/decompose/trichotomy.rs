use serde::{Deserialize, Serialize};

use super::modules::is_module;
use super::separator::CliqueSeparatorOfModules;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{build_qf, contains_induced, find_induced};

/// Which alternative holds for a module `M` of a connected Q{F}-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Trichotomy {
    /// `G[M]` has no induced `F`.
    FFree,
    /// `N²(M)` is empty: everything outside `M` is a neighbour of `M`.
    EmptyShell,
    /// `N(M)` is a clique-separator of modules.
    Separator(CliqueSeparatorOfModules),
}

/// Classifies module `m`, testing F-freeness, then the empty second shell,
/// then the separator. An error means the statement failed on this input.
pub fn module_trichotomy(g: &Graph, f: &Graph, m: VertexSet) -> Result<Trichotomy> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_module(g, m) {
        return Err(Error::InvalidArgument(format!("{m} is not a module")));
    }
    let qf = build_qf(f)?;
    if let Some(w) = find_induced(g, &qf) {
        return Err(Error::ForbiddenSubgraph { pattern: "Q{F}".into(), witness: w.set() });
    }

    if !contains_induced(&g.induced(m)?, f) {
        return Ok(Trichotomy::FFree);
    }
    if g.neighborhood_shell(m, 2)?.is_empty() {
        return Ok(Trichotomy::EmptyShell);
    }
    let nm = g.neighbors_of_set(m);
    match CliqueSeparatorOfModules::from_separator(g, nm) {
        Some(sep) => Ok(Trichotomy::Separator(sep)),
        None => Err(Error::Invariant(format!(
            "module {m}: contains F, has a second shell, and N(M) = {nm} is no clique-separator of modules"
        ))),
    }
}
