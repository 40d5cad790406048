//! Modules, homogeneous sets, clique-separators of modules, and the
//! decomposition of weighted Q{P4}-free graphs into joined parts with prime
//! quotients.

mod modules;
mod qp4;
mod separator;
mod trichotomy;

pub use modules::{
    is_homogeneous_set, is_module, is_prime, maximal_homogeneous_sets, module_closure,
    HomogeneousSets, ModuleSet,
};
pub use qp4::{decompose_qp4, Decomposition, DecompositionPart};
pub use separator::{
    find_clique_separator_of_modules, CliqueSeparatorOfModules, SEPARATOR_SEARCH_MAX_VERTICES,
};
pub use trichotomy::{module_trichotomy, Trichotomy};

#[cfg(test)]
mod tests;
