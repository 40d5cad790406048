use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, HarnessError>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] chiforge_core::Error),

    #[error("{path}:{line}: {source}")]
    Catalog { path: PathBuf, line: usize, source: chiforge_core::Error },

    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("cannot encode report: {0}")]
    Encode(String),
}
