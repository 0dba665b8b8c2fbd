//! Reading groups from disk.

use std::path::{Path, PathBuf};

use fncheck_core::group::format;
use fncheck_core::{Group, GroupError};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Group {
        path: PathBuf,
        #[source]
        source: GroupError,
    },
}

impl LoadError {
    pub fn group_error(&self) -> Option<&GroupError> {
        match self {
            LoadError::Group { source, .. } => Some(source),
            LoadError::Io { .. } => None,
        }
    }
}

/// Reads a Cayley-table or permutation file and validates it. The group
/// is named after the file header.
pub fn load_group(path: impl AsRef<Path>, max_order: usize) -> Result<Group, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    format::parse_group(&text, max_order).map_err(|source| LoadError::Group {
        path: path.to_path_buf(),
        source,
    })
}
