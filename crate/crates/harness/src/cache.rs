//! On-disk cache of verdict reports.
//!
//! Entries are JSON files named by a hash of (table hash, claim id, budget
//! fingerprint, tool version). Writes go through a temporary file in the
//! same directory followed by a rename, so concurrent writers never expose a
//! partial entry.

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use fncheck_core::classifier::{ClaimId, GroupId, VerdictReport};
use fncheck_core::Budgets;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "FNCHECK_CACHE_DIR";
const DEFAULT_DIR: &str = ".fncheck-cache";

#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: PathBuf,
}

pub fn cache_key(table_hash: &str, claim: ClaimId, budgets: &Budgets) -> String {
    let mut h = Sha256::new();
    for part in [table_hash, claim.as_str(), &budgets.fingerprint(), crate::TOOL_VERSION] {
        h.update(part.as_bytes());
        h.update([0]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    /// The directory named by the environment, or `.fncheck-cache` under
    /// the working directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => ResultCache::new(dir),
            _ => ResultCache::new(DEFAULT_DIR),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A cached report for this cell, relabelled with `group`. Unreadable
    /// or corrupt entries are removed with a warning and treated as misses.
    pub fn get(&self, group: &GroupId, claim: ClaimId, budgets: &Budgets) -> Option<VerdictReport> {
        let path = self.path_for(&cache_key(&group.hash, claim, budgets));
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("cache entry {} unreadable: {e}", path.display());
                return None;
            }
        };
        match serde_json::from_slice::<VerdictReport>(&bytes) {
            Ok(mut report) if report.claim_id == claim && report.group.hash == group.hash => {
                report.group = group.clone();
                Some(report)
            }
            Ok(_) => {
                log::warn!("cache entry {} belongs to another cell; discarding", path.display());
                let _ = std::fs::remove_file(&path);
                None
            }
            Err(e) => {
                log::warn!("corrupt cache entry {}: {e}; recomputing", path.display());
                let _ = std::fs::remove_file(&path);
                None
            }
        }
    }

    pub fn put(&self, report: &VerdictReport, budgets: &Budgets) -> std::io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&cache_key(&report.group.hash, report.claim_id, budgets));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, report)?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }
}
