//! Catalog, file loading, structure reports and claim sweeps for
//! `fncheck-core`.

pub mod analyze;
pub mod cache;
pub mod catalog;
pub mod load;
pub mod sweep;

/// Version string stamped into reports and cache keys.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
