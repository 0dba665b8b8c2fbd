//! Exact computations on finite groups given by multiplication tables, and
//! decision procedures for the Frobenius normalizer condition on primary
//! subgroups together with the structure results that depend on it.

pub mod arith;
pub mod budget;
pub mod charsub;
pub mod classifier;
pub mod context;
mod error;
pub mod group;
pub mod lattice;
pub mod sylow;

pub use budget::Budgets;
pub use context::GroupContext;
pub use error::{GroupError, Result};
pub use group::{Group, Permutation, QuotientResult, Subgroup};
