use serde::{Deserialize, Serialize};

/// Caps applied to every potentially exponential computation.
///
/// Exceeding a cap is always reported as [`crate::GroupError::BudgetExceeded`];
/// nothing is silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Budgets {
    /// Largest group order any constructor will produce.
    pub max_order: usize,
    /// Largest group order for which the full subgroup lattice is built.
    pub lattice_max_order: usize,
    /// Largest number of subgroups (or normal subgroups) enumerated.
    pub lattice_max_subgroups: usize,
    /// Node cap for the Sylow basis depth-first search.
    pub basis_max_nodes: usize,
    /// Groups up to this order get every `LEM_2_3` pair checked.
    pub inheritance_exhaustive_order: usize,
    /// Sample size per quantifier above the exhaustive order.
    pub inheritance_sample_cap: usize,
}

/// Seed for the deterministic subsampling of inheritance triples.
pub const INHERITANCE_SAMPLE_SEED: u64 = 0x5eed_2018;

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_order: 512,
            lattice_max_order: 360,
            lattice_max_subgroups: 100_000,
            basis_max_nodes: 1_000_000,
            inheritance_exhaustive_order: 60,
            inheritance_sample_cap: 4_000,
        }
    }
}

impl Budgets {
    /// Stable string identifying these budgets, used in cache keys.
    pub fn fingerprint(&self) -> String {
        format!(
            "ord{}-lat{}-sub{}-bas{}-inh{}-cap{}-seed{:x}",
            self.max_order,
            self.lattice_max_order,
            self.lattice_max_subgroups,
            self.basis_max_nodes,
            self.inheritance_exhaustive_order,
            self.inheritance_sample_cap,
            INHERITANCE_SAMPLE_SEED,
        )
    }
}
