//! Per-group memo of the expensive derived objects.
//!
//! A [`GroupContext`] is shared (behind an `Arc`) by every claim checked on
//! the same group; each object is computed at most once, on first use.

use std::sync::OnceLock;

use crate::budget::Budgets;
use crate::charsub;
use crate::error::Result;
use crate::group::{Group, Subgroup};
use crate::lattice::{self, SubgroupLattice};
use crate::sylow::{self, SylowBasis};

pub struct GroupContext {
    group: Group,
    budgets: Budgets,
    lattice: OnceLock<Result<SubgroupLattice>>,
    normals: OnceLock<Result<Vec<Subgroup>>>,
    subnormal: OnceLock<Result<Vec<bool>>>,
    nilpotent_members: OnceLock<Result<Vec<bool>>>,
    basis: OnceLock<Result<Option<SylowBasis>>>,
    fitting: OnceLock<Subgroup>,
    hypercentre: OnceLock<Subgroup>,
    derived: OnceLock<Subgroup>,
    f0: OnceLock<Subgroup>,
    nilpotent: OnceLock<bool>,
    soluble: OnceLock<bool>,
}

impl GroupContext {
    pub fn new(group: Group, budgets: Budgets) -> Self {
        GroupContext {
            group,
            budgets,
            lattice: OnceLock::new(),
            normals: OnceLock::new(),
            subnormal: OnceLock::new(),
            nilpotent_members: OnceLock::new(),
            basis: OnceLock::new(),
            fitting: OnceLock::new(),
            hypercentre: OnceLock::new(),
            derived: OnceLock::new(),
            f0: OnceLock::new(),
            nilpotent: OnceLock::new(),
            soluble: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn budgets(&self) -> &Budgets {
        &self.budgets
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice
            .get_or_init(|| lattice::all_subgroups(&self.group, &self.budgets))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Whether the lattice has been built (successfully or not).
    pub fn lattice_built(&self) -> bool {
        self.lattice.get().is_some()
    }

    /// Normal subgroups, sorted by `(order, elements)`.
    pub fn normal_subgroups(&self) -> Result<&[Subgroup]> {
        self.normals
            .get_or_init(|| lattice::normal_subgroups(&self.group, &self.budgets))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Subnormality flag for every lattice member, by lattice index.
    pub fn subnormal_flags(&self) -> Result<&[bool]> {
        self.subnormal
            .get_or_init(|| {
                let lat = self.lattice()?;
                Ok(lat
                    .subgroups()
                    .iter()
                    .enumerate()
                    .map(|(i, h)| lat.is_normal_at(i) || lattice::is_subnormal(&self.group, h))
                    .collect())
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Nilpotency flag for every lattice member, by lattice index.
    pub fn nilpotent_flags(&self) -> Result<&[bool]> {
        self.nilpotent_members
            .get_or_init(|| {
                let lat = self.lattice()?;
                Ok(lat
                    .subgroups()
                    .iter()
                    .map(|h| self.group.is_nilpotent_subgroup(h))
                    .collect())
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn sylow_basis(&self) -> Result<Option<&SylowBasis>> {
        self.basis
            .get_or_init(|| sylow::sylow_basis(&self.group, &self.budgets))
            .as_ref()
            .map(Option::as_ref)
            .map_err(Clone::clone)
    }

    pub fn fitting(&self) -> &Subgroup {
        self.fitting.get_or_init(|| charsub::fitting(&self.group))
    }

    pub fn hypercentre(&self) -> &Subgroup {
        self.hypercentre.get_or_init(|| charsub::hypercentre(&self.group))
    }

    pub fn derived(&self) -> &Subgroup {
        self.derived.get_or_init(|| charsub::derived_subgroup(&self.group))
    }

    pub fn f0(&self) -> &Subgroup {
        self.f0.get_or_init(|| charsub::f0(&self.group))
    }

    pub fn is_nilpotent(&self) -> bool {
        *self.nilpotent.get_or_init(|| sylow::is_nilpotent(&self.group))
    }

    pub fn is_soluble(&self) -> bool {
        *self.soluble.get_or_init(|| sylow::is_soluble(&self.group))
    }

    pub fn frattini(&self) -> Result<Subgroup> {
        Ok(charsub::frattini(&self.group, self.lattice()?))
    }
}
