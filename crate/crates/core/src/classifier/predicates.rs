use serde::Serialize;

use crate::arith;
use crate::context::GroupContext;
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::sylow;

/// Outcome of a universally quantified condition, with the first
/// counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub holds: bool,
    pub witness: Option<Subgroup>,
}

impl ConditionResult {
    fn from_witness(witness: Option<Subgroup>) -> Self {
        ConditionResult {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// `|N_G(P) : C_G(P)|` for a subgroup `P`.
pub fn normalizer_centralizer_index(g: &Group, p: &Subgroup) -> usize {
    g.normalizer(p).order() / g.centralizer(p).order()
}

/// Whether `N_G(P)/C_G(P)` is a `p`-group for the primary subgroup `P`.
pub fn frobenius_condition(g: &Group, p: &Subgroup) -> Result<bool> {
    if p.is_trivial() {
        return Ok(true);
    }
    let prime = arith::prime_power_base(p.order() as u64).ok_or(GroupError::NotPrimary(p.order()))?;
    Ok(arith::is_power_of(normalizer_centralizer_index(g, p) as u64, prime))
}

/// Scans nontrivial primary lattice members prime by prime (increasing),
/// and within a prime in lattice order, returning the first member that
/// passes `select` and violates the Frobenius normalizer condition.
fn first_violation(ctx: &GroupContext, select: impl Fn(usize) -> bool) -> Result<Option<Subgroup>> {
    let g = ctx.group();
    let lat = ctx.lattice()?;
    for p in g.prime_divisors() {
        for (i, h) in lat.primary_subgroups() {
            if !arith::is_power_of(h.order() as u64, p) || !select(i) {
                continue;
            }
            if !frobenius_condition(g, h)? {
                return Ok(Some(h.clone()));
            }
        }
    }
    Ok(None)
}

/// Every non-normal primary subgroup satisfies the Frobenius normalizer
/// condition.
pub fn condition_all_nonnormal(ctx: &GroupContext) -> Result<ConditionResult> {
    let lat = ctx.lattice()?;
    Ok(ConditionResult::from_witness(first_violation(ctx, |i| !lat.is_normal_at(i))?))
}

/// Every non-subnormal primary subgroup satisfies the Frobenius normalizer
/// condition.
pub fn condition_all_nonsubnormal(ctx: &GroupContext) -> Result<ConditionResult> {
    let flags = ctx.subnormal_flags()?;
    Ok(ConditionResult::from_witness(first_violation(ctx, |i| !flags[i])?))
}

/// For every Sylow `p`-subgroup `P`, every non-subnormal subgroup inside the
/// focal subgroup `G' ∩ P` satisfies the Frobenius normalizer condition.
pub fn condition_focal(ctx: &GroupContext, p: u64) -> Result<ConditionResult> {
    let g = ctx.group();
    let lat = ctx.lattice()?;
    let flags = ctx.subnormal_flags()?;
    for sylow_p in sylow::all_sylow(g, p) {
        let focal = ctx.derived().intersection(&sylow_p);
        for (i, h) in lat.subgroups().iter().enumerate() {
            if h.is_trivial() || flags[i] || !h.is_subset(&focal) {
                continue;
            }
            if !frobenius_condition(g, h)? {
                return Ok(ConditionResult::from_witness(Some(h.clone())));
            }
        }
    }
    Ok(ConditionResult::from_witness(None))
}

/// Non-nilpotent with every maximal subgroup nilpotent.
pub fn is_schmidt(ctx: &GroupContext) -> Result<bool> {
    let g = ctx.group();
    if ctx.is_nilpotent() {
        return Ok(false);
    }
    Ok(ctx
        .lattice()?
        .maximal_subgroups()
        .iter()
        .all(|m| g.is_nilpotent_subgroup(m)))
}

/// Lattice members that are minimal non-nilpotent, i.e. Schmidt groups.
pub fn schmidt_subgroups(ctx: &GroupContext) -> Result<Vec<Subgroup>> {
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let subs = lat.subgroups();
    let non_nilpotent: Vec<usize> = (0..subs.len()).filter(|&i| !nil[i]).collect();
    Ok(non_nilpotent
        .iter()
        .filter(|&&i| !non_nilpotent.iter().any(|&j| subs[j].is_proper_subset(&subs[i])))
        .map(|&i| subs[i].clone())
        .collect())
}

/// Self-normalizing nilpotent subgroups.
pub fn carter_subgroups(ctx: &GroupContext) -> Result<Vec<Subgroup>> {
    let g = ctx.group();
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    Ok(lat
        .subgroups()
        .iter()
        .enumerate()
        .filter(|&(i, h)| nil[i] && g.normalizer(h) == *h)
        .map(|(_, h)| h.clone())
        .collect())
}

pub fn maximal_nilpotent_subgroups(ctx: &GroupContext) -> Result<Vec<Subgroup>> {
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let subs = lat.subgroups();
    Ok((0..subs.len())
        .filter(|&i| nil[i] && !(i + 1..subs.len()).any(|j| nil[j] && subs[i].is_proper_subset(&subs[j])))
        .map(|i| subs[i].clone())
        .collect())
}

/// The normalizer of every non-normal nilpotent subgroup is nilpotent.
pub fn is_semi_nilpotent(ctx: &GroupContext) -> Result<ConditionResult> {
    let g = ctx.group();
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let witness = lat
        .subgroups()
        .iter()
        .enumerate()
        .find(|&(i, h)| nil[i] && !lat.is_normal_at(i) && !g.is_nilpotent_subgroup(&g.normalizer(h)))
        .map(|(_, h)| h.clone());
    Ok(ConditionResult::from_witness(witness))
}

/// Whether the product set `AB` is all of `G`.
pub fn product_is_whole(g: &Group, a: &Subgroup, b: &Subgroup) -> bool {
    a.order() * b.order() == g.order() * a.intersection(b).order()
}
