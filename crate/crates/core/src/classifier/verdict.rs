use serde::Serialize;
use thiserror::Error;

use super::predicates::{condition_all_nonsubnormal, maximal_nilpotent_subgroups, product_is_whole};
use crate::context::GroupContext;
use crate::error::GroupError;
use crate::group::Subgroup;
use crate::lattice;
use crate::sylow::SylowBasis;

/// Structure of a non-nilpotent group of type (b).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeBWitness {
    /// Number of normal Sylow subgroups.
    pub r: usize,
    /// Sylow basis with the normal members first, each block sorted by prime.
    pub basis: SylowBasis,
    /// Product of the non-normal basis members.
    pub e: Subgroup,
    pub f0: Subgroup,
    pub zinf: Subgroup,
    /// `N_G(E)`.
    pub carter: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ClassificationVerdict {
    TypeA,
    TypeB(TypeBWitness),
    /// A non-subnormal primary subgroup violating the condition.
    Fails { witness: Subgroup },
}

impl ClassificationVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassificationVerdict::TypeA => "TypeA",
            ClassificationVerdict::TypeB(_) => "TypeB",
            ClassificationVerdict::Fails { .. } => "Fails",
        }
    }
}

/// A type (b) sub-check that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("type (b) check `{check}` failed: {detail}")]
pub struct StructureViolation {
    pub check: &'static str,
    pub detail: String,
    pub witness: Option<Subgroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    /// The hypothesis held but a conclusion did not.
    #[error("theorem violation: {0}")]
    Violation(StructureViolation),
}

fn violation(check: &'static str, detail: impl Into<String>, witness: Option<Subgroup>) -> StructureViolation {
    StructureViolation {
        check,
        detail: detail.into(),
        witness,
    }
}

/// Checks conditions (i)-(iv) of a type (b) group on the Sylow basis found
/// by the search. The outer `Result` carries budget errors; the inner one
/// names the first sub-check that fails.
pub fn type_b_structure(ctx: &GroupContext) -> Result<Result<TypeBWitness, StructureViolation>, GroupError> {
    let g = ctx.group();
    if !ctx.is_soluble() {
        return Ok(Err(violation("soluble", "group is not soluble", None)));
    }
    let Some(basis) = ctx.sylow_basis()? else {
        return Ok(Err(violation("sylow_basis", "no Sylow basis found", None)));
    };

    let (normal, other): (Vec<_>, Vec<_>) = basis.members.iter().cloned().partition(|(_, s)| g.is_normal(s));
    let r = normal.len();
    let t = basis.members.len();
    if r < 1 || r >= t {
        return Ok(Err(violation("split_index", format!("need 1 <= r < t, got r={r}, t={t}"), None)));
    }
    let ordered = SylowBasis {
        members: normal.iter().chain(&other).cloned().collect(),
    };

    // (i)
    let seed: Vec<u32> = other.iter().flat_map(|(_, s)| g.generators(s)).collect();
    let e = g.generated_subgroup(&seed);
    let expected: usize = other.iter().map(|(_, s)| s.order()).product();
    if e.order() != expected {
        return Ok(Err(violation("E_product", "non-normal members do not multiply to a subgroup", Some(e))));
    }
    if !g.is_nilpotent_subgroup(&e) {
        return Ok(Err(violation("E_nilpotent", "E is not nilpotent", Some(e))));
    }

    // (ii)
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let fit = ctx.fitting();
    if let Some(bigger) = lat
        .subgroups()
        .iter()
        .enumerate()
        .find(|&(i, k)| nil[i] && fit.is_proper_subset(k))
        .map(|(_, k)| k.clone())
    {
        return Ok(Err(violation(
            "fitting_maximal_nilpotent",
            "F(G) lies in a larger nilpotent subgroup",
            Some(bigger),
        )));
    }
    let f0 = ctx.f0().clone();
    let zinf = ctx.hypercentre().clone();
    if g.join(&f0, &zinf) != *fit {
        return Ok(Err(violation("fitting_product", "F(G) != F0(G) Z∞(G)", Some(fit.clone()))));
    }

    // (iii)
    let carter = g.normalizer(&e);
    if !g.is_nilpotent_subgroup(&carter) || g.normalizer(&carter) != carter {
        return Ok(Err(violation("carter", "N_G(E) is not a Carter subgroup", Some(carter))));
    }

    // (iv)
    for v in maximal_nilpotent_subgroups(ctx)? {
        if product_is_whole(g, fit, &v) && lattice::normal_core(g, &v) != zinf {
            return Ok(Err(violation("core_equals_hypercentre", "V_G != Z∞(G) for a maximal nilpotent V with F(G)V = G", Some(v))));
        }
    }

    Ok(Ok(TypeBWitness {
        r,
        basis: ordered,
        e,
        f0,
        zinf,
        carter,
    }))
}

/// Type (a) when nilpotent; otherwise type (b) when every non-subnormal
/// primary subgroup satisfies the condition, with every structural
/// conclusion re-verified; otherwise `Fails` with the violating subgroup.
pub fn classify_type(ctx: &GroupContext) -> Result<ClassificationVerdict, ClassifyError> {
    if ctx.is_nilpotent() {
        return Ok(ClassificationVerdict::TypeA);
    }
    let cond = condition_all_nonsubnormal(ctx)?;
    if let Some(witness) = cond.witness {
        return Ok(ClassificationVerdict::Fails { witness });
    }
    match type_b_structure(ctx)? {
        Ok(w) => Ok(ClassificationVerdict::TypeB(w)),
        Err(v) => Err(ClassifyError::Violation(v)),
    }
}
