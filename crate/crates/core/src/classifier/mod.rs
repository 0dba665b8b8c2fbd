//! The Frobenius normalizer condition and the structure theorems built on
//! it: predicates, the type (a)/(b) classifier, and the claim catalog.

pub mod claims;
mod predicates;
mod verdict;

pub use claims::{check_claim, ClaimId, GroupId, VerdictReport, Witness};
pub use predicates::{
    carter_subgroups, condition_all_nonnormal, condition_all_nonsubnormal, condition_focal, frobenius_condition,
    is_schmidt, is_semi_nilpotent, maximal_nilpotent_subgroups, normalizer_centralizer_index, product_is_whole,
    schmidt_subgroups, ConditionResult,
};
pub use verdict::{classify_type, type_b_structure, ClassificationVerdict, ClassifyError, StructureViolation, TypeBWitness};
