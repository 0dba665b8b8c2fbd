//! Structure report for a single group.

use std::fmt::Write as _;

use serde::Serialize;

use fncheck_core::classifier::{
    self, ClassificationVerdict, ClassifyError, ConditionResult, StructureViolation,
};
use fncheck_core::sylow::{self, DispersionOrdering, SylowBasis};
use fncheck_core::{Budgets, GroupContext, GroupError, Subgroup};

/// A report field that may have been skipped for budget reasons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Field<T> {
    Value(T),
    Skipped { skipped: String },
}

impl<T> Field<T> {
    fn from_result(r: Result<T, GroupError>) -> Self {
        match r {
            Ok(v) => Field::Value(v),
            Err(e) => Field::Skipped { skipped: e.to_string() },
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            Field::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub elements: Vec<u32>,
}

impl From<&Subgroup> for SubgroupSummary {
    fn from(h: &Subgroup) -> Self {
        SubgroupSummary {
            order: h.order(),
            elements: h.elements().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub order: usize,
    pub cyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub all_nonnormal: Field<ConditionResult>,
    pub all_nonsubnormal: Field<ConditionResult>,
    pub semi_nilpotent: Field<ConditionResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum VerdictField {
    Verdict(ClassificationVerdict),
    Violation(StructureViolation),
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub name: String,
    pub order: usize,
    pub primes: Vec<(u64, u32)>,
    pub table_hash: String,
    pub soluble: bool,
    pub nilpotent: bool,
    pub fitting: SubgroupSummary,
    pub fitting_quotient: QuotientSummary,
    pub frattini: Field<SubgroupSummary>,
    pub hypercentre: SubgroupSummary,
    pub f0: SubgroupSummary,
    pub derived: SubgroupSummary,
    pub sylow_basis: Field<Option<SylowBasis>>,
    pub dispersion_ordering: Field<Option<DispersionOrdering>>,
    pub lattice_size: Field<usize>,
    pub carter_class: Field<Vec<SubgroupSummary>>,
    pub schmidt_count: Field<usize>,
    pub conditions: Conditions,
    pub verdict: VerdictField,
}

/// Computes the full structure report. Budget overruns mark the affected
/// fields as skipped; nothing else can fail.
pub fn analyze(ctx: &GroupContext) -> AnalyzeReport {
    let g = ctx.group();
    let fit = ctx.fitting();
    let quotient = g.quotient(fit).expect("the Fitting subgroup is normal").quotient;
    let verdict = match classifier::classify_type(ctx) {
        Ok(v) => VerdictField::Verdict(v),
        Err(ClassifyError::Violation(v)) => VerdictField::Violation(v),
        Err(ClassifyError::Group(e)) => VerdictField::Skipped { reason: e.to_string() },
    };
    AnalyzeReport {
        name: g.display_name(),
        order: g.order(),
        primes: g.primes().to_vec(),
        table_hash: g.table_hash(),
        soluble: ctx.is_soluble(),
        nilpotent: ctx.is_nilpotent(),
        fitting: fit.into(),
        fitting_quotient: QuotientSummary {
            order: quotient.order(),
            cyclic: quotient.is_cyclic(),
        },
        frattini: Field::from_result(ctx.frattini().map(|h| (&h).into())),
        hypercentre: ctx.hypercentre().into(),
        f0: ctx.f0().into(),
        derived: ctx.derived().into(),
        sylow_basis: Field::from_result(ctx.sylow_basis().map(|b| b.cloned())),
        dispersion_ordering: Field::from_result(
            ctx.normal_subgroups().map(|normals| sylow::dispersion_ordering_from(g, normals)),
        ),
        lattice_size: Field::from_result(ctx.lattice().map(|l| l.len())),
        carter_class: Field::from_result(
            classifier::carter_subgroups(ctx).map(|cs| cs.iter().map(SubgroupSummary::from).collect()),
        ),
        schmidt_count: Field::from_result(classifier::schmidt_subgroups(ctx).map(|s| s.len())),
        conditions: Conditions {
            all_nonnormal: Field::from_result(classifier::condition_all_nonnormal(ctx)),
            all_nonsubnormal: Field::from_result(classifier::condition_all_nonsubnormal(ctx)),
            semi_nilpotent: Field::from_result(classifier::is_semi_nilpotent(ctx)),
        },
        verdict,
    }
}

pub fn analyze_group(group: fncheck_core::Group, budgets: Budgets) -> AnalyzeReport {
    analyze(&GroupContext::new(group, budgets))
}

fn subgroup_line(s: &SubgroupSummary) -> String {
    format!("order {} {:?}", s.order, s.elements)
}

fn field_line<T>(f: &Field<T>, show: impl Fn(&T) -> String) -> String {
    match f {
        Field::Value(v) => show(v),
        Field::Skipped { skipped } => format!("skipped ({skipped})"),
    }
}

fn condition_line(c: &ConditionResult) -> String {
    match &c.witness {
        None => "holds".to_string(),
        Some(w) => format!("fails, witness order {} {:?}", w.order(), w.elements()),
    }
}

/// Aligned `key: value` rendering.
pub fn render_text(r: &AnalyzeReport) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("name", r.name.clone()),
        ("order", r.order.to_string()),
        (
            "primes",
            r.primes.iter().map(|(p, e)| format!("{p}^{e}")).collect::<Vec<_>>().join(" "),
        ),
        ("table hash", r.table_hash.clone()),
        ("soluble", r.soluble.to_string()),
        ("nilpotent", r.nilpotent.to_string()),
        ("fitting", subgroup_line(&r.fitting)),
        (
            "G/F(G)",
            format!("order {}, cyclic {}", r.fitting_quotient.order, r.fitting_quotient.cyclic),
        ),
        ("frattini", field_line(&r.frattini, subgroup_line)),
        ("hypercentre", subgroup_line(&r.hypercentre)),
        ("f0", subgroup_line(&r.f0)),
        ("derived", subgroup_line(&r.derived)),
        (
            "sylow basis",
            field_line(&r.sylow_basis, |b| match b {
                None => "none".into(),
                Some(b) if b.members.is_empty() => "empty".into(),
                Some(b) => b
                    .members
                    .iter()
                    .map(|(p, s)| format!("{p}:{}", s.order()))
                    .collect::<Vec<_>>()
                    .join(" "),
            }),
        ),
        (
            "dispersion",
            field_line(&r.dispersion_ordering, |d| match d {
                None => "none".into(),
                Some(d) => format!("{:?}", d.ordering),
            }),
        ),
        ("lattice size", field_line(&r.lattice_size, usize::to_string)),
        (
            "carter class",
            field_line(&r.carter_class, |c| match c.first() {
                None => "empty".into(),
                Some(first) => format!("{} subgroups of order {}", c.len(), first.order),
            }),
        ),
        ("schmidt count", field_line(&r.schmidt_count, usize::to_string)),
        ("all non-normal", field_line(&r.conditions.all_nonnormal, condition_line)),
        ("all non-subnormal", field_line(&r.conditions.all_nonsubnormal, condition_line)),
        ("semi-nilpotent", field_line(&r.conditions.semi_nilpotent, condition_line)),
    ];
    let verdict = match &r.verdict {
        VerdictField::Verdict(ClassificationVerdict::TypeA) => "TypeA".to_string(),
        VerdictField::Verdict(ClassificationVerdict::TypeB(w)) => format!(
            "TypeB r={} |E|={} |F0|={} |Zinf|={} |carter|={}",
            w.r,
            w.e.order(),
            w.f0.order(),
            w.zinf.order(),
            w.carter.order()
        ),
        VerdictField::Verdict(ClassificationVerdict::Fails { witness }) => {
            format!("Fails, witness order {} {:?}", witness.order(), witness.elements())
        }
        VerdictField::Violation(v) => format!("VIOLATION {v}"),
        VerdictField::Skipped { reason } => format!("skipped ({reason})"),
    };
    rows.push(("verdict", verdict));

    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}
