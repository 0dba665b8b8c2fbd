//! Decision procedures for every checked statement.
//!
//! Each claim is an implication `hypothesis => conclusion` evaluated on one
//! group. When the hypothesis does not hold the claim passes vacuously and
//! the report says so, with the object that refuted the hypothesis.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::predicates::*;
use super::verdict::{classify_type, type_b_structure, ClassificationVerdict, ClassifyError};
use crate::arith;
use crate::budget::INHERITANCE_SAMPLE_SEED;
use crate::charsub;
use crate::context::GroupContext;
use crate::error::Result;
use crate::group::{Group, Subgroup};
use crate::lattice;
use crate::sylow;

macro_rules! claim_ids {
    ($($variant:ident => $s:literal,)*) => {
        /// Stable identifiers of the checked statements.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ClaimId {
            $(#[serde(rename = $s)] $variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $s,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($s => Ok(ClaimId::$variant),)*
                    other => Err(format!("unknown claim id `{other}`")),
                }
            }
        }
    };
}

claim_ids! {
    FrobeniusPNilpotent => "FROBENIUS_PNILPOTENT",
    Thm13 => "THM_1_3",
    Thm14Forward => "THM_1_4_FORWARD",
    Thm14Converse => "THM_1_4_CONVERSE",
    Cor15 => "COR_1_5",
    Cor16 => "COR_1_6",
    Cor17 => "COR_1_7",
    Lem21 => "LEM_2_1",
    Lem22 => "LEM_2_2",
    Lem23 => "LEM_2_3",
    Lem24 => "LEM_2_4",
    Prop25 => "PROP_2_5",
    Lem261 => "LEM_2_6_1",
    Lem262 => "LEM_2_6_2",
    Lem263 => "LEM_2_6_3",
    Lem27 => "LEM_2_7",
    Prop28A => "PROP_2_8_A",
    Prop28B => "PROP_2_8_B",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifies a group in reports: display name, order and table hash.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupId {
    pub name: String,
    pub order: usize,
    pub hash: String,
}

impl GroupId {
    pub fn of(g: &Group) -> Self {
        GroupId {
            name: g.display_name(),
            order: g.order(),
            hash: g.table_hash(),
        }
    }
}

/// A labelled element set attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub elements: Vec<u32>,
}

impl Witness {
    pub fn new(label: impl Into<String>, h: &Subgroup) -> Self {
        Witness {
            label: label.into(),
            elements: h.elements().to_vec(),
        }
    }

    pub fn note(label: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            elements: Vec::new(),
        }
    }
}

/// Result of checking one claim on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub claim_id: ClaimId,
    pub group: GroupId,
    pub passed: bool,
    /// The hypothesis did not hold, so the claim passed without being
    /// exercised.
    pub vacuous: bool,
    pub witnesses: Vec<Witness>,
    pub skipped: Option<String>,
    pub elapsed_us: u64,
}

impl VerdictReport {
    pub fn exercised(&self) -> bool {
        self.passed && !self.vacuous && self.skipped.is_none()
    }
}

struct Outcome {
    passed: bool,
    vacuous: bool,
    witnesses: Vec<Witness>,
}

impl Outcome {
    fn pass(witnesses: Vec<Witness>) -> Self {
        Outcome {
            passed: true,
            vacuous: false,
            witnesses,
        }
    }

    fn fail(witnesses: Vec<Witness>) -> Self {
        debug_assert!(!witnesses.is_empty());
        Outcome {
            passed: false,
            vacuous: false,
            witnesses,
        }
    }

    fn vacuous(reason: &str, witness: Option<&Subgroup>) -> Self {
        let label = format!("vacuous: {reason}");
        let w = match witness {
            Some(h) => Witness::new(label, h),
            None => Witness::note(label),
        };
        Outcome {
            passed: true,
            vacuous: true,
            witnesses: vec![w],
        }
    }
}

/// Runs one claim. Budget overruns become a skipped report; they never
/// count as a failure.
pub fn check_claim(ctx: &GroupContext, claim: ClaimId) -> VerdictReport {
    let start = Instant::now();
    let result = match claim {
        ClaimId::FrobeniusPNilpotent => frobenius_pnilpotent(ctx),
        ClaimId::Thm13 => thm_1_3(ctx),
        ClaimId::Thm14Forward => thm_1_4_forward(ctx),
        ClaimId::Thm14Converse => thm_1_4_converse(ctx),
        ClaimId::Cor15 => cor_1_5(ctx),
        ClaimId::Cor16 => cor_1_6(ctx),
        ClaimId::Cor17 => cor_1_7(ctx),
        ClaimId::Lem21 => lem_2_1(ctx),
        ClaimId::Lem22 => lem_2_2(ctx),
        ClaimId::Lem23 => lem_2_3(ctx),
        ClaimId::Lem24 => lem_2_4(ctx),
        ClaimId::Prop25 => prop_2_5(ctx),
        ClaimId::Lem261 => lem_2_6_1(ctx),
        ClaimId::Lem262 => lem_2_6_2(ctx),
        ClaimId::Lem263 => lem_2_6_3(ctx),
        ClaimId::Lem27 => lem_2_7(ctx),
        ClaimId::Prop28A => prop_2_8_a(ctx),
        ClaimId::Prop28B => prop_2_8_b(ctx),
    };
    let (passed, vacuous, witnesses, skipped) = match result {
        Ok(o) => (o.passed, o.vacuous, o.witnesses, None),
        Err(e) => {
            let reason = e.to_string();
            (false, false, vec![Witness::note(format!("skipped: {reason}"))], Some(reason))
        }
    };
    VerdictReport {
        claim_id: claim,
        group: GroupId::of(ctx.group()),
        passed,
        vacuous,
        witnesses,
        skipped,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn is_nilpotent_group(g: &Group) -> bool {
    sylow::is_nilpotent(g)
}

/// `G/N` is cyclic.
fn quotient_is_cyclic(g: &Group, n: &Subgroup) -> Result<bool> {
    Ok(g.quotient(n)?.quotient.is_cyclic())
}

fn frobenius_pnilpotent(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let normals = ctx.normal_subgroups()?;
    let lat = ctx.lattice()?;
    let mut notes = Vec::new();
    for p in g.prime_divisors() {
        let p_nilpotent = sylow::is_p_nilpotent_from(g, normals, p);
        let mut violation = None;
        for (_, h) in lat.primary_subgroups() {
            if arith::is_power_of(h.order() as u64, p) && !frobenius_condition(g, h)? {
                violation = Some(h.clone());
                break;
            }
        }
        if p_nilpotent != violation.is_none() {
            let label = format!("p={p}: p-nilpotent={p_nilpotent} but normalizer-condition test={}", violation.is_none());
            let w = match &violation {
                Some(h) => Witness::new(label, h),
                None => Witness::note(label),
            };
            return Ok(Outcome::fail(vec![w]));
        }
        notes.push(Witness::note(format!("p={p}: p-nilpotent={p_nilpotent}")));
    }
    Ok(Outcome::pass(notes))
}

fn thm_1_3(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let cond = condition_all_nonnormal(ctx)?;
    if let Some(w) = &cond.witness {
        return Ok(Outcome::vacuous("non-normal primary subgroup violates the Frobenius normalizer condition", Some(w)));
    }
    let fit = ctx.fitting();
    if !quotient_is_cyclic(g, fit)? {
        return Ok(Outcome::fail(vec![Witness::new("G/F(G) is not cyclic; F(G)", fit)]));
    }
    let lat = ctx.lattice()?;
    let mut checked = 0;
    let mut abstract_form = 0;
    for u in maximal_nilpotent_subgroups(ctx)? {
        if !product_is_whole(g, fit, &u) {
            continue;
        }
        checked += 1;
        if g.normalizer(&u) != u {
            return Ok(Outcome::fail(vec![Witness::new(
                "maximal nilpotent U with F(G)U = G is not self-normalizing",
                &u,
            )]));
        }
        if !lat.index_of(&u).is_some_and(|i| lat.is_normal_at(i)) {
            abstract_form += 1;
        }
    }
    Ok(Outcome::pass(vec![
        Witness::new("F(G)", fit),
        Witness::note(format!("G/F(G) cyclic; {checked} maximal nilpotent supplements are Carter")),
        Witness::note(format!("auxiliary: {abstract_form} non-normal maximal nilpotent supplements are Carter")),
    ]))
}

fn verdict_witnesses(verdict: &ClassificationVerdict) -> Vec<Witness> {
    match verdict {
        ClassificationVerdict::TypeA => vec![Witness::note("type (a): nilpotent")],
        ClassificationVerdict::TypeB(w) => vec![
            Witness::note(format!("type (b): r={}", w.r)),
            Witness::new("E", &w.e),
            Witness::new("F0", &w.f0),
            Witness::new("Zinf", &w.zinf),
            Witness::new("Carter N_G(E)", &w.carter),
        ],
        ClassificationVerdict::Fails { witness } => vec![Witness::new("fails", witness)],
    }
}

fn thm_1_4_forward(ctx: &GroupContext) -> Result<Outcome> {
    let cond = condition_all_nonsubnormal(ctx)?;
    if let Some(w) = &cond.witness {
        return Ok(Outcome::vacuous("non-subnormal primary subgroup violates the Frobenius normalizer condition", Some(w)));
    }
    match classify_type(ctx) {
        Ok(v @ (ClassificationVerdict::TypeA | ClassificationVerdict::TypeB(_))) => Ok(Outcome::pass(verdict_witnesses(&v))),
        Ok(v) => Ok(Outcome::fail(verdict_witnesses(&v))),
        Err(ClassifyError::Group(e)) => Err(e),
        Err(ClassifyError::Violation(v)) => Ok(Outcome::fail(vec![violation_witness(&v)])),
    }
}

fn violation_witness(v: &super::verdict::StructureViolation) -> Witness {
    let label = format!("{}: {}", v.check, v.detail);
    match &v.witness {
        Some(h) => Witness::new(label, h),
        None => Witness::note(label),
    }
}

fn thm_1_4_converse(ctx: &GroupContext) -> Result<Outcome> {
    let kind = if ctx.is_nilpotent() {
        "type (a)".to_string()
    } else {
        match type_b_structure(ctx)? {
            Ok(w) => format!("type (b) with r={}", w.r),
            Err(v) => {
                let reason = format!("not of type (a) or (b): {} ({})", v.check, v.detail);
                return Ok(Outcome::vacuous(&reason, v.witness.as_ref()));
            }
        }
    };
    let cond = condition_all_nonsubnormal(ctx)?;
    match &cond.witness {
        None => Ok(Outcome::pass(vec![Witness::note(kind)])),
        Some(w) => Ok(Outcome::fail(vec![Witness::new(
            format!("{kind} group with non-subnormal primary subgroup violating the condition"),
            w,
        )])),
    }
}

fn semi_nilpotent_hypothesis(ctx: &GroupContext) -> Result<Option<Outcome>> {
    let semi = is_semi_nilpotent(ctx)?;
    Ok(semi.witness.as_ref().map(|w| {
        Outcome::vacuous("not semi-nilpotent: non-normal nilpotent subgroup with non-nilpotent normalizer", Some(w))
    }))
}

fn cor_1_5(ctx: &GroupContext) -> Result<Outcome> {
    if let Some(v) = semi_nilpotent_hypothesis(ctx)? {
        return Ok(v);
    }
    let g = ctx.group();
    let f0 = ctx.f0();
    let q = g.quotient(f0)?;
    if is_nilpotent_group(&q.quotient) {
        Ok(Outcome::pass(vec![Witness::new("F0(G); G/F0(G) nilpotent", f0)]))
    } else {
        Ok(Outcome::fail(vec![Witness::new("G/F0(G) not nilpotent; F0(G)", f0)]))
    }
}

fn cor_1_6(ctx: &GroupContext) -> Result<Outcome> {
    if let Some(v) = semi_nilpotent_hypothesis(ctx)? {
        return Ok(v);
    }
    let g = ctx.group();
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let fit = ctx.fitting();
    if let Some((_, k)) = lat
        .subgroups()
        .iter()
        .enumerate()
        .find(|&(i, k)| nil[i] && fit.is_proper_subset(k))
    {
        return Ok(Outcome::fail(vec![Witness::new("nilpotent subgroup properly containing F(G)", k)]));
    }
    let zinf = ctx.hypercentre();
    for u in maximal_nilpotent_subgroups(ctx)? {
        if !g.is_normal(&u) && lattice::normal_core(g, &u) != *zinf {
            return Ok(Outcome::fail(vec![Witness::new("non-normal maximal nilpotent U with U_G != Z∞(G)", &u)]));
        }
    }
    Ok(Outcome::pass(vec![Witness::new("F(G)", fit), Witness::new("Zinf", zinf)]))
}

fn cor_1_7(ctx: &GroupContext) -> Result<Outcome> {
    if let Some(v) = semi_nilpotent_hypothesis(ctx)? {
        return Ok(v);
    }
    let fit = ctx.fitting();
    if quotient_is_cyclic(ctx.group(), fit)? {
        Ok(Outcome::pass(vec![Witness::new("F(G); G/F(G) cyclic", fit)]))
    } else {
        Ok(Outcome::fail(vec![Witness::new("G/F(G) not cyclic; F(G)", fit)]))
    }
}

/// `S = P ⋊ Q` with `P = S'` a Sylow subgroup and exactly two primes.
fn has_schmidt_shape(g: &Group, s: &Subgroup) -> bool {
    let (sg, _) = g.subgroup_as_group(s);
    let primes = sg.prime_divisors();
    if primes.len() != 2 {
        return false;
    }
    let d = charsub::derived_subgroup(&sg);
    if d.is_trivial() || !sylow::is_sylow(&sg, &d) {
        return false;
    }
    let p = arith::prime_power_base(d.order() as u64).unwrap();
    let q = primes.into_iter().find(|&x| x != p).unwrap();
    let complement = sylow::sylow_subgroup(&sg, q);
    d.intersection(&complement).is_trivial() && d.order() * complement.order() == sg.order()
}

fn lem_2_1(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let schmidt = schmidt_subgroups(ctx)?;
    if schmidt.is_empty() {
        return Ok(Outcome::vacuous("no Schmidt subgroups", None));
    }
    for s in &schmidt {
        if !has_schmidt_shape(g, s) {
            return Ok(Outcome::fail(vec![Witness::new("Schmidt subgroup without P ⋊ Q shape", s)]));
        }
    }
    Ok(Outcome::pass(vec![Witness::note(format!("{} Schmidt subgroups checked", schmidt.len()))]))
}

fn lem_2_2(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    if !ctx.is_soluble() {
        return Ok(Outcome::vacuous("not soluble", None));
    }
    let Some(basis) = ctx.sylow_basis()?.cloned() else {
        return Ok(Outcome::fail(vec![Witness::note("soluble group without a Sylow basis")]));
    };
    for (p, s) in &basis.members {
        let n = g.normalizer(s);
        let (ng, _) = g.subgroup_as_group(&n);
        if !sylow::is_p_decomposable(&ng, *p, ctx.budgets())? {
            return Ok(Outcome::vacuous(&format!("N_G(P) is not {p}-decomposable"), Some(&n)));
        }
    }
    if ctx.is_nilpotent() {
        Ok(Outcome::pass(vec![Witness::note("all basis normalizers decomposable; nilpotent")]))
    } else {
        Ok(Outcome::fail(vec![Witness::note("all basis normalizers decomposable but G is not nilpotent")]))
    }
}

/// Deterministic subsample of `0..total` of size at most `cap`, in
/// increasing order.
fn sample_indices(total: usize, cap: usize, exhaustive: bool) -> Vec<usize> {
    if exhaustive || total <= cap {
        return (0..total).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(INHERITANCE_SAMPLE_SEED);
    let mut picked = rand::seq::index::sample(&mut rng, total, cap).into_vec();
    picked.sort_unstable();
    picked
}

fn lem_2_3(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let budgets = ctx.budgets();
    let lat = ctx.lattice()?;
    let subs = lat.subgroups();

    // p-subgroups H with N_G(H)/C_G(H) a p-group.
    let mut hs = Vec::new();
    for (i, h) in lat.primary_subgroups() {
        if !h.is_trivial() && frobenius_condition(g, h)? {
            let p = arith::prime_power_base(h.order() as u64).unwrap();
            hs.push((i, p, g.normalizer(h), g.centralizer(h)));
        }
    }
    if hs.is_empty() {
        return Ok(Outcome::vacuous("no p-subgroup satisfies the Frobenius normalizer condition", None));
    }

    let soluble_normals: Vec<Subgroup> = ctx
        .normal_subgroups()?
        .iter()
        .filter(|n| sylow::is_soluble(&g.subgroup_as_group(n).0))
        .cloned()
        .collect();

    let mut hn_pairs = Vec::new();
    for (k, (i, _, _, _)) in hs.iter().enumerate() {
        let h = &subs[*i];
        for (j, n) in soluble_normals.iter().enumerate() {
            if n.is_subset(h) || arith::gcd(n.order() as u64, h.order() as u64) == 1 {
                hn_pairs.push((k, j));
            }
        }
    }
    let mut he_pairs = Vec::new();
    for (k, (i, _, _, _)) in hs.iter().enumerate() {
        for (e_idx, e) in subs.iter().enumerate() {
            if subs[*i].is_subset(e) {
                he_pairs.push((k, e_idx));
            }
        }
    }

    let exhaustive = g.order() <= budgets.inheritance_exhaustive_order;
    let cap = budgets.inheritance_sample_cap;
    let hn_pick = sample_indices(hn_pairs.len(), cap, exhaustive);
    let he_pick = sample_indices(he_pairs.len(), cap, exhaustive);

    let mut quotients: Vec<Option<crate::group::QuotientResult>> = vec![None; soluble_normals.len()];
    for &idx in &hn_pick {
        let (k, j) = hn_pairs[idx];
        let (i, p, _, _) = &hs[k];
        let q = match &quotients[j] {
            Some(q) => q,
            None => quotients[j].insert(g.quotient(&soluble_normals[j])?),
        };
        let image = q.image(&subs[*i]);
        let idx_q = normalizer_centralizer_index(&q.quotient, &image);
        if !arith::is_power_of(idx_q as u64, *p) {
            return Ok(Outcome::fail(vec![
                Witness::new("H", &subs[*i]),
                Witness::new("N: N_{G/N}(HN/N)/C_{G/N}(HN/N) is not a p-group", &soluble_normals[j]),
            ]));
        }
    }
    for &idx in &he_pick {
        let (k, e_idx) = he_pairs[idx];
        let (i, p, n, c) = &hs[k];
        let e = &subs[e_idx];
        let index = n.intersection(e).order() / c.intersection(e).order();
        if !arith::is_power_of(index as u64, *p) {
            return Ok(Outcome::fail(vec![
                Witness::new("H", &subs[*i]),
                Witness::new("E: N_E(H)/C_E(H) is not a p-group", e),
            ]));
        }
    }
    let mode = if exhaustive {
        "exhaustive".to_string()
    } else {
        format!("sampled: cap={cap}, seed={INHERITANCE_SAMPLE_SEED:#x}")
    };
    Ok(Outcome::pass(vec![Witness::note(format!(
        "{mode}; (H,N) pairs {}/{}, (H,E) pairs {}/{}",
        hn_pick.len(),
        hn_pairs.len(),
        he_pick.len(),
        he_pairs.len()
    ))]))
}

fn lem_2_4(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    let subn = ctx.subnormal_flags()?;
    let normals = ctx.normal_subgroups()?;
    let fit = ctx.fitting();
    let primes = g.prime_divisors();
    let cores: Vec<(Vec<u64>, Subgroup)> = (0..1u32 << primes.len())
        .map(|bits| {
            let pi: Vec<u64> = primes.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p).collect();
            let core = charsub::pi_core_from(normals, &pi);
            (pi, core)
        })
        .collect();
    let mut exercised = 0;
    for (i, a) in lat.subgroups().iter().enumerate() {
        if a.is_trivial() || !nil[i] || !subn[i] {
            continue;
        }
        exercised += 1;
        if !a.is_subset(fit) {
            return Ok(Outcome::fail(vec![Witness::new("subnormal nilpotent A not in F(G)", a)]));
        }
        for (pi, core) in &cores {
            if arith::supported_on(a.order() as u64, pi) && !a.is_subset(core) {
                return Ok(Outcome::fail(vec![Witness::new(format!("A not in O_pi(G) for pi={pi:?}"), a)]));
            }
        }
    }
    if exercised == 0 {
        return Ok(Outcome::vacuous("no nontrivial subnormal nilpotent subgroup", None));
    }
    Ok(Outcome::pass(vec![Witness::note(format!("{exercised} subnormal nilpotent subgroups checked"))]))
}

fn prop_2_5(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let mut witnesses = Vec::new();
    let mut exercised = false;
    let mut refutations = Vec::new();
    for p in g.prime_divisors() {
        let cond = condition_focal(ctx, p)?;
        match &cond.witness {
            Some(w) => refutations.push(Witness::new(format!("vacuous at p={p}: focal condition fails"), w)),
            None => {
                exercised = true;
                if !sylow::is_p_soluble(g, p, ctx.budgets())? {
                    return Ok(Outcome::fail(vec![Witness::note(format!(
                        "focal condition holds at p={p} but G is not {p}-soluble"
                    ))]));
                }
                witnesses.push(Witness::note(format!("p={p}: focal condition holds; {p}-soluble")));
            }
        }
    }
    if !exercised {
        let mut out = Outcome::vacuous("focal condition fails for every prime", None);
        out.witnesses.extend(refutations);
        return Ok(out);
    }
    witnesses.extend(refutations);
    Ok(Outcome::pass(witnesses))
}

fn lem_2_6_1(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let zinf = ctx.hypercentre();
    if zinf.is_trivial() {
        return Ok(Outcome::vacuous("Z∞(G) is trivial", None));
    }
    for n in ctx.normal_subgroups()?.iter().filter(|n| n.is_subset(zinf)) {
        let q = g.quotient(n)?;
        if q.image(zinf) != charsub::hypercentre(&q.quotient) {
            return Ok(Outcome::fail(vec![Witness::new("N with Z∞(G)/N != Z∞(G/N)", n)]));
        }
    }
    Ok(Outcome::pass(vec![Witness::new("Zinf", zinf)]))
}

fn lem_2_6_2(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let zinf = ctx.hypercentre();
    if zinf.is_trivial() {
        return Ok(Outcome::vacuous("Z∞(G) is trivial", None));
    }
    let lat = ctx.lattice()?;
    let nil = ctx.nilpotent_flags()?;
    for (i, a) in lat.subgroups().iter().enumerate() {
        if !nil[i] {
            continue;
        }
        let za = g.join(zinf, a);
        if za.order() * zinf.intersection(a).order() != zinf.order() * a.order() || !g.is_nilpotent_subgroup(&za) {
            return Ok(Outcome::fail(vec![Witness::new("nilpotent A with Z∞(G)A not nilpotent", a)]));
        }
    }
    for m in maximal_nilpotent_subgroups(ctx)? {
        if !zinf.is_subset(&m) {
            return Ok(Outcome::fail(vec![Witness::new("maximal nilpotent subgroup not containing Z∞(G)", &m)]));
        }
    }
    Ok(Outcome::pass(vec![Witness::new("Zinf", zinf)]))
}

fn lem_2_6_3(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let zinf = ctx.hypercentre();
    let q = g.quotient(zinf)?;
    if !is_nilpotent_group(&q.quotient) {
        return Ok(Outcome::vacuous("G/Z∞(G) is not nilpotent", Some(zinf)));
    }
    if ctx.is_nilpotent() {
        Ok(Outcome::pass(vec![Witness::new("Zinf", zinf)]))
    } else {
        Ok(Outcome::fail(vec![Witness::new("G/Z∞(G) nilpotent but G is not; Z∞(G)", zinf)]))
    }
}

fn lem_2_7(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    let fit = ctx.fitting();
    let phi = ctx.frattini()?;
    for (label, n) in [("Phi", &phi), ("Zinf", ctx.hypercentre())] {
        let q = g.quotient(n)?;
        if q.image(fit) != charsub::fitting(&q.quotient) {
            return Ok(Outcome::fail(vec![Witness::new(format!("F(G)/{label} != F(G/{label}); {label}"), n)]));
        }
    }
    Ok(Outcome::pass(vec![Witness::new("F(G)", fit), Witness::new("Phi", &phi)]))
}

/// First non-normal Sylow subgroup (one per prime) selected by `select` that
/// violates the Frobenius normalizer condition.
fn sylow_violation(ctx: &GroupContext, select: impl Fn(&Subgroup) -> bool) -> Result<Option<Subgroup>> {
    let g = ctx.group();
    for p in g.prime_divisors() {
        let s = sylow::sylow_subgroup(g, p);
        if !g.is_normal(&s) && select(&s) && !frobenius_condition(g, &s)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn prop_2_8_a(ctx: &GroupContext) -> Result<Outcome> {
    let g = ctx.group();
    if !ctx.is_soluble() {
        return Ok(Outcome::vacuous("not soluble", None));
    }
    let derived = ctx.derived();
    if let Some(w) = sylow_violation(ctx, |s| !s.intersection(derived).is_trivial())? {
        return Ok(Outcome::vacuous("non-normal Sylow P with P ∩ G' != 1 violates the condition", Some(&w)));
    }
    match sylow::dispersion_ordering_from(g, ctx.normal_subgroups()?) {
        Some(d) => Ok(Outcome::pass(vec![Witness::note(format!("dispersed along {:?}", d.ordering))])),
        None => Ok(Outcome::fail(vec![Witness::note("no prime ordering admits a Sylow tower")])),
    }
}

fn prop_2_8_b(ctx: &GroupContext) -> Result<Outcome> {
    if !ctx.is_soluble() {
        return Ok(Outcome::vacuous("not soluble", None));
    }
    if ctx.is_nilpotent() {
        return Ok(Outcome::vacuous("nilpotent", None));
    }
    if let Some(w) = sylow_violation(ctx, |_| true)? {
        return Ok(Outcome::vacuous("non-normal Sylow subgroup violates the condition", Some(&w)));
    }
    match type_b_structure(ctx)? {
        Ok(w) => Ok(Outcome::pass(verdict_witnesses(&ClassificationVerdict::TypeB(w)))),
        Err(v) => Ok(Outcome::fail(vec![violation_witness(&v)])),
    }
}
