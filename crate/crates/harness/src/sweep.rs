//! Running every (group, claim) cell and assembling the report.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use fncheck_core::budget::INHERITANCE_SAMPLE_SEED;
use fncheck_core::classifier::{check_claim, ClaimId, GroupId, VerdictReport, Witness};
use fncheck_core::{Budgets, GroupContext};

use crate::cache::ResultCache;
use crate::catalog::CatalogEntry;

/// Version of the JSON layout of [`SweepReport`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub budgets: Budgets,
    /// Worker threads; 1 runs every cell on the calling thread.
    pub jobs: usize,
    pub cache: Option<ResultCache>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budgets: Budgets::default(),
            jobs: 1,
            cache: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim_id: Option<ClaimId>,
    /// Passes with the hypothesis exercised.
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl ClaimSummary {
    fn add(&mut self, r: &VerdictReport) {
        if r.skipped.is_some() {
            self.skipped += 1;
        } else if !r.passed {
            self.failed += 1;
        } else if r.vacuous {
            self.vacuous += 1;
        } else {
            self.passed += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub budgets: Budgets,
    pub inheritance_sample_seed: u64,
    pub groups: Vec<GroupId>,
    pub claims: Vec<ClaimId>,
    pub reports: Vec<VerdictReport>,
    pub summary: Vec<ClaimSummary>,
    pub totals: ClaimSummary,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerdictReport> {
        self.reports.iter().filter(|r| r.skipped.is_none() && !r.passed)
    }

    pub fn has_failures(&self) -> bool {
        self.totals.failed > 0
    }

    pub fn summary_for(&self, claim: ClaimId) -> Option<&ClaimSummary> {
        self.summary.iter().find(|s| s.claim_id == Some(claim))
    }

    /// The report with every timing field zeroed.
    pub fn normalized(&self) -> SweepReport {
        let mut out = self.clone();
        for r in &mut out.reports {
            r.elapsed_us = 0;
        }
        out
    }

    /// Pretty JSON of [`SweepReport::normalized`], for byte-wise comparison.
    pub fn normalized_json(&self) -> String {
        serde_json::to_string_pretty(&self.normalized()).expect("sweep report serializes")
    }
}

/// Counters that vary between runs and are kept out of the report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub cells: usize,
    pub cache_hits: usize,
    pub lattices_built: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub report: SweepReport,
    pub stats: SweepStats,
}

enum Slot {
    Ready(Arc<GroupContext>),
    Unbuilt { id: GroupId, reason: String },
}

fn unbuilt_report(id: &GroupId, claim: ClaimId, reason: &str) -> VerdictReport {
    VerdictReport {
        claim_id: claim,
        group: id.clone(),
        passed: false,
        vacuous: false,
        witnesses: vec![Witness::note(format!("skipped: {reason}"))],
        skipped: Some(reason.to_string()),
        elapsed_us: 0,
    }
}

fn run_cell(slot: &Slot, claim: ClaimId, opts: &SweepOptions) -> (VerdictReport, bool) {
    let ctx = match slot {
        Slot::Ready(ctx) => ctx,
        Slot::Unbuilt { id, reason } => return (unbuilt_report(id, claim, reason), false),
    };
    let id = GroupId::of(ctx.group());
    if let Some(cache) = &opts.cache {
        if let Some(hit) = cache.get(&id, claim, &opts.budgets) {
            return (hit, true);
        }
    }
    let report = check_claim(ctx, claim);
    if let Some(cache) = &opts.cache {
        if let Err(e) = cache.put(&report, &opts.budgets) {
            log::warn!("cannot write cache entry in {}: {e}", cache.dir().display());
        }
    }
    (report, false)
}

/// Checks every claim on every entry. Reports are ordered by entry, then by
/// claim, whatever the number of workers.
pub fn sweep(entries: &[CatalogEntry], claims: &[ClaimId], opts: &SweepOptions) -> SweepOutcome {
    let start = Instant::now();
    let mut claim_list: Vec<ClaimId> = Vec::new();
    for &c in claims {
        if !claim_list.contains(&c) {
            claim_list.push(c);
        }
    }

    let build = |e: &CatalogEntry| match e.build(opts.budgets.max_order) {
        Ok(g) => Slot::Ready(Arc::new(GroupContext::new(g, opts.budgets))),
        Err(err) => Slot::Unbuilt {
            id: GroupId {
                name: e.name.clone(),
                order: e.expected_order,
                hash: String::new(),
            },
            reason: err.to_string(),
        },
    };
    let cells: Vec<(usize, ClaimId)> = (0..entries.len())
        .flat_map(|i| claim_list.iter().map(move |&c| (i, c)))
        .collect();

    let (slots, results): (Vec<Slot>, Vec<(VerdictReport, bool)>) = if opts.jobs <= 1 {
        let slots: Vec<Slot> = entries.iter().map(build).collect();
        let results = cells.iter().map(|&(i, c)| run_cell(&slots[i], c, opts)).collect();
        (slots, results)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            let slots: Vec<Slot> = entries.par_iter().map(build).collect();
            let results = cells.par_iter().map(|&(i, c)| run_cell(&slots[i], c, opts)).collect();
            (slots, results)
        })
    };

    let groups = slots
        .iter()
        .map(|s| match s {
            Slot::Ready(ctx) => GroupId::of(ctx.group()),
            Slot::Unbuilt { id, .. } => id.clone(),
        })
        .collect();
    let lattices_built = slots
        .iter()
        .filter(|s| matches!(s, Slot::Ready(ctx) if ctx.lattice_built()))
        .count();
    let cache_hits = results.iter().filter(|(_, hit)| *hit).count();
    let reports: Vec<VerdictReport> = results.into_iter().map(|(r, _)| r).collect();

    let mut summary: Vec<ClaimSummary> = claim_list
        .iter()
        .map(|&c| ClaimSummary {
            claim_id: Some(c),
            ..ClaimSummary::default()
        })
        .collect();
    let mut totals = ClaimSummary::default();
    for r in &reports {
        let pos = claim_list.iter().position(|&c| c == r.claim_id).expect("claim in list");
        summary[pos].add(r);
        totals.add(r);
    }

    SweepOutcome {
        stats: SweepStats {
            cells: reports.len(),
            cache_hits,
            lattices_built,
            elapsed_ms: start.elapsed().as_millis(),
        },
        report: SweepReport {
            schema_version: SCHEMA_VERSION,
            tool_version: crate::TOOL_VERSION.to_string(),
            budgets: opts.budgets,
            inheritance_sample_seed: INHERITANCE_SAMPLE_SEED,
            groups,
            claims: claim_list,
            reports,
            summary,
            totals,
        },
    }
}

/// Aligned per-claim summary table, followed by any failures.
pub fn render_text(report: &SweepReport) -> String {
    let mut out = format!(
        "fncheck {} ({} groups, {} cells)\n",
        report.tool_version,
        report.groups.len(),
        report.reports.len()
    );
    out.push_str(&format!(
        "{:<22} {:>7} {:>7} {:>7} {:>7}\n",
        "claim", "passed", "vacuous", "failed", "skipped"
    ));
    let line = |name: &str, s: &ClaimSummary| {
        format!(
            "{:<22} {:>7} {:>7} {:>7} {:>7}\n",
            name, s.passed, s.vacuous, s.failed, s.skipped
        )
    };
    for s in &report.summary {
        let name = s.claim_id.map(ClaimId::as_str).unwrap_or("?");
        out.push_str(&line(name, s));
    }
    out.push_str(&line("total", &report.totals));
    for f in report.failures() {
        out.push_str(&format!("FAILED {} on {}:", f.claim_id, f.group.name));
        for w in &f.witnesses {
            out.push_str(&format!(" [{} {:?}]", w.label, w.elements));
        }
        out.push('\n');
    }
    out
}
