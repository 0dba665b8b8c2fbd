use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fncheck::analyze::{self, VerdictField};
use fncheck::cache::ResultCache;
use fncheck::catalog::{self, CatalogEntry};
use fncheck::load::load_group;
use fncheck::sweep::{self, SweepOptions};
use fncheck_core::classifier::ClaimId;
use fncheck_core::group::format;
use fncheck_core::{Budgets, Group};

const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "fncheck", version, about = "Frobenius normalizer condition checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Table,
    Perm,
}

#[derive(Subcommand)]
enum Command {
    /// Structure report for a catalog group or a group file.
    Analyze {
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Check claims over catalog groups.
    Sweep {
        /// Comma-separated catalog names; defaults to the whole catalog.
        #[arg(long, value_delimiter = ',')]
        groups: Option<Vec<String>>,
        /// Comma-separated claim ids; defaults to every claim.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Skip catalog entries above this order.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        no_cache: bool,
    },
    /// Show the builtin catalog.
    Catalog {
        /// Names only, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Write a catalog group in one of the text formats.
    Emit {
        name: String,
        #[arg(long, value_enum)]
        format: FileFormat,
    },
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("fncheck: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn resolve_target(target: &str, max_order: usize) -> Result<Group, String> {
    if let Some(entry) = catalog::find(target) {
        return entry.build(max_order).map_err(|e| e.to_string());
    }
    if Path::new(target).exists() {
        return load_group(target, max_order).map_err(|e| e.to_string());
    }
    Err(format!("`{target}` is neither a catalog name nor a file"))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let defaults = Budgets::default();
    match cli.command {
        Command::Analyze {
            target,
            format,
            max_order,
        } => {
            let budgets = Budgets {
                max_order: max_order.unwrap_or(defaults.max_order),
                ..defaults
            };
            let group = match resolve_target(&target, budgets.max_order) {
                Ok(g) => g,
                Err(e) => return usage(e),
            };
            let report = analyze::analyze_group(group, budgets);
            match format {
                ReportFormat::Json => println!("{}", to_json(&report)),
                ReportFormat::Text => print!("{}", analyze::render_text(&report)),
            }
            if matches!(report.verdict, VerdictField::Violation(_)) {
                return ExitCode::from(EXIT_CLAIM_FAILURE);
            }
            ExitCode::SUCCESS
        }
        Command::Sweep {
            groups,
            claims,
            max_order,
            jobs,
            format,
            no_cache,
        } => {
            let all = catalog::builtin_catalog();
            let mut entries: Vec<CatalogEntry> = match groups {
                None => all,
                Some(names) => {
                    let mut picked = Vec::new();
                    for name in names.iter().filter(|n| !n.is_empty()) {
                        match all.iter().find(|e| &e.name == name) {
                            Some(e) => picked.push(e.clone()),
                            None => return usage(format!("unknown catalog group `{name}`")),
                        }
                    }
                    picked
                }
            };
            if let Some(limit) = max_order {
                entries.retain(|e| e.expected_order <= limit);
            }
            let claim_ids: Vec<ClaimId> = match claims {
                None => ClaimId::ALL.to_vec(),
                Some(ids) => match ids.iter().filter(|s| !s.is_empty()).map(|s| s.parse()).collect() {
                    Ok(v) => v,
                    Err(e) => return usage(e),
                },
            };
            let opts = SweepOptions {
                budgets: defaults,
                jobs: jobs.max(1),
                cache: (!no_cache).then(ResultCache::from_env),
            };
            let outcome = sweep::sweep(&entries, &claim_ids, &opts);
            match format {
                ReportFormat::Json => println!("{}", to_json(&outcome.report)),
                ReportFormat::Text => print!("{}", sweep::render_text(&outcome.report)),
            }
            log::info!(
                "{} cells, {} cache hits, {} lattices built, {} ms",
                outcome.stats.cells,
                outcome.stats.cache_hits,
                outcome.stats.lattices_built,
                outcome.stats.elapsed_ms
            );
            if outcome.report.has_failures() {
                ExitCode::from(EXIT_CLAIM_FAILURE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Catalog { list } => {
            for e in catalog::builtin_catalog() {
                if list {
                    println!("{}", e.name);
                } else {
                    println!("{:<14} {:>5}  {}", e.name, e.expected_order, e.recipe);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Emit { name, format } => {
            let Some(entry) = catalog::find(&name) else {
                return usage(format!("unknown catalog group `{name}`"));
            };
            let group = match entry.build(defaults.max_order) {
                Ok(g) => g,
                Err(e) => return usage(e),
            };
            let text = match format {
                FileFormat::Table => format::table_text(&group, &entry.name),
                FileFormat::Perm => match &entry.recipe {
                    catalog::Recipe::Permutations { degree, generators } => {
                        format::perm_text(&entry.name, *degree, generators)
                    }
                    _ => {
                        let (degree, gens) = format::regular_permutations(&group);
                        format::perm_text(&entry.name, degree, &gens)
                    }
                },
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}
