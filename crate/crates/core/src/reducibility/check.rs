use std::fmt;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::count::count_consistent;
use super::enumerate::precoloring_from_patterns;
use super::frontier::{Budget, Frontier};
use super::region::{after, at_most, at_or_after, box_size, contains, initial_box, intersect, PatternBox};
use super::tables::Tables;
use super::{faithful, parse_config_file, Configuration, ReducibilityResult, Stats, Verdict, Witness};
use crate::error::{Error, Result};
use crate::packing::{Extender, PackingSpec};
use crate::par;

/// Which search procedure decides reducibility. Both give identical results.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Frontier elimination, falling back to enumeration if it runs out of budget.
    #[default]
    Auto,
    /// Enumerate every precoloring and run the extension search on each.
    Faithful,
    /// Variable elimination with symmetry reduction.
    Frontier,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Progress {
    /// Every precoloring before `cursor` has been handled.
    Cursor { cursor: Vec<u8>, leaves: u64 },
    Note(String),
}

pub type ProgressFn = Arc<dyn Fn(&Progress) + Send + Sync>;

#[derive(Clone, Default)]
pub struct CheckOptions {
    /// Try all 30 patterns on the first triple instead of the first two.
    pub exhaustive_first: bool,
    /// Stop after this many failing precolorings (at least one).
    pub witness_limit: usize,
    pub engine: Engine,
    /// Start at this pattern vector instead of the first one.
    pub resume: Option<Vec<u8>>,
    /// Worker threads; `None` uses the ambient pool.
    pub workers: Option<usize>,
    pub progress: Option<ProgressFn>,
}

impl fmt::Debug for CheckOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckOptions")
            .field("exhaustive_first", &self.exhaustive_first)
            .field("witness_limit", &self.witness_limit)
            .field("engine", &self.engine)
            .field("resume", &self.resume)
            .field("workers", &self.workers)
            .finish()
    }
}

impl CheckOptions {
    fn note(&self, msg: impl FnOnce() -> String) {
        if let Some(cb) = &self.progress {
            cb(&Progress::Note(msg()));
        }
    }
}

/// Decides whether every consistent precoloring extends, reporting the first
/// failures in enumeration order.
pub fn check_reducible(cfg: &Configuration, opts: &CheckOptions) -> Result<ReducibilityResult> {
    cfg.validate()?;
    let tables = Tables::new(cfg);
    let t = cfg.triples.len();
    let bx = initial_box(t, opts.exhaustive_first);
    let region = match &opts.resume {
        None => vec![bx],
        Some(c) => {
            if c.len() != t || !contains(&bx, c) {
                return Err(Error::InvalidCursor(format!("{c:?} is not a precoloring index of `{}`", cfg.name)));
            }
            at_or_after(&bx, c)
        }
    };
    let limit = opts.witness_limit.max(1);
    par::with_workers(opts.workers, || {
        let (engine, failures, stats) = match opts.engine {
            Engine::Faithful => run_faithful(cfg, &tables, &region, limit, opts),
            Engine::Frontier => run_frontier(&tables, &region, limit, opts)?,
            Engine::Auto => match run_frontier(&tables, &region, limit, opts) {
                Err(Error::Budget(why)) => {
                    opts.note(|| format!("frontier search gave up ({why}); enumerating"));
                    run_faithful(cfg, &tables, &region, limit, opts)
                }
                other => other?,
            },
        };
        let ext = Extender::new(&cfg.base, &PackingSpec::good());
        let witnesses: Vec<Witness> = failures
            .into_iter()
            .map(|patterns| {
                let coloring = precoloring_from_patterns(cfg, &patterns);
                let consistent = (0..t).all(|l| tables.consistent_with_prefix(&patterns[..l], l, patterns[l] as usize));
                let mut scratch = coloring.0.clone();
                assert!(consistent && !ext.extends(&mut scratch), "reported witness must be a real failure");
                Witness { patterns, coloring }
            })
            .collect();
        Ok(ReducibilityResult {
            name: cfg.name.clone(),
            verdict: if witnesses.is_empty() { Verdict::Reducible } else { Verdict::Counterexample },
            witnesses,
            stats,
            engine,
        })
    })
}

fn run_faithful(
    cfg: &Configuration,
    tables: &Tables,
    region: &[PatternBox],
    limit: usize,
    opts: &CheckOptions,
) -> (Engine, Vec<Vec<u8>>, Stats) {
    let out = faithful::run(cfg, tables, region, limit, opts.progress.clone());
    (Engine::Faithful, out.failures, out.stats)
}

fn run_frontier(
    tables: &Tables,
    region: &[PatternBox],
    limit: usize,
    opts: &CheckOptions,
) -> Result<(Engine, Vec<Vec<u8>>, Stats)> {
    let fr = Frontier::new(tables, Budget::default())?;
    opts.note(|| format!("frontier search, {} color symmetries", fr.group_order()));
    let mut failures: Vec<Vec<u8>> = Vec::new();
    let mut pending: Vec<PatternBox> = region.to_vec();
    while failures.len() < limit {
        let mut found = None;
        for b in &pending {
            if let Some(w) = fr.first_failure(b)? {
                found = Some(w);
                break;
            }
        }
        let Some(w) = found else { break };
        opts.note(|| format!("failing precoloring {w:?}"));
        pending = region.iter().flat_map(|b| after(b, &w)).collect();
        failures.push(w);
    }
    let counted: Vec<PatternBox> = match failures.last() {
        Some(w) if failures.len() == limit => {
            let upto = at_most(w);
            region.iter().flat_map(|b| upto.iter().filter_map(|u| intersect(u, b))).collect()
        }
        _ => region.to_vec(),
    };
    let mut stats = Stats::default();
    for b in &counted {
        let consistent = count_consistent(tables, b)?;
        stats.precolorings_total += box_size(b);
        stats.pruned_inconsistent += box_size(b) - consistent;
        stats.extended_ok += consistent;
    }
    stats.extended_ok -= failures.len() as u128;
    Ok((Engine::Frontier, failures, stats))
}

/// Result for one record of a configuration file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FileReport {
    pub result: ReducibilityResult,
    pub warnings: Vec<String>,
    pub seconds: f64,
}

/// Checks every record of a configuration file in order. `resume` names a
/// record index and a cursor within it; earlier records are skipped.
pub fn check_file(path: &Path, opts: &CheckOptions, resume: Option<(usize, Vec<u8>)>) -> Result<Vec<FileReport>> {
    let bytes = std::fs::read(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    let cfgs = parse_config_file(&bytes)?;
    check_all(&cfgs, opts, resume)
}

pub(crate) fn check_all(cfgs: &[Configuration], opts: &CheckOptions, resume: Option<(usize, Vec<u8>)>) -> Result<Vec<FileReport>> {
    let (first, cursor) = match resume {
        Some((r, c)) => (r, Some(c)),
        None => (0, None),
    };
    let mut out = Vec::new();
    for (i, cfg) in cfgs.iter().enumerate().skip(first) {
        let mut o = opts.clone();
        o.resume = if i == first { cursor.clone() } else { None };
        let start = Instant::now();
        let result = check_reducible(cfg, &o)?;
        out.push(FileReport { result, warnings: cfg.warnings(), seconds: start.elapsed().as_secs_f64() });
    }
    Ok(out)
}
