//! Direct enumeration: walk the precolorings in order, skip the ones that
//! clash on the extra graph, and run the extension search on the rest.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::check::{Progress, ProgressFn};
use super::patterns::{PATTERNS, PATTERN_COUNT};
use super::region::{box_size, PatternBox};
use super::tables::Tables;
use super::{Configuration, Stats};
use crate::packing::{Extender, PackingSpec};
use crate::par;

pub(crate) const PROGRESS_EVERY: u64 = 1_000_000;

pub(crate) struct Outcome {
    pub stats: Stats,
    pub failures: Vec<Vec<u8>>,
}

struct PartResult {
    total: Stats,
    /// Failing pattern vectors with the partition's stats up to and including each.
    failures: Vec<(Vec<u8>, Stats)>,
}

#[derive(Clone)]
enum Slot {
    Waiting(Vec<u8>),
    Running(Vec<u8>),
    Done,
}

struct Tracker {
    slots: Mutex<Vec<Slot>>,
    leaves: AtomicU64,
    progress: Option<ProgressFn>,
}

impl Tracker {
    fn update(&self, part: usize, slot: Slot, added: u64) {
        let mut slots = self.slots.lock().unwrap();
        slots[part] = slot;
        let before = self.leaves.fetch_add(added, Ordering::Relaxed);
        let after = before + added;
        if let Some(cb) = &self.progress {
            if after / PROGRESS_EVERY > before / PROGRESS_EVERY {
                let cursor = slots.iter().find_map(|s| match s {
                    Slot::Waiting(c) | Slot::Running(c) => Some(c.clone()),
                    Slot::Done => None,
                });
                if let Some(cursor) = cursor {
                    cb(&Progress::Cursor { cursor, leaves: after });
                }
            }
        }
    }
}

/// Splits the boxes by the first two pattern positions, in order.
fn partitions(boxes: &[PatternBox]) -> Vec<PatternBox> {
    let mut out = Vec::new();
    for bx in boxes {
        let split = bx.len().min(2);
        let mut parts: Vec<PatternBox> = vec![Vec::new()];
        for &mask in &bx[..split] {
            parts = parts
                .into_iter()
                .flat_map(|pre| {
                    (0..PATTERN_COUNT).filter(move |&p| mask >> p & 1 == 1).map(move |p| {
                        let mut v = pre.clone();
                        v.push(1u32 << p);
                        v
                    })
                })
                .collect();
        }
        for mut p in parts {
            p.extend_from_slice(&bx[split..]);
            out.push(p);
        }
    }
    out
}

fn first_member(bx: &[u32]) -> Vec<u8> {
    bx.iter().map(|m| m.trailing_zeros() as u8).collect()
}

struct Walker<'a> {
    cfg: &'a Configuration,
    tables: &'a Tables,
    ext: &'a Extender,
    bx: &'a [u32],
    /// Leaves below one choice at each level.
    below: Vec<u128>,
    prefix: Vec<u8>,
    scratch: Vec<u8>,
    stats: Stats,
    failures: Vec<(Vec<u8>, Stats)>,
    limit: usize,
    part: usize,
    tracker: &'a Tracker,
    cutoff: &'a AtomicUsize,
    since_report: u64,
}

impl Walker<'_> {
    fn note_leaves(&mut self, count: u128) {
        self.since_report += count.min(u64::MAX as u128) as u64;
        if self.since_report >= PROGRESS_EVERY / 4 {
            let mut cursor = self.prefix.clone();
            cursor.extend(first_member(&self.bx[cursor.len()..]));
            self.tracker.update(self.part, Slot::Running(cursor), self.since_report);
            self.since_report = 0;
        }
    }

    /// Returns true when the walk should stop.
    fn walk(&mut self, level: usize) -> bool {
        if level == self.bx.len() {
            self.stats.precolorings_total += 1;
            if self.ext.extends(&mut self.scratch) {
                self.stats.extended_ok += 1;
            } else {
                self.failures.push((self.prefix.clone(), self.stats));
                if self.failures.len() >= self.limit {
                    self.cutoff.fetch_min(self.part, Ordering::Relaxed);
                    return true;
                }
            }
            self.note_leaves(1);
            return false;
        }
        if self.cutoff.load(Ordering::Relaxed) < self.part {
            return true;
        }
        let tr = self.cfg.triples[level];
        for p in 0..PATTERN_COUNT {
            if self.bx[level] >> p & 1 == 0 {
                continue;
            }
            if !self.tables.consistent_with_prefix(&self.prefix, level, p) {
                let skipped = self.below[level];
                self.stats.precolorings_total += skipped;
                self.stats.pruned_inconsistent += skipped;
                self.note_leaves(skipped);
                continue;
            }
            for j in 0..3 {
                self.scratch[tr[j]] = PATTERNS[p][j];
            }
            self.prefix.push(p as u8);
            let stop = self.walk(level + 1);
            self.prefix.pop();
            if stop {
                return true;
            }
        }
        for &v in &tr {
            self.scratch[v] = 0;
        }
        false
    }
}

pub(crate) fn run(
    cfg: &Configuration,
    tables: &Tables,
    boxes: &[PatternBox],
    witness_limit: usize,
    progress: Option<ProgressFn>,
) -> Outcome {
    let ext = Extender::new(&cfg.base, &PackingSpec::good());
    let parts = partitions(boxes);
    let tracker = Tracker {
        slots: Mutex::new(parts.iter().map(|b| Slot::Waiting(first_member(b))).collect()),
        leaves: AtomicU64::new(0),
        progress,
    };
    let cutoff = AtomicUsize::new(usize::MAX);
    let indexed: Vec<(usize, &PatternBox)> = parts.iter().enumerate().collect();
    let results: Vec<Option<PartResult>> = par::map(&indexed, |&(part, bx)| {
        if cutoff.load(Ordering::Relaxed) < part {
            return None;
        }
        let t = bx.len();
        let mut below = vec![1u128; t];
        for l in (0..t.saturating_sub(1)).rev() {
            below[l] = below[l + 1] * bx[l + 1].count_ones() as u128;
        }
        let mut w = Walker {
            cfg,
            tables,
            ext: &ext,
            bx,
            below,
            prefix: Vec::with_capacity(t),
            scratch: vec![0; cfg.n()],
            stats: Stats::default(),
            failures: Vec::new(),
            limit: witness_limit,
            part,
            tracker: &tracker,
            cutoff: &cutoff,
            since_report: 0,
        };
        let stopped = w.walk(0);
        if stopped && w.failures.len() < witness_limit {
            // cancelled because an earlier partition already has enough
            return None;
        }
        let rest = w.since_report;
        tracker.update(part, Slot::Done, rest);
        debug_assert!(stopped || w.stats.precolorings_total == box_size(bx));
        Some(PartResult { total: w.stats, failures: w.failures })
    });

    let mut acc = Stats::default();
    let mut failures = Vec::new();
    for res in results {
        let res = res.expect("partitions before the cutoff always finish");
        for (pv, at) in res.failures {
            failures.push(pv);
            if failures.len() == witness_limit {
                let mut stats = acc;
                stats.add(&at);
                return Outcome { stats, failures };
            }
        }
        acc.add(&res.total);
    }
    Outcome { stats: acc, failures }
}
