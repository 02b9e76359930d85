//! Reducibility checking of configurations: every consistent coloring of
//! the pendant triples must extend to a good coloring of the rest.

mod check;
mod config_io;
mod count;
mod enumerate;
mod faithful;
mod frontier;
mod named;
pub mod patterns;
mod region;
mod tables;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use check::{check_file, check_reducible, CheckOptions, Engine, FileReport, Progress, ProgressFn};
pub use config_io::{parse_config_file, write_config, write_configs};
pub use enumerate::{enumerate_precolorings, precoloring_consistent, precoloring_from_patterns, Precolorings};
pub use named::{named_config, synthetic_corpus};
pub use patterns::{FIRST_COUNT, PATTERNS, PATTERN_COUNT};

/// The sample input file shipped with the original checker, byte for byte.
pub const SAMPLE_CONFIG: &str = include_str!("../../data/sample_config.txt");

/// A configuration: the base graph to be colored, the base graph with extra
/// edges used to discard impossible precolorings, and the pendant triples
/// `(boundary, p1, p2)` that are precolored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub name: String,
    pub base: Graph,
    pub extra: Graph,
    pub triples: Vec<[usize; 3]>,
}

impl Configuration {
    pub fn new(name: impl Into<String>, base: Graph, extra: Graph, triples: Vec<[usize; 3]>) -> Result<Self> {
        let cfg = Configuration { name: name.into(), base, extra, triples };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Configuration whose extra graph equals its base graph.
    pub fn without_extra(name: impl Into<String>, base: Graph, triples: Vec<[usize; 3]>) -> Result<Self> {
        let extra = base.clone();
        Configuration::new(name, base, extra, triples)
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Checks the structural invariants. A subcubic extra graph is not
    /// required; see [`Configuration::warnings`].
    pub fn validate(&self) -> Result<()> {
        let bad = |message: String| Err(Error::InvalidConfig { name: self.name.clone(), message });
        let n = self.base.n();
        if self.extra.n() != n {
            return bad(format!("extra graph has {} vertices, base has {n}", self.extra.n()));
        }
        if let Some((u, v)) = self.base.edges().into_iter().find(|&(u, v)| !self.extra.has_edge(u, v)) {
            return bad(format!("base edge ({u},{v}) missing from extra graph"));
        }
        let mut seen = vec![false; n];
        for (t, tr) in self.triples.iter().enumerate() {
            for &v in tr {
                if v >= n {
                    return bad(format!("triple {t} names vertex {v} >= {n}"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return bad(format!("vertex {v} appears in more than one triple position"));
                }
            }
            let [b, p1, p2] = *tr;
            if !self.base.has_edge(b, p1) || !self.base.has_edge(b, p2) {
                return bad(format!("triple {t}: boundary {b} is not adjacent to both pendants"));
            }
        }
        Ok(())
    }

    /// Soft problems that do not stop checking.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.extra.max_degree() > 3 {
            let heavy: Vec<usize> = (0..self.n()).filter(|&v| self.extra.degree(v) > 3).collect();
            out.push(format!("extra graph is not subcubic at vertices {heavy:?}"));
        }
        out
    }

    /// Vertices outside every triple, in increasing order.
    pub fn interior(&self) -> Vec<usize> {
        let mut in_triple = vec![false; self.n()];
        for tr in &self.triples {
            for &v in tr {
                in_triple[v] = true;
            }
        }
        (0..self.n()).filter(|&v| !in_triple[v]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Reducible,
    Counterexample,
}

/// Leaf counts over the enumerated precolorings, up to the point where the
/// search stopped. `precolorings_total = pruned_inconsistent + extended_ok +`
/// the number of witnesses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub precolorings_total: u128,
    pub pruned_inconsistent: u128,
    pub extended_ok: u128,
}

impl Stats {
    pub(crate) fn add(&mut self, other: &Stats) {
        self.precolorings_total += other.precolorings_total;
        self.pruned_inconsistent += other.pruned_inconsistent;
        self.extended_ok += other.extended_ok;
    }
}

/// A precoloring that is consistent on the extra graph but does not extend.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Pattern index per triple.
    pub patterns: Vec<u8>,
    pub coloring: crate::packing::Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityResult {
    pub name: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub stats: Stats,
    pub engine: Engine,
}

impl ReducibilityResult {
    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// One-line summary in the original checker's wording.
    pub fn summary_line(&self) -> String {
        match self.witness() {
            None => format!("'{}' Reducible", self.name),
            Some(w) => format!("'{}' Precoloring {} does not extend", self.name, w.coloring),
        }
    }
}
