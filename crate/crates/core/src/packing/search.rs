use serde::{Deserialize, Serialize};

use super::{sdr_assign, verify_with, Coloring, PackingSpec};
use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtendOptions {
    /// Once the remaining vertices are pairwise within the smallest radius,
    /// finish with a distinct-representatives matching instead of branching.
    pub sdr_tail: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ProveOptions {
    /// Restrict the first branching vertex to one color per equal-radius group.
    pub break_symmetry: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub node_count: u64,
    pub exhaustive: bool,
}

/// Precomputed conflict neighborhoods for one graph and spec. Reusable across
/// many extension calls.
#[derive(Clone, Debug)]
pub struct Extender {
    spec: PackingSpec,
    oracle: DistanceOracle,
    /// `conflicts[r][v]`: vertices within the r-th distinct radius of `v`.
    conflicts: Vec<Vec<Vec<usize>>>,
    /// Index into `conflicts` for color `c` (slot 0 unused).
    class_of: Vec<usize>,
}

struct Search<'a> {
    ext: &'a Extender,
    colors: Vec<u8>,
    order: Vec<usize>,
    allowed_first: u64,
    tail_from: usize,
    nodes: u64,
}

impl Extender {
    pub fn new(g: &Graph, spec: &PackingSpec) -> Self {
        let oracle = DistanceOracle::new(g);
        let mut distinct: Vec<u32> = spec.radii().to_vec();
        distinct.dedup();
        let conflicts = distinct
            .iter()
            .map(|&r| {
                (0..g.n())
                    .map(|v| (0..g.n()).filter(|&w| w != v && oracle.within(v, w, r)).collect())
                    .collect()
            })
            .collect();
        let mut class_of = vec![0];
        class_of.extend(spec.radii().iter().map(|r| distinct.iter().position(|d| d == r).unwrap()));
        Extender { spec: spec.clone(), oracle, conflicts, class_of }
    }

    pub fn spec(&self) -> &PackingSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.oracle.n()
    }

    #[inline]
    fn clashes(&self, colors: &[u8], v: usize, c: u8) -> bool {
        self.conflicts[self.class_of[c as usize]][v].iter().any(|&w| colors[w] == c)
    }

    /// Validates `partial`, then searches for a completion.
    pub fn extend(&self, partial: &Coloring, opts: ExtendOptions) -> Result<Option<Coloring>> {
        if partial.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), got: partial.len() });
        }
        if let Some(&c) = partial.0.iter().find(|&&c| c as usize > self.spec.k()) {
            return Err(Error::ColorOutOfRange { color: c as usize, k: self.spec.k() });
        }
        let report = verify_with(&self.oracle, &self.spec, partial);
        if !report.valid {
            return Err(Error::InvalidPartial { report });
        }
        Ok(self.extend_trusted(&partial.0, opts).0)
    }

    /// Search without validating the precolored vertices against each other.
    /// Returns the completion (if any) and the number of search nodes.
    pub fn extend_trusted(&self, partial: &[u8], opts: ExtendOptions) -> (Option<Coloring>, u64) {
        self.run(partial, opts, self.all_colors())
    }

    /// Fast path used by the configuration checker: only reports whether a
    /// completion exists, reusing `scratch` as the working coloring.
    pub fn extends(&self, scratch: &mut [u8]) -> bool {
        let order: Vec<usize> = (0..scratch.len()).filter(|&v| scratch[v] == 0).collect();
        let ok = self.dfs_plain(scratch, &order, 0);
        for &v in &order {
            scratch[v] = 0;
        }
        ok
    }

    fn dfs_plain(&self, colors: &mut [u8], order: &[usize], pos: usize) -> bool {
        let Some(&v) = order.get(pos) else { return true };
        for c in 1..=self.spec.k() as u8 {
            if !self.clashes(colors, v, c) {
                colors[v] = c;
                if self.dfs_plain(colors, order, pos + 1) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }

    fn all_colors(&self) -> u64 {
        let k = self.spec.k();
        ((1u64 << k) - 1) << 1
    }

    fn run(&self, partial: &[u8], opts: ExtendOptions, allowed_first: u64) -> (Option<Coloring>, u64) {
        let order: Vec<usize> = (0..partial.len()).filter(|&v| partial[v] == 0).collect();
        let tail_from = if opts.sdr_tail { self.tail_start(&order) } else { order.len() };
        let mut s = Search { ext: self, colors: partial.to_vec(), order, allowed_first, tail_from, nodes: 0 };
        let found = s.dfs(0);
        (found.then_some(Coloring(s.colors)), s.nodes)
    }

    /// First index from which the remaining vertices pairwise clash under
    /// every color, so a completion is exactly a system of distinct
    /// representatives.
    fn tail_start(&self, order: &[usize]) -> usize {
        let r = self.spec.radii()[0];
        let mut start = order.len();
        while start > 0 {
            let v = order[start - 1];
            if order[start..].iter().all(|&w| self.oracle.within(v, w, r)) {
                start -= 1;
            } else {
                break;
            }
        }
        start
    }
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if pos == self.order.len() {
            return true;
        }
        if pos >= self.tail_from && pos + 1 < self.order.len() {
            return self.finish_by_sdr(pos);
        }
        let v = self.order[pos];
        let allowed = if pos == 0 { self.allowed_first } else { u64::MAX };
        for c in 1..=self.ext.spec.k() as u8 {
            if allowed >> c & 1 == 0 || self.ext.clashes(&self.colors, v, c) {
                continue;
            }
            self.colors[v] = c;
            if self.dfs(pos + 1) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }

    fn finish_by_sdr(&mut self, pos: usize) -> bool {
        let rest = &self.order[pos..];
        let demands: Vec<Vec<usize>> = rest
            .iter()
            .map(|&v| {
                (1..=self.ext.spec.k() as u8)
                    .filter(|&c| !self.ext.clashes(&self.colors, v, c))
                    .map(usize::from)
                    .collect()
            })
            .collect();
        match sdr_assign(&demands) {
            Some(pick) => {
                for (&v, c) in rest.iter().zip(pick) {
                    self.colors[v] = c as u8;
                }
                true
            }
            None => false,
        }
    }
}

/// Completes `partial` to a valid coloring, trying vertices in increasing id
/// and colors `1..=k` in order; precolored vertices are never changed.
pub fn extend(g: &Graph, spec: &PackingSpec, partial: &Coloring) -> Result<Option<Coloring>> {
    extend_with(g, spec, partial, ExtendOptions::default())
}

pub fn extend_with(g: &Graph, spec: &PackingSpec, partial: &Coloring, opts: ExtendOptions) -> Result<Option<Coloring>> {
    Extender::new(g, spec).extend(partial, opts)
}

/// Exhaustive refutation; fails with the coloring when one exists.
pub fn prove_uncolorable(g: &Graph, spec: &PackingSpec, opts: ProveOptions) -> Result<Certificate> {
    let ext = Extender::new(g, spec);
    let mut allowed = ext.all_colors();
    if opts.break_symmetry {
        let radii = spec.radii();
        allowed = (1..=spec.k()).filter(|&c| c == 1 || radii[c - 1] != radii[c - 2]).fold(0, |m, c| m | 1 << c);
    }
    let (found, nodes) = ext.run(&vec![0; g.n()], ExtendOptions::default(), allowed);
    match found {
        Some(coloring) => Err(Error::Colorable { coloring }),
        None => Ok(Certificate { node_count: nodes, exhaustive: true }),
    }
}
