//! Precomputed interaction tables shared by both search engines.

use super::patterns::{radius, ALL_PATTERNS, COLORS, PATTERNS, PATTERN_COUNT};
use super::Configuration;
use crate::graph::DistanceOracle;

pub(crate) struct Tables {
    pub t: usize,
    pub interior: Vec<usize>,
    /// `incompat[a][b][pa]`: patterns of triple `b` clashing with pattern `pa`
    /// of triple `a` on the extra graph. Empty rows for `a == b`.
    pub incompat: Vec<Vec<[u32; PATTERN_COUNT]>>,
    /// `compat[t][i][c]`: patterns of triple `t` that leave color `c` free at
    /// interior vertex `interior[i]` on the base graph.
    pub compat: Vec<Vec<[u32; COLORS as usize + 1]>>,
    /// Base distances between interior vertices, capped at 3.
    pub interior_dist: Vec<Vec<u8>>,
}

impl Tables {
    pub fn new(cfg: &Configuration) -> Self {
        let base = DistanceOracle::new(&cfg.base);
        let extra = DistanceOracle::new(&cfg.extra);
        let t = cfg.triples.len();
        let interior = cfg.interior();

        let mut incompat = vec![vec![[0u32; PATTERN_COUNT]; t]; t];
        for a in 0..t {
            for b in 0..t {
                if a == b {
                    continue;
                }
                let (ta, tb) = (cfg.triples[a], cfg.triples[b]);
                for pa in 0..PATTERN_COUNT {
                    let mut mask = 0u32;
                    for pb in 0..PATTERN_COUNT {
                        let clash = (0..3).any(|x| {
                            (0..3).any(|y| {
                                let c = PATTERNS[pa][x];
                                c == PATTERNS[pb][y] && extra.within(ta[x], tb[y], radius(c))
                            })
                        });
                        if clash {
                            mask |= 1 << pb;
                        }
                    }
                    incompat[a][b][pa] = mask;
                }
            }
        }

        let compat = cfg
            .triples
            .iter()
            .map(|tr| {
                interior
                    .iter()
                    .map(|&u| {
                        let mut row = [ALL_PATTERNS; COLORS as usize + 1];
                        for c in 1..=COLORS {
                            let mut mask = 0u32;
                            for (p, pat) in PATTERNS.iter().enumerate() {
                                if !(0..3).any(|j| pat[j] == c && base.within(tr[j], u, radius(c))) {
                                    mask |= 1 << p;
                                }
                            }
                            row[c as usize] = mask;
                        }
                        row
                    })
                    .collect()
            })
            .collect();

        let interior_dist = interior
            .iter()
            .map(|&u| interior.iter().map(|&v| base.raw(u, v).min(3) as u8).collect())
            .collect();

        Tables { t, interior, incompat, compat, interior_dist }
    }

    /// Whether triples `a` and `b` can clash at all.
    pub fn interacts(&self, a: usize, b: usize) -> bool {
        a != b && self.incompat[a][b].iter().any(|&m| m != 0)
    }

    /// Whether triple `t` restricts interior vertex `i` at all.
    pub fn touches(&self, t: usize, i: usize) -> bool {
        self.compat[t][i][1..].iter().any(|&m| m != ALL_PATTERNS)
    }

    /// Consistency of pattern `p` at triple `level` against the earlier ones.
    #[inline]
    pub fn consistent_with_prefix(&self, prefix: &[u8], level: usize, p: usize) -> bool {
        prefix.iter().enumerate().all(|(s, &ps)| self.incompat[s][level][ps as usize] >> p & 1 == 0)
    }
}
