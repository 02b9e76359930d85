use super::patterns::{allowed_mask, radius, PATTERNS};
use super::Configuration;
use crate::graph::DistanceOracle;
use crate::packing::Coloring;

/// Lazy stream of precolorings: the product over triples, in list order, of
/// the pattern table in table order.
pub struct Precolorings<'a> {
    cfg: &'a Configuration,
    choices: Vec<Vec<u8>>,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for Precolorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let patterns: Vec<u8> = self.odometer.iter().zip(&self.choices).map(|(&i, ch)| ch[i]).collect();
        let out = precoloring_from_patterns(self.cfg, &patterns);
        self.done = true;
        for t in (0..self.odometer.len()).rev() {
            self.odometer[t] += 1;
            if self.odometer[t] < self.choices[t].len() {
                self.done = false;
                break;
            }
            self.odometer[t] = 0;
        }
        Some(out)
    }
}

pub fn enumerate_precolorings(cfg: &Configuration, exhaustive_first: bool) -> Precolorings<'_> {
    let choices: Vec<Vec<u8>> = (0..cfg.triples.len())
        .map(|t| {
            let mask = allowed_mask(t, exhaustive_first);
            (0..PATTERNS.len() as u8).filter(|&p| mask >> p & 1 == 1).collect()
        })
        .collect();
    let t = choices.len();
    Precolorings { cfg, choices, odometer: vec![0; t], done: false }
}

/// Coloring of the triple vertices from one pattern index per triple.
pub fn precoloring_from_patterns(cfg: &Configuration, patterns: &[u8]) -> Coloring {
    let mut c = Coloring::uncolored(cfg.n());
    for (tr, &p) in cfg.triples.iter().zip(patterns) {
        for j in 0..3 {
            c.0[tr[j]] = PATTERNS[p as usize][j];
        }
    }
    c
}

/// No two equally colored vertices lie within that color's radius on the
/// extra graph.
pub fn precoloring_consistent(cfg: &Configuration, pre: &Coloring) -> bool {
    let d = DistanceOracle::new(&cfg.extra);
    let colored: Vec<usize> = (0..pre.len()).filter(|&v| pre.0[v] != 0).collect();
    colored.iter().enumerate().all(|(i, &u)| {
        colored[i + 1..].iter().all(|&v| pre.0[u] != pre.0[v] || !d.within(u, v, radius(pre.0[u])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn star() -> Configuration {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        Configuration::without_extra("star", g, vec![[0, 1, 2]]).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let cfg = star();
        let all: Vec<_> = enumerate_precolorings(&cfg, true).collect();
        assert_eq!(all.len(), 30);
        assert_eq!(all[0].0, vec![6, 1, 2, 0]);
        assert_eq!(enumerate_precolorings(&cfg, false).count(), 2);
        let bare = Configuration::without_extra("k1", Graph::empty(1), vec![]).unwrap();
        let only: Vec<_> = enumerate_precolorings(&bare, false).collect();
        assert_eq!(only, vec![Coloring(vec![0])]);
    }

    #[test]
    fn consistency_uses_extra() {
        let base = Graph::from_edges(6, &[(0, 1), (0, 2), (3, 4), (3, 5)]).unwrap();
        let mut extra = base.clone();
        extra.add_edge(1, 4).unwrap();
        let cfg = Configuration::new("two", base.clone(), extra, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        // pendants 1 and 4 both get color 1 and are joined by the added edge
        let pre = precoloring_from_patterns(&cfg, &[0, 0]);
        assert!(!precoloring_consistent(&cfg, &pre));
        let plain = Configuration::without_extra("plain", base, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!(precoloring_consistent(&plain, &pre));
        assert!(precoloring_consistent(&cfg, &Coloring::uncolored(6)));
    }
}
