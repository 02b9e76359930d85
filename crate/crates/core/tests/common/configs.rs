use packing_core::graph::{named, Graph};
use packing_core::reducibility::{Configuration, Stats, FIRST_COUNT, PATTERNS};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{floyd, for_each_assignment, is_packing, random_connected_subcubic};

const GOOD: [u32; 6] = [1, 2, 2, 2, 2, 2];

/// Independent answer for one configuration: every legal precoloring in
/// enumeration order with its consistency and extendability.
pub struct Brute {
    /// (pattern indices, consistent, extends)
    pub rows: Vec<(Vec<u8>, bool, bool)>,
}

impl Brute {
    pub fn new(cfg: &Configuration) -> Self {
        let base = floyd(&cfg.base);
        let extra = floyd(&cfg.extra);
        let interior = cfg.interior();
        let t = cfg.triples.len();
        let n = cfg.n();

        // interior colorings that are valid among themselves
        let mut inner: Vec<Vec<u8>> = Vec::new();
        for_each_assignment(interior.len(), 6, |a| {
            let mut full = vec![0u8; n];
            for (&v, &c) in interior.iter().zip(a) {
                full[v] = c;
            }
            if is_packing(&base, &GOOD, &full) {
                inner.push(a.to_vec());
            }
            false
        });

        let mut rows = Vec::new();
        for_each_assignment(3 * t, 6, |raw| {
            let mut idx = Vec::with_capacity(t);
            for k in 0..t {
                let colors = [raw[3 * k], raw[3 * k + 1], raw[3 * k + 2]];
                match PATTERNS.iter().position(|p| *p == colors) {
                    Some(i) => idx.push(i as u8),
                    None => return false,
                }
            }
            let mut pre = vec![0u8; n];
            for (tr, k) in cfg.triples.iter().zip(0..) {
                for j in 0..3 {
                    pre[tr[j]] = raw[3 * k + j];
                }
            }
            let consistent = is_packing(&extra, &GOOD, &pre);
            let extends = consistent
                && inner.iter().any(|a| {
                    let mut full = pre.clone();
                    for (&v, &c) in interior.iter().zip(a) {
                        full[v] = c;
                    }
                    is_packing(&base, &GOOD, &full)
                });
            rows.push((idx, consistent, extends));
            false
        });
        if t == 0 {
            rows.clear();
            rows.push((Vec::new(), true, !inner.is_empty() || interior.is_empty()));
        }
        rows.sort();
        Brute { rows }
    }

    /// Some consistent precoloring extends and another does not.
    pub fn is_mixed(&self) -> bool {
        self.rows.iter().any(|r| r.1 && r.2) && self.rows.iter().any(|r| r.1 && !r.2)
    }

    pub fn in_mode(&self, exhaustive_first: bool) -> impl Iterator<Item = &(Vec<u8>, bool, bool)> {
        self.rows.iter().filter(move |r| exhaustive_first || r.0.first().is_none_or(|&p| (p as usize) < FIRST_COUNT))
    }

    /// Failures and stats for a run starting at `from` that stops at the
    /// `limit`-th failure.
    pub fn expect(&self, exhaustive_first: bool, from: &[u8], limit: usize) -> (Vec<Vec<u8>>, Stats) {
        let mut fails = Vec::new();
        let mut stats = Stats::default();
        for (idx, consistent, extends) in self.in_mode(exhaustive_first).filter(|r| r.0.as_slice() >= from) {
            stats.precolorings_total += 1;
            if !consistent {
                stats.pruned_inconsistent += 1;
            } else if *extends {
                stats.extended_ok += 1;
            } else {
                fails.push(idx.clone());
                if fails.len() == limit {
                    break;
                }
            }
        }
        (fails, stats)
    }
}

/// Random configuration on at most 12 vertices with at most 2 triples and
/// shuffled vertex ids.
pub fn random_config<R: Rng>(r: &mut R, name: &str) -> Configuration {
    let t_wanted = *[0usize, 1, 1, 2, 2, 2].choose(r).unwrap();
    let m = r.gen_range(1..=(12 - 3 * t_wanted).min(6));
    let chords = r.gen_range(0..6);
    let core = random_connected_subcubic(r, m, chords);
    let mut edges = core.edges();
    let mut degree: Vec<usize> = (0..m).map(|v| core.degree(v)).collect();
    let mut triples = Vec::new();
    let mut next = m;
    for _ in 0..t_wanted {
        let spare: Vec<usize> = (0..m).filter(|&v| degree[v] < 3).collect();
        let Some(&host) = spare.choose(r) else { break };
        degree[host] += 1;
        let (b, p1, p2) = (next, next + 1, next + 2);
        next += 3;
        edges.extend([(host, b), (b, p1), (b, p2)]);
        triples.push([b, p1, p2]);
    }
    let n = next;
    let mut deg_all = vec![0usize; n];
    for &(u, v) in &edges {
        deg_all[u] += 1;
        deg_all[v] += 1;
    }
    // occasionally tie a pendant back into the interior
    for tr in &triples {
        for &p in &tr[1..] {
            if r.gen_bool(0.25) {
                let host = r.gen_range(0..m);
                if deg_all[host] < 3 {
                    edges.push((host, p));
                    deg_all[host] += 1;
                    deg_all[p] += 1;
                }
            }
        }
    }
    let mut extra_edges = edges.clone();
    let outer: Vec<usize> = triples.iter().flatten().copied().collect();
    for _ in 0..r.gen_range(0..=2) {
        if outer.len() < 2 {
            break;
        }
        let u = *outer.choose(r).unwrap();
        let v = *outer.choose(r).unwrap();
        let key = (u.min(v), u.max(v));
        if u != v && !extra_edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == key) {
            extra_edges.push((u, v));
        }
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let relabel = |es: &[(usize, usize)]| -> Vec<(usize, usize)> { es.iter().map(|&(u, v)| (perm[u], perm[v])).collect() };
    let base = Graph::from_edges(n, &relabel(&edges)).unwrap();
    let extra = Graph::from_edges(n, &relabel(&extra_edges)).unwrap();
    let triples = triples.iter().map(|tr| tr.map(|v| perm[v])).collect();
    Configuration::new(name, base, extra, triples).unwrap()
}

/// Petersen graph with a few edges deleted and one or two triples carved
/// out of it, so that some precolorings fail to extend.
pub fn petersen_config<R: Rng>(r: &mut R, name: &str) -> Configuration {
    loop {
        let mut g = named::petersen();
        let mut edges = g.edges();
        edges.shuffle(r);
        for &(u, v) in edges.iter().take(r.gen_range(0..=3)) {
            g.remove_edge(u, v);
        }
        let t = r.gen_range(1..=2);
        let mut used = [false; 10];
        let mut triples = Vec::new();
        for _ in 0..t {
            let b = r.gen_range(0..10);
            let mut nb: Vec<usize> = g.neighbors(b).to_vec();
            nb.shuffle(r);
            if nb.len() < 2 || used[b] || used[nb[0]] || used[nb[1]] {
                continue;
            }
            for v in [b, nb[0], nb[1]] {
                used[v] = true;
            }
            triples.push([b, nb[0], nb[1]]);
        }
        if triples.is_empty() {
            continue;
        }
        let mut extra = g.clone();
        let outer: Vec<usize> = triples.iter().flatten().copied().collect();
        for _ in 0..r.gen_range(0..=1) {
            let u = *outer.choose(r).unwrap();
            let v = *outer.choose(r).unwrap();
            if u != v && !extra.has_edge(u, v) {
                extra.add_edge(u, v).unwrap();
            }
        }
        return Configuration::new(name, g, extra, triples).unwrap();
    }
}
