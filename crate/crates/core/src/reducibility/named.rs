//! Configurations assembled from their vertex-by-vertex descriptions. Each
//! configuration vertex with a neighbor outside the configuration gets that
//! neighbor as a triple boundary, and every boundary gets two pendants.

use super::Configuration;
use crate::graph::Graph;

struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    triples: Vec<[usize; 3]>,
}

impl Builder {
    fn new(core: &[&str]) -> Self {
        Builder { labels: core.iter().map(|s| s.to_string()).collect(), edges: Vec::new(), triples: Vec::new() }
    }

    fn id(&mut self, label: &str) -> usize {
        match self.labels.iter().position(|l| l == label) {
            Some(i) => i,
            None => {
                self.labels.push(label.to_string());
                self.labels.len() - 1
            }
        }
    }

    fn path(&mut self, labels: &[&str]) {
        for w in labels.windows(2) {
            let (a, b) = (self.id(w[0]), self.id(w[1]));
            self.edges.push((a, b));
        }
    }

    fn cycle(&mut self, labels: &[&str]) {
        self.path(labels);
        self.path(&[labels[labels.len() - 1], labels[0]]);
    }

    /// `inner` has outside neighbor `boundary`, whose other neighbors are the
    /// two pendants.
    fn attach(&mut self, inner: &str, boundary: &str, pendants: [&str; 2]) {
        self.path(&[inner, boundary]);
        let b = self.id(boundary);
        let p1 = self.id(pendants[0]);
        let p2 = self.id(pendants[1]);
        self.edges.push((b, p1));
        self.edges.push((b, p2));
        self.triples.push([b, p1, p2]);
    }

    fn finish(mut self, name: &str) -> (Configuration, Vec<String>) {
        // faces share edges
        for e in &mut self.edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        self.edges.sort_unstable();
        self.edges.dedup();
        let g = Graph::from_edges(self.labels.len(), &self.edges).expect("builder yields a simple graph");
        let cfg = Configuration::without_extra(name, g, self.triples).expect("builder yields a valid configuration");
        (cfg, self.labels)
    }
}

/// Triangle `u1u2u3` sharing `u2u3` with the 7-cycle `u2..u8`, plus the
/// 4-cycle `u5u6u12u11`.
fn cfg_3_7_4() -> (Configuration, Vec<String>) {
    let mut b = Builder::new(&["u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u11", "u12"]);
    b.cycle(&["u1", "u2", "u3"]);
    b.cycle(&["u2", "u3", "u4", "u5", "u6", "u7", "u8"]);
    b.cycle(&["u5", "u6", "u12", "u11"]);
    b.attach("u1", "u9", ["u9'", "u9''"]);
    b.attach("u4", "u10", ["u10'", "u10''"]);
    b.attach("u7", "u13", ["u13'", "u13''"]);
    b.attach("u8", "u14", ["u14'", "u14''"]);
    b.attach("u11", "u15", ["u15'", "u15''"]);
    b.attach("u12", "u16", ["u16'", "u16''"]);
    b.finish("cfg_3_7_4")
}

/// Middle 5-cycle `u1..u5` with two further 5-faces `u2u3v3xv2` and
/// `u4u5v5yv4`, where `x = v2'' = v3''` and `y = v4'' = v5''`.
fn cfg_5_5_5_i() -> (Configuration, Vec<String>) {
    let mut b = Builder::new(&["u1", "u2", "u3", "u4", "u5", "v2", "v3", "v4", "v5", "v2''", "v4''"]);
    b.cycle(&["u1", "u2", "u3", "u4", "u5"]);
    b.cycle(&["u2", "u3", "v3", "v2''", "v2"]);
    b.cycle(&["u4", "u5", "v5", "v4''", "v4"]);
    b.attach("u1", "v1", ["v1'", "v1''"]);
    b.attach("v2", "v2'", ["v2'a", "v2'b"]);
    b.attach("v3", "v3'", ["v3'a", "v3'b"]);
    b.attach("v4", "v4'", ["z4'", "z4''"]);
    b.attach("v5", "v5'", ["w5'", "w5''"]);
    b.attach("v2''", "x2", ["x2'", "x2''"]);
    b.attach("v4''", "w4", ["w4'", "w4''"]);
    b.finish("cfg_5_5_5_I")
}

/// Triangle `u1u2u3`, edge `u2v2` into the 5-cycle `v2w1w2w3w4`, edge `w1w1'`
/// into the triangle `w1'z1z2`.
fn cfg_3_5_3() -> (Configuration, Vec<String>) {
    let mut b = Builder::new(&["u1", "u2", "u3", "v2", "w1", "w2", "w3", "w4", "w1'", "z1", "z2"]);
    b.cycle(&["u1", "u2", "u3"]);
    b.path(&["u2", "v2"]);
    b.cycle(&["v2", "w1", "w2", "w3", "w4"]);
    b.path(&["w1", "w1'"]);
    b.cycle(&["w1'", "z1", "z2"]);
    b.attach("u1", "v1", ["v1'", "v1''"]);
    b.attach("u3", "v3", ["v3'", "v3''"]);
    b.attach("w2", "w2'", ["w2'a", "w2'b"]);
    b.attach("w3", "w3'", ["w3'a", "w3'b"]);
    b.attach("w4", "w4'", ["w4'a", "w4'b"]);
    b.attach("z1", "z1'", ["z1'a", "z1'b"]);
    b.attach("z2", "z2'", ["z2'a", "z2'b"]);
    b.finish("cfg_3_5_3")
}

/// Interior cycle of length `len` with a triple hanging off each listed position.
fn ring(name: &str, len: usize, hosts: &[usize], extra: &[(usize, usize)]) -> Configuration {
    let labels: Vec<String> = (0..len).map(|i| format!("c{i}")).collect();
    let mut b = Builder::new(&labels.iter().map(String::as_str).collect::<Vec<_>>());
    b.cycle(&labels.iter().map(String::as_str).collect::<Vec<_>>());
    for &h in hosts {
        let (bd, p1, p2) = (format!("b{h}"), format!("b{h}'"), format!("b{h}''"));
        b.attach(&labels[h], &bd, [&p1, &p2]);
    }
    let (mut cfg, _) = b.finish(name);
    for &(t1, t2) in extra {
        let (u, v) = (cfg.triples[t1][1], cfg.triples[t2][1]);
        cfg.extra.add_edge(u, v).expect("fresh extra edge");
    }
    cfg
}

/// Petersen graph with triples cut out of it; no precoloring extends.
fn petersen_cut(name: &str, triples: Vec<[usize; 3]>) -> Configuration {
    let g = crate::graph::named::petersen();
    Configuration::without_extra(name, g, triples).expect("triples follow Petersen edges")
}

/// Small deterministic configurations with at most four triples, used for
/// smoke tests, benchmarks and determinism checks.
pub fn synthetic_corpus() -> Vec<Configuration> {
    vec![
        ring("ring6_t2", 6, &[0, 3], &[]),
        ring("ring6_t3", 6, &[0, 2, 4], &[]),
        ring("ring5_t3_extra", 5, &[0, 1, 3], &[(0, 1)]),
        ring("ring7_t3_extra", 7, &[0, 2, 4], &[(0, 1), (1, 2)]),
        ring("ring4_t2", 4, &[0, 2], &[(0, 1)]),
        ring("ring8_t4", 8, &[0, 2, 4, 6], &[(1, 2)]),
        petersen_cut("petersen_t1", vec![[0, 1, 4]]),
        petersen_cut("petersen_t2", vec![[0, 1, 4], [7, 2, 9]]),
    ]
}

/// Configuration and vertex labels by name.
pub fn named_config_labeled(name: &str) -> Option<(Configuration, Vec<String>)> {
    match name {
        "cfg_3_7_4" => Some(cfg_3_7_4()),
        "cfg_5_5_5_I" => Some(cfg_5_5_5_i()),
        "cfg_3_5_3" => Some(cfg_3_5_3()),
        _ => None,
    }
}

pub fn named_config(name: &str) -> Option<Configuration> {
    named_config_labeled(name).map(|(c, _)| c)
}
